#include <catch2/catch_amalgamated.hpp>

#include "rht/sullivan.hpp"
#include "test_support.hpp"

using namespace rht;
using namespace rht::cdga;
using namespace rht::sullivan;

TEST_CASE("is_sullivan respects generator order") {
    auto p = rht::testing::s2_model();
    auto m = SullivanModel::with_declaration_order(p);
    CHECK(is_sullivan(m));
    // Reverse order: dy mentions x, which now comes later.
    m.generator_order = {1, 0};
    CHECK_FALSE(is_sullivan(m));
}

TEST_CASE("is_minimal detects linear differentials") {
    SECTION("S^2 model is minimal: x^2 is decomposable") {
        auto m = SullivanModel::with_declaration_order(rht::testing::s2_model());
        CHECK(is_minimal(m));
    }
    SECTION("dc = a is a linear term") {
        auto p = std::make_shared<CdgaPresentation>();
        p->generators = {{"a", 2}, {"b", 2}, {"c", 1}};
        p->d_on_generators = {element_zero(), element_zero(),
                              generator_element(0)};
        p->truncation_degree = 10;
        finalize_presentation(*p);
        auto m = SullivanModel::with_declaration_order(p);
        CHECK(is_sullivan(m));
        CHECK_FALSE(is_minimal(m));
    }
    SECTION("zero differential is minimal") {
        auto m = SullivanModel::with_declaration_order(
            rht::testing::free_one_generator(3));
        CHECK(is_minimal(m));
    }
}

TEST_CASE("minimal model of H(S^2)") {
    auto target = rht::testing::truncated_even_sphere(2, 12);
    auto result = minimal_model(target, 8);
    auto counts = result.generator_counts();
    CHECK(counts == std::map<int, std::size_t>{{2, 1}, {3, 1}});
    CHECK(homotopy_ranks(result) == std::map<int, std::size_t>{{2, 1}, {3, 1}});
    // The model is the classical one: dv = 0, dw = v^2.
    const auto& model = *result.model.underlying;
    REQUIRE(model.generators.size() == 2);
    CHECK(model.generators[0].degree == 2);
    CHECK(model.generators[1].degree == 3);
    Element v2{{Monomial{{{0, 2}}}, Rational(1)}};
    CHECK(sub(model.d_on_generators[1], v2).empty());
    // Cross-check the model's cohomology ranks.
    auto h = cohomology(model, 8);
    for (int k = 0; k <= 8; ++k)
        CHECK(h.at(k).dimension == ((k == 0 || k == 2) ? 1u : 0u));
}

TEST_CASE("minimal model of an already minimal target") {
    auto target = rht::testing::free_one_generator(3, 12);
    auto result = minimal_model(target, 8);
    CHECK(result.generator_counts() == std::map<int, std::size_t>{{3, 1}});
}

TEST_CASE("acyclic factor contributes no generators") {
    auto target = rht::testing::s3_times_acyclic(12);
    auto result = minimal_model(target, 8);
    CHECK(result.generator_counts() == std::map<int, std::size_t>{{3, 1}});
}

TEST_CASE("minimal model of H(S^4) needs the degree-7 kernel-killer") {
    auto target = rht::testing::truncated_even_sphere(4, 14);
    auto result = minimal_model(target, 10);
    CHECK(result.generator_counts() == std::map<int, std::size_t>{{4, 1}, {7, 1}});
}

TEST_CASE("non-simply-connected targets are rejected") {
    auto p = std::make_shared<CdgaPresentation>();
    p->generators = {{"u", 1}};
    p->d_on_generators = {element_zero()};
    p->truncation_degree = 12;
    finalize_presentation(*p);
    CHECK_THROWS_AS(minimal_model(p, 4), std::domain_error);
}

TEST_CASE("minimal model of the ground field is empty") {
    auto p = std::make_shared<CdgaPresentation>();
    p->truncation_degree = 12;
    finalize_presentation(*p);
    auto result = minimal_model(p, 6);
    CHECK(result.generator_counts().empty());
    CHECK(homotopy_ranks(result).empty());
}

TEST_CASE("rerunning minimal_model on its own output is stable") {
    auto target = rht::testing::truncated_even_sphere(2, 12);
    auto first = minimal_model(target, 7);
    auto second = minimal_model(first.model.underlying, 7);
    CHECK(first.generator_counts() == second.generator_counts());
}

TEST_CASE("formality evidence") {
    SECTION("a target with zero differential is formal") {
        auto p = rht::testing::free_one_generator(3, 12);
        CHECK(formal_up_to(p, 6).agrees);
    }
    SECTION("the S^2 model is formal up to 8") {
        auto p = rht::testing::s2_model(14);
        CHECK(formal_up_to(p, 8).agrees);
    }
}

TEST_CASE("cohomology presentation reproduces ranks") {
    auto p = rht::testing::s2_model(14);
    auto hp = cohomology_presentation(*p, 9);
    auto h = cohomology(*hp, 8);
    for (int k = 0; k <= 8; ++k)
        CHECK(h.at(k).dimension == ((k == 0 || k == 2) ? 1u : 0u));
}
