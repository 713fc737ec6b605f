#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rht/hochschild.hpp"
#include "test_support.hpp"

using namespace rht;
using namespace rht::hochschild;

TEST_CASE("b on length-zero words vanishes") {
    auto p = rht::testing::free_one_generator(3, 14);
    HochschildWord w;
    w.a0 = cdga::generator_monomial(0);
    CHECK(hochschild_b(*p, w).empty());
}

TEST_CASE("b(1 (x) x) vanishes in Lambda(x3)") {
    auto p = rht::testing::free_one_generator(3, 14);
    HochschildWord w;
    w.rest = {cdga::generator_monomial(0)};
    CHECK(hochschild_b(*p, w).empty());
}

TEST_CASE("reported degree regrading") {
    auto p = rht::testing::s2_model(14);
    HochschildWord w;
    w.a0 = cdga::generator_monomial(0);                          // degree 2
    w.rest = {cdga::generator_monomial(1), cdga::generator_monomial(0)};
    // 2 + 3 + 2 - 2 = 5.
    CHECK(reported_degree(*p, w) == 5);
    CHECK(word_label(*p, w) == "(x|y|x)");
}

TEST_CASE("differential identities hold exhaustively") {
    SECTION("S^3 model, P <= 3") {
        CHECK(verify_truncation(rht::testing::free_one_generator(3, 14), 8, 3));
    }
    SECTION("S^2 model (nonzero differential), P <= 3") {
        CHECK(verify_truncation(rht::testing::s2_model(14), 6, 3));
    }
    SECTION("acyclic factor, P <= 3") {
        CHECK(verify_truncation(rht::testing::acyclic_factor(14), 5, 3));
    }
}

TEST_CASE("word enumeration is finite and graded correctly") {
    auto p = rht::testing::free_one_generator(3, 14);
    for (int g = 0; g <= 8; ++g)
        for (const auto& w : words_in_degree(*p, g, 4))
            CHECK(reported_degree(*p, w) == g);
    // Lambda(x3): exactly one word per even degree 2p and per degree 2p+3.
    CHECK(words_in_degree(*p, 0, 4).size() == 1);
    CHECK(words_in_degree(*p, 1, 4).empty());
    CHECK(words_in_degree(*p, 2, 4).size() == 1);
    CHECK(words_in_degree(*p, 3, 4).size() == 1);
    CHECK(words_in_degree(*p, 8, 4).size() == 1);
}

TEST_CASE("stable Hochschild dims of Lambda(x3)") {
    auto table =
        hochschild_homology(rht::testing::free_one_generator(3, 14), 8, 4);
    std::vector<std::size_t> expect = {1, 0, 1, 1, 1, 1, 1, 1, 1};
    REQUIRE(table.rows.size() == 9);
    for (int g = 0; g <= 8; ++g) {
        INFO("degree " << g);
        CHECK(table.rows[g].dimension == expect[g]);
        CHECK(table.rows[g].stable);
    }
}

TEST_CASE("ground field has trivial Hochschild homology") {
    auto p = std::make_shared<cdga::CdgaPresentation>();
    p->truncation_degree = 12;
    cdga::finalize_presentation(*p);
    auto table = hochschild_homology(
        std::shared_ptr<const cdga::CdgaPresentation>(p), 5, 3);
    CHECK(table.rows[0].dimension == 1);
    for (int g = 1; g <= 5; ++g) {
        CHECK(table.rows[g].dimension == 0);
        CHECK(table.rows[g].stable);
    }
}

TEST_CASE("quasi-isomorphism invariance against the acyclic extension") {
    auto small = rht::testing::free_one_generator(3, 14);
    auto big = rht::testing::s3_times_acyclic(14);
    auto ts = hochschild_homology(small, 6, 3);
    auto tb = hochschild_homology(big, 6, 3);
    for (int g = 0; g <= 6; ++g) {
        INFO("degree " << g);
        if (ts.rows[g].stable && tb.rows[g].stable)
            CHECK(ts.rows[g].dimension == tb.rows[g].dimension);
    }
    // The comparison must not be vacuous.
    int both_stable = 0;
    for (int g = 0; g <= 6; ++g)
        both_stable += (ts.rows[g].stable && tb.rows[g].stable) ? 1 : 0;
    CHECK(both_stable == 7);
}

TEST_CASE("stable dimensions are monotone under P") {
    auto p = rht::testing::free_one_generator(3, 14);
    auto t3 = hochschild_homology(p, 6, 3);
    auto t4 = hochschild_homology(p, 6, 4);
    for (int g = 0; g <= 6; ++g)
        if (t3.rows[g].stable) {
            INFO("degree " << g);
            CHECK(t3.rows[g].dimension == t4.rows[g].dimension);
            CHECK(t4.rows[g].stable);
        }
}

TEST_CASE("truncation window must fit inside the presentation truncation") {
    auto p = rht::testing::free_one_generator(3, 8);
    CHECK_THROWS_AS(dimensions(p, 8, 4), std::out_of_range);
}

TEST_CASE("loop space tables") {
    SECTION("S^3") {
        auto target = rht::testing::free_one_generator(3, 14);
        auto model = sullivan::minimal_model(target, 12);
        auto t = loop_space_table(model, 6, 3);
        std::vector<std::size_t> expect = {1, 0, 1, 1, 1, 1, 1};
        for (int g = 0; g <= 6; ++g) {
            CHECK(t.table.rows[g].dimension == expect[g]);
            CHECK(t.table.rows[g].stable);
        }
        CHECK(t.label.find("loop") != std::string::npos);
    }
    SECTION("point") {
        auto target = std::make_shared<cdga::CdgaPresentation>();
        target->truncation_degree = 14;
        cdga::finalize_presentation(*target);
        auto model = sullivan::minimal_model(
            std::shared_ptr<const cdga::CdgaPresentation>(target), 8);
        auto t = loop_space_table(model, 4, 3);
        CHECK(t.table.rows[0].dimension == 1);
        for (int g = 1; g <= 4; ++g) CHECK(t.table.rows[g].dimension == 0);
    }
}

TEST_CASE("sparse rank agrees with dense rank", "[property]") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> sz(1, 8), val(-3, 3);
    std::uniform_real_distribution<double> fill(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = sz(rng), cols = sz(rng);
        graded::Matrix dense(rows, graded::Vector(cols, Rational(0)));
        std::vector<graded::SparseRow> sparse(rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (fill(rng) < 0.4) {
                    int v = val(rng);
                    if (v == 0) continue;
                    dense[i][j] = v;
                    sparse[i][j] = v;
                }
        CHECK(graded::sparse_rank(sparse) == graded::rank(dense));
    }
}
