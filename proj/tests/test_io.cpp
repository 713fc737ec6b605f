#include <catch2/catch_amalgamated.hpp>

#include "rht/io.hpp"
#include "rht/sullivan.hpp"
#include "test_support.hpp"

using namespace rht;

TEST_CASE("presentation grammar") {
    SECTION("the S^2 model parses") {
        auto p = io::parse_presentation(
            "generator x deg 2\n"
            "generator y deg 3\n"
            "d y = x^2\n"
            "truncate 10\n");
        REQUIRE(p->generators.size() == 2);
        CHECK(p->generators[0].name == "x");
        CHECK(p->generators[1].degree == 3);
        CHECK(p->truncation_degree == 10);
        cdga::Element x2{{cdga::Monomial{{{0, 2}}}, Rational(1)}};
        CHECK(cdga::sub(p->d_on_generators[1], x2).empty());
    }
    SECTION("empty generator list gives the ground field") {
        auto p = io::parse_presentation("truncate 8\n");
        CHECK(p->generators.empty());
        auto h = cdga::cohomology(*p, 4);
        CHECK(h.at(0).dimension == 1);
        CHECK(h.at(3).dimension == 0);
    }
    SECTION("linear differentials are accepted") {
        auto p = io::parse_presentation(
            "generator x deg 2\n"
            "generator y deg 1\n"
            "d y = x\n"
            "truncate 8\n");
        auto m = sullivan::SullivanModel::with_declaration_order(p);
        CHECK_FALSE(sullivan::is_minimal(m));
    }
    SECTION("relations and rational coefficients") {
        auto p = io::parse_presentation(
            "generator x deg 2\n"
            "relation 1/2*x^2\n"
            "truncate 9\n");
        CHECK(cdga::basis_in_degree(*p, 4).empty());
    }
    SECTION("comments and blank lines are ignored") {
        auto p = io::parse_presentation(
            "# a sphere\n\ngenerator x deg 3  # odd generator\ntruncate 9\n");
        CHECK(p->generators.size() == 1);
    }
}

TEST_CASE("presentation grammar errors") {
    CHECK_THROWS_WITH(io::parse_presentation("generator x deg 2\n"),
                      Catch::Matchers::ContainsSubstring("truncate"));
    CHECK_THROWS_WITH(
        io::parse_presentation("generator x deg 2\nd y = x\ntruncate 5\n"),
        Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(
        io::parse_presentation("generator x deg 2\nd x = @\ntruncate 5\n"),
        Catch::Matchers::ContainsSubstring("column"));
    CHECK_THROWS_WITH(io::parse_presentation("frobnicate\ntruncate 5\n"),
                      Catch::Matchers::ContainsSubstring("line 1"));
    // Semantic error: d must raise degree by one.
    CHECK_THROWS_WITH(
        io::parse_presentation(
            "generator x deg 2\ngenerator y deg 4\nd y = x\ntruncate 8\n"),
        Catch::Matchers::ContainsSubstring("y"));
    // Semantic error: d^2 must vanish.
    CHECK_THROWS_AS(
        io::parse_presentation("generator a deg 1\ngenerator b deg 2\n"
                               "generator c deg 3\nd a = b\nd b = c\n"
                               "truncate 8\n"),
        std::invalid_argument);
}

TEST_CASE("presentation round trip") {
    std::vector<std::shared_ptr<const cdga::CdgaPresentation>> corpus = {
        rht::testing::s2_model(), rht::testing::free_one_generator(3),
        rht::testing::truncated_even_sphere(4), rht::testing::acyclic_factor(),
        rht::testing::s3_times_acyclic()};
    for (const auto& p : corpus) {
        std::string text = io::print_presentation(*p);
        auto q = io::parse_presentation(text, p->name);
        REQUIRE(q->generators.size() == p->generators.size());
        for (std::size_t i = 0; i < p->generators.size(); ++i) {
            CHECK(q->generators[i].name == p->generators[i].name);
            CHECK(q->generators[i].degree == p->generators[i].degree);
            CHECK(cdga::sub(q->d_on_generators[i], p->d_on_generators[i])
                      .empty());
        }
        CHECK(q->truncation_degree == p->truncation_degree);
        CHECK(q->rewrite_rules.size() == p->rewrite_rules.size());
        // And the printed form is a fixed point.
        CHECK(io::print_presentation(*q) == text);
    }
}

TEST_CASE("simplicial set format") {
    const std::string circle =
        "# boundary of the 2-simplex\n"
        "0 v0\n0 v1\n0 v2\n"
        "1 e01 v1 v0\n1 e02 v2 v0\n1 e12 v2 v1\n";
    SECTION("parses and validates") {
        auto X = io::parse_simplicial_set(circle);
        CHECK(X.dimension() == 1);
        CHECK(X.simplices.at(0).size() == 3);
        CHECK(X.faces.at({1, "e01"}) == std::vector<std::string>{"v1", "v0"});
        auto dims = apl::sections_cohomology(X, 1, 3);
        CHECK(dims == std::vector<std::size_t>{1, 1});
    }
    SECTION("wrong face count is rejected") {
        CHECK_THROWS_WITH(io::parse_simplicial_set("0 v0\n1 e v0\n"),
                          Catch::Matchers::ContainsSubstring("2 faces"));
    }
    SECTION("unknown face ids are rejected") {
        CHECK_THROWS_AS(io::parse_simplicial_set("0 v0\n1 e v0 bogus\n"),
                        std::invalid_argument);
    }
}

TEST_CASE("jet table format") {
    const std::string table =
        "# jet of x^2 on {0, 1/2, 1}\n"
        "1 2\n"
        "0 0 0 2\n"
        "1/2 1/4 1 2\n"
        "1 1 2 2\n";
    SECTION("parses into a complete jet") {
        auto F = io::parse_jet_table(table);
        CHECK(F.n == 1);
        CHECK(F.m == 2);
        REQUIRE(F.X.points.size() == 3);
        CHECK(F.values[1] ==
              std::vector<Rational>{Rational(1, 4), 1, 2});
        // The table is consistent with the jet of x^2.
        auto G = whitney::jet_of(
            whitney::multiply(whitney::Polynomial::variable(1, 0),
                              whitney::Polynomial::variable(1, 0)),
            F.X, 2);
        CHECK(F.values == G.values);
    }
    SECTION("round trips through print") {
        auto F = io::parse_jet_table(table);
        auto G = io::parse_jet_table(io::print_jet_table(F));
        CHECK(F.X.points == G.X.points);
        CHECK(F.values == G.values);
    }
    SECTION("short rows are rejected") {
        CHECK_THROWS_WITH(io::parse_jet_table("1 2\n0 0 0\n"),
                          Catch::Matchers::ContainsSubstring("jet entries"));
    }
    SECTION("missing header is rejected") {
        CHECK_THROWS_AS(io::parse_jet_table("# nothing\n"),
                        std::runtime_error);
    }
    SECTION("duplicate points are rejected") {
        CHECK_THROWS_AS(io::parse_jet_table("1 0\n0 1\n0 2\n"),
                        std::invalid_argument);
    }
}
