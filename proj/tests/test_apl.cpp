#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rht/apl.hpp"

using namespace rht;
using namespace rht::apl;

namespace {

bool form_equal(const PolyForm& a, const PolyForm& b) {
    return a.simplex_dim == b.simplex_dim && cdga::sub(a.value, b.value).empty();
}

PolyForm random_form(int n, int form_deg, int poly_bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    PolyForm w = PolyForm::zero(n);
    for (const auto& m : form_basis(n, form_deg, poly_bound))
        cdga::add_term(w.value, m, Rational(num(rng), den(rng)));
    return w;
}

}  // namespace

TEST_CASE("face maps on Delta^1") {
    PolyForm t1 = PolyForm::t(1, 1);
    SECTION("boundary vertex values of t1") {
        CHECK(form_equal(face(t1, 1), PolyForm::zero(0)));
        CHECK(form_equal(face(t1, 0), PolyForm::unit(0)));
    }
    SECTION("faces are algebra maps commuting with d") {
        PolyForm w = multiply(t1, t1);
        CHECK(form_equal(face(w, 0), PolyForm::unit(0)));
        CHECK(form_equal(face(d(t1), 1), d(face(t1, 1))));
    }
}

TEST_CASE("degeneracy s0 on Delta^1 sends t1 to t2") {
    PolyForm t1 = PolyForm::t(1, 1);
    CHECK(form_equal(degeneracy(t1, 0), PolyForm::t(2, 2)));
    // s1 sends t1 to t1 + t2.
    PolyForm expect{2, cdga::add(PolyForm::t(2, 1).value, PolyForm::t(2, 2).value)};
    CHECK(form_equal(degeneracy(t1, 1), expect));
}

TEST_CASE("face and degeneracy index bounds") {
    PolyForm t1 = PolyForm::t(1, 1);
    CHECK_THROWS_AS(face(t1, 2), std::out_of_range);
    CHECK_THROWS_AS(face(t1, -1), std::out_of_range);
    CHECK_THROWS_AS(face(PolyForm::unit(0), 0), std::out_of_range);
    CHECK_THROWS_AS(degeneracy(t1, 2), std::out_of_range);
}

TEST_CASE("simplicial identities hold exhaustively") {
    auto report = verify_simplicial_identities(4);
    CHECK(report.all_passed);
    for (const auto& c : report.checks) {
        INFO(c.family << " n=" << c.n << " i=" << c.i << " j=" << c.j);
        CHECK(c.passed);
    }
}

TEST_CASE("face and degeneracy maps respect products and d", "[property]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        int n = dim(rng);
        std::uniform_int_distribution<int> fd(0, n);
        int ka = fd(rng), kb = fd(rng);
        PolyForm a = random_form(n, ka, 2, rng);
        PolyForm b = random_form(n, kb, 2, rng);
        std::uniform_int_distribution<int> fi(0, n);
        int i = fi(rng);
        CHECK(form_equal(face(multiply(a, b), i),
                         multiply(face(a, i), face(b, i))));
        CHECK(form_equal(face(d(a), i), d(face(a, i))));
        CHECK(form_equal(degeneracy(d(a), i), d(degeneracy(a, i))));
    }
}

TEST_CASE("exact integration over the simplex") {
    SECTION("volume forms") {
        CHECK(integrate(PolyForm::y(1, 1)) == 1);
        PolyForm t1y1 = multiply(PolyForm::t(1, 1), PolyForm::y(1, 1));
        CHECK(integrate(t1y1) == Rational(1, 2));
    }
    SECTION("int t1 t2 y1 y2 over Delta^2 is 1/24") {
        PolyForm w = multiply(multiply(PolyForm::t(2, 1), PolyForm::t(2, 2)),
                              multiply(PolyForm::y(2, 1), PolyForm::y(2, 2)));
        CHECK(integrate(w) == Rational(1, 24));
    }
    SECTION("monomial formula in dimension 3") {
        // t1^2 t2 y1 y2 y3: 2! 1! 0! / (3 + 3)! = 2/720.
        PolyForm w{3,
                   cdga::Element{{cdga::Monomial{{{0, 2},
                                                  {1, 1},
                                                  {3, 1},
                                                  {4, 1},
                                                  {5, 1}}},
                                  Rational(1)}}};
        CHECK(integrate(w) == Rational(2, 720));
    }
    SECTION("degree mismatch is rejected") {
        CHECK_THROWS_AS(integrate(PolyForm::t(1, 1)), std::invalid_argument);
    }
}

TEST_CASE("Stokes on Delta^1 for omega = t1") {
    auto res = stokes_check(PolyForm::t(1, 1));
    CHECK(res.lhs == 1);
    CHECK(res.rhs == 1);
    CHECK(res.equal);
}

TEST_CASE("Stokes holds for random forms", "[property]") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            PolyForm w = random_form(n, n - 1, 4, rng);
            auto res = stokes_check(w);
            INFO("n=" << n << " trial=" << trial);
            CHECK(res.equal);
        }
}

TEST_CASE("A_PL,n is acyclic in each positive total degree") {
    for (int n = 1; n <= 3; ++n)
        for (int T = 1; T <= 5; ++T) {
            auto dims = total_degree_cohomology(n, T);
            INFO("n=" << n << " T=" << T);
            for (auto dim : dims) CHECK(dim == 0);
        }
    // Total degree zero carries the constants.
    auto dims0 = total_degree_cohomology(2, 0);
    REQUIRE(dims0.size() == 1);
    CHECK(dims0[0] == 1);
}

namespace {

FiniteSimplicialSet point_set() {
    FiniteSimplicialSet X;
    X.simplices[0] = {"p"};
    return X;
}

FiniteSimplicialSet delta2() {
    FiniteSimplicialSet X;
    X.simplices[0] = {"v0", "v1", "v2"};
    X.simplices[1] = {"e01", "e02", "e12"};
    X.simplices[2] = {"f"};
    X.faces[{1, "e01"}] = {"v1", "v0"};
    X.faces[{1, "e02"}] = {"v2", "v0"};
    X.faces[{1, "e12"}] = {"v2", "v1"};
    X.faces[{2, "f"}] = {"e12", "e02", "e01"};
    return X;
}

FiniteSimplicialSet boundary_delta2() {
    FiniteSimplicialSet X = delta2();
    X.simplices.erase(2);
    X.faces.erase({2, "f"});
    return X;
}

}  // namespace

TEST_CASE("simplicial set validation") {
    auto X = delta2();
    X.validate();
    SECTION("missing face id") {
        X.faces[{1, "e01"}] = {"v1", "bogus"};
        CHECK_THROWS_AS(X.validate(), std::invalid_argument);
    }
    SECTION("wrong face count") {
        X.faces[{2, "f"}] = {"e12", "e02"};
        CHECK_THROWS_AS(X.validate(), std::invalid_argument);
    }
    SECTION("face-face identity violated") {
        X.faces[{2, "f"}] = {"e12", "e01", "e02"};
        CHECK_THROWS_AS(X.validate(), std::invalid_argument);
    }
}

TEST_CASE("sections over a point") {
    auto X = point_set();
    CHECK(sections(X, 0, 3).size() == 1);
    CHECK(sections(X, 1, 3).empty());
    auto dims = sections_cohomology(X, 2, 3);
    CHECK(dims == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("Delta^2 is contractible") {
    auto dims = sections_cohomology(delta2(), 2, 4);
    CHECK(dims == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("boundary of Delta^2 has circle cohomology") {
    auto dims = sections_cohomology(boundary_delta2(), 1, 4);
    CHECK(dims == std::vector<std::size_t>{1, 1});
}

TEST_CASE("section counts over the boundary circle") {
    auto X = boundary_delta2();
    // Degree-0 sections with polynomial degree <= D: compatible vertex
    // values force continuity around the circle.
    auto s0 = sections(X, 0, 0);
    CHECK(s0.size() == 1);  // constants only at polynomial degree 0
    auto s1 = sections(X, 1, 1);
    // Each edge carries c * y with no compatibility constraint in top form
    // degree plus nothing else at D=1.
    CHECK(s1.size() == 3);
}
