// Shared helpers for building presentations and random elements in tests.
#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "rht/cdga.hpp"

namespace rht::testing {

struct GenSpec {
    std::string name;
    int degree;
    // d on this generator, as (coefficient, monomial in generator names with
    // exponents), given after all generators are declared via a callback.
};

using PresPtr = std::shared_ptr<const cdga::CdgaPresentation>;

// Sphere model S^2: Lambda(x2, y3), dy = x^2.
inline PresPtr s2_model(int truncation = 12) {
    auto p = std::make_shared<cdga::CdgaPresentation>();
    p->name = "s2-model";
    p->generators = {{"x", 2}, {"y", 3}};
    cdga::Element dy{{cdga::Monomial{{{0, 2}}}, Rational(1)}};
    p->d_on_generators = {cdga::element_zero(), dy};
    p->truncation_degree = truncation;
    cdga::finalize_presentation(*p);
    return p;
}

// Lambda(x_k) with zero differential (odd sphere model for odd k).
inline PresPtr free_one_generator(int k, int truncation = 12) {
    auto p = std::make_shared<cdga::CdgaPresentation>();
    p->name = "free-deg" + std::to_string(k);
    p->generators = {{"x", k}};
    p->d_on_generators = {cdga::element_zero()};
    p->truncation_degree = truncation;
    cdga::finalize_presentation(*p);
    return p;
}

// Truncated polynomial cohomology ring Lambda(x_k)/(x^2), d = 0.
inline PresPtr truncated_even_sphere(int k, int truncation = 12) {
    auto p = std::make_shared<cdga::CdgaPresentation>();
    p->name = "h-sphere-deg" + std::to_string(k);
    p->generators = {{"x", k}};
    p->d_on_generators = {cdga::element_zero()};
    p->relations = {cdga::Element{{cdga::Monomial{{{0, 2}}}, Rational(1)}}};
    p->truncation_degree = truncation;
    cdga::finalize_presentation(*p);
    return p;
}

// Contractible factor Lambda(b1, a2), db = a.
inline PresPtr acyclic_factor(int truncation = 12) {
    auto p = std::make_shared<cdga::CdgaPresentation>();
    p->name = "acyclic";
    p->generators = {{"b", 1}, {"a", 2}};
    p->d_on_generators = {cdga::generator_element(1), cdga::element_zero()};
    p->truncation_degree = truncation;
    cdga::finalize_presentation(*p);
    return p;
}

// Lambda(x3) tensor the acyclic factor.
inline PresPtr s3_times_acyclic(int truncation = 12) {
    auto p = std::make_shared<cdga::CdgaPresentation>();
    p->name = "s3-times-acyclic";
    p->generators = {{"x", 3}, {"b", 1}, {"a", 2}};
    p->d_on_generators = {cdga::element_zero(), cdga::generator_element(2),
                          cdga::element_zero()};
    p->truncation_degree = truncation;
    cdga::finalize_presentation(*p);
    return p;
}

// Random homogeneous element of the given degree (may be zero).
inline cdga::Element random_homogeneous(const cdga::CdgaPresentation& p,
                                        int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    cdga::Element e;
    for (const auto& m : cdga::basis_in_degree(p, degree))
        cdga::add_term(e, m, Rational(num(rng), den(rng)));
    return e;
}

}  // namespace rht::testing
