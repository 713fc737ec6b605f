/*
 * cdga.hpp
 * --------
 * Free graded-commutative algebras with Koszul signs, differentials
 * extended by the Leibniz rule, quotients by monomial-rewriting relation
 * ideals, morphisms, chain homotopies, and cohomology as a graded algebra.
 *
 * Relations are supported only as monomial rewriting systems (odd squares
 * are built in; explicit relations rewrite their leading monomial to the
 * rest).  Every presentation in scope reduces to such a system.
 */
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rht/graded_core.hpp"
#include "rht/rational.hpp"

namespace rht::cdga {

struct Generator {
    std::string name;
    int degree = 0;
};

// Canonical monomial: factors sorted by generator declaration index,
// exponents >= 1, odd generators with exponent exactly 1.
struct Monomial {
    std::vector<std::pair<int, int>> factors;  // (generator index, exponent)

    bool operator<(const Monomial& o) const { return factors < o.factors; }
    bool operator==(const Monomial& o) const { return factors == o.factors; }
    bool is_unit() const { return factors.empty(); }
};

using Element = std::map<Monomial, Rational>;

inline Element element_zero() { return {}; }
inline Element element_unit() { return {{Monomial{}, Rational(1)}}; }

inline void add_term(Element& e, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = e.find(m);
    if (it == e.end()) {
        e.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

inline Element add(const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [m, c] : b) add_term(r, m, c);
    return r;
}

inline Element scale(const Element& a, const Rational& c) {
    Element r;
    if (c == 0) return r;
    for (const auto& [m, q] : a) r.emplace(m, q * c);
    return r;
}

inline Element sub(const Element& a, const Element& b) {
    return add(a, scale(b, Rational(-1)));
}

struct CdgaPresentation {
    std::string name;
    std::vector<Generator> generators;
    std::vector<Element> d_on_generators;  // aligned with generators
    std::vector<Element> relations;        // homogeneous ideal generators
    int truncation_degree = 10;

    // Derived rewriting system: leading monomial -> remainder element.
    std::map<Monomial, Element> rewrite_rules;

    int degree_of(const Monomial& m) const {
        int d = 0;
        for (const auto& [g, e] : m.factors) d += generators[g].degree * e;
        return d;
    }

    // Degree of a homogeneous element; nullopt for 0, throws if mixed.
    std::optional<int> degree_of(const Element& e) const {
        std::optional<int> d;
        for (const auto& [m, c] : e) {
            int dm = degree_of(m);
            if (!d)
                d = dm;
            else if (*d != dm)
                throw std::invalid_argument("element is not homogeneous");
        }
        return d;
    }

    int generator_index(const std::string& n) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name == n) return static_cast<int>(i);
        throw std::invalid_argument("unknown generator '" + n + "'");
    }

    std::string monomial_label(const Monomial& m) const {
        if (m.is_unit()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [g, e] : m.factors) {
            if (!first) os << "*";
            first = false;
            os << generators[g].name;
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Multiplication with Koszul signs.

// Product of canonical monomials.  Returns nullopt when an odd generator
// squares to zero; otherwise the merged monomial and the sign picked up by
// moving factors of b past the odd factors of a.
inline std::optional<std::pair<Monomial, int>> monomial_product(
    const CdgaPresentation& p, const Monomial& a, const Monomial& b) {
    Monomial out;
    int sign = 1;
    // Number of odd-degree factors of a not yet emitted.
    int odd_remaining = 0;
    for (const auto& [g, e] : a.factors)
        if (p.generators[g].degree % 2 != 0) ++odd_remaining;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        bool take_a = j == b.factors.size() ||
                      (i < a.factors.size() &&
                       a.factors[i].first < b.factors[j].first);
        bool take_b = i == a.factors.size() ||
                      (j < b.factors.size() &&
                       b.factors[j].first < a.factors[i].first);
        if (take_a) {
            if (p.generators[a.factors[i].first].degree % 2 != 0)
                --odd_remaining;
            out.factors.push_back(a.factors[i]);
            ++i;
        } else if (take_b) {
            if (p.generators[b.factors[j].first].degree % 2 != 0 &&
                odd_remaining % 2 != 0)
                sign = -sign;
            out.factors.push_back(b.factors[j]);
            ++j;
        } else {
            int g = a.factors[i].first;
            if (p.generators[g].degree % 2 != 0) return std::nullopt;  // x^2=0
            out.factors.emplace_back(g,
                                     a.factors[i].second + b.factors[j].second);
            ++i;
            ++j;
        }
    }
    return std::make_pair(std::move(out), sign);
}

inline Element multiply_free(const CdgaPresentation& p, const Element& a,
                             const Element& b) {
    Element r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto prod = monomial_product(p, ma, mb);
            if (!prod) continue;
            add_term(r, prod->first, ca * cb * prod->second);
        }
    return r;
}

// Reduce modulo the rewriting system to a normal form.
inline Element normalize(const CdgaPresentation& p, Element e) {
    if (p.rewrite_rules.empty()) return e;
    constexpr int kMaxPasses = 10000;
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        bool changed = false;
        for (auto it = e.begin(); it != e.end(); ++it) {
            const Monomial& m = it->first;
            for (const auto& [lead, rest] : p.rewrite_rules) {
                // Does lead divide m?
                Monomial quotient;
                bool divides = true;
                std::size_t li = 0;
                for (const auto& [g, exp] : m.factors) {
                    int need = 0;
                    while (li < lead.factors.size() &&
                           lead.factors[li].first < g)
                        divides = false, ++li;
                    if (li < lead.factors.size() &&
                        lead.factors[li].first == g) {
                        need = lead.factors[li].second;
                        ++li;
                    }
                    if (need > exp) divides = false;
                    if (!divides) break;
                    if (exp - need > 0) quotient.factors.emplace_back(g, exp - need);
                }
                if (li < lead.factors.size()) divides = false;
                if (!divides) continue;
                // m = sign * quotient * lead; replace by sign * quotient * rest.
                auto qp = monomial_product(p, quotient, lead);
                if (!qp || !(qp->first == m))
                    throw std::logic_error("rewrite division is inconsistent");
                Rational coeff = it->second * qp->second;
                Element replacement =
                    multiply_free(p, Element{{quotient, coeff}}, rest);
                e.erase(it);
                for (const auto& [rm, rc] : replacement) add_term(e, rm, rc);
                changed = true;
                break;
            }
            if (changed) break;
        }
        if (!changed) return e;
    }
    throw std::logic_error("rewriting did not terminate");
}

inline Element multiply(const CdgaPresentation& p, const Element& a,
                        const Element& b) {
    return normalize(p, multiply_free(p, a, b));
}

// ---------------------------------------------------------------------------
// Differential by the Leibniz rule.

inline Element apply_d(const CdgaPresentation& p, const Element& e) {
    Element out;
    for (const auto& [m, c] : e) {
        int prefix_degree = 0;
        for (std::size_t pos = 0; pos < m.factors.size(); ++pos) {
            auto [g, exp] = m.factors[pos];
            const Element& dg = p.d_on_generators[g];
            if (!dg.empty()) {
                // d(g^e) = e * g^(e-1) * dg; assemble prefix * that * suffix.
                Monomial prefix, suffix;
                prefix.factors.assign(m.factors.begin(),
                                      m.factors.begin() + pos);
                if (exp > 1) prefix.factors.emplace_back(g, exp - 1);
                suffix.factors.assign(m.factors.begin() + pos + 1,
                                      m.factors.end());
                Rational coeff = c * exp;
                if (prefix_degree % 2 != 0) coeff = -coeff;
                Element term = multiply_free(p, Element{{prefix, coeff}}, dg);
                term = multiply_free(p, term, Element{{suffix, Rational(1)}});
                for (const auto& [tm, tc] : term) add_term(out, tm, tc);
            }
            prefix_degree += p.generators[g].degree * exp;
        }
    }
    return normalize(p, out);
}

// ---------------------------------------------------------------------------
// Presentation validation and construction helpers.

inline Monomial generator_monomial(int index) {
    Monomial m;
    m.factors.emplace_back(index, 1);
    return m;
}

inline Element generator_element(int index) {
    return Element{{generator_monomial(index), Rational(1)}};
}

// Builds the rewriting system from the declared relations and validates
// the presentation: unique names, degrees, d raises degree by one,
// d^2 = 0 on generators, relations homogeneous and d-stable.
inline void finalize_presentation(CdgaPresentation& p) {
    if (p.d_on_generators.size() != p.generators.size())
        throw std::invalid_argument("d must be specified for each generator");
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (p.generators[i].degree < 0)
            throw std::invalid_argument("generator '" + p.generators[i].name +
                                        "' has negative degree");
        for (std::size_t j = i + 1; j < p.generators.size(); ++j)
            if (p.generators[i].name == p.generators[j].name)
                throw std::invalid_argument("duplicate generator name '" +
                                            p.generators[i].name + "'");
    }
    p.rewrite_rules.clear();
    for (const Element& rel : p.relations) {
        if (rel.empty()) continue;
        p.degree_of(rel);  // homogeneity check
        // Leading monomial: the largest in canonical order.
        auto lead_it = std::prev(rel.end());
        Monomial lead = lead_it->first;
        Rational lead_coeff = lead_it->second;
        Element rest;
        for (auto it = rel.begin(); it != lead_it; ++it)
            rest.emplace(it->first, -it->second / lead_coeff);
        p.rewrite_rules[lead] = std::move(rest);
    }
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        const Element& dg = p.d_on_generators[i];
        auto deg = p.degree_of(dg);
        if (deg && *deg != p.generators[i].degree + 1)
            throw std::invalid_argument("d(" + p.generators[i].name +
                                        ") does not raise degree by one");
        if (!apply_d(p, normalize(p, dg)).empty())
            throw std::invalid_argument("d^2 != 0 on generator '" +
                                        p.generators[i].name + "'");
    }
    // d maps the relation ideal into itself: d of each relation must
    // normalize to zero.
    for (const Element& rel : p.relations)
        if (!normalize(p, apply_d(p, rel)).empty())
            throw std::invalid_argument(
                "relation ideal is not closed under d");
}

// ---------------------------------------------------------------------------
// Bases and the associated cochain complex.

// All canonical monomials of total degree k in normal form.  Degree-0
// generators would break finiteness and are rejected here; bounded
// polynomial variables are handled by the apl module's own enumerator.
inline std::vector<Monomial> basis_in_degree(const CdgaPresentation& p,
                                             int k) {
    if (k > p.truncation_degree)
        throw std::out_of_range("degree exceeds the truncation degree");
    for (const auto& g : p.generators)
        if (g.degree == 0)
            throw std::domain_error(
                "presentation has an unbounded degree-0 generator '" + g.name +
                "'; finite bases are unavailable");
    std::vector<Monomial> out;
    Monomial current;
    auto reducible = [&](const Monomial& m) {
        Element n = normalize(p, Element{{m, Rational(1)}});
        return !(n.size() == 1 && n.begin()->first == m &&
                 n.begin()->second == 1);
    };
    std::function<void(std::size_t, int)> recurse = [&](std::size_t i,
                                                        int remaining) {
        if (remaining == 0) {
            if (!reducible(current)) out.push_back(current);
            return;
        }
        if (i == p.generators.size()) return;
        recurse(i + 1, remaining);
        const int d = p.generators[i].degree;
        if (d <= 0 || d > remaining) return;
        const int max_exp = p.generators[i].degree % 2 != 0 ? 1 : remaining / d;
        for (int e = 1; e <= max_exp && e * d <= remaining; ++e) {
            current.factors.emplace_back(static_cast<int>(i), e);
            recurse(i + 1, remaining - e * d);
            current.factors.pop_back();
        }
    };
    if (k < 0) return out;
    recurse(0, k);
    // Canonical deterministic order.
    std::sort(out.begin(), out.end());
    return out;
}

// The cochain complex of the presentation on degrees [lo, hi].
inline graded::CochainComplexSlice complex_slice(const CdgaPresentation& p,
                                                 int lo, int hi) {
    graded::GradedBasis basis;
    std::map<int, std::vector<Monomial>> monomials;
    for (int k = std::max(lo, 0); k <= hi; ++k) {
        monomials[k] = basis_in_degree(p, k);
        std::vector<std::string> labels;
        for (const auto& m : monomials[k]) labels.push_back(p.monomial_label(m));
        basis.labels[k] = std::move(labels);
    }
    if (lo < 0) basis.labels[lo] = {};
    graded::LinearMap d;
    d.source = basis;
    d.target = basis;
    d.shift = 1;
    for (const auto& [k, monos] : monomials) {
        if (k + 1 > hi) continue;
        for (const auto& m : monos) {
            Element dm = apply_d(p, Element{{m, Rational(1)}});
            std::vector<std::pair<std::string, Rational>> entry;
            for (const auto& [tm, tc] : dm)
                entry.emplace_back(p.monomial_label(tm), tc);
            if (!entry.empty()) d.entries[{k, p.monomial_label(m)}] = entry;
        }
    }
    return graded::CochainComplexSlice::checked(std::move(basis), std::move(d),
                                                lo, hi);
}

// ---------------------------------------------------------------------------
// Cohomology with representatives and the induced product.

struct CohomologyDegree {
    int degree = 0;
    std::size_t dimension = 0;
    std::vector<Element> representatives;
};

struct Cohomology {
    const CdgaPresentation* presentation = nullptr;
    int up_to = 0;
    std::vector<CohomologyDegree> degrees;  // indexed 0..up_to
    // Cached bases for coordinate computations.
    std::map<int, std::vector<Monomial>> bases;

    const CohomologyDegree& at(int k) const { return degrees.at(k); }

    // Coordinates of a cocycle's class in the chosen representative basis,
    // i.e. solve z = sum c_i rep_i + d(w).  Throws if z is not a cocycle.
    graded::Vector class_coordinates(const Element& z, int k) const;
};

inline graded::Vector element_coordinates(
    const CdgaPresentation& p, const std::vector<Monomial>& basis,
    const Element& e) {
    graded::Vector v(basis.size(), Rational(0));
    Element rem = e;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = rem.find(basis[i]);
        if (it != rem.end()) {
            v[i] = it->second;
            rem.erase(it);
        }
    }
    if (!rem.empty())
        throw std::invalid_argument(
            "element has monomials outside the basis in its degree");
    return v;
}

inline Cohomology cohomology(const CdgaPresentation& p, int up_to) {
    if (up_to > p.truncation_degree - 1)
        throw std::out_of_range(
            "cohomology range exceeds truncation degree - 1");
    Cohomology h;
    h.presentation = &p;
    h.up_to = up_to;
    auto slice = complex_slice(p, -1, up_to + 1);
    for (int k = 0; k <= up_to + 1; ++k) h.bases[k] = basis_in_degree(p, k);
    for (int k = 0; k <= up_to; ++k) {
        auto res = graded::cohomology_at(slice, k);
        CohomologyDegree deg;
        deg.degree = k;
        deg.dimension = res.dimension;
        for (const auto& vec : res.representatives) {
            Element rep;
            for (std::size_t i = 0; i < vec.size(); ++i)
                add_term(rep, h.bases[k][i], vec[i]);
            deg.representatives.push_back(std::move(rep));
        }
        h.degrees.push_back(std::move(deg));
    }
    return h;
}

inline graded::Vector Cohomology::class_coordinates(const Element& z,
                                                    int k) const {
    const CdgaPresentation& p = *presentation;
    if (!apply_d(p, z).empty())
        throw std::invalid_argument("class_coordinates: element is not closed");
    const auto& basis = bases.at(k);
    const auto& reps = degrees.at(k).representatives;
    // Columns: representatives, then d of the (k-1)-basis.
    graded::Matrix cols;
    for (const auto& r : reps) cols.push_back(element_coordinates(p, basis, r));
    std::vector<Monomial> below =
        k > 0 ? bases.at(k - 1) : std::vector<Monomial>{};
    for (const auto& m : below) {
        Element dm = apply_d(p, Element{{m, Rational(1)}});
        if (!dm.empty()) cols.push_back(element_coordinates(p, basis, dm));
    }
    graded::Vector target = element_coordinates(p, basis, z);
    // Transpose to rows for solve().
    graded::Matrix mat(basis.size(), graded::Vector(cols.size(), Rational(0)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < basis.size(); ++i) mat[i][j] = cols[j][i];
    graded::Vector x;
    if (!graded::solve(mat, target, x))
        throw std::logic_error("cocycle not expressible; complex corrupt");
    return graded::Vector(x.begin(), x.begin() + reps.size());
}

// Cup product of two classes, as coordinates in the representative basis
// of the product degree.  Changing representatives by coboundaries changes
// the product by a coboundary, so this is well defined on classes.
inline graded::Vector cup_product(const Cohomology& h, int ka, std::size_t ia,
                                  int kb, std::size_t ib) {
    const CdgaPresentation& p = *h.presentation;
    Element prod = multiply(p, h.at(ka).representatives.at(ia),
                            h.at(kb).representatives.at(ib));
    return h.class_coordinates(prod, ka + kb);
}

// ---------------------------------------------------------------------------
// Morphisms and homotopies.

struct CdgaMorphism {
    std::shared_ptr<const CdgaPresentation> source;
    std::shared_ptr<const CdgaPresentation> target;
    std::vector<Element> images;  // per source generator

    Element apply(const Element& e) const {
        Element out;
        for (const auto& [m, c] : e) {
            Element term{{Monomial{}, c}};
            for (const auto& [g, exp] : m.factors)
                for (int i = 0; i < exp; ++i)
                    term = multiply(*target, term, images[g]);
            for (const auto& [tm, tc] : term) add_term(out, tm, tc);
        }
        return normalize(*target, out);
    }

    // Degree preservation, d-compatibility on generators, and relation
    // respect, all up to the shared truncation range.
    void validate() const {
        if (images.size() != source->generators.size())
            throw std::invalid_argument(
                "morphism must give an image for each source generator");
        for (std::size_t g = 0; g < images.size(); ++g) {
            auto deg = target->degree_of(normalize(*target, images[g]));
            if (deg && *deg != source->generators[g].degree)
                throw std::invalid_argument("morphism is not degree-preserving on '" +
                                            source->generators[g].name + "'");
            Element lhs = apply(source->d_on_generators[g]);
            Element rhs = apply_d(*target, images[g]);
            if (!sub(lhs, rhs).empty())
                throw std::invalid_argument(
                    "morphism does not commute with d on '" +
                    source->generators[g].name + "'");
        }
        for (const auto& rel : source->relations)
            if (!apply(rel).empty())
                throw std::invalid_argument(
                    "morphism does not respect the relation ideal");
    }
};

inline CdgaMorphism identity_morphism(
    std::shared_ptr<const CdgaPresentation> p) {
    CdgaMorphism f;
    f.source = p;
    f.target = p;
    for (std::size_t g = 0; g < p->generators.size(); ++g)
        f.images.push_back(generator_element(static_cast<int>(g)));
    return f;
}

struct QuasiIsoReport {
    bool is_quasi_iso = false;
    struct DegreeReport {
        int degree;
        std::size_t source_dim;
        std::size_t target_dim;
        std::size_t rank;
        bool bijective;
    };
    std::vector<DegreeReport> per_degree;
};

inline QuasiIsoReport is_quasi_iso_up_to(const CdgaMorphism& f, int n) {
    Cohomology hs = cohomology(*f.source, n);
    Cohomology ht = cohomology(*f.target, n);
    QuasiIsoReport report;
    report.is_quasi_iso = true;
    for (int k = 0; k <= n; ++k) {
        const auto& src = hs.at(k);
        graded::Matrix cols;
        for (const auto& rep : src.representatives)
            cols.push_back(ht.class_coordinates(f.apply(rep), k));
        // rank of the induced map
        graded::Matrix mat;
        std::size_t tdim = ht.at(k).dimension;
        mat.assign(tdim, graded::Vector(cols.size(), Rational(0)));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < tdim; ++i) mat[i][j] = cols[j][i];
        std::size_t r = graded::rank(mat);
        bool bij = (src.dimension == tdim) && (r == tdim);
        report.per_degree.push_back({k, src.dimension, tdim, r, bij});
        report.is_quasi_iso &= bij;
    }
    return report;
}

struct ChainHomotopy {
    CdgaMorphism f;
    CdgaMorphism g;
    // Basis monomial of the source (degree n) -> target element (degree n-1).
    // Absent monomials map to zero.
    std::map<Monomial, Element> h;
};

// Verifies f - g = d h + h d exactly on every basis monomial in the
// verifiable range of the truncations.
inline bool check_homotopy(const ChainHomotopy& ch) {
    const auto& src = *ch.f.source;
    const auto& tgt = *ch.f.target;
    if (ch.g.source.get() != ch.f.source.get() ||
        ch.g.target.get() != ch.f.target.get())
        throw std::invalid_argument("homotopy endpoints must share source and target");
    auto h_apply = [&](const Element& e) {
        Element out;
        for (const auto& [m, c] : e) {
            auto it = ch.h.find(m);
            if (it == ch.h.end()) continue;
            for (const auto& [tm, tc] : it->second) add_term(out, tm, tc * c);
        }
        return normalize(tgt, out);
    };
    int hi = std::min(src.truncation_degree, tgt.truncation_degree) - 1;
    for (int n = 0; n <= hi; ++n) {
        for (const auto& m : basis_in_degree(src, n)) {
            Element em{{m, Rational(1)}};
            Element lhs = sub(ch.f.apply(em), ch.g.apply(em));
            Element rhs = add(apply_d(tgt, h_apply(em)),
                              h_apply(apply_d(src, em)));
            if (!sub(lhs, rhs).empty()) return false;
        }
    }
    return true;
}

}  // namespace rht::cdga
