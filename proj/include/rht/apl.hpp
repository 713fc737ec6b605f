/*
 * apl.hpp
 * -------
 * The simplicial CDGA of polynomial differential forms on standard
 * simplices: face and degeneracy maps, simplicial-identity verification,
 * exact integration with Stokes checks, and sections over finite
 * simplicial sets.
 *
 * A_PL,n is presented in canonical coordinates: the barycentric relations
 * t_0 + ... + t_n = 1 and y_0 + ... + y_n = 0 are eliminated up front, so
 * the algebra is free on t_1..t_n (degree 0) and y_1..y_n (degree 1) with
 * dt_i = y_i.  The symmetric presentation reappears only in the face and
 * degeneracy substitution tables.
 */
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rht/cdga.hpp"

namespace rht::apl {

using cdga::CdgaPresentation;
using cdga::Element;
using cdga::Monomial;

// Shared presentation of A_PL,n in canonical coordinates.  Generator
// indices: t_i at i-1, y_i at n+i-1 (1-based i).
inline std::shared_ptr<const CdgaPresentation> simplex_algebra(int n) {
    static std::map<int, std::shared_ptr<const CdgaPresentation>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto p = std::make_shared<CdgaPresentation>();
    p->name = "A_PL," + std::to_string(n);
    for (int i = 1; i <= n; ++i) p->generators.push_back({"t" + std::to_string(i), 0});
    for (int i = 1; i <= n; ++i) p->generators.push_back({"y" + std::to_string(i), 1});
    for (int i = 1; i <= n; ++i)
        p->d_on_generators.push_back(cdga::generator_element(n + i - 1));
    for (int i = 1; i <= n; ++i) p->d_on_generators.push_back(cdga::element_zero());
    p->truncation_degree = 1000;  // gradings are bounded per call instead
    cdga::finalize_presentation(*p);
    cache[n] = p;
    return p;
}

inline int t_index(int n, int i) {
    (void)n;
    return i - 1;
}
inline int y_index(int n, int i) { return n + i - 1; }

// A polynomial differential form on the standard n-simplex.
struct PolyForm {
    int simplex_dim = 0;
    Element value;

    static PolyForm zero(int n) { return {n, cdga::element_zero()}; }
    static PolyForm unit(int n) { return {n, cdga::element_unit()}; }
    static PolyForm t(int n, int i) {
        return {n, cdga::generator_element(t_index(n, i))};
    }
    static PolyForm y(int n, int i) {
        return {n, cdga::generator_element(y_index(n, i))};
    }
};

inline int form_degree(int n, const Monomial& m) {
    int d = 0;
    for (const auto& [g, e] : m.factors)
        if (g >= n) d += e;
    return d;
}

inline int poly_degree(int n, const Monomial& m) {
    int d = 0;
    for (const auto& [g, e] : m.factors)
        if (g < n) d += e;
    return d;
}

inline PolyForm d(const PolyForm& w) {
    return {w.simplex_dim,
            cdga::apply_d(*simplex_algebra(w.simplex_dim), w.value)};
}

inline PolyForm multiply(const PolyForm& a, const PolyForm& b) {
    if (a.simplex_dim != b.simplex_dim)
        throw std::invalid_argument("forms live on different simplices");
    return {a.simplex_dim,
            cdga::multiply(*simplex_algebra(a.simplex_dim), a.value, b.value)};
}

namespace detail {

// Substitution homomorphism given images of the t generators; y images
// are forced to the differentials of the t images.
inline Element substitute(int n_src, int n_tgt,
                          const std::vector<Element>& t_images,
                          const Element& e) {
    const auto& tgt = *simplex_algebra(n_tgt);
    std::vector<Element> images = t_images;
    for (int i = 1; i <= n_src; ++i)
        images.push_back(cdga::apply_d(tgt, t_images[i - 1]));
    Element out;
    for (const auto& [m, c] : e) {
        Element term{{Monomial{}, c}};
        for (const auto& [g, exp] : m.factors)
            for (int k = 0; k < exp; ++k)
                term = cdga::multiply(tgt, term, images[g]);
        for (const auto& [tm, tc] : term) cdga::add_term(out, tm, tc);
    }
    return out;
}

}  // namespace detail

// The i-th face map A_PL,n -> A_PL,n-1, per the simplicial substitution
// table re-expressed in canonical coordinates.
inline PolyForm face(const PolyForm& w, int i) {
    const int n = w.simplex_dim;
    if (n < 1) throw std::out_of_range("face of a 0-simplex form");
    if (i < 0 || i > n) throw std::out_of_range("face index out of range");
    std::vector<Element> t_images;  // for t_1..t_n
    for (int k = 1; k <= n; ++k) {
        Element img;
        if (i == 0) {
            if (k == 1) {
                // t_1 -> t_0' = 1 - sum of the target t's.
                img = cdga::element_unit();
                for (int j = 1; j <= n - 1; ++j)
                    img = cdga::sub(img,
                                    cdga::generator_element(t_index(n - 1, j)));
            } else {
                img = cdga::generator_element(t_index(n - 1, k - 1));
            }
        } else {
            if (k < i)
                img = cdga::generator_element(t_index(n - 1, k));
            else if (k == i)
                img = cdga::element_zero();
            else
                img = cdga::generator_element(t_index(n - 1, k - 1));
        }
        t_images.push_back(std::move(img));
    }
    return {n - 1, detail::substitute(n, n - 1, t_images, w.value)};
}

// The j-th degeneracy map A_PL,n -> A_PL,n+1.
inline PolyForm degeneracy(const PolyForm& w, int j) {
    const int n = w.simplex_dim;
    if (j < 0 || j > n) throw std::out_of_range("degeneracy index out of range");
    std::vector<Element> t_images;
    for (int k = 1; k <= n; ++k) {
        Element img;
        if (k < j)
            img = cdga::generator_element(t_index(n + 1, k));
        else if (k == j)
            img = cdga::add(cdga::generator_element(t_index(n + 1, k)),
                            cdga::generator_element(t_index(n + 1, k + 1)));
        else
            img = cdga::generator_element(t_index(n + 1, k + 1));
        t_images.push_back(std::move(img));
    }
    return {n + 1, detail::substitute(n, n + 1, t_images, w.value)};
}

// ---------------------------------------------------------------------------
// Simplicial identity verification.

struct IdentityCheck {
    std::string family;
    int n;  // dimension of the algebra the generators were taken from
    int i;
    int j;
    bool passed;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed = true;
};

// Exhaustively checks the five simplicial identity families on every
// canonical generator t_k, y_k of A_PL,n for n <= n_max.
inline IdentityReport verify_simplicial_identities(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    IdentityReport report;
    auto record = [&](const std::string& family, int n, int i, int j,
                      bool ok) {
        report.checks.push_back({family, n, i, j, ok});
        report.all_passed &= ok;
    };
    auto generators = [&](int n) {
        std::vector<PolyForm> gens;
        for (int k = 1; k <= n; ++k) gens.push_back(PolyForm::t(n, k));
        for (int k = 1; k <= n; ++k) gens.push_back(PolyForm::y(n, k));
        if (n == 0) gens.push_back(PolyForm::unit(0));
        return gens;
    };
    auto equal = [&](const PolyForm& a, const PolyForm& b) {
        return a.simplex_dim == b.simplex_dim &&
               cdga::sub(a.value, b.value).empty();
    };
    for (int n = 0; n <= n_max; ++n) {
        auto gens = generators(n);
        // face-face: d_i d_j = d_{j-1} d_i for i < j, on A_PL,n with n >= 2.
        if (n >= 2)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    bool ok = true;
                    for (const auto& g : gens)
                        ok &= equal(face(face(g, j), i), face(face(g, i), j - 1));
                    record("face-face", n, i, j, ok);
                }
        // degeneracy-degeneracy: s_i s_j = s_{j+1} s_i for i <= j.
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i) {
                bool ok = true;
                for (const auto& g : gens)
                    ok &= equal(degeneracy(degeneracy(g, j), i),
                                degeneracy(degeneracy(g, i), j + 1));
                record("degeneracy-degeneracy", n, i, j, ok);
            }
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                // face-degeneracy on A_PL,n via s_j then d_i.
                if (i < j) {
                    if (n < 1) continue;
                    bool ok = true;
                    for (const auto& g : gens)
                        ok &= equal(face(degeneracy(g, j), i),
                                    degeneracy(face(g, i), j - 1));
                    record("face-degeneracy-low", n, i, j, ok);
                } else if (i == j || i == j + 1) {
                    bool ok = true;
                    for (const auto& g : gens)
                        ok &= equal(face(degeneracy(g, j), i), g);
                    record("face-degeneracy-identity", n, i, j, ok);
                } else {
                    if (n < 1) continue;
                    bool ok = true;
                    for (const auto& g : gens)
                        ok &= equal(face(degeneracy(g, j), i),
                                    degeneracy(face(g, i - 1), j));
                    record("face-degeneracy-high", n, i, j, ok);
                }
            }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Exact integration over the standard simplex.

// Integral of a top-degree form, by the monomial formula
//   int_{Delta^n} t_1^{a_1} ... t_n^{a_n} dt_1...dt_n
//     = a_1! ... a_n! / (n + a_1 + ... + a_n)!
// with orientation y_1 ^ ... ^ y_n positive.
inline Rational integrate(const PolyForm& w) {
    const int n = w.simplex_dim;
    Rational total = 0;
    for (const auto& [m, c] : w.value) {
        if (form_degree(n, m) != n)
            throw std::invalid_argument(
                "integrate needs a form of top degree " + std::to_string(n));
        Integer numerator = 1;
        int total_poly = 0;
        for (const auto& [g, e] : m.factors)
            if (g < n) {
                numerator *= factorial(static_cast<unsigned>(e));
                total_poly += e;
            }
        total += c * Rational(numerator,
                              factorial(static_cast<unsigned>(n + total_poly)));
    }
    return total;
}

struct StokesResult {
    Rational lhs;  // integral of d(omega) over the simplex
    Rational rhs;  // signed sum of face integrals
    bool equal;
};

inline StokesResult stokes_check(const PolyForm& w) {
    const int n = w.simplex_dim;
    for (const auto& [m, c] : w.value)
        if (form_degree(n, m) != n - 1)
            throw std::invalid_argument("stokes_check needs degree n-1");
    Rational lhs = integrate(d(w));
    Rational rhs = 0;
    for (int i = 0; i <= n; ++i) {
        Rational contribution = integrate(face(w, i));
        if (i % 2 != 0) contribution = -contribution;
        rhs += contribution;
    }
    return {lhs, rhs, lhs == rhs};
}

// ---------------------------------------------------------------------------
// Basis enumeration at bounded polynomial degree.

// All monomials on Delta^n with the given form degree and polynomial
// degree at most poly_bound, in canonical order.
inline std::vector<Monomial> form_basis(int n, int form_deg, int poly_bound) {
    std::vector<Monomial> out;
    if (form_deg < 0 || form_deg > n || poly_bound < 0) return out;
    // Choose the y subset, then distribute polynomial degree.
    std::vector<int> subset;
    std::function<void(int)> choose = [&](int next) {
        if (static_cast<int>(subset.size()) == form_deg) {
            std::vector<std::vector<int>> exps;
            std::vector<int> current(n, 0);
            std::function<void(int, int)> distribute = [&](int var,
                                                           int remaining) {
                if (var == n) {
                    exps.push_back(current);
                    return;
                }
                for (int e = 0; e <= remaining; ++e) {
                    current[var] = e;
                    distribute(var + 1, remaining - e);
                }
                current[var] = 0;
            };
            distribute(0, poly_bound);
            for (const auto& a : exps) {
                Monomial m;
                for (int v = 0; v < n; ++v)
                    if (a[v] > 0) m.factors.emplace_back(t_index(n, v + 1), a[v]);
                for (int s : subset) m.factors.emplace_back(y_index(n, s), 1);
                out.push_back(std::move(m));
            }
            return;
        }
        for (int s = next; s <= n; ++s) {
            subset.push_back(s);
            choose(s + 1);
            subset.pop_back();
        }
    };
    choose(1);
    std::sort(out.begin(), out.end());
    return out;
}

// Monomials of exact total degree T (polynomial degree + form degree).
inline std::vector<Monomial> total_degree_basis(int n, int T, int form_deg) {
    std::vector<Monomial> out;
    if (T - form_deg < 0) return out;
    for (const auto& m : form_basis(n, form_deg, T - form_deg))
        if (poly_degree(n, m) == T - form_deg) out.push_back(m);
    return out;
}

// Cohomology dimensions of the total-degree-T component of A_PL,n; the
// total degree is preserved by d, so each component is a finite complex.
inline std::vector<std::size_t> total_degree_cohomology(int n, int T) {
    const auto& p = *simplex_algebra(n);
    const int top = std::min(n, T);
    graded::GradedBasis basis;
    std::map<int, std::vector<Monomial>> monos;
    basis.labels[-1] = {};
    basis.labels[top + 1] = {};
    for (int k = 0; k <= top; ++k) {
        monos[k] = total_degree_basis(n, T, k);
        std::vector<std::string> labels;
        for (const auto& m : monos[k]) labels.push_back(p.monomial_label(m));
        basis.labels[k] = std::move(labels);
    }
    graded::LinearMap dmap;
    dmap.source = basis;
    dmap.target = basis;
    dmap.shift = 1;
    for (int k = 0; k < top; ++k)
        for (const auto& m : monos[k]) {
            Element dm = cdga::apply_d(p, Element{{m, Rational(1)}});
            std::vector<std::pair<std::string, Rational>> entry;
            for (const auto& [tm, tc] : dm)
                entry.emplace_back(p.monomial_label(tm), tc);
            if (!entry.empty()) dmap.entries[{k, p.monomial_label(m)}] = entry;
        }
    auto slice = graded::CochainComplexSlice::checked(basis, dmap, -1, top + 1);
    std::vector<std::size_t> dims;
    for (int k = 0; k <= top; ++k)
        dims.push_back(graded::cohomology_at(slice, k).dimension);
    return dims;
}

// ---------------------------------------------------------------------------
// Finite simplicial sets and A_PL sections.

// Nondegenerate simplices with face incidence tables.  Faces of
// nondegenerate simplices are required to be nondegenerate (the format is
// incidence-based), so degeneracy bookkeeping is implicit: a section is
// determined by its values on nondegenerate simplices.
struct FiniteSimplicialSet {
    // dimension -> ordered simplex ids
    std::map<int, std::vector<std::string>> simplices;
    // (dimension, id) -> ordered face ids (dimension - 1)
    std::map<std::pair<int, std::string>, std::vector<std::string>> faces;

    int dimension() const {
        int d = -1;
        for (const auto& [k, v] : simplices)
            if (!v.empty()) d = std::max(d, k);
        return d;
    }

    void validate() const {
        for (const auto& [key, fs] : faces) {
            auto [dim, id] = key;
            if (static_cast<int>(fs.size()) != dim + 1)
                throw std::invalid_argument("simplex '" + id + "' must have " +
                                            std::to_string(dim + 1) + " faces");
            for (const auto& f : fs) {
                const auto& lower = simplices.count(dim - 1)
                                        ? simplices.at(dim - 1)
                                        : std::vector<std::string>{};
                if (std::find(lower.begin(), lower.end(), f) == lower.end())
                    throw std::invalid_argument("face '" + f +
                                                "' of simplex '" + id +
                                                "' is not declared");
            }
        }
        // Face-face identity on the incidence data.
        for (const auto& [key, fs] : faces) {
            auto [dim, id] = key;
            if (dim < 2) continue;
            for (int j = 1; j <= dim; ++j)
                for (int i = 0; i < j; ++i) {
                    const auto& dj = faces.at({dim - 1, fs[j]});
                    const auto& di = faces.at({dim - 1, fs[i]});
                    if (dj[i] != di[j - 1])
                        throw std::invalid_argument(
                            "face incidence of simplex '" + id +
                            "' violates the simplicial identity");
                }
        }
    }
};

// A compatible assignment of forms to the simplices of X.
struct AplSection {
    std::map<std::pair<int, std::string>, PolyForm> values;
};

namespace detail {

struct SectionSpace {
    // Per simplex, the monomial basis of its ambient form space.
    std::vector<std::pair<int, std::string>> simplex_order;
    std::map<std::pair<int, std::string>, std::vector<Monomial>> ambient;
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;  // (simplex, monomial)
    std::vector<graded::Vector> kernel;  // section basis as coefficient vectors
};

inline SectionSpace section_space(const FiniteSimplicialSet& X, int form_deg,
                                  int poly_cap) {
    SectionSpace sp;
    for (const auto& [dim, ids] : X.simplices)
        for (const auto& id : ids) sp.simplex_order.emplace_back(dim, id);
    std::map<std::pair<int, std::string>, std::size_t> simplex_index;
    for (std::size_t i = 0; i < sp.simplex_order.size(); ++i)
        simplex_index[sp.simplex_order[i]] = i;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown_index;
    for (std::size_t i = 0; i < sp.simplex_order.size(); ++i) {
        auto [dim, id] = sp.simplex_order[i];
        auto basis = form_basis(dim, form_deg, std::max(poly_cap - form_deg, -1));
        for (std::size_t b = 0; b < basis.size(); ++b) {
            unknown_index[{i, b}] = sp.unknowns.size();
            sp.unknowns.emplace_back(i, b);
        }
        sp.ambient[sp.simplex_order[i]] = std::move(basis);
    }
    // Compatibility constraints: value on a face equals the face map of
    // the parent's value.
    graded::Matrix rows;
    for (std::size_t i = 0; i < sp.simplex_order.size(); ++i) {
        auto [dim, id] = sp.simplex_order[i];
        if (dim < 1) continue;
        const auto& fs = X.faces.at({dim, id});
        for (int fi = 0; fi <= dim; ++fi) {
            auto face_key = std::make_pair(dim - 1, fs[fi]);
            std::size_t fidx = simplex_index.at(face_key);
            const auto& face_basis = sp.ambient.at(face_key);
            const auto& own_basis = sp.ambient.at(sp.simplex_order[i]);
            // Row per face-side monomial.
            std::map<Monomial, graded::Vector> rows_by_monomial;
            auto row_for = [&](const Monomial& m) -> graded::Vector& {
                auto it = rows_by_monomial.find(m);
                if (it == rows_by_monomial.end())
                    it = rows_by_monomial
                             .emplace(m, graded::Vector(sp.unknowns.size(),
                                                        Rational(0)))
                             .first;
                return it->second;
            };
            for (std::size_t b = 0; b < own_basis.size(); ++b) {
                PolyForm pf{dim, Element{{own_basis[b], Rational(1)}}};
                PolyForm restricted = face(pf, fi);
                for (const auto& [m, c] : restricted.value)
                    row_for(m)[unknown_index.at({i, b})] += c;
            }
            for (std::size_t b = 0; b < face_basis.size(); ++b)
                row_for(face_basis[b])[unknown_index.at({fidx, b})] -=
                    Rational(1);
            for (auto& [m, row] : rows_by_monomial) rows.push_back(row);
        }
    }
    if (rows.empty())
        rows.assign(1, graded::Vector(sp.unknowns.size(), Rational(0)));
    sp.kernel = graded::null_space(rows);
    if (sp.unknowns.empty()) sp.kernel.clear();
    return sp;
}

}  // namespace detail

// Basis of compatible degree-k sections with total degree bounded by D.
inline std::vector<AplSection> sections(const FiniteSimplicialSet& X,
                                        int form_deg, int D) {
    X.validate();
    auto sp = detail::section_space(X, form_deg, D);
    std::vector<AplSection> out;
    for (const auto& vec : sp.kernel) {
        AplSection s;
        for (const auto& key : sp.simplex_order)
            s.values.emplace(key, PolyForm::zero(key.first));
        for (std::size_t u = 0; u < sp.unknowns.size(); ++u) {
            if (vec[u] == 0) continue;
            auto [si, bi] = sp.unknowns[u];
            const auto& key = sp.simplex_order[si];
            cdga::add_term(s.values.at(key).value, sp.ambient.at(key)[bi],
                           vec[u]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

// Cohomology dimensions of the section complex of X in degrees 0..up_to.
inline std::vector<std::size_t> sections_cohomology(
    const FiniteSimplicialSet& X, int up_to, int D) {
    X.validate();
    std::vector<detail::SectionSpace> spaces;
    for (int k = 0; k <= up_to + 1; ++k)
        spaces.push_back(detail::section_space(X, k, D));
    graded::GradedBasis basis;
    basis.labels[-1] = {};
    for (int k = 0; k <= up_to + 1; ++k) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < spaces[k].kernel.size(); ++i)
            labels.push_back("s" + std::to_string(k) + "_" + std::to_string(i));
        basis.labels[k] = std::move(labels);
    }
    graded::LinearMap dmap;
    dmap.source = basis;
    dmap.target = basis;
    dmap.shift = 1;
    for (int k = 0; k <= up_to; ++k) {
        const auto& src = spaces[k];
        const auto& tgt = spaces[k + 1];
        // Coordinates of d(section) in the ambient monomial basis of k+1.
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> tgt_unknown;
        for (std::size_t u = 0; u < tgt.unknowns.size(); ++u)
            tgt_unknown[tgt.unknowns[u]] = u;
        auto ambient_coords = [&](std::size_t section_idx) {
            graded::Vector v(tgt.unknowns.size(), Rational(0));
            const auto& vec = src.kernel[section_idx];
            for (std::size_t u = 0; u < src.unknowns.size(); ++u) {
                if (vec[u] == 0) continue;
                auto [si, bi] = src.unknowns[u];
                const auto& key = src.simplex_order[si];
                Element dm = cdga::apply_d(
                    *simplex_algebra(key.first),
                    Element{{src.ambient.at(key)[bi], vec[u]}});
                const auto& tgt_basis = tgt.ambient.at(key);
                for (const auto& [m, c] : dm) {
                    auto it = std::find(tgt_basis.begin(), tgt_basis.end(), m);
                    if (it == tgt_basis.end())
                        throw std::logic_error(
                            "differential leaves the truncated basis");
                    v[tgt_unknown.at(
                        {si, static_cast<std::size_t>(it - tgt_basis.begin())})] +=
                        c;
                }
            }
            return v;
        };
        // Solve d(s) = sum over target section basis.
        graded::Matrix tgt_cols(tgt.unknowns.size(),
                                graded::Vector(tgt.kernel.size(), Rational(0)));
        for (std::size_t j = 0; j < tgt.kernel.size(); ++j)
            for (std::size_t u = 0; u < tgt.unknowns.size(); ++u)
                tgt_cols[u][j] = tgt.kernel[j][u];
        for (std::size_t i = 0; i < src.kernel.size(); ++i) {
            graded::Vector target = ambient_coords(i);
            graded::Vector x;
            if (!graded::solve(tgt_cols, target, x))
                throw std::logic_error("d of a section is not a section");
            std::vector<std::pair<std::string, Rational>> entry;
            for (std::size_t j = 0; j < x.size(); ++j)
                if (x[j] != 0)
                    entry.emplace_back(
                        "s" + std::to_string(k + 1) + "_" + std::to_string(j),
                        x[j]);
            if (!entry.empty())
                dmap.entries[{k, "s" + std::to_string(k) + "_" +
                                     std::to_string(i)}] = entry;
        }
    }
    auto slice =
        graded::CochainComplexSlice::checked(basis, dmap, -1, up_to + 1);
    std::vector<std::size_t> dims;
    for (int k = 0; k <= up_to; ++k)
        dims.push_back(graded::cohomology_at(slice, k).dimension);
    return dims;
}

}  // namespace rht::apl
