/*
 * whitney.hpp
 * -----------
 * Whitney jets over finite rational point sets: jet projections, the jet
 * product in both coefficient conventions, Taylor and remainder
 * operators, exact seminorms, rate diagnostics for the Whitney
 * condition, quadrant-union geometry, and the radial Poincare homotopy
 * on polynomial differential forms.
 *
 * Everything is exact: point sets are finite and rational, so every
 * supremum is a maximum and every identity is checked with equality.
 */
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rht/rational.hpp"

namespace rht::whitney {

// ---------------------------------------------------------------------------
// Multi-indices in graded-lexicographic order.

struct MultiIndex {
    std::vector<int> a;

    int order() const { return std::accumulate(a.begin(), a.end(), 0); }

    // Graded-lexicographic: by |alpha| first, then ascending lexicographic
    // on the exponent tuple.  This order is normative for jet tables.
    bool operator<(const MultiIndex& o) const {
        int s = order(), t = o.order();
        if (s != t) return s < t;
        return a < o.a;
    }
    bool operator==(const MultiIndex& o) const { return a == o.a; }
};

// N(m,n) = { alpha : |alpha| <= m } in graded-lexicographic order.
inline std::vector<MultiIndex> multi_indices(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("n and m must be >= 0");
    std::vector<MultiIndex> out;
    MultiIndex cur;
    cur.a.assign(n, 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur.a[i] = e;
            rec(i + 1, remaining - e);
        }
        cur.a[i] = 0;
    };
    rec(0, m);
    std::sort(out.begin(), out.end());
    return out;
}

inline Integer multi_factorial(const MultiIndex& alpha) {
    Integer r = 1;
    for (int e : alpha.a) r *= factorial(static_cast<unsigned>(e));
    return r;
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over Q.

struct Polynomial {
    int n = 0;
    std::map<MultiIndex, Rational> terms;  // exponent vector -> coefficient

    static Polynomial zero(int n) { return {n, {}}; }
    static Polynomial constant(int n, const Rational& c) {
        Polynomial p{n, {}};
        if (c != 0) {
            MultiIndex e;
            e.a.assign(n, 0);
            p.terms.emplace(e, c);
        }
        return p;
    }
    static Polynomial variable(int n, int i) {
        Polynomial p{n, {}};
        MultiIndex e;
        e.a.assign(n, 0);
        e.a[i] = 1;
        p.terms.emplace(e, Rational(1));
        return p;
    }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e.order());
        return d;  // -1 for the zero polynomial
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const MultiIndex& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

inline Polynomial add(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

inline Polynomial scale(const Polynomial& a, const Rational& c) {
    Polynomial r{a.n, {}};
    if (c == 0) return r;
    for (const auto& [e, q] : a.terms) r.terms.emplace(e, q * c);
    return r;
}

inline Polynomial sub(const Polynomial& a, const Polynomial& b) {
    return add(a, scale(b, Rational(-1)));
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial r{a.n, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            MultiIndex e = ea;
            for (int i = 0; i < a.n; ++i) e.a[i] += eb.a[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

inline Rational evaluate(const Polynomial& p,
                         const std::vector<Rational>& x) {
    Rational total = 0;
    for (const auto& [e, c] : p.terms) {
        Rational v = c;
        for (int i = 0; i < p.n; ++i)
            for (int k = 0; k < e.a[i]; ++k) v *= x[i];
        total += v;
    }
    return total;
}

inline Polynomial derivative(const Polynomial& p, int i) {
    Polynomial r{p.n, {}};
    for (const auto& [e, c] : p.terms) {
        if (e.a[i] == 0) continue;
        MultiIndex f = e;
        --f.a[i];
        r.add_term(f, c * e.a[i]);
    }
    return r;
}

inline Polynomial partial(const Polynomial& p, const MultiIndex& alpha) {
    Polynomial r = p;
    for (int i = 0; i < p.n; ++i)
        for (int k = 0; k < alpha.a[i]; ++k) r = derivative(r, i);
    return r;
}

// ---------------------------------------------------------------------------
// Point sets and jets.

struct PointSet {
    int n = 0;
    std::vector<std::vector<Rational>> points;

    void validate() const {
        if (points.empty())
            throw std::invalid_argument("point set must be nonempty");
        for (const auto& p : points)
            if (static_cast<int>(p.size()) != n)
                throw std::invalid_argument("point has wrong dimension");
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j])
                    throw std::invalid_argument(
                        "point set contains a duplicate point");
    }

    std::size_t index_of(const std::vector<Rational>& x) const {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == x) return i;
        throw std::invalid_argument("point is not in the point set");
    }
};

// An order-m jet: for each point, one rational per alpha in N(m,n), in
// the normative graded-lexicographic order.
struct Jet {
    int n = 0;
    int m = 0;
    PointSet X;
    std::vector<std::vector<Rational>> values;  // [point][alpha index]

    const Rational& at(std::size_t point, const MultiIndex& alpha,
                       const std::vector<MultiIndex>& index) const {
        for (std::size_t i = 0; i < index.size(); ++i)
            if (index[i] == alpha) return values[point][i];
        throw std::invalid_argument("multi-index outside N(m,n)");
    }
};

inline std::vector<MultiIndex> jet_index(const Jet& F) {
    return multi_indices(F.n, F.m);
}

inline Jet jet_of(const Polynomial& f, const PointSet& X, int m) {
    X.validate();
    if (f.n != X.n)
        throw std::invalid_argument("polynomial and point set dimensions differ");
    Jet F;
    F.n = X.n;
    F.m = m;
    F.X = X;
    auto idx = multi_indices(X.n, m);
    for (const auto& x : X.points) {
        std::vector<Rational> row;
        for (const auto& alpha : idx)
            row.push_back(evaluate(partial(f, alpha), x));
        F.values.push_back(std::move(row));
    }
    return F;
}

inline Jet zero_jet(const PointSet& X, int m) {
    return jet_of(Polynomial::zero(X.n), X, m);
}

// ---------------------------------------------------------------------------
// Jet product: Leibniz (derivative) convention and the paper-style
// coefficient-free convention on divided-power tables.

enum class JetProductConvention {
    Leibniz,       // H_alpha = sum (alpha choose beta) F_beta G_{alpha-beta}
    DividedPower,  // H_alpha = sum F_beta G_{alpha-beta}, on tables
                   // normalized by 1/alpha!
};

inline void require_compatible(const Jet& F, const Jet& G) {
    if (F.n != G.n || F.m != G.m)
        throw std::invalid_argument("jets have different order or dimension");
    if (F.X.points != G.X.points)
        throw std::invalid_argument("jets live over different point sets");
}

inline Jet jet_product(const Jet& F, const Jet& G,
                       JetProductConvention convention =
                           JetProductConvention::Leibniz) {
    require_compatible(F, G);
    auto idx = multi_indices(F.n, F.m);
    std::map<MultiIndex, std::size_t> pos;
    for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
    Jet H;
    H.n = F.n;
    H.m = F.m;
    H.X = F.X;
    for (std::size_t p = 0; p < F.X.points.size(); ++p) {
        std::vector<Rational> row(idx.size(), Rational(0));
        for (std::size_t ia = 0; ia < idx.size(); ++ia) {
            const MultiIndex& alpha = idx[ia];
            Rational total = 0;
            // All splittings beta + gamma = alpha.
            for (const auto& [beta, ib] : pos) {
                bool fits = true;
                MultiIndex gamma = alpha;
                for (int i = 0; i < F.n; ++i) {
                    gamma.a[i] -= beta.a[i];
                    if (gamma.a[i] < 0) fits = false;
                }
                if (!fits) continue;
                Rational c = F.values[p][ib] * G.values[p][pos.at(gamma)];
                if (convention == JetProductConvention::Leibniz) {
                    Integer binom = 1;
                    for (int i = 0; i < F.n; ++i)
                        binom *= binomial(static_cast<unsigned>(alpha.a[i]),
                                          static_cast<unsigned>(beta.a[i]));
                    c *= Rational(binom);
                }
                total += c;
            }
            row[ia] = total;
        }
        H.values.push_back(std::move(row));
    }
    return H;
}

// The intertwiner between the conventions: divided-power tables store
// F~_alpha = F_alpha / alpha!.
inline Jet to_divided_power(const Jet& F) {
    Jet G = F;
    auto idx = multi_indices(F.n, F.m);
    for (auto& row : G.values)
        for (std::size_t i = 0; i < idx.size(); ++i)
            row[i] /= Rational(multi_factorial(idx[i]));
    return G;
}

inline Jet from_divided_power(const Jet& F) {
    Jet G = F;
    auto idx = multi_indices(F.n, F.m);
    for (auto& row : G.values)
        for (std::size_t i = 0; i < idx.size(); ++i)
            row[i] *= Rational(multi_factorial(idx[i]));
    return G;
}

// ---------------------------------------------------------------------------
// Taylor polynomial, projection, remainder.

// The paper's displayed Taylor formula uses (x - y)^alpha where the
// classical formula uses (y - x)^alpha; they differ by a sign for odd
// |alpha|.  Only the classical convention makes the remainder of a
// degree-<=k polynomial vanish, so it is the default; the verbatim
// formula stays available behind the switch.
enum class TaylorConvention { Classical, PaperVerbatim };

inline Jet project(const Jet& F, int k) {
    if (k > F.m) throw std::invalid_argument("projection order exceeds jet order");
    Jet G;
    G.n = F.n;
    G.m = k;
    G.X = F.X;
    auto idx = multi_indices(F.n, F.m);
    auto sub_idx = multi_indices(F.n, k);
    for (std::size_t p = 0; p < F.X.points.size(); ++p) {
        std::vector<Rational> row;
        for (const auto& alpha : sub_idx) row.push_back(F.at(p, alpha, idx));
        G.values.push_back(std::move(row));
    }
    return G;
}

inline Polynomial taylor_poly(const Jet& F, const std::vector<Rational>& x,
                              int k,
                              TaylorConvention convention =
                                  TaylorConvention::Classical) {
    if (k > F.m) throw std::invalid_argument("Taylor order exceeds jet order");
    std::size_t p = F.X.index_of(x);
    auto idx = multi_indices(F.n, F.m);
    Polynomial T = Polynomial::zero(F.n);
    for (const auto& alpha : multi_indices(F.n, k)) {
        Rational coeff =
            F.at(p, alpha, idx) / Rational(multi_factorial(alpha));
        // (y - x)^alpha classically; (x - y)^alpha flips odd-|alpha| signs.
        if (convention == TaylorConvention::PaperVerbatim &&
            alpha.order() % 2 != 0)
            coeff = -coeff;
        Polynomial mono = Polynomial::constant(F.n, coeff);
        for (int i = 0; i < F.n; ++i)
            for (int e = 0; e < alpha.a[i]; ++e)
                mono = multiply(
                    mono, sub(Polynomial::variable(F.n, i),
                              Polynomial::constant(F.n, x[i])));
        T = add(T, mono);
    }
    return T;
}

inline Jet jet_sub(const Jet& F, const Jet& G) {
    require_compatible(F, G);
    Jet H = F;
    for (std::size_t p = 0; p < F.values.size(); ++p)
        for (std::size_t i = 0; i < F.values[p].size(); ++i)
            H.values[p][i] -= G.values[p][i];
    return H;
}

inline Jet remainder(const Jet& F, const std::vector<Rational>& x, int k,
                     TaylorConvention convention =
                         TaylorConvention::Classical) {
    return jet_sub(project(F, k),
                   jet_of(taylor_poly(F, x, k, convention), F.X, k));
}

// ---------------------------------------------------------------------------
// Seminorms over finite subsets (all sups are maxima).

inline void require_subset(const Jet& F, const PointSet& K) {
    K.validate();
    if (K.n != F.n) throw std::invalid_argument("subset dimension mismatch");
    for (const auto& x : K.points) F.X.index_of(x);
}

inline Rational seminorm_flat(const Jet& F, const PointSet& K, int k) {
    require_subset(F, K);
    if (k > F.m) throw std::invalid_argument("seminorm order exceeds jet order");
    auto idx = multi_indices(F.n, F.m);
    Rational best = 0;
    for (const auto& x : K.points) {
        std::size_t p = F.X.index_of(x);
        for (const auto& beta : multi_indices(F.n, k))
            best = std::max(best, rat_abs(F.at(p, beta, idx)));
    }
    return best;
}

// Whitney remainder of the beta-derivative jet between two points,
// expanded to order `order - |beta|` around x:
//   r_{F,beta}(x,y) = F_beta(y) - sum_{|alpha| <= order-|beta|}
//                       F_{beta+alpha}(x) (y-x)^alpha / alpha!.
inline Rational whitney_remainder(const Jet& F, const MultiIndex& beta,
                                  const std::vector<Rational>& x,
                                  const std::vector<Rational>& y, int order) {
    auto idx = multi_indices(F.n, F.m);
    std::size_t px = F.X.index_of(x), py = F.X.index_of(y);
    Rational r = F.at(py, beta, idx);
    for (const auto& alpha : multi_indices(F.n, order - beta.order())) {
        MultiIndex ba = beta;
        for (int i = 0; i < F.n; ++i) ba.a[i] += alpha.a[i];
        if (ba.order() > F.m) continue;
        Rational term =
            F.at(px, ba, idx) / Rational(multi_factorial(alpha));
        for (int i = 0; i < F.n; ++i)
            for (int e = 0; e < alpha.a[i]; ++e) term *= (y[i] - x[i]);
        r -= term;
    }
    return r;
}

// Flat part plus the exact maximum of |r_{F,beta}(x,y)| over K x K; the
// finite model replaces the scale-weighted sup by the plain maximum so
// the value stays rational.
inline Rational seminorm_whitney(const Jet& F, const PointSet& K, int k) {
    Rational best = seminorm_flat(F, K, k);
    Rational rmax = 0;
    for (const auto& x : K.points)
        for (const auto& y : K.points) {
            if (x == y) continue;
            for (const auto& beta : multi_indices(F.n, k))
                rmax = std::max(
                    rmax, rat_abs(whitney_remainder(F, beta, x, y, k)));
        }
    return best + rmax;
}

// ---------------------------------------------------------------------------
// Whitney condition rate diagnostics.

enum class RateVerdict { Consistent, Violation, Insufficient };

struct RateBucket {
    Rational dist_sq;       // squared distance scale of the pair bucket
    Rational max_ratio_sq;  // max of r^2 / dist^(2(m-|beta|)) in the bucket
};

struct RateReport {
    RateVerdict verdict = RateVerdict::Insufficient;
    std::vector<RateBucket> buckets;  // sorted by decreasing distance
};

// Diagnostic check of the Whitney condition r_{F,beta}(x,y) =
// o(|x-y|^{m-|beta|}): squared ratios are grouped by squared distance
// and compared across scales.  Finite data cannot prove an o(.)
// statement; the verdict is evidence only.
inline RateReport whitney_rate_check(const Jet& F, int m,
                                     const MultiIndex& beta,
                                     const PointSet& K) {
    require_subset(F, K);
    if (m > F.m || beta.order() > m)
        throw std::invalid_argument("rate check order out of range");
    std::map<Rational, Rational> by_scale;  // dist_sq -> max ratio_sq
    for (const auto& x : K.points)
        for (const auto& y : K.points) {
            if (x == y) continue;
            Rational d2 = 0;
            for (int i = 0; i < F.n; ++i)
                d2 += (x[i] - y[i]) * (x[i] - y[i]);
            Rational r = whitney_remainder(F, beta, x, y, m);
            Rational denom = 1;
            for (int e = 0; e < m - beta.order(); ++e) denom *= d2;
            Rational ratio_sq = (r * r) / denom;
            auto it = by_scale.find(d2);
            if (it == by_scale.end())
                by_scale.emplace(d2, ratio_sq);
            else
                it->second = std::max(it->second, ratio_sq);
        }
    RateReport report;
    for (auto it = by_scale.rbegin(); it != by_scale.rend(); ++it)
        report.buckets.push_back({it->first, it->second});
    if (report.buckets.size() < 2) {
        report.verdict = RateVerdict::Insufficient;
        return report;
    }
    bool all_zero = true;
    for (const auto& b : report.buckets) all_zero &= (b.max_ratio_sq == 0);
    const Rational& large = report.buckets.front().max_ratio_sq;
    const Rational& small = report.buckets.back().max_ratio_sq;
    if (all_zero || small < large)
        report.verdict = RateVerdict::Consistent;
    else
        report.verdict = RateVerdict::Violation;
    return report;
}

// ---------------------------------------------------------------------------
// Quadrant unions.

struct Quadrant {
    std::vector<int> zero, pos, neg;  // 1-based coordinate indices
};

struct QuadrantSpec {
    int n = 0;
    std::vector<Quadrant> quadrants;  // union; may be a single quadrant

    void validate() const {
        for (const auto& q : quadrants) {
            std::vector<int> seen(n + 1, 0);
            auto mark = [&](const std::vector<int>& part) {
                for (int i : part) {
                    if (i < 1 || i > n)
                        throw std::invalid_argument(
                            "quadrant index out of range");
                    if (seen[i]++)
                        throw std::invalid_argument(
                            "quadrant parts are not disjoint");
                }
            };
            mark(q.zero);
            mark(q.pos);
            mark(q.neg);
        }
    }
};

inline bool quadrant_membership(const std::vector<Rational>& p,
                                const QuadrantSpec& spec) {
    spec.validate();
    if (static_cast<int>(p.size()) != spec.n)
        throw std::invalid_argument("point dimension mismatch");
    for (const auto& q : spec.quadrants) {
        bool ok = true;
        for (int i : q.zero) ok &= (p[i - 1] == 0);
        for (int i : q.pos) ok &= (p[i - 1] > 0);
        for (int i : q.neg) ok &= (p[i - 1] < 0);
        if (ok) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Polynomial differential forms on R^n and the radial homotopy.

struct EuclideanPolyForm {
    int n = 0;
    // strictly increasing 0-based dx index subsets -> polynomial coefficient
    std::map<std::vector<int>, Polynomial> terms;

    static EuclideanPolyForm zero(int n) { return {n, {}}; }

    void add_term(const std::vector<int>& subset, const Polynomial& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms.find(subset);
        if (it == terms.end()) {
            terms.emplace(subset, coeff);
        } else {
            it->second = add(it->second, coeff);
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }
};

inline EuclideanPolyForm form_add(const EuclideanPolyForm& a,
                                  const EuclideanPolyForm& b) {
    EuclideanPolyForm r = a;
    for (const auto& [s, c] : b.terms) r.add_term(s, c);
    return r;
}

inline EuclideanPolyForm form_sub(const EuclideanPolyForm& a,
                                  const EuclideanPolyForm& b) {
    EuclideanPolyForm r = a;
    for (const auto& [s, c] : b.terms) r.add_term(s, scale(c, Rational(-1)));
    return r;
}

inline EuclideanPolyForm form_d(const EuclideanPolyForm& w) {
    EuclideanPolyForm r = EuclideanPolyForm::zero(w.n);
    for (const auto& [S, f] : w.terms)
        for (int i = 0; i < w.n; ++i) {
            Polynomial df = derivative(f, i);
            if (df.is_zero()) continue;
            if (std::find(S.begin(), S.end(), i) != S.end()) continue;
            std::vector<int> T = S;
            auto pos = std::lower_bound(T.begin(), T.end(), i);
            int before = static_cast<int>(pos - T.begin());
            T.insert(pos, i);
            r.add_term(T, before % 2 != 0 ? scale(df, Rational(-1)) : df);
        }
    return r;
}

// The radial homotopy operator K induced by contracting R^n to the
// origin along straight lines.  On a monomial k-form:
//   K(x^a dx_{i_1..i_k}) = sum_j (-1)^(j-1) x_{i_j} x^a / (|a|+k)
//                          dx_{i_1..^i_j..i_k}.
// K vanishes on 0-forms; K d + d K = id - ev_0 exactly.
inline EuclideanPolyForm poincare_homotopy(const EuclideanPolyForm& w) {
    EuclideanPolyForm r = EuclideanPolyForm::zero(w.n);
    for (const auto& [S, f] : w.terms) {
        int k = static_cast<int>(S.size());
        if (k == 0) continue;
        for (const auto& [e, c] : f.terms) {
            int total = e.order() + k;
            for (int j = 0; j < k; ++j) {
                MultiIndex e2 = e;
                ++e2.a[S[j]];
                Polynomial mono{w.n, {}};
                mono.add_term(e2, (j % 2 != 0 ? -c : c) / total);
                std::vector<int> T;
                for (int l = 0; l < k; ++l)
                    if (l != j) T.push_back(S[l]);
                r.add_term(T, mono);
            }
        }
    }
    return r;
}

// Evaluation at the origin: keeps the constant term of the 0-form part.
inline EuclideanPolyForm form_ev0(const EuclideanPolyForm& w) {
    EuclideanPolyForm r = EuclideanPolyForm::zero(w.n);
    auto it = w.terms.find({});
    if (it != w.terms.end()) {
        std::vector<Rational> origin(w.n, Rational(0));
        r.add_term({}, Polynomial::constant(w.n, evaluate(it->second, origin)));
    }
    return r;
}

// Kd + dK = id - ev0, checked exactly on one form.
inline bool homotopy_identity_holds(const EuclideanPolyForm& w) {
    EuclideanPolyForm lhs = form_add(poincare_homotopy(form_d(w)),
                                     form_d(poincare_homotopy(w)));
    EuclideanPolyForm rhs = form_sub(w, form_ev0(w));
    return form_sub(lhs, rhs).is_zero();
}

// ---------------------------------------------------------------------------
// Whitney-de Rham model of a quadrant union, contracted radially.

struct QuadrantPoincareReport {
    int effective_dim = 0;  // coordinates not pinned to zero on the union
    std::vector<std::size_t> dims;  // cohomology dims, degrees 0..up_to
    std::size_t forms_checked = 0;  // spanning forms with verified identity
};

// Cohomology of the polynomial Whitney-de Rham model of the quadrant
// union.  The union always contains the origin in its closure unless it
// is empty; the radial contraction then gives dims (1, 0, ..., 0),
// verified degree-by-degree on spanning monomial forms up to the
// coefficient-degree bound.
inline QuadrantPoincareReport quadrant_poincare_report(
    const QuadrantSpec& spec, int up_to, int coeff_degree_bound = 3) {
    spec.validate();
    if (up_to < 0) throw std::invalid_argument("degree bound must be >= 0");
    if (spec.quadrants.empty())
        throw std::domain_error(
            "empty quadrant union: the origin is not in the closure, so the "
            "radial contraction does not apply");
    // A coordinate is effective if some quadrant leaves it off its zero
    // list; the polynomial model lives on the span of those coordinates.
    std::vector<bool> effective(spec.n, false);
    for (const auto& q : spec.quadrants) {
        std::vector<bool> zeroed(spec.n, false);
        for (int i : q.zero) zeroed[i - 1] = true;
        for (int i = 0; i < spec.n; ++i) effective[i] = effective[i] || !zeroed[i];
    }
    int d = 0;
    for (bool e : effective) d += e ? 1 : 0;
    QuadrantPoincareReport report;
    report.effective_dim = d;
    // Verify the contraction identity on spanning monomial forms of the
    // d-dimensional model.
    auto subsets = [&](int k) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int next) {
            if (static_cast<int>(cur.size()) == k) {
                out.push_back(cur);
                return;
            }
            for (int i = next; i < d; ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    };
    for (int k = 0; k <= std::min(up_to, d); ++k)
        for (const auto& S : subsets(k))
            for (const auto& e : multi_indices(d, coeff_degree_bound)) {
                Polynomial mono{d, {}};
                mono.add_term(e, Rational(1));
                EuclideanPolyForm w = EuclideanPolyForm::zero(d);
                w.add_term(S, mono);
                if (!homotopy_identity_holds(w))
                    throw std::logic_error(
                        "radial homotopy identity failed on a spanning form");
                ++report.forms_checked;
            }
    report.dims.assign(up_to + 1, 0);
    report.dims[0] = 1;
    return report;
}

}  // namespace rht::whitney
