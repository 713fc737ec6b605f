/*
 * hochschild.hpp
 * --------------
 * Truncated Hochschild homology of finite-type CDGAs, reported in the
 * regrading that aligns the tables with free-loop-space cohomology.
 *
 * The normalized (reduced) complex is used throughout: tensor factors
 * past the first are positive-degree basis monomials.  A word
 * a0 (x) a1 (x) ... (x) ap is reported in cohomological degree
 * g = sum of internal degrees - p.  Signs follow the shifted-degree
 * prefix convention (slot 0 carries its internal degree, later slots
 * carry internal degree minus one); the convention is pinned by the
 * exhaustive b^2 = 0 / anticommutation tests.
 */
#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rht/cdga.hpp"
#include "rht/sullivan.hpp"

namespace rht::hochschild {

using cdga::CdgaPresentation;
using cdga::Element;
using cdga::Monomial;

// A normalized Hochschild word: a0 is any basis monomial, the remaining
// factors are positive-degree basis monomials.
struct HochschildWord {
    Monomial a0;
    std::vector<Monomial> rest;

    std::size_t length() const { return rest.size(); }

    bool operator<(const HochschildWord& o) const {
        if (rest.size() != o.rest.size()) return rest.size() < o.rest.size();
        if (!(a0 == o.a0)) return a0 < o.a0;
        return rest < o.rest;
    }
    bool operator==(const HochschildWord& o) const {
        return a0 == o.a0 && rest == o.rest;
    }
};

inline int reported_degree(const CdgaPresentation& p, const HochschildWord& w) {
    int s = p.degree_of(w.a0);
    for (const auto& m : w.rest) s += p.degree_of(m);
    return s - static_cast<int>(w.rest.size());
}

inline std::string word_label(const CdgaPresentation& p,
                              const HochschildWord& w) {
    std::ostringstream os;
    os << "(" << p.monomial_label(w.a0);
    for (const auto& m : w.rest) os << "|" << p.monomial_label(m);
    os << ")";
    return os.str();
}

using Chain = std::map<HochschildWord, Rational>;

namespace detail {

inline void chain_add(Chain& c, const HochschildWord& w, const Rational& q) {
    if (q == 0) return;
    auto it = c.find(w);
    if (it == c.end()) {
        c.emplace(w, q);
    } else {
        it->second += q;
        if (it->second == 0) c.erase(it);
    }
}

// Shifted degree of slot i (0-based over a0..ap).
inline int shifted_degree(const CdgaPresentation& p, const HochschildWord& w,
                          std::size_t slot) {
    const Monomial& m = slot == 0 ? w.a0 : w.rest[slot - 1];
    return slot == 0 ? p.degree_of(m) : p.degree_of(m) - 1;
}

// Prefix sums S[i] = shifted degrees of slots 0..i-1.
inline std::vector<int> prefix_sums(const CdgaPresentation& p,
                                    const HochschildWord& w) {
    std::vector<int> S(w.rest.size() + 2, 0);
    for (std::size_t i = 0; i <= w.rest.size(); ++i)
        S[i + 1] = S[i] + shifted_degree(p, w, i);
    return S;
}

inline Element slot_element(const HochschildWord& w, std::size_t slot) {
    const Monomial& m = slot == 0 ? w.a0 : w.rest[slot - 1];
    return Element{{m, Rational(1)}};
}

}  // namespace detail

// The Hochschild differential b: adjacent merges plus the sign-twisted
// wrap-around term.  Lowers tensor length by one, raises the reported
// degree by one.
inline Chain hochschild_b(const CdgaPresentation& p, const HochschildWord& w) {
    Chain out;
    const std::size_t plen = w.rest.size();
    if (plen == 0) return out;
    auto S = detail::prefix_sums(p, w);
    // Merge slots i and i+1.
    for (std::size_t i = 0; i < plen; ++i) {
        Element prod = cdga::multiply(p, detail::slot_element(w, i),
                                      detail::slot_element(w, i + 1));
        int sign = S[i + 1] % 2 != 0 ? -1 : 1;
        for (const auto& [m, c] : prod) {
            if (i >= 1 && m.is_unit()) continue;  // degenerate in the
                                                  // normalized complex
            HochschildWord v;
            if (i == 0) {
                v.a0 = m;
                v.rest.assign(w.rest.begin() + 1, w.rest.end());
            } else {
                v.a0 = w.a0;
                v.rest.assign(w.rest.begin(), w.rest.begin() + (i - 1));
                v.rest.push_back(m);
                v.rest.insert(v.rest.end(), w.rest.begin() + i + 1,
                              w.rest.end());
            }
            detail::chain_add(out, v, c * sign);
        }
    }
    // Wrap-around: rotate the last factor to the front and merge.
    {
        Element prod = cdga::multiply(p, detail::slot_element(w, plen),
                                      detail::slot_element(w, 0));
        int exponent = detail::shifted_degree(p, w, plen) * S[plen] + 1;
        int sign = exponent % 2 != 0 ? -1 : 1;
        for (const auto& [m, c] : prod) {
            HochschildWord v;
            v.a0 = m;
            v.rest.assign(w.rest.begin(), w.rest.end() - 1);
            detail::chain_add(out, v, c * sign);
        }
    }
    return out;
}

// The internal differential induced by d, slotwise with prefix signs.
inline Chain hochschild_internal(const CdgaPresentation& p,
                                 const HochschildWord& w) {
    Chain out;
    auto S = detail::prefix_sums(p, w);
    for (std::size_t i = 0; i <= w.rest.size(); ++i) {
        Element dm = cdga::apply_d(p, detail::slot_element(w, i));
        // Shifted slots carry d conjugated by the desuspension, hence the
        // extra sign for i >= 1.
        int exponent = S[i] + (i >= 1 ? 1 : 0);
        int sign = exponent % 2 != 0 ? -1 : 1;
        for (const auto& [m, c] : dm) {
            HochschildWord v = w;
            if (i == 0)
                v.a0 = m;
            else
                v.rest[i - 1] = m;
            detail::chain_add(out, v, c * sign);
        }
    }
    return out;
}

inline Chain total_differential(const CdgaPresentation& p,
                                const HochschildWord& w) {
    Chain out = hochschild_b(p, w);
    for (const auto& [v, c] : hochschild_internal(p, w))
        detail::chain_add(out, v, c);
    return out;
}

// ---------------------------------------------------------------------------
// Truncated complex assembly.

// All normalized words of the given reported degree with tensor length at
// most P, in canonical order.
inline std::vector<HochschildWord> words_in_degree(const CdgaPresentation& p,
                                                   int g, int P) {
    std::vector<HochschildWord> out;
    for (int plen = 0; plen <= P; ++plen) {
        int s = g + plen;  // total internal degree
        if (s < 0) continue;
        // Distribute s over a0 (degree >= 0) and plen positive slots, then
        // expand each slot over the basis of its degree.
        HochschildWord w;
        w.rest.resize(plen);
        std::function<void(int, int)> run = [&](int slot, int remaining) {
            if (slot == plen + 1) {
                if (remaining == 0) out.push_back(w);
                return;
            }
            int lo = slot == 0 ? 0 : 1;
            for (int d = lo; d <= remaining; ++d)
                for (const auto& m : cdga::basis_in_degree(p, d)) {
                    if (slot == 0)
                        w.a0 = m;
                    else
                        w.rest[slot - 1] = m;
                    run(slot + 1, remaining - d);
                }
        };
        run(0, s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Dimensions of the truncated Hochschild homology in reported degrees
// 0..up_to at tensor-length bound P, by rank-nullity with sparse
// elimination (the complexes grow far past dense feasibility).
inline std::vector<std::size_t> dimensions(
    std::shared_ptr<const CdgaPresentation> pres, int up_to, int P) {
    const CdgaPresentation& p = *pres;
    if (P < 0) throw std::invalid_argument("tensor length bound must be >= 0");
    if (up_to + 1 + P > p.truncation_degree)
        throw std::out_of_range(
            "presentation truncation degree too small for the requested "
            "Hochschild window");
    std::map<int, std::vector<HochschildWord>> words;
    std::map<int, std::map<HochschildWord, int>> index;
    for (int g = 0; g <= up_to + 1; ++g) {
        words[g] = words_in_degree(p, g, P);
        for (std::size_t i = 0; i < words[g].size(); ++i)
            index[g][words[g][i]] = static_cast<int>(i);
    }
    std::vector<std::size_t> ranks;  // rank of D_g for g = 0..up_to
    for (int g = 0; g <= up_to; ++g) {
        std::vector<graded::SparseRow> rows;
        for (const auto& w : words.at(g)) {
            graded::SparseRow row;
            for (const auto& [v, c] : total_differential(p, w))
                row[index.at(g + 1).at(v)] = c;
            if (!row.empty()) rows.push_back(std::move(row));
        }
        ranks.push_back(graded::sparse_rank(rows));
    }
    std::vector<std::size_t> dims;
    for (int g = 0; g <= up_to; ++g) {
        std::size_t n = words.at(g).size();
        std::size_t cut = ranks[g] + (g > 0 ? ranks[g - 1] : 0);
        dims.push_back(n - cut);
    }
    return dims;
}

struct HochschildRow {
    int degree = 0;
    std::size_t dimension = 0;
    bool stable = false;  // unchanged when P increases by one
};

struct HochschildTable {
    int up_to = 0;
    int P = 0;
    std::string convention =
        "reported degree = sum of internal degrees - tensor length";
    std::vector<HochschildRow> rows;
};

inline HochschildTable hochschild_homology(
    std::shared_ptr<const CdgaPresentation> pres, int up_to, int P) {
    HochschildTable table;
    table.up_to = up_to;
    table.P = P;
    auto at_p = dimensions(pres, up_to, P);
    auto at_p1 = dimensions(pres, up_to, P + 1);
    for (int g = 0; g <= up_to; ++g)
        table.rows.push_back({g, at_p[g], at_p[g] == at_p1[g]});
    return table;
}

// Hochschild homology of a minimal model, labeled as free-loop-space
// cohomology ranks of the modeled space.
struct LoopSpaceTable {
    std::string label =
        "free-loop-space cohomology ranks (H^*(LX) via Hochschild homology)";
    HochschildTable table;
};

inline LoopSpaceTable loop_space_table(
    const sullivan::MinimalModelResult& model, int up_to, int P) {
    LoopSpaceTable t;
    t.table = hochschild_homology(model.model.underlying, up_to, P);
    return t;
}

// Exhaustive verification of b^2 = 0, internal^2 = 0, and anticommutation
// on every word of reported degree <= g_hi and length <= P.
inline bool verify_truncation(std::shared_ptr<const CdgaPresentation> pres,
                              int g_hi, int P) {
    const CdgaPresentation& p = *pres;
    auto apply = [&](const Chain& c, auto&& diff) {
        Chain out;
        for (const auto& [w, q] : c)
            for (const auto& [v, r] : diff(p, w))
                detail::chain_add(out, v, q * r);
        return out;
    };
    for (int g = 0; g <= g_hi; ++g)
        for (const auto& w : words_in_degree(p, g, P)) {
            Chain one{{w, Rational(1)}};
            if (!apply(apply(one, hochschild_b), hochschild_b).empty())
                return false;
            if (!apply(apply(one, hochschild_internal), hochschild_internal)
                     .empty())
                return false;
            Chain mixed = apply(apply(one, hochschild_b), hochschild_internal);
            for (const auto& [v, c] :
                 apply(apply(one, hochschild_internal), hochschild_b))
                detail::chain_add(mixed, v, c);
            if (!mixed.empty()) return false;
        }
    return true;
}

}  // namespace rht::hochschild
