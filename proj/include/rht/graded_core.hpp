/*
 * graded_core.hpp
 * ---------------
 * Exact rational linear algebra over graded vector spaces: graded bases,
 * sparse degree-shifting maps, kernels, images, and cohomology of finite
 * cochain complexes.
 *
 * Everything is deterministic: row reduction pivots on the first nonzero
 * entry in input order, so representative vectors are reproducible.
 */
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rht/rational.hpp"

namespace rht::graded {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// Per-degree ordered lists of opaque basis labels.  Labels are unique
// within a degree; only finitely many degrees are populated.
struct GradedBasis {
    std::map<int, std::vector<std::string>> labels;

    const std::vector<std::string>& in_degree(int k) const {
        static const std::vector<std::string> empty;
        auto it = labels.find(k);
        return it == labels.end() ? empty : it->second;
    }
    std::size_t dim(int k) const { return in_degree(k).size(); }

    int index_of(int k, const std::string& label) const {
        const auto& ls = in_degree(k);
        auto it = std::find(ls.begin(), ls.end(), label);
        if (it == ls.end())
            throw std::invalid_argument("unknown basis label '" + label +
                                        "' in degree " + std::to_string(k));
        return static_cast<int>(it - ls.begin());
    }
};

// A degree-homogeneous linear map of a fixed shift.  Entries are sparse,
// keyed by (source degree, source label); absent entries are zero.
struct LinearMap {
    GradedBasis source;
    GradedBasis target;
    int shift = 0;
    // (degree, source label) -> list of (target label, coefficient)
    std::map<std::pair<int, std::string>,
             std::vector<std::pair<std::string, Rational>>>
        entries;

    // Dense matrix of the degree-k piece: rows = target basis in degree
    // k+shift, columns = source basis in degree k.
    Matrix matrix_in_degree(int k) const {
        const auto& src = source.in_degree(k);
        const auto& tgt = target.in_degree(k + shift);
        Matrix m(tgt.size(), Vector(src.size(), Rational(0)));
        for (std::size_t j = 0; j < src.size(); ++j) {
            auto it = entries.find({k, src[j]});
            if (it == entries.end()) continue;
            for (const auto& [label, coeff] : it->second) {
                int i = target.index_of(k + shift, label);
                m[i][j] += coeff;
            }
        }
        return m;
    }
};

// Reduced row echelon form, in place conceptually but returned by value.
// Pivoting is first-nonzero in row order; pivot columns come out strictly
// increasing.
struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;
};

inline RrefResult rref(Matrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rational inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// Sparse row type: column index -> nonzero coefficient.
using SparseRow = std::map<int, Rational>;

// Rank by sparse forward elimination.  Rows are consumed in order; kept
// pivot rows are indexed by their leading column.
inline std::size_t sparse_rank(const std::vector<SparseRow>& rows) {
    std::map<int, SparseRow> pivot_rows;
    std::size_t rank = 0;
    for (const SparseRow& input : rows) {
        SparseRow row = input;
        while (!row.empty()) {
            int lead = row.begin()->first;
            auto it = pivot_rows.find(lead);
            if (it == pivot_rows.end()) {
                Rational inv = row.begin()->second;
                for (auto& [c, v] : row) v /= inv;
                pivot_rows.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            Rational f = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto jt = row.find(c);
                if (jt == row.end()) {
                    row.emplace(c, -f * v);
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        }
    }
    return rank;
}

// Basis of the null space of m (columns = unknowns), ordered by the rref
// free columns.  Free variable is set to 1, pivot variables solved.
inline std::vector<Vector> null_space(const Matrix& m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vector v(cols, Rational(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -red[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves m x = b exactly.  Returns false if inconsistent.
inline bool solve(const Matrix& m, const Vector& b, Vector& x) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    Matrix aug(rows, Vector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy(m[i].begin(), m[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    auto [red, pivots] = rref(std::move(aug));
    for (int p : pivots)
        if (p == static_cast<int>(cols)) return false;
    x.assign(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red[r][cols];
    return true;
}

inline std::vector<Vector> kernel_basis(const LinearMap& m, int degree) {
    if (m.source.labels.find(degree) == m.source.labels.end())
        throw std::out_of_range("kernel_basis: degree " +
                                std::to_string(degree) +
                                " not present in source basis");
    Matrix mat = m.matrix_in_degree(degree);
    if (mat.empty()) {
        // Zero-dimensional target: everything is in the kernel.
        std::vector<Vector> basis;
        const std::size_t n = m.source.dim(degree);
        for (std::size_t c = 0; c < n; ++c) {
            Vector v(n, Rational(0));
            v[c] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return null_space(mat);
}

// A finite window of a cochain complex; the differential has shift +1 and
// d^2 = 0 is checked exactly on construction.
struct CochainComplexSlice {
    GradedBasis basis;
    LinearMap differential;  // shift must be +1
    int lo = 0;
    int hi = 0;

    static CochainComplexSlice checked(GradedBasis basis, LinearMap d, int lo,
                                       int hi) {
        if (d.shift != 1)
            throw std::invalid_argument(
                "cochain differential must have shift +1");
        CochainComplexSlice s{std::move(basis), std::move(d), lo, hi};
        for (int k = lo; k <= hi - 2; ++k) {
            Matrix a = s.differential.matrix_in_degree(k);
            Matrix b = s.differential.matrix_in_degree(k + 1);
            for (std::size_t j = 0; a.size() && j < a[0].size(); ++j)
                for (std::size_t i = 0; i < b.size(); ++i) {
                    Rational acc = 0;
                    for (std::size_t l = 0; l < a.size(); ++l)
                        acc += b[i][l] * a[l][j];
                    if (acc != 0)
                        throw std::invalid_argument(
                            "d^2 != 0 at degree " + std::to_string(k));
                }
        }
        return s;
    }
};

struct CohomologyAt {
    std::size_t dimension = 0;
    std::vector<Vector> representatives;  // coordinates in basis at degree k
};

// Cohomology at an interior degree: ker(d_k) modulo im(d_{k-1}).
// Representatives are kernel basis vectors completed against the image,
// chosen deterministically by row reduction.
inline CohomologyAt cohomology_at(const CochainComplexSlice& c, int k) {
    if (k <= c.lo || k >= c.hi)
        throw std::out_of_range(
            "cohomology_at: degree " + std::to_string(k) +
            " needs differentials d_" + std::to_string(k - 1) + " and d_" +
            std::to_string(k) + " inside the slice [" + std::to_string(c.lo) +
            "," + std::to_string(c.hi) + "]");
    const std::size_t n = c.basis.dim(k);
    std::vector<Vector> ker;
    if (c.basis.labels.count(k)) {
        ker = kernel_basis(c.differential, k);
    }
    // Image of d_{k-1} as vectors in degree k.
    Matrix dprev = c.differential.matrix_in_degree(k - 1);
    std::vector<Vector> image;
    if (!dprev.empty()) {
        const std::size_t m = dprev[0].size();
        for (std::size_t j = 0; j < m; ++j) {
            Vector col(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i) col[i] = dprev[i][j];
            bool nonzero = false;
            for (const auto& q : col) nonzero |= (q != 0);
            if (nonzero) image.push_back(std::move(col));
        }
    }
    // Row-reduce [image; kernel]: kernel vectors that introduce a new pivot
    // represent independent cohomology classes.
    Matrix stacked;
    for (const auto& v : image) stacked.push_back(v);
    std::size_t image_rank = rank(stacked);
    CohomologyAt result;
    for (const auto& v : ker) {
        stacked.push_back(v);
        std::size_t r = rank(stacked);
        if (r > image_rank + result.representatives.size())
            result.representatives.push_back(v);
        else
            stacked.pop_back();
    }
    result.dimension = result.representatives.size();
    return result;
}

}  // namespace rht::graded
