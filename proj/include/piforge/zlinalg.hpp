// piforge: exact integer/rational linear algebra.
//
// Everything the rest of the library needs reduces to three operations on
// small integer matrices: rank, solving against an independent column set,
// and the primitive kernel vector of a nullity-1 column set. All of it is
// exact — fraction-free (Bareiss) forward elimination with first-nonzero
// pivoting, rational back-substitution, then lcm/gcd normalization.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace piforge {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<i64> a; // row-major, rows*cols entries

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {
        if (r < 0 || c < 0)
            throw StructuralError("negative matrix dimension");
    }

    i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    // Columns are exponent vectors; all must share the same length.
    static IntMatrix from_columns(const std::vector<std::vector<i64>>& columns) {
        const int c = static_cast<int>(columns.size());
        const int r = c == 0 ? 0 : static_cast<int>(columns[0].size());
        for (const auto& col : columns)
            if (static_cast<int>(col.size()) != r)
                throw StructuralError("columns of unequal length");
        IntMatrix m(r, c);
        for (int j = 0; j < c; ++j)
            for (int i = 0; i < r; ++i)
                m.at(i, j) = columns[j][i];
        return m;
    }

    std::vector<i64> column(int j) const {
        std::vector<i64> col(rows);
        for (int i = 0; i < rows; ++i)
            col[i] = at(i, j);
        return col;
    }

    IntMatrix select_columns(const std::vector<int>& idx) const {
        IntMatrix m(rows, static_cast<int>(idx.size()));
        for (int j = 0; j < m.cols; ++j)
            for (int i = 0; i < rows; ++i)
                m.at(i, j) = at(i, idx[j]);
        return m;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// The unique gcd-1, positive-k solution of kappa*k*target = sum kj[j]*col[j].
struct CanonicalExponents {
    i64 k = 1;
    std::vector<i64> kj;

    friend bool operator==(const CanonicalExponents&,
                           const CanonicalExponents&) = default;
};

namespace detail {

// Fraction-free (Bareiss) forward elimination, in place. Pivots on the first
// nonzero entry below the current row, scanning columns left to right.
// Returns the pivot columns in order; after the call, every entry below a
// pivot is zero and all divisions performed were exact.
inline std::vector<int> bareiss_forward(IntMatrix& m) {
    std::vector<int> pivot_cols;
    i64 prev = 1;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int i = row; i < m.rows; ++i) {
            if (m.at(i, col) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0)
            continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m.at(row, j), m.at(pr, j));
        const i64 pivot = m.at(row, col);
        for (int i = row + 1; i < m.rows; ++i) {
            const i64 head = m.at(i, col);
            for (int j = col + 1; j < m.cols; ++j) {
                const i64 t = checked_sub(checked_mul(m.at(i, j), pivot),
                                          checked_mul(head, m.at(row, j)));
                m.at(i, j) = checked_div_exact(t, prev);
            }
            m.at(i, col) = 0;
        }
        prev = pivot;
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

// Clear denominators by their lcm, then divide by the gcd of the entries.
// The result is the primitive integer vector on the ray of `x`.
inline std::vector<i64> primitive_scale(const std::vector<Rational>& x) {
    i64 scale = 1;
    for (const auto& v : x)
        scale = lcm_i64(scale == 0 ? 1 : scale, v.den());
    std::vector<i64> out(x.size());
    i64 g = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        out[i] = checked_mul(x[i].num(), scale / x[i].den());
        g = gcd_i64(g, out[i]);
    }
    if (g > 1)
        for (auto& v : out)
            v /= g;
    return out;
}

} // namespace detail

// Rank over the rationals (equal to rank over the integers here, since the
// dimension group is torsion-free).
inline int rank(const IntMatrix& m) {
    IntMatrix work = m;
    return static_cast<int>(detail::bareiss_forward(work).size());
}

inline bool columns_independent(const IntMatrix& m) {
    return rank(m) == m.cols;
}

// Solve sum x[j]*col[j] = rhs for rational x, given independent columns.
// Returns nullopt when rhs is outside the span. Throws InvalidBasis when the
// columns are dependent (the caller promised otherwise).
inline std::optional<std::vector<Rational>>
solve_columns(const std::vector<std::vector<i64>>& columns,
              const std::vector<i64>& rhs) {
    const int r = static_cast<int>(columns.size());
    const int m = static_cast<int>(rhs.size());
    for (const auto& col : columns)
        if (static_cast<int>(col.size()) != m)
            throw StructuralError("column/rhs length mismatch");
    if (r == 0) {
        for (i64 v : rhs)
            if (v != 0)
                return std::nullopt;
        return std::vector<Rational>{};
    }

    IntMatrix aug(m, r + 1);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < m; ++i)
            aug.at(i, j) = columns[j][i];
    for (int i = 0; i < m; ++i)
        aug.at(i, r) = rhs[i];

    const std::vector<int> pivots = detail::bareiss_forward(aug);

    // Independence of the columns means every pivot must land in the first
    // r columns, one per column.
    int npiv = 0;
    for (int pc : pivots)
        if (pc < r)
            ++npiv;
    if (npiv < r)
        throw InvalidBasis("basis columns are not independent");
    for (int pc : pivots)
        if (pc == r)
            return std::nullopt; // a pivot in the rhs column: inconsistent

    // Rational back-substitution over the echelon form.
    std::vector<Rational> x(r, Rational(0));
    for (int i = r - 1; i >= 0; --i) {
        const int pc = pivots[i];
        Rational acc(aug.at(i, r));
        for (int j = pc + 1; j < r; ++j)
            acc -= Rational(aug.at(i, j)) * x[j];
        x[pc] = acc / Rational(aug.at(i, pc));
    }
    return x;
}

// Canonical exponents: the smallest positive k admitting an integer solution
// kj of kappa*k*target = sum kj[j]*basis_cols[j], gcd-normalized. Solutions
// scale linearly, so k is read off as the lcm of the denominators of the
// rational solution for k = 1.
inline CanonicalExponents
canonical_solve(const std::vector<i64>& target,
                const std::vector<std::vector<i64>>& basis_cols, i64 kappa) {
    if (kappa < 1)
        throw StructuralError("kappa must be a positive integer");
    std::vector<i64> rhs(target.size());
    for (size_t i = 0; i < target.size(); ++i)
        rhs[i] = checked_mul(kappa, target[i]);

    const auto x = solve_columns(basis_cols, rhs);
    if (!x)
        throw NoSolution("target dimension is outside the span of the basis");

    CanonicalExponents ce;
    ce.k = 1;
    for (const auto& v : *x)
        ce.k = lcm_i64(ce.k, v.den());
    ce.kj.resize(x->size());
    i64 g = ce.k;
    for (size_t j = 0; j < x->size(); ++j) {
        ce.kj[j] = checked_mul((*x)[j].num(), ce.k / (*x)[j].den());
        g = gcd_i64(g, ce.kj[j]);
    }
    // The lcm construction already makes gcd(k, kj...) = 1; keep the division
    // as a guard so the invariant can never leak even if that reasoning rots.
    if (g > 1) {
        ce.k /= g;
        for (auto& v : ce.kj)
            v /= g;
    }
    return ce;
}

// The primitive integer kernel vector of a nullity-1 matrix, sign-normalized
// so entry `designated` is positive (falling back to the first nonzero entry
// when the designated one is zero).
inline std::vector<i64> primitive_kernel(const IntMatrix& m, int designated) {
    if (designated < 0 || designated >= m.cols)
        throw StructuralError("designated index out of range");
    IntMatrix work = m;
    const std::vector<int> pivots = detail::bareiss_forward(work);
    const int nullity = m.cols - static_cast<int>(pivots.size());
    if (nullity != 1)
        throw NotPseudocircuit("column set has nullity " +
                               std::to_string(nullity) + ", expected 1");

    int free_col = 0;
    {
        std::vector<bool> is_pivot(m.cols, false);
        for (int pc : pivots)
            is_pivot[pc] = true;
        while (is_pivot[free_col])
            ++free_col;
    }

    std::vector<Rational> x(m.cols, Rational(0));
    x[free_col] = Rational(1);
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
        const int pc = pivots[i];
        Rational acc(0);
        for (int j = pc + 1; j < m.cols; ++j)
            acc += Rational(work.at(i, j)) * x[j];
        x[pc] = -acc / Rational(work.at(i, pc));
    }

    std::vector<i64> kernel = detail::primitive_scale(x);
    i64 key = kernel[designated];
    if (key == 0)
        for (i64 v : kernel)
            if (v != 0) {
                key = v;
                break;
            }
    if (key < 0)
        for (auto& v : kernel)
            v = checked_neg(v);
    return kernel;
}

} // namespace piforge
