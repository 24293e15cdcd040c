// piforge: quantities and dimensions.
//
// A dimension is an element of the free abelian group generated by the
// declared base dimensions, stored as an integer exponent vector. A quantity
// is an exact rational coefficient attached to a dimension; coefficient zero
// encodes the zero quantity of that dimension and is never invertible.
#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "zlinalg.hpp"

namespace piforge {

struct DimExp {
    std::vector<i64> exps; // one entry per declared base dimension

    DimExp() = default;
    explicit DimExp(std::vector<i64> e) : exps(std::move(e)) {}

    static DimExp identity(size_t n_dims) {
        return DimExp(std::vector<i64>(n_dims, 0));
    }

    size_t size() const { return exps.size(); }

    bool is_identity() const {
        for (i64 e : exps)
            if (e != 0)
                return false;
        return true;
    }

    friend bool operator==(const DimExp&, const DimExp&) = default;
};

inline DimExp dim_mul(const DimExp& a, const DimExp& b) {
    if (a.size() != b.size())
        throw StructuralError("dimension length mismatch in dim_mul");
    DimExp out = a;
    for (size_t i = 0; i < out.exps.size(); ++i)
        out.exps[i] = checked_add(out.exps[i], b.exps[i]);
    return out;
}

inline DimExp dim_pow(const DimExp& a, i64 n) {
    DimExp out = a;
    for (auto& e : out.exps)
        e = checked_mul(e, n);
    return out;
}

struct Quantity {
    Rational coeff;
    DimExp dim;

    Quantity() = default;
    Quantity(Rational c, DimExp d) : coeff(std::move(c)), dim(std::move(d)) {}

    bool is_zero() const { return coeff.is_zero(); }

    friend bool operator==(const Quantity&, const Quantity&) = default;
};

inline Quantity qty_mul(const Quantity& a, const Quantity& b) {
    return Quantity(a.coeff * b.coeff, dim_mul(a.dim, b.dim));
}

inline Quantity qty_invert(const Quantity& a) {
    if (a.is_zero())
        throw NotInvertible("the zero quantity has no inverse");
    return Quantity(a.coeff.inverse(), dim_pow(a.dim, -1));
}

// True iff no nontrivial integer combination of the vectors vanishes. Rank
// over the rationals equals rank over the integers here (the dimension group
// is torsion-free), so a rational rank test decides it.
inline bool independent(const std::vector<DimExp>& dims) {
    std::vector<std::vector<i64>> cols;
    cols.reserve(dims.size());
    for (const auto& d : dims)
        cols.push_back(d.exps);
    const IntMatrix m = IntMatrix::from_columns(cols);
    return rank(m) == m.cols;
}

struct LocalBasis {
    std::vector<Quantity> members;

    friend bool operator==(const LocalBasis&, const LocalBasis&) = default;
};

// Result of expanding a quantity over a local basis:
//   q = mu * prod_j members[j]^exps[j],  with mu and exps unique.
struct Expansion {
    Rational mu;
    std::vector<i64> exps;

    friend bool operator==(const Expansion&, const Expansion&) = default;
};

inline Expansion expand(const Quantity& q, const LocalBasis& basis) {
    std::vector<std::vector<i64>> cols;
    cols.reserve(basis.members.size());
    for (const auto& e : basis.members) {
        if (e.is_zero())
            throw InvalidBasis("local basis member has zero coefficient");
        cols.push_back(e.dim.exps);
    }

    const auto x = solve_columns(cols, q.dim.exps); // throws InvalidBasis
    if (!x)
        throw NotExpandable("dimension lies outside the span of the basis");

    Expansion out;
    out.exps.reserve(x->size());
    for (const auto& v : *x) {
        if (!v.is_integer())
            throw NotExpandable(
                "dimension is not in the integer span of the basis");
        out.exps.push_back(v.num());
    }

    // mu = q.coeff / prod_j coeff_j^exps_j; exact, and zero iff q is zero.
    Rational denom(1);
    for (size_t j = 0; j < out.exps.size(); ++j)
        denom *= basis.members[j].coeff.pow(out.exps[j]);
    out.mu = q.coeff / denom;
    return out;
}

// Rebuild the quantity an Expansion denotes (the round-trip direction).
// `n_dims` is the ambient base-dimension count, needed when the basis is
// empty and carries no length of its own.
inline Quantity reconstruct(const Expansion& ex, const LocalBasis& basis,
                            size_t n_dims) {
    if (ex.exps.size() != basis.members.size())
        throw StructuralError("expansion/basis length mismatch");
    Quantity acc(ex.mu, DimExp::identity(n_dims));
    for (size_t j = 0; j < ex.exps.size(); ++j) {
        const auto& e = basis.members[j];
        acc = Quantity(acc.coeff * e.coeff.pow(ex.exps[j]),
                       dim_mul(acc.dim, dim_pow(e.dim, ex.exps[j])));
    }
    return acc;
}

} // namespace piforge
