// piforge: the column matroid of a dimensional matrix.
//
// The variables of a problem, viewed through their dimension columns, form a
// matroid. This header enumerates its bases, circuits, and pseudocircuits
// (sets of r+1 variables containing a basis), attaches the dimensionless
// pi-monomial of each pseudocircuit, and lays out the incidence table that
// summarizes membership. Enumeration is exhaustive over index subsets in
// lexicographic order — problems have a dozen variables at most, and
// exhaustive is both exact and instant at that scale.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "zlinalg.hpp"

namespace piforge {

struct PiMonomial {
    std::vector<i64> exps; // full-length exponent vector; zeros retained

    bool is_trivial() const {
        for (i64 e : exps)
            if (e != 0)
                return false;
        return true;
    }

    friend bool operator==(const PiMonomial&, const PiMonomial&) = default;
};

namespace detail {

// All size-k subsets of {0,...,n-1} in lexicographic order of index tuples.
inline std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

inline std::string latin_label(int i) {
    std::string s;
    ++i; // bijective base-26: A..Z, AA..AZ, ...
    while (i > 0) {
        --i;
        s.insert(s.begin(), static_cast<char>('A' + i % 26));
        i /= 26;
    }
    return s;
}

inline std::string greek_label(int i) {
    static const char* letters[] = {
        "α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "λ", "μ",
        "ν", "ξ", "ο", "π", "ρ", "σ", "τ", "υ", "φ", "χ", "ψ", "ω"};
    const int n = 24;
    std::string s = letters[i % n];
    if (i >= n)
        s += std::to_string(i / n + 1);
    return s;
}

} // namespace detail

struct ColumnMatroid {
    IntMatrix matrix;
    std::vector<std::string> var_names;
    int rank = 0;

    ColumnMatroid() = default;
    ColumnMatroid(IntMatrix m, std::vector<std::string> names)
        : matrix(std::move(m)), var_names(std::move(names)) {
        if (static_cast<int>(var_names.size()) != matrix.cols)
            throw StructuralError("variable-name count != column count");
        rank = piforge::rank(matrix);
    }

    int subset_rank(const std::vector<int>& idx) const {
        return piforge::rank(matrix.select_columns(idx));
    }
};

// All r-subsets of columns with rank r, in lexicographic order. For a rank-0
// matrix this is [{}]: the empty set is the unique basis.
inline std::vector<std::vector<int>> bases(const ColumnMatroid& m) {
    std::vector<std::vector<int>> out;
    for (const auto& s : detail::combinations(m.matrix.cols, m.rank))
        if (m.subset_rank(s) == m.rank)
            out.push_back(s);
    return out;
}

// All (r+1)-subsets containing at least one basis — equivalently, of rank
// exactly r — in lexicographic order.
inline std::vector<std::vector<int>> pseudocircuits(const ColumnMatroid& m) {
    std::vector<std::vector<int>> out;
    for (const auto& s : detail::combinations(m.matrix.cols, m.rank + 1))
        if (m.subset_rank(s) == m.rank)
            out.push_back(s);
    return out;
}

// All minimal dependent subsets (every proper subset independent), in
// lexicographic order of index tuples across sizes. Sizes never exceed r+1.
inline std::vector<std::vector<int>> circuits(const ColumnMatroid& m) {
    std::vector<std::vector<int>> out;
    for (int size = 1; size <= m.rank + 1; ++size) {
        for (const auto& s : detail::combinations(m.matrix.cols, size)) {
            if (m.subset_rank(s) >= size)
                continue; // independent
            bool minimal = true;
            if (size > 1) {
                std::vector<int> sub(s.begin() + 1, s.end());
                for (int drop = 0; drop < size && minimal; ++drop) {
                    if (m.subset_rank(sub) < size - 1)
                        minimal = false;
                    if (drop < size - 1)
                        sub[drop] = s[drop];
                }
            }
            if (minimal)
                out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The pi-monomial of a pseudocircuit: the primitive kernel vector of its
// columns, spread over the full variable list, sign-normalized so
// positive_var's exponent is positive (first-nonzero-positive when that
// exponent is zero).
inline PiMonomial pi_monomial(const ColumnMatroid& m, const std::vector<int>& pc,
                              int positive_var) {
    std::vector<int> s = pc;
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != m.rank + 1 || m.subset_rank(s) != m.rank)
        throw NotPseudocircuit("set is not a pseudocircuit of the matroid");
    int designated = -1;
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == positive_var)
            designated = static_cast<int>(i);
    if (designated < 0)
        throw StructuralError("positive variable is not in the pseudocircuit");

    const std::vector<i64> kernel =
        primitive_kernel(m.matrix.select_columns(s), designated);
    PiMonomial pi;
    pi.exps.assign(m.matrix.cols, 0);
    for (size_t i = 0; i < s.size(); ++i)
        pi.exps[s[i]] = kernel[i];
    return pi;
}

// Membership table: one row per variable, one +/− column per basis and one
// ∗/∘ column per pseudocircuit. Bases are labeled A, B, ...; pseudocircuits
// α, β, ... in enumeration order.
struct IncidenceTable {
    std::vector<std::string> var_names;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<int>> basis_sets;
    std::vector<std::string> pseudo_labels;
    std::vector<std::vector<int>> pseudo_sets;

    bool in_basis(int var, int b) const {
        const auto& s = basis_sets[b];
        return std::find(s.begin(), s.end(), var) != s.end();
    }
    bool in_pseudo(int var, int p) const {
        const auto& s = pseudo_sets[p];
        return std::find(s.begin(), s.end(), var) != s.end();
    }
};

inline IncidenceTable incidence_table(const ColumnMatroid& m) {
    IncidenceTable t;
    t.var_names = m.var_names;
    t.basis_sets = bases(m);
    t.pseudo_sets = pseudocircuits(m);
    for (size_t i = 0; i < t.basis_sets.size(); ++i)
        t.basis_labels.push_back(detail::latin_label(static_cast<int>(i)));
    for (size_t i = 0; i < t.pseudo_sets.size(); ++i)
        t.pseudo_labels.push_back(detail::greek_label(static_cast<int>(i)));
    return t;
}

// Render "t^2 M d^-3 G": declaration order, exponent 1 omitted, zero-exponent
// variables omitted entirely. An all-zero vector renders as "".
inline std::string monomial_text(const std::vector<std::string>& names,
                                 const std::vector<i64>& exps) {
    std::string out;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += names[i];
        if (exps[i] != 1)
            out += '^' + std::to_string(exps[i]);
    }
    return out;
}

// Same, but the designated variable is printed first (argument style: the
// argument's own variable leads, the rest follow in declaration order).
inline std::string monomial_text_own_first(const std::vector<std::string>& names,
                                           const std::vector<i64>& exps,
                                           int own) {
    std::string out;
    auto append = [&](size_t i) {
        if (exps[i] == 0)
            return;
        if (!out.empty())
            out += ' ';
        out += names[i];
        if (exps[i] != 1)
            out += '^' + std::to_string(exps[i]);
    };
    if (own >= 0)
        append(static_cast<size_t>(own));
    for (size_t i = 0; i < exps.size(); ++i)
        if (static_cast<int>(i) != own)
            append(i);
    return out;
}

} // namespace piforge
