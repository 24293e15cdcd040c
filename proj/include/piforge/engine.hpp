// piforge: the analysis pipelines.
//
// Unbalanced mode fixes a dependent variable and emits one equation per
// prebasis (each maximal independent subset of the remaining variables'
// dimensions):
//
//     y0^(kappa*k0) = prod_j xj^(k0j) * Psi_n(pi_1, ..., pi_m)
//
// where each pi is the canonical dimensionless power product of one
// non-member variable over the prebasis. Prebases whose k0 exceeds 1 at the
// working kappa are kept and flagged unsolvable — no Psi is asserted for
// them. Balanced mode drops the notion of a dependent variable and instead
// emits, for every variable V, one equation per matroid basis avoiding V,
// with literal duplicates merged.
//
// The symmetry combiner turns a declared argument swap u <-> v into a closed
// form: it finds two equations that are mirror images under the swap, reads
// off the functional equation Psi(x) = x^s Psi(1/x), and instantiates the
// solution template for s = +1 (Psi = k(1+x)) or s = -1 (Psi = k(1+x)^-1).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matroid.hpp"
#include "problem.hpp"
#include "qspace.hpp"
#include "zlinalg.hpp"

namespace piforge {

// One maximal independent subset of the non-dependent variables, with the
// canonical exponents of the dependent variable (at kappa = 1) and of every
// non-member against it.
struct Prebasis {
    std::vector<int> members; // ascending variable indices
    CanonicalExponents dep;   // kappa = 1: dep.k is the minimal k0
    std::vector<std::pair<int, CanonicalExponents>> others;

    friend bool operator==(const Prebasis&, const Prebasis&) = default;
};

struct EquationArg {
    int own = -1;          // index of the argument's own variable
    std::vector<i64> exps; // full-length pi exponent vector, exps[own] > 0

    friend bool operator==(const EquationArg&, const EquationArg&) = default;
};

struct Equation {
    std::vector<int> source;    // prebasis members (unbalanced) / basis (balanced)
    std::string psi;            // "Psi_2", "Psi_M_1"; empty when not asserted
    bool solvable = true;
    i64 k0 = 1;                 // canonical k0 at the system kappa (balanced: 1)
    std::vector<i64> lhs;       // full-length pi vector; lhs[dependent] > 0
    std::vector<i64> rhs_basis; // k0j over source order (= -lhs at members)
    std::vector<EquationArg> args;
    std::vector<std::string> assumptions;
    int merged = 1;             // balanced: raw equations this one represents

    friend bool operator==(const Equation&, const Equation&) = default;
};

struct EquationSystem {
    std::vector<std::string> var_names;
    int dependent = -1; // variable index (the per-variable V in balanced mode)
    i64 kappa = 1;
    std::vector<Equation> equations;
    int raw_count = 0; // before balanced dedup; equals equations.size() otherwise

    friend bool operator==(const EquationSystem&, const EquationSystem&) = default;
};

struct ClosedForm {
    std::string statement;     // e.g. "t^2 = k * d^3 G^-1 (M + m)^-1"
    std::string template_used; // "s=+1" or "s=-1"
    int u = -1, v = -1;        // swap roles: the argument is (v/u)^t
    i64 s = 0, t = 1;
    int dep = -1;
    i64 dep_exp = 0;
    std::vector<i64> residual; // the monomial factor R with the sum split off

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

namespace detail {

inline int dependent_index_checked(const Problem& p) {
    if (!p.dependent)
        throw StructuralError("problem has no dependent variable");
    const int dep = p.index_of(*p.dependent);
    if (dep < 0)
        throw StructuralError("dependent variable '" + *p.dependent +
                              "' is not declared");
    return dep;
}

inline std::vector<std::vector<i64>> columns_of(const Problem& p,
                                                const std::vector<int>& idx) {
    std::vector<std::vector<i64>> cols;
    cols.reserve(idx.size());
    for (int i : idx)
        cols.push_back(p.vars[i].dim.exps);
    return cols;
}

} // namespace detail

// All prebases for the dependent variable: r-subsets of the other variables
// whose columns reach rank r, where r is the rank of the full dimensional
// matrix (dependent included). The list is empty exactly when the problem is
// not precomplete. Canonical exponents are computed at kappa = 1.
inline std::vector<Prebasis> prebases(const Problem& p) {
    const int dep = detail::dependent_index_checked(p);
    const int r = rank(p.matrix());

    std::vector<int> candidates;
    for (int i = 0; i < static_cast<int>(p.vars.size()); ++i)
        if (i != dep)
            candidates.push_back(i);

    std::vector<Prebasis> out;
    for (const auto& pick :
         detail::combinations(static_cast<int>(candidates.size()), r)) {
        std::vector<int> members;
        members.reserve(pick.size());
        for (int i : pick)
            members.push_back(candidates[i]);
        const auto cols = detail::columns_of(p, members);
        if (rank(IntMatrix::from_columns(cols)) != r)
            continue;

        Prebasis pb;
        pb.members = members;
        pb.dep = canonical_solve(p.vars[dep].dim.exps, cols, 1);
        for (int i : candidates) {
            if (std::find(members.begin(), members.end(), i) != members.end())
                continue;
            pb.others.emplace_back(i,
                                   canonical_solve(p.vars[i].dim.exps, cols, 1));
        }
        out.push_back(std::move(pb));
    }
    return out;
}

// The minimal kappa making k0 = 1 achievable on every prebasis: since k0 at
// kappa is d/gcd(d, kappa) for the kappa=1 value d, this is lcm over prebases
// of d.
inline i64 canonical_kappa(const Problem& p) {
    const auto pbs = prebases(p);
    if (pbs.empty())
        throw NotPrecomplete("no prebasis exists for dependent '" +
                             (p.dependent ? *p.dependent : std::string("?")) +
                             "'");
    i64 k = 1;
    for (const auto& pb : pbs)
        k = lcm_i64(k, pb.dep.k);
    return k;
}

namespace detail {

inline void add_repowering_assumptions(const Problem& p, Equation& eq,
                                       int dep) {
    auto flag = [&](int var, i64 e) {
        if (e > 1)
            eq.assumptions.push_back("bijective re-powering: " +
                                     p.vars[var].name + "^" +
                                     std::to_string(e));
    };
    flag(dep, eq.lhs[dep]);
    for (const auto& a : eq.args)
        flag(a.own, a.exps[a.own]);
}

// The unbalanced system at an explicit kappa, unsolvable prebases retained.
// Throws only for the structurally hopeless case (no prebasis at all).
inline EquationSystem build_unbalanced(const Problem& p, i64 kappa) {
    const int dep = dependent_index_checked(p);
    const auto pbs = prebases(p);
    if (pbs.empty())
        throw NotPrecomplete("no prebasis exists for dependent '" +
                             *p.dependent + "'");

    EquationSystem sys;
    sys.var_names = p.var_names();
    sys.dependent = dep;
    sys.kappa = kappa;
    sys.raw_count = static_cast<int>(pbs.size());

    for (size_t n = 0; n < pbs.size(); ++n) {
        const auto& pb = pbs[n];
        const auto cols = columns_of(p, pb.members);
        const CanonicalExponents ce =
            canonical_solve(p.vars[dep].dim.exps, cols, kappa);

        Equation eq;
        eq.source = pb.members;
        eq.k0 = ce.k;
        eq.solvable = (ce.k == 1);
        eq.rhs_basis = ce.kj;
        eq.lhs.assign(p.vars.size(), 0);
        eq.lhs[dep] = checked_mul(kappa, ce.k);
        for (size_t j = 0; j < pb.members.size(); ++j)
            eq.lhs[pb.members[j]] = checked_neg(ce.kj[j]);
        for (const auto& [var, other] : pb.others) {
            EquationArg arg;
            arg.own = var;
            arg.exps.assign(p.vars.size(), 0);
            arg.exps[var] = other.k;
            for (size_t j = 0; j < pb.members.size(); ++j)
                arg.exps[pb.members[j]] = checked_neg(other.kj[j]);
            eq.args.push_back(std::move(arg));
        }
        if (eq.solvable) {
            eq.psi = "Psi_" + std::to_string(n + 1);
            add_repowering_assumptions(p, eq, dep);
        }
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

} // namespace detail

// The full unbalanced pipeline: resolve kappa (auto -> canonical), build the
// system, and reject a fixed kappa under which nothing is solvable.
inline EquationSystem analyze_unbalanced(const Problem& p) {
    const i64 kappa = p.kappa ? *p.kappa : canonical_kappa(p);
    EquationSystem sys = detail::build_unbalanced(p, kappa);
    if (p.kappa) {
        bool any = false;
        for (const auto& eq : sys.equations)
            any = any || eq.solvable;
        if (!any)
            throw KappaInsufficient(
                "no prebasis is solvable at kappa = " + std::to_string(kappa));
    }
    return sys;
}

// Balanced mode: one equation system per variable V, one equation per
// matroid basis B (over all columns) with V outside B. The left-hand side is
// the pi-monomial of B+{V} with V positive; there is one argument per
// remaining non-basis variable w, the pi-monomial of B+{w} with w positive.
// Equations with identical (lhs, argument multiset) merge, keeping the first
// in basis order.
inline std::vector<EquationSystem> analyze_balanced(const Problem& p) {
    const ColumnMatroid matroid(p.matrix(), p.var_names());
    const auto basis_sets = bases(matroid);
    const int n = static_cast<int>(p.vars.size());

    std::vector<EquationSystem> out;
    for (int v = 0; v < n; ++v) {
        EquationSystem sys;
        sys.var_names = p.var_names();
        sys.dependent = v;
        sys.kappa = 1;

        std::map<std::pair<std::vector<i64>, std::vector<std::vector<i64>>>,
                 size_t>
            seen;
        for (const auto& basis : basis_sets) {
            if (std::find(basis.begin(), basis.end(), v) != basis.end())
                continue;
            ++sys.raw_count;

            std::vector<int> with_v = basis;
            with_v.push_back(v);
            std::sort(with_v.begin(), with_v.end());

            Equation eq;
            eq.source = basis;
            eq.lhs = pi_monomial(matroid, with_v, v).exps;
            eq.rhs_basis.reserve(basis.size());
            for (int b : basis)
                eq.rhs_basis.push_back(checked_neg(eq.lhs[b]));
            for (int w = 0; w < n; ++w) {
                if (w == v ||
                    std::find(basis.begin(), basis.end(), w) != basis.end())
                    continue;
                std::vector<int> with_w = basis;
                with_w.push_back(w);
                std::sort(with_w.begin(), with_w.end());
                EquationArg arg;
                arg.own = w;
                arg.exps = pi_monomial(matroid, with_w, w).exps;
                eq.args.push_back(std::move(arg));
            }

            std::vector<std::vector<i64>> arg_key;
            for (const auto& a : eq.args)
                arg_key.push_back(a.exps);
            std::sort(arg_key.begin(), arg_key.end());
            auto key = std::make_pair(eq.lhs, std::move(arg_key));
            if (auto it = seen.find(key); it != seen.end()) {
                ++sys.equations[it->second].merged;
                continue;
            }
            seen.emplace(std::move(key), sys.equations.size());
            sys.equations.push_back(std::move(eq));
        }

        for (size_t j = 0; j < sys.equations.size(); ++j) {
            Equation& eq = sys.equations[j];
            eq.psi = "Psi_" + p.vars[v].name + "_" + std::to_string(j + 1);
            detail::add_repowering_assumptions(p, eq, v);
        }
        out.push_back(std::move(sys));
    }
    return out;
}

// Combine two mirror-image equations under the swap u <-> v into a closed
// form. Preconditions: [u] = [v]; the system is an unbalanced system (or any
// system whose equations carry a positive dependent entry in lhs).
inline ClosedForm apply_symmetry(const EquationSystem& sys,
                                 const std::string& u_name,
                                 const std::string& v_name) {
    auto index_of = [&](const std::string& name) {
        for (size_t i = 0; i < sys.var_names.size(); ++i)
            if (sys.var_names[i] == name)
                return static_cast<int>(i);
        throw StructuralError("unknown variable '" + name +
                              "' in symmetry pair");
    };
    const int a = index_of(u_name);
    const int b = index_of(v_name);
    const int dep = sys.dependent;

    auto swapped = [&](std::vector<i64> e) {
        std::swap(e[a], e[b]);
        return e;
    };

    const auto& eqs = sys.equations;
    for (size_t i = 0; i < eqs.size(); ++i) {
        for (size_t j = i + 1; j < eqs.size(); ++j) {
            const Equation& ei = eqs[i];
            const Equation& ej = eqs[j];
            if (!ei.solvable || !ej.solvable)
                continue;
            if (ei.args.size() != 1 || ej.args.size() != 1)
                continue;
            if (swapped(ei.lhs) != ej.lhs)
                continue;
            if (swapped(ei.args[0].exps) != ej.args[0].exps)
                continue;
            const auto& x = ei.args[0].exps;
            bool support_ok = true;
            for (size_t q = 0; q < x.size(); ++q)
                if (x[q] != 0 && static_cast<int>(q) != a &&
                    static_cast<int>(q) != b)
                    support_ok = false;
            if (!support_ok || x[a] == 0 || x[b] == 0 || x[a] != -x[b])
                continue;

            // The argument is (v/u)^t with t > 0; orient the pair so.
            const int u = x[b] > 0 ? a : b;
            const int v = x[b] > 0 ? b : a;
            const i64 t = x[v];

            // Basis monomial of equation i (lhs with the dependent removed,
            // negated): B[q] = -lhs[q].
            const i64 diff = checked_sub(checked_neg(ei.lhs[u]),
                                         checked_neg(ei.lhs[v]));
            if (diff % t != 0)
                throw UnsupportedExponent(
                    "functional equation exponent is not an integer");
            const i64 s = diff / t;
            if (s != 1 && s != -1)
                throw UnsupportedExponent(
                    "no solution template for Psi(x) = x^" +
                    std::to_string(s) + " Psi(1/x)");

            ClosedForm cf;
            cf.u = u;
            cf.v = v;
            cf.s = s;
            cf.t = t;
            cf.dep = dep;
            cf.dep_exp = ei.lhs[dep];
            cf.template_used = s == 1 ? "s=+1" : "s=-1";
            cf.residual.assign(ei.lhs.size(), 0);
            for (size_t q = 0; q < ei.lhs.size(); ++q)
                if (static_cast<int>(q) != dep)
                    cf.residual[q] = checked_neg(ei.lhs[q]);
            cf.residual[u] = checked_sub(cf.residual[u], checked_mul(s, t));

            std::string lhs_text = sys.var_names[dep];
            if (cf.dep_exp != 1)
                lhs_text += "^" + std::to_string(cf.dep_exp);
            const int first = std::min(u, v);
            const int second = std::max(u, v);
            auto term = [&](int q) {
                std::string w = sys.var_names[q];
                if (t != 1)
                    w += "^" + std::to_string(t);
                return w;
            };
            const std::string rmono = monomial_text(sys.var_names, cf.residual);
            cf.statement = lhs_text + " = k" +
                           (rmono.empty() ? "" : " * " + rmono) + " (" +
                           term(first) + " + " + term(second) + ")" +
                           (s == -1 ? "^-1" : "");
            return cf;
        }
    }
    throw NoSymmetricPair("no two equations are mirror images under " +
                          u_name + " <-> " + v_name);
}

// Replace the constituent variables of each definition by one composite
// variable whose dimension is the monomial's. The composite takes the list
// position of its earliest constituent. Definitions must not share
// constituents with each other or with a symmetric pair, must not consume
// the dependent variable, and must introduce fresh names.
inline Problem substitute(const Problem& p,
                          const std::vector<SubstitutionDef>& defs) {
    const int n = static_cast<int>(p.vars.size());
    std::vector<int> consumed_by(n, -1);
    std::vector<DimExp> def_dims;
    std::vector<int> def_anchor; // earliest constituent index per definition

    std::set<std::string> names;
    for (const auto& v : p.vars)
        names.insert(v.name);

    const int dep = p.dependent ? p.index_of(*p.dependent) : -1;

    for (size_t d = 0; d < defs.size(); ++d) {
        const auto& def = defs[d];
        if (names.count(def.name))
            throw DuplicateName("substitution name '" + def.name +
                                "' is already in use");
        names.insert(def.name);
        if (def.factors.empty())
            throw StructuralError("substitution '" + def.name +
                                  "' has an empty monomial");

        DimExp dim = DimExp::identity(p.base_dims.size());
        int anchor = n;
        for (const auto& f : def.factors) {
            const int idx = p.index_of(f.name);
            if (idx < 0)
                throw UnknownName("substitution references unknown quantity '" +
                                  f.name + "'");
            if (f.exp == 0)
                throw StructuralError("zero exponent on '" + f.name +
                                      "' in substitution '" + def.name + "'");
            if (consumed_by[idx] >= 0 &&
                consumed_by[idx] != static_cast<int>(d))
                throw OverlappingSubstitution(
                    "quantity '" + f.name + "' appears in two substitutions");
            if (idx == dep)
                throw DanglingVariable("substitution would consume the "
                                       "dependent variable '" +
                                       f.name + "'");
            for (const auto& [su, sv] : p.symmetries)
                if (su == f.name || sv == f.name)
                    throw OverlappingSubstitution(
                        "quantity '" + f.name +
                        "' appears in both a substitution and a symmetric "
                        "pair");
            consumed_by[idx] = static_cast<int>(d);
            anchor = std::min(anchor, idx);
            dim = dim_mul(dim, dim_pow(p.vars[idx].dim, f.exp));
        }
        def_dims.push_back(std::move(dim));
        def_anchor.push_back(anchor);
    }

    Problem out;
    out.base_dims = p.base_dims;
    out.dependent = p.dependent;
    out.kappa = p.kappa;
    out.mode = p.mode;
    out.symmetries = p.symmetries;
    for (int i = 0; i < n; ++i) {
        const int d = consumed_by[i];
        if (d < 0)
            out.vars.push_back(p.vars[i]);
        else if (def_anchor[d] == i)
            out.vars.push_back({defs[d].name, def_dims[d]});
    }

    // Symmetric pairs must still resolve (composite names are fine).
    for (const auto& [u, v] : out.symmetries)
        if (out.index_of(u) < 0 || out.index_of(v) < 0)
            throw UnknownName("symmetric pair references unknown quantity");
    return out;
}

} // namespace piforge
