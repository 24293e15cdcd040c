// piforge: analysis reports.
//
// `analyze` drives the full pipeline (substitutions, prebases, kappa
// resolution, equation systems, optional matroid summary and symmetry
// combination) into one AnalysisReport value; `render_text` and
// `render_structured` turn that value into the two output formats. Both
// renderers are deterministic: the same problem yields byte-identical
// output, and the structured form carries integers only — never floats.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "engine.hpp"
#include "errors.hpp"
#include "matroid.hpp"
#include "problem.hpp"

namespace piforge {

struct AnalysisOptions {
    std::optional<Mode> mode;      // override the file's mode
    bool kappa_given = false;      // --kappa present?
    std::optional<i64> kappa;      // value when given (nullopt = auto)
    bool table = false;            // include the matroid summary
    bool symmetry = false;         // run the symmetry combiner
    std::optional<std::pair<std::string, std::string>> extra_pair;
};

struct SymmetryOutcome {
    std::string u, v;
    bool ok = false;
    ClosedForm form; // valid when ok
    std::string error;
};

struct MatroidSummary {
    ColumnMatroid matroid;
    std::vector<std::vector<int>> basis_sets;
    std::vector<std::vector<int>> pseudo_sets;
    std::vector<std::vector<int>> circuit_sets;
    std::vector<PiMonomial> pis; // one per pseudocircuit
    IncidenceTable table;
};

struct AnalysisReport {
    Problem original;  // as parsed, echoed verbatim
    Problem effective; // after overrides and substitution
    Mode mode = Mode::unbalanced;
    int rank = 0;

    // Unbalanced pipeline.
    bool precomplete = true;
    i64 kappa_canonical = 1;
    i64 kappa_used = 1;
    bool kappa_auto = true;
    bool kappa_insufficient = false;
    std::optional<EquationSystem> system;

    // Balanced pipeline.
    std::vector<EquationSystem> balanced;

    std::optional<MatroidSummary> matroid;
    std::vector<SymmetryOutcome> symmetry;
};

inline AnalysisReport analyze(const Problem& input,
                              const AnalysisOptions& opts = {}) {
    Problem p = input;
    if (opts.mode)
        p.mode = *opts.mode;
    if (opts.kappa_given)
        p.kappa = opts.kappa;

    AnalysisReport rep;
    rep.original = input;
    rep.effective = p.substitutions.empty() ? p : substitute(p, p.substitutions);
    Problem& eff = rep.effective;

    if (opts.extra_pair) {
        const auto& [u, v] = *opts.extra_pair;
        const int ui = eff.index_of(u), vi = eff.index_of(v);
        if (ui < 0 || vi < 0)
            throw StructuralError("unknown quantity in symmetry pair '" + u +
                                  "', '" + v + "'");
        if (!(eff.vars[ui].dim == eff.vars[vi].dim))
            throw StructuralError("dimension mismatch in symmetry pair '" + u +
                                  "' and '" + v + "'");
        bool present = false;
        for (const auto& [a, b] : eff.symmetries)
            present = present || (a == u && b == v) || (a == v && b == u);
        if (!present)
            eff.symmetries.emplace_back(u, v);
    }

    rep.mode = eff.mode;
    rep.rank = rank(eff.matrix());

    if (eff.mode == Mode::unbalanced) {
        const auto pbs = prebases(eff); // validates the dependent variable
        rep.precomplete = !pbs.empty();
        if (rep.precomplete) {
            rep.kappa_canonical = 1;
            for (const auto& pb : pbs)
                rep.kappa_canonical = lcm_i64(rep.kappa_canonical, pb.dep.k);
            rep.kappa_auto = !eff.kappa.has_value();
            rep.kappa_used = eff.kappa.value_or(rep.kappa_canonical);
            rep.system = detail::build_unbalanced(eff, rep.kappa_used);
            if (eff.kappa) {
                bool any = false;
                for (const auto& eq : rep.system->equations)
                    any = any || eq.solvable;
                rep.kappa_insufficient = !any;
            }
            if (opts.symmetry) {
                for (const auto& [u, v] : eff.symmetries) {
                    SymmetryOutcome out;
                    out.u = u;
                    out.v = v;
                    try {
                        out.form = apply_symmetry(*rep.system, u, v);
                        out.ok = true;
                    } catch (const Error& e) {
                        out.error = e.what();
                    }
                    rep.symmetry.push_back(std::move(out));
                }
            }
        }
    } else {
        if (opts.symmetry)
            throw StructuralError(
                "the symmetry combiner requires unbalanced mode");
        rep.balanced = analyze_balanced(eff);
    }

    if (opts.table) {
        MatroidSummary ms;
        ms.matroid = ColumnMatroid(eff.matrix(), eff.var_names());
        ms.basis_sets = bases(ms.matroid);
        ms.pseudo_sets = pseudocircuits(ms.matroid);
        ms.circuit_sets = circuits(ms.matroid);
        for (const auto& pc : ms.pseudo_sets)
            ms.pis.push_back(pi_monomial(ms.matroid, pc, pc.front()));
        ms.table = incidence_table(ms.matroid);
        rep.matroid = std::move(ms);
    }
    return rep;
}

namespace detail {

inline size_t utf8_len(const std::string& s) {
    size_t n = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80)
            ++n;
    return n;
}

inline std::string pad_to(const std::string& s, size_t width) {
    std::string out = s;
    for (size_t i = utf8_len(s); i < width; ++i)
        out += ' ';
    return out;
}

inline std::string set_text(const std::vector<std::string>& names,
                            const std::vector<int>& idx) {
    std::string out = "{";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i)
            out += ", ";
        out += names[idx[i]];
    }
    return out + "}";
}

inline std::string tuple_text(const std::vector<i64>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

// "t^2 = M^-1 d^3 G^-1 * Psi_1(m M^-1)" — or the unsolvable notice.
inline std::string equation_text(const EquationSystem& sys,
                                 const Equation& eq) {
    const auto& names = sys.var_names;
    if (!eq.solvable)
        return "prebasis " + set_text(names, eq.source) +
               ": unsolvable at kappa " + std::to_string(sys.kappa) +
               " (k0 = " + std::to_string(eq.k0) + "), no Psi asserted";

    const int dep = sys.dependent;
    std::string out = names[dep];
    if (eq.lhs[dep] != 1)
        out += "^" + std::to_string(eq.lhs[dep]);
    out += " = ";

    std::vector<i64> basis_part(eq.lhs.size(), 0);
    for (size_t i = 0; i < eq.lhs.size(); ++i)
        if (static_cast<int>(i) != dep)
            basis_part[i] = -eq.lhs[i];
    const std::string basis_text = monomial_text(names, basis_part);
    if (!basis_text.empty())
        out += basis_text + " * ";

    out += eq.psi + "(";
    for (size_t i = 0; i < eq.args.size(); ++i) {
        if (i)
            out += ", ";
        out += monomial_text_own_first(names, eq.args[i].exps, eq.args[i].own);
    }
    return out + ")";
}

inline std::string closed_form_line(const SymmetryOutcome& o) {
    if (!o.ok)
        return o.u + " <-> " + o.v + ": error: " + o.error;
    return o.u + " <-> " + o.v + " [template " + o.form.template_used +
           "]: " + o.form.statement;
}

// The prebasis/equation block shared by both unbalanced and balanced text.
inline void equations_block(std::string& out, const EquationSystem& sys,
                            const std::string& indent) {
    for (size_t i = 0; i < sys.equations.size(); ++i) {
        const Equation& eq = sys.equations[i];
        out += indent + "(" + std::to_string(i + 1) + ") " +
               equation_text(sys, eq) + "\n";
        for (const auto& a : eq.assumptions)
            out += indent + "    assumes " + a + "\n";
    }
}

inline nlohmann::ordered_json problem_json(const Problem& p) {
    nlohmann::ordered_json j;
    j["dimensions"] = p.base_dims;
    j["quantities"] = nlohmann::ordered_json::array();
    for (const auto& v : p.vars)
        j["quantities"].push_back({{"name", v.name}, {"dim", v.dim.exps}});
    if (p.dependent)
        j["dependent"] = *p.dependent;
    else
        j["dependent"] = nullptr;
    if (p.kappa)
        j["kappa"] = *p.kappa;
    else
        j["kappa"] = "auto";
    j["mode"] = to_string(p.mode);
    j["symmetric"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : p.symmetries)
        j["symmetric"].push_back({u, v});
    j["substitutions"] = nlohmann::ordered_json::array();
    for (const auto& def : p.substitutions) {
        nlohmann::ordered_json f = nlohmann::ordered_json::array();
        for (const auto& factor : def.factors)
            f.push_back({{"name", factor.name}, {"exp", factor.exp}});
        j["substitutions"].push_back(
            {{"name", def.name}, {"factors", std::move(f)}});
    }
    return j;
}

inline nlohmann::ordered_json equation_json(const EquationSystem& sys,
                                            const Equation& eq, size_t index) {
    const auto& names = sys.var_names;
    nlohmann::ordered_json j;
    j["index"] = index + 1;
    if (eq.psi.empty())
        j["psi"] = nullptr;
    else
        j["psi"] = eq.psi;
    j["solvable"] = eq.solvable;
    j["k0"] = eq.k0;
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (int m : eq.source)
        members.push_back(names[m]);
    j["members"] = std::move(members);
    j["k0j"] = eq.rhs_basis;
    j["lhs"] = eq.lhs;
    j["args"] = nlohmann::ordered_json::array();
    for (const auto& a : eq.args)
        j["args"].push_back({{"own", names[a.own]}, {"exps", a.exps}});
    j["assumptions"] = eq.assumptions;
    j["merged"] = eq.merged;
    j["text"] = equation_text(sys, eq);
    return j;
}

} // namespace detail

inline std::string render_text(const AnalysisReport& rep) {
    using detail::set_text;
    using detail::tuple_text;
    std::string out = "# piforge report\n# problem begin\n" +
                      render_problem(rep.original) + "# problem end\n";

    if (!rep.original.substitutions.empty()) {
        out += "\nsubstitutions applied (" +
               std::to_string(rep.original.substitutions.size()) + "):\n";
        for (const auto& def : rep.original.substitutions) {
            std::string mono;
            for (const auto& f : def.factors) {
                if (!mono.empty())
                    mono += ' ';
                mono += f.name;
                if (f.exp != 1)
                    mono += '^' + std::to_string(f.exp);
            }
            const int idx = rep.effective.index_of(def.name);
            out += "  " + def.name + " = " + mono + "  ->  " +
                   detail::dim_text(rep.effective.base_dims,
                                    rep.effective.vars[idx].dim) +
                   "\n";
        }
        std::string names;
        for (const auto& v : rep.effective.vars) {
            if (!names.empty())
                names += ", ";
            names += v.name;
        }
        out += "effective quantities: " + names + "\n";
    }

    out += "\nmode: " + to_string(rep.mode) + "\n";
    out += "rank: " + std::to_string(rep.rank) + "\n";

    if (rep.mode == Mode::unbalanced) {
        out += std::string("precomplete: ") + (rep.precomplete ? "yes" : "no") +
               "\n";
        if (rep.precomplete) {
            out += "canonical kappa: " + std::to_string(rep.kappa_canonical) +
                   "\n";
            out += "kappa: " + std::to_string(rep.kappa_used) +
                   (rep.kappa_auto ? " (auto)" : " (fixed)") + "\n";
        }

        const auto& names = rep.effective.var_names();
        if (!rep.precomplete) {
            out += "\nprebases (0):\n";
        } else if (rep.system) {
            const EquationSystem& sys = *rep.system;
            out += "\nprebases (" + std::to_string(sys.equations.size()) +
                   "):\n";
            for (size_t i = 0; i < sys.equations.size(); ++i) {
                const Equation& eq = sys.equations[i];
                out += "  (" + std::to_string(i + 1) + ") " +
                       set_text(names, eq.source) +
                       ": k0 = " + std::to_string(eq.k0) +
                       ", k0j = " + tuple_text(eq.rhs_basis) + "\n";
                for (const auto& a : eq.args) {
                    std::vector<i64> kj;
                    kj.reserve(eq.source.size());
                    for (int m : eq.source)
                        kj.push_back(-a.exps[m]);
                    out += "      " + names[a.own] +
                           ": k = " + std::to_string(a.exps[a.own]) +
                           ", kj = " + tuple_text(kj) + "\n";
                }
            }

            out += "\nequations (dependent " + names[sys.dependent] +
                   ", kappa " + std::to_string(sys.kappa) + "):\n";
            detail::equations_block(out, sys, "  ");
        }

        if (!rep.symmetry.empty()) {
            out += "\nclosed forms:\n";
            for (size_t i = 0; i < rep.symmetry.size(); ++i)
                out += "  (" + std::to_string(i + 1) + ") " +
                       detail::closed_form_line(rep.symmetry[i]) + "\n";
        }
    } else {
        out += "\nbalanced systems (" + std::to_string(rep.balanced.size()) +
               "):\n";
        for (const auto& sys : rep.balanced) {
            const int n_eq = static_cast<int>(sys.equations.size());
            out += "  system for " + sys.var_names[sys.dependent] + " (" +
                   std::to_string(n_eq) +
                   (n_eq == 1 ? " equation" : " equations");
            if (sys.raw_count != n_eq)
                out += ", " + std::to_string(sys.raw_count) + " raw";
            out += "):\n";
            detail::equations_block(out, sys, "    ");
        }
    }

    if (rep.matroid) {
        const MatroidSummary& ms = *rep.matroid;
        const auto& names = ms.matroid.var_names;
        out += "\nmatroid (rank " + std::to_string(ms.matroid.rank) + ", " +
               std::to_string(names.size()) + " variables):\n";

        out += "  bases (" + std::to_string(ms.basis_sets.size()) + "):\n";
        for (size_t i = 0; i < ms.basis_sets.size(); ++i)
            out += "    " + ms.table.basis_labels[i] + ": " +
                   set_text(names, ms.basis_sets[i]) + "\n";

        out += "  pseudocircuits (" + std::to_string(ms.pseudo_sets.size()) +
               "):\n";
        for (size_t i = 0; i < ms.pseudo_sets.size(); ++i)
            out += "    " + ms.table.pseudo_labels[i] + ": " +
                   set_text(names, ms.pseudo_sets[i]) +
                   "  pi = " + monomial_text(names, ms.pis[i].exps) + "\n";

        out += "  circuits (" + std::to_string(ms.circuit_sets.size()) +
               "):\n";
        for (const auto& c : ms.circuit_sets)
            out += "    " + set_text(names, c) + "\n";

        out += "  incidence table:\n";
        size_t name_w = 1;
        for (const auto& n : names)
            name_w = std::max(name_w, detail::utf8_len(n));
        std::string header = "    " + std::string(name_w, ' ');
        for (const auto& l : ms.table.basis_labels)
            header += "  " + l;
        header += "  |";
        for (const auto& l : ms.table.pseudo_labels)
            header += "  " + l;
        out += header + "\n";
        for (size_t v = 0; v < names.size(); ++v) {
            std::string row = "    " + detail::pad_to(names[v], name_w);
            for (size_t b = 0; b < ms.basis_sets.size(); ++b) {
                row += "  ";
                row += ms.table.in_basis(static_cast<int>(v),
                                         static_cast<int>(b))
                           ? '+'
                           : '-';
                for (size_t k = 1;
                     k < detail::utf8_len(ms.table.basis_labels[b]); ++k)
                    row += ' ';
            }
            row += "  |";
            for (size_t c = 0; c < ms.pseudo_sets.size(); ++c) {
                row += "  ";
                row += ms.table.in_pseudo(static_cast<int>(v),
                                          static_cast<int>(c))
                           ? '*'
                           : 'o';
                for (size_t k = 1;
                     k < detail::utf8_len(ms.table.pseudo_labels[c]); ++k)
                    row += ' ';
            }
            out += row + "\n";
        }
    }
    return out;
}

inline std::string render_structured(const AnalysisReport& rep) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["piforge"] = {{"format", "report"}, {"version", 1}};
    j["problem"] = detail::problem_json(rep.original);

    ordered_json effective;
    effective["quantities"] = ordered_json::array();
    for (const auto& v : rep.effective.vars)
        effective["quantities"].push_back(
            {{"name", v.name}, {"dim", v.dim.exps}});
    if (rep.effective.dependent)
        effective["dependent"] = *rep.effective.dependent;
    else
        effective["dependent"] = nullptr;
    j["effective"] = std::move(effective);

    j["mode"] = to_string(rep.mode);
    j["rank"] = rep.rank;

    if (rep.mode == Mode::unbalanced) {
        j["precomplete"] = rep.precomplete;
        if (rep.precomplete) {
            j["kappa"] = {{"policy", rep.kappa_auto ? "auto" : "fixed"},
                          {"canonical", rep.kappa_canonical},
                          {"used", rep.kappa_used}};
        } else {
            j["kappa"] = nullptr;
        }
        j["prebases"] = ordered_json::array();
        if (rep.system) {
            const EquationSystem& sys = *rep.system;
            const auto names = rep.effective.var_names();
            for (const auto& eq : sys.equations) {
                ordered_json pb;
                ordered_json members = ordered_json::array();
                for (int m : eq.source)
                    members.push_back(names[m]);
                pb["members"] = std::move(members);
                pb["k0"] = eq.k0;
                pb["k0j"] = eq.rhs_basis;
                pb["others"] = ordered_json::array();
                for (const auto& a : eq.args) {
                    std::vector<i64> kj;
                    for (int m : eq.source)
                        kj.push_back(-a.exps[m]);
                    pb["others"].push_back({{"name", names[a.own]},
                                            {"k", a.exps[a.own]},
                                            {"kj", kj}});
                }
                j["prebases"].push_back(std::move(pb));
            }
            ordered_json eqs;
            eqs["dependent"] = names[sys.dependent];
            eqs["kappa"] = sys.kappa;
            eqs["list"] = ordered_json::array();
            for (size_t i = 0; i < sys.equations.size(); ++i)
                eqs["list"].push_back(
                    detail::equation_json(sys, sys.equations[i], i));
            j["equations"] = std::move(eqs);
        } else {
            j["equations"] = nullptr;
        }
    } else {
        j["balanced"] = ordered_json::array();
        for (const auto& sys : rep.balanced) {
            ordered_json b;
            b["variable"] = sys.var_names[sys.dependent];
            b["raw_count"] = sys.raw_count;
            b["equations"] = ordered_json::array();
            for (size_t i = 0; i < sys.equations.size(); ++i)
                b["equations"].push_back(
                    detail::equation_json(sys, sys.equations[i], i));
            j["balanced"].push_back(std::move(b));
        }
    }

    if (rep.matroid) {
        const MatroidSummary& ms = *rep.matroid;
        const auto& names = ms.matroid.var_names;
        ordered_json m;
        m["rank"] = ms.matroid.rank;
        m["variables"] = names;
        m["bases"] = ordered_json::array();
        for (size_t i = 0; i < ms.basis_sets.size(); ++i) {
            ordered_json members = ordered_json::array();
            for (int q : ms.basis_sets[i])
                members.push_back(names[q]);
            m["bases"].push_back({{"label", ms.table.basis_labels[i]},
                                  {"members", std::move(members)}});
        }
        m["pseudocircuits"] = ordered_json::array();
        for (size_t i = 0; i < ms.pseudo_sets.size(); ++i) {
            ordered_json members = ordered_json::array();
            for (int q : ms.pseudo_sets[i])
                members.push_back(names[q]);
            m["pseudocircuits"].push_back(
                {{"label", ms.table.pseudo_labels[i]},
                 {"members", std::move(members)},
                 {"pi",
                  {{"exps", ms.pis[i].exps},
                   {"text", monomial_text(names, ms.pis[i].exps)}}}});
        }
        m["circuits"] = ordered_json::array();
        for (const auto& c : ms.circuit_sets) {
            ordered_json members = ordered_json::array();
            for (int q : c)
                members.push_back(names[q]);
            m["circuits"].push_back(std::move(members));
        }
        m["incidence"] = ordered_json::array();
        for (size_t v = 0; v < names.size(); ++v) {
            ordered_json row;
            row["variable"] = names[v];
            std::string bm, pm;
            for (size_t b = 0; b < ms.basis_sets.size(); ++b)
                bm += ms.table.in_basis(static_cast<int>(v),
                                        static_cast<int>(b))
                          ? '+'
                          : '-';
            for (size_t c = 0; c < ms.pseudo_sets.size(); ++c)
                pm += ms.table.in_pseudo(static_cast<int>(v),
                                         static_cast<int>(c))
                          ? '*'
                          : 'o';
            row["bases"] = bm;
            row["pseudocircuits"] = pm;
            m["incidence"].push_back(std::move(row));
        }
        j["matroid"] = std::move(m);
    }

    if (!rep.symmetry.empty()) {
        j["closed_forms"] = ordered_json::array();
        for (const auto& o : rep.symmetry) {
            ordered_json cf;
            cf["pair"] = {o.u, o.v};
            if (o.ok) {
                cf["status"] = "ok";
                cf["template"] = o.form.template_used;
                cf["statement"] = o.form.statement;
            } else {
                cf["status"] = "error";
                cf["error"] = o.error;
            }
            j["closed_forms"].push_back(std::move(cf));
        }
    }
    return j.dump(2) + "\n";
}

} // namespace piforge
