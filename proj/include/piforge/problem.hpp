// piforge: analysis input — the problem model, its file format, and the
// canonical renderer.
//
// A problem file is line oriented, UTF-8, with `#` starting a comment:
//
//   dimensions L T M              # exactly once, first directive
//   quantity t T                  # name + dimension expression
//   quantity g L T^-2
//   quantity theta 1              # `1` is the identity dimension
//   dependent t
//   kappa auto                    # or a positive integer (default: auto)
//   mode unbalanced               # or balanced (default: unbalanced)
//   symmetric M m                 # repeatable
//   substitute E' = eps E^2      # repeatable
//
// Identifiers are any whitespace-free run without `#`, `^`, or `=`, so Greek
// names (ℓ, θ, ε) work as-is. All cross-references are validated here, with
// file:line:col positions on every failure.
#pragma once

#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "qspace.hpp"
#include "zlinalg.hpp"

namespace piforge {

enum class Mode { unbalanced, balanced };

inline std::string to_string(Mode m) {
    return m == Mode::unbalanced ? "unbalanced" : "balanced";
}

struct Variable {
    std::string name;
    DimExp dim;

    friend bool operator==(const Variable&, const Variable&) = default;
};

struct SubstitutionFactor {
    std::string name;
    i64 exp = 1;

    friend bool operator==(const SubstitutionFactor&,
                           const SubstitutionFactor&) = default;
};

struct SubstitutionDef {
    std::string name; // the composite variable being introduced
    std::vector<SubstitutionFactor> factors;

    friend bool operator==(const SubstitutionDef&,
                           const SubstitutionDef&) = default;
};

struct Problem {
    std::vector<std::string> base_dims;
    std::vector<Variable> vars;
    std::optional<std::string> dependent;
    std::optional<i64> kappa; // nullopt = auto
    std::vector<std::pair<std::string, std::string>> symmetries;
    std::vector<SubstitutionDef> substitutions;
    Mode mode = Mode::unbalanced;

    int index_of(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name == name)
                return static_cast<int>(i);
        return -1;
    }

    int dependent_index() const {
        return dependent ? index_of(*dependent) : -1;
    }

    std::vector<std::string> var_names() const {
        std::vector<std::string> out;
        out.reserve(vars.size());
        for (const auto& v : vars)
            out.push_back(v.name);
        return out;
    }

    // The full dimensional matrix: one column per variable.
    IntMatrix matrix() const {
        std::vector<std::vector<i64>> cols;
        cols.reserve(vars.size());
        for (const auto& v : vars)
            cols.push_back(v.dim.exps);
        return IntMatrix::from_columns(cols);
    }

    friend bool operator==(const Problem&, const Problem&) = default;
};

namespace detail {

struct Token {
    std::string text;
    int col = 1; // 1-based byte column of the token start
};

// Whitespace-separated tokens; '=' always stands alone ('^' stays inside a
// token, since it splits name from exponent within a single factor).
inline std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '=') {
            toks.push_back({"=", static_cast<int>(i) + 1});
            ++i;
            continue;
        }
        const size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
               line[i] != '\r' && line[i] != '=')
            ++i;
        toks.push_back(
            {line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return toks;
}

inline bool parse_i64(const std::string& s, i64& out) {
    if (s.empty())
        return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (*first == '+')
        ++first; // from_chars accepts '-' but not '+'
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace detail

// Parse a problem file. `filename` is used only for error positions.
inline Problem parse_problem(const std::string& text,
                             const std::string& filename = "<input>") {
    using detail::Token;

    Problem p;
    std::map<std::string, int> dim_index;
    std::map<std::string, int> var_index;
    std::set<std::string> taken_names; // quantities + substitution names

    struct Ref {
        std::string name;
        int line = 0, col = 0;
    };
    std::optional<Ref> dependent_ref;
    std::vector<std::pair<Ref, Ref>> symmetric_refs;
    struct SubRef {
        Ref name;
        std::vector<Ref> factor_refs;
    };
    std::vector<SubRef> sub_refs;

    bool saw_dimensions = false, saw_dependent = false, saw_kappa = false,
         saw_mode = false;

    auto fail = [&](int line, int col, const std::string& msg) -> void {
        throw ParseError(filename, line, col, msg);
    };
    auto check_name = [&](const Token& t, int line, const char* what) {
        if (t.text == "=" || t.text.find('^') != std::string::npos)
            fail(line, t.col, std::string("invalid ") + what + " '" + t.text +
                                  "'");
        if (t.text == "1")
            fail(line, t.col,
                 std::string("'1' is reserved and cannot be a ") + what);
    };

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string line = text.substr(
            pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        const std::vector<Token> toks = detail::tokenize_line(line);
        if (toks.empty())
            continue;

        const Token& head = toks[0];
        auto need = [&](size_t i, const char* what) -> const Token& {
            if (i >= toks.size())
                fail(line_no, static_cast<int>(line.size()) + 1,
                     std::string("missing ") + what);
            return toks[i];
        };
        auto no_extra = [&](size_t n) {
            if (toks.size() > n)
                fail(line_no, toks[n].col,
                     "unexpected token '" + toks[n].text + "'");
        };

        if (!saw_dimensions && head.text != "dimensions")
            fail(line_no, head.col,
                 "expected 'dimensions' as the first directive");

        if (head.text == "dimensions") {
            if (saw_dimensions)
                fail(line_no, head.col, "duplicate 'dimensions' directive");
            saw_dimensions = true;
            if (toks.size() < 2)
                fail(line_no, static_cast<int>(line.size()) + 1,
                     "missing dimension names");
            for (size_t i = 1; i < toks.size(); ++i) {
                check_name(toks[i], line_no, "dimension name");
                if (dim_index.count(toks[i].text))
                    fail(line_no, toks[i].col,
                         "duplicate dimension '" + toks[i].text + "'");
                dim_index[toks[i].text] = static_cast<int>(p.base_dims.size());
                p.base_dims.push_back(toks[i].text);
            }
        } else if (head.text == "quantity") {
            const Token& name = need(1, "quantity name");
            check_name(name, line_no, "quantity name");
            if (taken_names.count(name.text))
                fail(line_no, name.col, "duplicate name '" + name.text + "'");
            if (toks.size() < 3)
                fail(line_no, static_cast<int>(line.size()) + 1,
                     "missing dimension expression");
            DimExp dim = DimExp::identity(p.base_dims.size());
            for (size_t i = 2; i < toks.size(); ++i) {
                const Token& f = toks[i];
                if (f.text == "1")
                    continue; // identity factor
                std::string base = f.text;
                i64 e = 1;
                if (const size_t caret = f.text.find('^');
                    caret != std::string::npos) {
                    base = f.text.substr(0, caret);
                    const std::string etext = f.text.substr(caret + 1);
                    if (base.empty() || !detail::parse_i64(etext, e))
                        fail(line_no, f.col,
                             "malformed factor '" + f.text + "'");
                }
                auto it = dim_index.find(base);
                if (it == dim_index.end())
                    fail(line_no, f.col, "unknown dimension '" + base + "'");
                dim.exps[it->second] =
                    checked_add(dim.exps[it->second], e);
            }
            var_index[name.text] = static_cast<int>(p.vars.size());
            taken_names.insert(name.text);
            p.vars.push_back({name.text, std::move(dim)});
        } else if (head.text == "dependent") {
            if (saw_dependent)
                fail(line_no, head.col, "duplicate 'dependent' directive");
            saw_dependent = true;
            const Token& name = need(1, "quantity name");
            no_extra(2);
            dependent_ref = Ref{name.text, line_no, name.col};
        } else if (head.text == "kappa") {
            if (saw_kappa)
                fail(line_no, head.col, "duplicate 'kappa' directive");
            saw_kappa = true;
            const Token& v = need(1, "kappa value");
            no_extra(2);
            if (v.text == "auto") {
                p.kappa.reset();
            } else {
                i64 k = 0;
                if (!detail::parse_i64(v.text, k) || k < 1)
                    fail(line_no, v.col,
                         "kappa must be 'auto' or a positive integer");
                p.kappa = k;
            }
        } else if (head.text == "mode") {
            if (saw_mode)
                fail(line_no, head.col, "duplicate 'mode' directive");
            saw_mode = true;
            const Token& v = need(1, "mode value");
            no_extra(2);
            if (v.text == "unbalanced")
                p.mode = Mode::unbalanced;
            else if (v.text == "balanced")
                p.mode = Mode::balanced;
            else
                fail(line_no, v.col,
                     "mode must be 'unbalanced' or 'balanced'");
        } else if (head.text == "symmetric") {
            const Token& u = need(1, "quantity name");
            const Token& v = need(2, "quantity name");
            no_extra(3);
            check_name(u, line_no, "quantity name");
            check_name(v, line_no, "quantity name");
            if (u.text == v.text)
                fail(line_no, v.col,
                     "symmetric pair must name two distinct quantities");
            symmetric_refs.push_back({Ref{u.text, line_no, u.col},
                                      Ref{v.text, line_no, v.col}});
        } else if (head.text == "substitute") {
            const Token& name = need(1, "substitution name");
            check_name(name, line_no, "substitution name");
            if (taken_names.count(name.text))
                fail(line_no, name.col, "duplicate name '" + name.text + "'");
            const Token& eq = need(2, "'='");
            if (eq.text != "=")
                fail(line_no, eq.col, "expected '=' after substitution name");
            if (toks.size() < 4)
                fail(line_no, static_cast<int>(line.size()) + 1,
                     "missing substitution monomial");
            SubstitutionDef def;
            def.name = name.text;
            SubRef ref;
            ref.name = Ref{name.text, line_no, name.col};
            for (size_t i = 3; i < toks.size(); ++i) {
                const Token& f = toks[i];
                std::string base = f.text;
                i64 e = 1;
                if (const size_t caret = f.text.find('^');
                    caret != std::string::npos) {
                    base = f.text.substr(0, caret);
                    const std::string etext = f.text.substr(caret + 1);
                    if (base.empty() || !detail::parse_i64(etext, e))
                        fail(line_no, f.col,
                             "malformed factor '" + f.text + "'");
                }
                if (base == "1" || base == "=")
                    fail(line_no, f.col,
                         "invalid quantity name '" + base + "'");
                if (e == 0)
                    fail(line_no, f.col,
                         "zero exponent in substitution monomial");
                def.factors.push_back({base, e});
                ref.factor_refs.push_back(Ref{base, line_no, f.col});
            }
            taken_names.insert(def.name);
            p.substitutions.push_back(std::move(def));
            sub_refs.push_back(std::move(ref));
        } else {
            fail(line_no, head.col, "unknown directive '" + head.text + "'");
        }
    }

    if (!saw_dimensions)
        throw ParseError(filename, 1, 1, "missing 'dimensions' directive");

    // Cross-reference checks, in declaration order of the referring lines.
    for (const auto& sub : sub_refs)
        for (const auto& f : sub.factor_refs)
            if (!var_index.count(f.name))
                throw ParseError(filename, f.line, f.col,
                                 "substitution references unknown quantity '" +
                                     f.name + "'");
    if (dependent_ref && !var_index.count(dependent_ref->name))
        throw ParseError(filename, dependent_ref->line, dependent_ref->col,
                         "unknown quantity '" + dependent_ref->name + "'");
    if (dependent_ref)
        p.dependent = dependent_ref->name;

    // A substitution's dimension is computable from its factors, so symmetric
    // declarations may reference composite names.
    auto dim_of_name = [&](const Ref& r) -> DimExp {
        if (var_index.count(r.name))
            return p.vars[var_index[r.name]].dim;
        for (const auto& def : p.substitutions) {
            if (def.name != r.name)
                continue;
            DimExp d = DimExp::identity(p.base_dims.size());
            for (const auto& f : def.factors)
                d = dim_mul(d, dim_pow(p.vars[var_index[f.name]].dim, f.exp));
            return d;
        }
        throw ParseError(filename, r.line, r.col,
                         "unknown quantity '" + r.name + "'");
    };
    for (const auto& [u, v] : symmetric_refs) {
        const DimExp du = dim_of_name(u);
        const DimExp dv = dim_of_name(v);
        if (!(du == dv))
            throw ParseError(filename, u.line, u.col,
                             "dimension mismatch in symmetric pair '" +
                                 u.name + "' and '" + v.name + "'");
        p.symmetries.emplace_back(u.name, v.name);
    }

    return p;
}

namespace detail {

inline std::string dim_text(const std::vector<std::string>& base_dims,
                            const DimExp& d) {
    std::string out;
    for (size_t i = 0; i < d.exps.size(); ++i) {
        if (d.exps[i] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += base_dims[i];
        if (d.exps[i] != 1)
            out += '^' + std::to_string(d.exps[i]);
    }
    return out.empty() ? "1" : out;
}

} // namespace detail

// Canonical text form: parsing it back yields an equal Problem.
inline std::string render_problem(const Problem& p) {
    std::string out = "dimensions";
    for (const auto& d : p.base_dims)
        out += ' ' + d;
    out += '\n';
    for (const auto& v : p.vars)
        out += "quantity " + v.name + ' ' +
               detail::dim_text(p.base_dims, v.dim) + '\n';
    if (p.dependent)
        out += "dependent " + *p.dependent + '\n';
    out += "kappa " + (p.kappa ? std::to_string(*p.kappa)
                               : std::string("auto")) +
           '\n';
    out += "mode " + to_string(p.mode) + '\n';
    for (const auto& [u, v] : p.symmetries)
        out += "symmetric " + u + ' ' + v + '\n';
    for (const auto& def : p.substitutions) {
        out += "substitute " + def.name + " =";
        for (const auto& f : def.factors) {
            out += ' ' + f.name;
            if (f.exp != 1)
                out += '^' + std::to_string(f.exp);
        }
        out += '\n';
    }
    return out;
}

} // namespace piforge
