// piforge command-line interface.
//
// Usage:
//   piforge analyze <file> [--mode unbalanced|balanced] [--kappa N|auto]
//                          [--format text|structured] [--table]
//                          [--symmetry [<u> <v>]]
//
// Exit codes:
//   0  analysis complete
//   1  I/O or structural error (message on stderr)
//   2  parse error (file:line:col: message on stderr)
//   3  problem is not precomplete (report still printed)
//   4  fixed kappa leaves every prebasis unsolvable (report still printed)

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <piforge/piforge.hpp>

namespace {

int run_analyze(const std::string& path, const std::string& mode_arg,
                const std::string& kappa_arg, const std::string& format,
                bool table, bool symmetry,
                const std::vector<std::string>& pair) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "piforge: cannot open '" << path << "'\n";
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    piforge::AnalysisOptions opts;
    if (!mode_arg.empty()) {
        if (mode_arg == "unbalanced")
            opts.mode = piforge::Mode::unbalanced;
        else if (mode_arg == "balanced")
            opts.mode = piforge::Mode::balanced;
        else {
            std::cerr << "piforge: --mode must be 'unbalanced' or "
                         "'balanced', got '"
                      << mode_arg << "'\n";
            return 1;
        }
    }
    if (!kappa_arg.empty()) {
        opts.kappa_given = true;
        if (kappa_arg != "auto") {
            piforge::i64 value = 0;
            const char* first = kappa_arg.data();
            const char* last = first + kappa_arg.size();
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr != last || value < 1) {
                std::cerr << "piforge: --kappa must be 'auto' or a positive "
                             "integer, got '"
                          << kappa_arg << "'\n";
                return 1;
            }
            opts.kappa = value;
        }
    }
    if (format != "text" && format != "structured") {
        std::cerr << "piforge: --format must be 'text' or 'structured', got '"
                  << format << "'\n";
        return 1;
    }
    opts.table = table;
    opts.symmetry = symmetry || !pair.empty();
    if (pair.size() == 2)
        opts.extra_pair = std::make_pair(pair[0], pair[1]);

    try {
        const piforge::Problem p = piforge::parse_problem(buf.str(), path);
        const piforge::AnalysisReport rep = piforge::analyze(p, opts);
        if (format == "structured")
            std::cout << piforge::render_structured(rep);
        else
            std::cout << piforge::render_text(rep);
        if (rep.mode == piforge::Mode::unbalanced && !rep.precomplete)
            return 3;
        if (rep.kappa_insufficient)
            return 4;
        return 0;
    } catch (const piforge::ParseError& e) {
        std::cerr << "piforge: " << e.what() << "\n";
        return 2;
    } catch (const piforge::Error& e) {
        std::cerr << "piforge: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimensional-analysis engine"};
    app.require_subcommand(1);

    std::string path, mode_arg, kappa_arg, format = "text";
    bool table = false, symmetry = false;
    std::vector<std::string> pair;

    CLI::App* analyze = app.add_subcommand("analyze", "analyze a problem file");
    analyze->add_option("file", path, "problem description file")->required();
    analyze->add_option("--mode", mode_arg,
                        "override the mode: unbalanced or balanced");
    analyze->add_option("--kappa", kappa_arg,
                        "override kappa: a positive integer or 'auto'");
    analyze->add_option("--format", format, "output format: text (default) "
                                            "or structured");
    analyze->add_flag("--table", table, "include the matroid summary");
    analyze
        ->add_option("--symmetry", pair,
                     "combine symmetric pairs into closed forms; optionally "
                     "takes two quantity names to add as a pair")
        ->expected(0, 2);

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        const auto* opt = analyze->get_option("--symmetry");
        if (opt->count() > 0) {
            // A bare `--symmetry` records one empty placeholder value.
            if (pair.size() == 1 && pair[0].empty())
                pair.clear();
            if (pair.size() == 1) {
                std::cerr << "piforge: --symmetry takes zero or two quantity "
                             "names\n";
                return 1;
            }
            symmetry = true;
        }
        return run_analyze(path, mode_arg, kappa_arg, format, table, symmetry,
                           pair);
    }
    return 0;
}
