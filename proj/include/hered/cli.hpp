#ifndef HERED_CLI_HPP
#define HERED_CLI_HPP

#include "hered/extremal.hpp"
#include "hered/family.hpp"
#include "hered/graph_io.hpp"
#include "hered/lambda.hpp"
#include "hered/report.hpp"
#include "hered/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hered {

enum class Command { classify, lambda, extremal, verify };
enum class OutputFormat { json, csv };

inline const char *command_name(Command c) {
    switch (c) {
    case Command::classify: return "classify";
    case Command::lambda: return "lambda";
    case Command::extremal: return "extremal";
    case Command::verify: return "verify";
    }
    return "?";
}

/// Directory used for reports when no -o is given; stdout if unset.
inline constexpr const char *kOutputDirEnv = "HERED_OUTPUT_DIR";

struct RunConfig {
    Command command = Command::classify;
    std::vector<std::string> family_spec;
    std::string graph_spec;        // lambda: name or graph6
    std::string graph_file;        // lambda: edge-list file, alternative to graph_spec
    std::vector<double> alphas;
    int n_max = kDefaultSearchOrder;
    std::uint64_t seed = kDefaultSeed;
    int restarts = LambdaOptions{}.random_restarts;
    double tolerance = LambdaOptions{}.tolerance;
    std::optional<std::string> output_path;
    OutputFormat output_format = OutputFormat::json;
    int threads = 1;
    std::string corpus = "all";    // verify: all | random | path to graph6 lines
    std::size_t count = 1000;      // verify --corpus random
    std::optional<std::string> help_text;  // set when --help was asked for
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline UsageError flag_error(const std::string &flag, const std::string &what) {
    return UsageError(flag + ": " + what);
}

inline void add_common(CLI::App *sub, RunConfig &c) {
    sub->add_option("--seed", c.seed, "seed for randomized restarts");
    sub->add_option("--restarts", c.restarts, "random restarts per lambda evaluation");
    sub->add_option("--tol", c.tolerance, "optimizer tolerance, in (0, 1e-2]");
    sub->add_option("-o,--output", c.output_path, "report file (default: stdout or $HERED_OUTPUT_DIR)");
    sub->add_option("--format", c.output_format, "json or csv")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"json", OutputFormat::json}, {"csv", OutputFormat::csv}}));
    sub->add_option("--threads", c.threads, "worker threads for enumeration and suites");
}

inline void validate(RunConfig &c, bool n_given) {
    if (c.command == Command::classify || c.command == Command::extremal) {
        if (c.family_spec.empty()) throw flag_error("-F", "at least one forbidden graph is required");
    }
    for (const auto &s : c.family_spec) {
        try {
            if (parse_graph(s).order() == 0) throw flag_error("-F", "the null graph cannot be forbidden");
        } catch (const ParseError &e) {
            throw flag_error("-F", e.what());
        } catch (const GraphError &e) {
            throw flag_error("-F", e.what());
        }
    }
    if (c.command == Command::lambda) {
        if (c.graph_spec.empty() == c.graph_file.empty())
            throw flag_error("-g", "give exactly one of -g or --graph-file");
        if (!c.graph_spec.empty()) {
            try {
                if (parse_graph(c.graph_spec).order() == 0) throw flag_error("-g", "graph has no vertices");
            } catch (const ParseError &e) {
                throw flag_error("-g", e.what());
            } catch (const GraphError &e) {
                throw flag_error("-g", e.what());
            }
        }
    }
    if (c.alphas.empty()) {
        if (c.command == Command::verify)
            c.alphas = {1.25, 1.5, 2.0, 3.0, 10.0};
        else if (c.command != Command::classify)
            c.alphas = {2.0};
    }
    for (double a : c.alphas)
        if (!(a >= 1.0) || !std::isfinite(a)) throw flag_error("--alpha", "alpha must be a finite real >= 1, got " + format_real(a));
    if (!n_given && c.command == Command::verify) c.n_max = 6;
    if (c.n_max < 0 || c.n_max > kMaxSearchOrder)
        throw flag_error("-n", "order must lie in [0, " + std::to_string(kMaxSearchOrder) + "], got " +
                                   std::to_string(c.n_max));
    if (c.command == Command::verify && c.corpus == "random" && c.n_max < 1)
        throw flag_error("-n", "random graphs need at least one vertex");
    if (!(c.tolerance > 0.0 && c.tolerance <= 1e-2)) throw flag_error("--tol", "tolerance must lie in (0, 1e-2]");
    if (c.restarts < 0) throw flag_error("--restarts", "must be >= 0");
    if (c.threads < 1) throw flag_error("--threads", "must be >= 1");
}

}  // namespace detail

/// Arguments exclude the program name. Throws UsageError naming the flag.
inline RunConfig parse_args(const std::vector<std::string> &args) {
    RunConfig c;
    CLI::App app("Extremal parameters of hereditary graph properties", "hered");
    app.require_subcommand(1);

    auto *classify = app.add_subcommand("classify", "omega, beta, finiteness and limit densities of Her(F)");
    classify->add_option("-F,--family", c.family_spec, "forbidden graphs (names or graph6)");
    detail::add_common(classify, c);

    auto *lambda = app.add_subcommand("lambda", "lambda^(alpha) of a single graph");
    lambda->add_option("-g,--graph", c.graph_spec, "graph name or graph6 string");
    lambda->add_option("--graph-file", c.graph_file, "edge-list file");
    lambda->add_option("--alpha", c.alphas, "one or more alpha >= 1");
    detail::add_common(lambda, c);

    auto *extremal = app.add_subcommand("extremal", "exhaustive ex and lambda search over Her(F)_n");
    extremal->add_option("-F,--family", c.family_spec, "forbidden graphs (names or graph6)");
    extremal->add_option("--alpha", c.alphas, "one or more alpha >= 1");
    auto *n_ext = extremal->add_option("-n,--n", c.n_max, "largest order searched");
    detail::add_common(extremal, c);

    auto *verify = app.add_subcommand("verify", "check the inequality suites over a graph corpus");
    verify->add_option("-F,--family", c.family_spec, "family for the edge-density check (default: built-in battery)");
    verify->add_option("--alpha", c.alphas, "one or more alpha >= 1");
    auto *n_ver = verify->add_option("-n,--n", c.n_max, "largest order (all) or order (random)");
    verify->add_option("--corpus", c.corpus, "all | random | path to a file of graph6 lines");
    verify->add_option("--count", c.count, "number of random graphs");
    detail::add_common(verify, c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        std::string text;
        for (auto *sub : app.get_subcommands()) text = sub->help();
        c.help_text = text.empty() ? app.help() : text;
        return c;
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    if (classify->parsed()) c.command = Command::classify;
    if (lambda->parsed()) c.command = Command::lambda;
    if (extremal->parsed()) c.command = Command::extremal;
    if (verify->parsed()) c.command = Command::verify;
    detail::validate(c, n_ext->count() + n_ver->count() > 0);
    return c;
}

inline RunConfig parse_args(int argc, const char *const *argv) {
    return parse_args(std::vector<std::string>(argv + (argc > 0 ? 1 : 0), argv + argc));
}

namespace detail {

inline LambdaOptions lambda_options(const RunConfig &c) {
    LambdaOptions o;
    o.random_restarts = c.restarts;
    o.seed = c.seed;
    o.tolerance = c.tolerance;
    return o;
}

inline std::vector<Graph> read_corpus_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw flag_error("--corpus", "cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const ParseError &e) {
            throw flag_error("--corpus", path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

inline void emit(const RunConfig &c, const std::string &text, std::ostream &out, std::ostream &err) {
    std::optional<std::filesystem::path> path;
    if (c.output_path) {
        path = *c.output_path;
    } else if (const char *dir = std::getenv(kOutputDirEnv); dir && *dir) {
        std::filesystem::create_directories(dir);
        path = std::filesystem::path(dir) /
               (std::string(command_name(c.command)) + (c.output_format == OutputFormat::json ? ".json" : ".csv"));
    }
    if (!path) {
        out << text;
        return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw flag_error("-o", "cannot write " + path->string());
    f << text;
    err << "wrote " << path->string() << '\n';
}

inline std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

}  // namespace detail

/// 1 if any claim has a violation, else 0.
inline int verification_status(const std::vector<VerificationOutcome> &outcomes) {
    for (const auto &o : outcomes)
        if (!o.passed()) return 1;
    return 0;
}

/// Executes a parsed configuration. Returns 0 on success, 1 when a
/// verification check fails, 2 on a usage error.
inline int run(const RunConfig &c, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    if (c.help_text) {
        out << *c.help_text;
        return 0;
    }
    const bool json = c.output_format == OutputFormat::json;
    const LambdaOptions lopt = detail::lambda_options(c);
    SearchOptions sopt;
    sopt.threads = c.threads;
    try {
        switch (c.command) {
        case Command::classify: {
            auto f = GraphFamily::parse(c.family_spec);
            auto cls = classify(f);
            detail::emit(c, json ? detail::dump(classification_json(f, cls)) : classification_csv(f, cls), out, err);
            return 0;
        }
        case Command::lambda: {
            Graph g = c.graph_file.empty() ? parse_graph(c.graph_spec) : [&] {
                std::ifstream in(c.graph_file);
                if (!in) throw detail::flag_error("--graph-file", "cannot open " + c.graph_file);
                return from_edge_list(in);
            }();
            std::vector<LambdaResult> results;
            for (double a : c.alphas) results.push_back(lambda_alpha(g, a, lopt));
            detail::emit(c, json ? detail::dump(lambda_report_json(g, results)) : lambda_csv(results), out, err);
            return 0;
        }
        case Command::extremal: {
            auto f = GraphFamily::parse(c.family_spec);
            auto rep = build_report(f, c.n_max, c.alphas, lopt, sopt);
            detail::emit(c, json ? detail::dump(search_report_json(rep)) : search_report_csv(rep), out, err);
            return report_checks_pass(rep) ? 0 : 1;
        }
        case Command::verify: {
            std::vector<Graph> corpus;
            if (c.corpus == "all")
                corpus = all_graphs_corpus(c.n_max);
            else if (c.corpus == "random")
                corpus = random_graphs_corpus(c.count, c.n_max, c.seed);
            else
                corpus = detail::read_corpus_file(c.corpus);
            SuiteOptions so;
            so.lambda = lopt;
            so.seed = c.seed;
            so.threads = c.threads;
            if (!c.family_spec.empty()) so.kns_families = {GraphFamily::parse(c.family_spec)};
            so.kns_n_max = std::min(c.n_max, so.kns_n_max);
            auto outcomes = run_suite(corpus, c.alphas, so);
            detail::emit(c,
                         json ? detail::dump(verification_json(outcomes, c.corpus, corpus.size(), c.alphas))
                              : verification_csv(outcomes),
                         out, err);
            for (const auto &o : outcomes)
                for (const auto &v : o.violations) err << o.claim_id << " violated: " << v.trace << '\n';
            return verification_status(outcomes);
        }
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

/// parse_args + run, with usage errors reported on err.
inline int cli_main(const std::vector<std::string> &args, std::ostream &out = std::cout,
                    std::ostream &err = std::cerr) {
    RunConfig c;
    try {
        c = parse_args(args);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    }
    return run(c, out, err);
}

}  // namespace hered

#endif
