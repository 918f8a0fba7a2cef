#include "rainbow/cli.hpp"

#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/serialize.hpp"
#include "rainbow/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace rainbow::cli {

namespace {

    struct CommandConfig {
        std::string input;
        std::string inline_graph;
        std::string coloring_path;
        std::string format = "json";
        std::string gen_format = "text";
        bool dot = false;
        std::int64_t budget = 20'000'000;
        std::uint64_t seed = 1;
        int max_colors = -1;
        int k = 2;
        int max_n = 6;
        int n = 8;
        int count = 10;
        bool enumerate = false;
        bool ear_route = false;
    };

    /// Input failure: maps to exit status 2.
    struct InputFailure : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    auto read_text(const std::string & path) -> std::string
    {
        if (path == "-") {
            std::stringstream buffer;
            buffer << std::cin.rdbuf();
            return buffer.str();
        }
        std::ifstream in(path);
        if (! in)
            throw InputFailure("cannot open " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto load_graph(const CommandConfig & config) -> Graph
    {
        if (! config.inline_graph.empty())
            return parse_edge_list(config.inline_graph);
        if (config.input.empty())
            throw InputFailure("no input graph given");
        return parse_edge_list(read_text(config.input));
    }

    auto load_coloring(const std::string & path) -> EdgeColoring
    {
        try {
            return coloring_from_json(json::parse(read_text(path)));
        }
        catch (const json::exception & e) {
            throw Error(ErrorCode::MalformedColoring, e.what());
        }
    }

    auto is_input_error(ErrorCode code) -> bool
    {
        switch (code) {
            case ErrorCode::MalformedHeader:
            case ErrorCode::MalformedLine:
            case ErrorCode::VertexOutOfRange:
            case ErrorCode::DuplicateEdge:
            case ErrorCode::LoopEdge:
            case ErrorCode::NotTwoConnected:
            case ErrorCode::NoEvenCycle:
            case ErrorCode::UncoloredEdge:
            case ErrorCode::Disconnected:
            case ErrorCode::InfeasibleParameters:
            case ErrorCode::MalformedColoring:
                return true;
            default:
                return false;
        }
    }

    void write_report_text(std::ostream & out, const RainbowReport & r)
    {
        out << "rainbow_connected " << (r.rainbow_connected ? "yes" : "no") << "\n";
        out << "noncomplete " << (r.noncomplete ? "yes" : "no") << "\n";
        out << "K " << r.color_count << "\n";
        for (const auto & [u, v] : r.exceptional_pairs)
            out << "exceptional " << u << " " << v << "\n";
        for (const auto & [u, v] : r.failing_pairs)
            out << "failing " << u << " " << v << "\n";
    }

    auto run_color(const CommandConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        auto g = load_graph(config);
        ConstructOptions options;
        options.try_hamiltonian = ! config.ear_route;
        options.hamiltonian_budget.nodes = config.budget;
        options.ear_budget.nodes = config.budget;

        ConstructionResult result;
        try {
            result = construct_coloring(g, options);
        }
        catch (const Error & e) {
            if (e.code() == ErrorCode::ConstructionUnverified) {
                err << "construction failed verification: " << e.what() << "\n";
                return PropertyViolation;
            }
            throw;
        }

        const int bound = (g.order() + 1) / 2;
        const int k = result.coloring.color_count();
        const auto format = config.dot ? std::string("dot") : config.format;
        if (format == "dot")
            out << coloring_to_dot(g, result.coloring);
        else if (format == "text") {
            out << "n " << g.order() << "\n";
            out << "bound " << bound << "\n";
            out << "route " << (result.trace.hamiltonian_route ? "hamiltonian" : "ear_decomposition") << "\n";
            for (const auto & [e, color] : result.coloring.assignment())
                out << "edge " << e.u << " " << e.v << " " << color << "\n";
            for (std::size_t i = 0; i < result.trace.steps.size(); ++i)
                out << "step " << i << " " << to_string(result.trace.steps[i].rule) << "\n";
            write_report_text(out, result.report);
        }
        else {
            json doc{
                {"coloring", coloring_to_json(g.order(), result.coloring)},
                {"trace", trace_to_json(result.trace)},
                {"report", report_to_json(result.report)},
                {"bound", bound},
            };
            out << doc.dump() << "\n";
        }
        return k <= bound && result.report.rainbow_connected ? Success : PropertyViolation;
    }

    auto run_verify(const CommandConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        auto g = load_graph(config);
        auto c = load_coloring(config.coloring_path);
        auto report = is_rainbow_connected(g, c);
        if (config.format == "text")
            write_report_text(out, report);
        else
            out << report_to_json(report).dump() << "\n";
        if (! report.rainbow_connected) {
            auto [u, v] = report.failing_pairs.front();
            err << "no rainbow path between " << u << " and " << v << "\n";
            return PropertyViolation;
        }
        return Success;
    }

    auto run_exact(const CommandConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        auto g = load_graph(config);
        try {
            auto result = exact_rc(g, config.max_colors, SearchBudget{config.budget});
            if (config.format == "text")
                out << "rc " << result.rc << "\nnodes " << result.explored.nodes << "\n";
            else
                out << json{{"rc", result.rc},
                               {"witness", coloring_to_json(g.order(), result.witness)},
                               {"nodes", result.explored.nodes},
                               {"lower_bound", result.explored.lower_bound}}
                                .dump()
                    << "\n";
            return Success;
        }
        catch (const Error & e) {
            if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::MaxColorsExceeded)
                throw;
            err << e.what() << "\n";
            out << json{{"rc", "unknown"}}.dump() << "\n";
            return Inconclusive;
        }
    }

    auto run_gen(const CommandConfig & config, std::ostream & out) -> int
    {
        auto corpus = config.enumerate ? build_corpus(CorpusMode::Enumerate, config.n, config.k, 0, 0)
                                       : build_corpus(CorpusMode::Random, config.n, config.k, config.count, config.seed);
        for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
            const auto & entry = corpus.graphs[i];
            if (config.gen_format == "json")
                out << json{{"graph", to_edge_list(entry.graph)}, {"provenance", entry.provenance}}.dump() << "\n";
            else
                out << "# graph " << i << " " << entry.provenance << "\n" << to_edge_list(entry.graph);
        }
        return Success;
    }

    auto run_scan(const CommandConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        if (config.k < 1)
            throw InputFailure("--k must be at least 1");
        if (config.max_n < 1 || config.max_n > 7)
            throw InputFailure("--max-n must be between 1 and 7 (exhaustive enumeration)");

        int violations = 0, unknowns = 0, total = 0;
        for (int n = std::max(config.k + 1, 2); n <= config.max_n; ++n) {
            auto corpus = build_corpus(CorpusMode::Enumerate, n, config.k, 0, 0);
            auto report = conjecture_scan(config.k, config.max_n, corpus, SearchBudget{config.budget});
            for (const auto & record : report.records) {
                out << scan_record_to_json(record).dump() << "\n";
                ++total;
            }
            violations += report.violations;
            unknowns += report.unknowns;
        }
        err << "scan k=" << config.k << " max-n=" << config.max_n << ": " << total << " graphs, " << violations
            << " violations, " << unknowns << " unknown\n";
        if (violations > 0)
            return PropertyViolation;
        return unknowns > 0 ? Inconclusive : Success;
    }

} // namespace

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Rainbow colorings of 2-connected graphs with at most ceil(n/2) colors"};
    app.require_subcommand(1);
    CommandConfig config;

    auto add_format = [](CLI::App * sub, std::string & target, std::vector<std::string> allowed) {
        sub->add_option("--format", target, "Output format")->check(CLI::IsMember(std::move(allowed)));
    };
    auto add_graph_input = [&](CLI::App * sub) {
        sub->add_option("graph", config.input, "Edge-list file ('-' for stdin)");
        sub->add_option("--inline", config.inline_graph, "Edge-list text given directly");
    };
    auto positive_budget = CLI::PositiveNumber;

    auto color = app.add_subcommand("color", "Construct and verify a rainbow coloring");
    add_graph_input(color);
    add_format(color, config.format, {"json", "text", "dot"});
    color->add_flag("--dot", config.dot, "Shorthand for --format dot");
    color->add_flag("--ear-route", config.ear_route, "Skip the Hamiltonian route");
    color->add_option("--budget", config.budget, "Node budget for exact searches")->check(positive_budget);

    auto verify = app.add_subcommand("verify", "Check a coloring for rainbow connectivity");
    add_graph_input(verify);
    verify->add_option("coloring", config.coloring_path, "Coloring JSON file")->required();
    add_format(verify, config.format, {"json", "text"});

    auto exact = app.add_subcommand("exact", "Exact rainbow connection number");
    add_graph_input(exact);
    add_format(exact, config.format, {"json", "text"});
    exact->add_option("--max-colors", config.max_colors, "Largest color count to try");
    exact->add_option("--budget", config.budget, "Node budget")->check(positive_budget);

    auto gen = app.add_subcommand("gen", "Generate or enumerate graphs");
    gen->add_option("--n", config.n, "Vertex count")->check(CLI::PositiveNumber);
    gen->add_option("--count", config.count, "Number of random graphs")->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", config.seed, "Random seed");
    gen->add_option("--k", config.k, "Required vertex connectivity");
    gen->add_flag("--enumerate", config.enumerate, "All graphs up to isomorphism (n <= 7)");
    add_format(gen, config.gen_format, {"json", "text"});

    auto scan = app.add_subcommand("scan", "Measure rc against ceil(n/k) over enumerated k-connected graphs");
    scan->add_option("--k", config.k, "Connectivity");
    scan->add_option("--max-n", config.max_n, "Largest vertex count");
    scan->add_option("--budget", config.budget, "Node budget per graph")->check(positive_budget);

    std::vector<const char *> argv{"rainbow"};
    for (const auto & a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? Success : InputError;
    }
    try {
        if (color->parsed())
            return run_color(config, out, err);
        if (verify->parsed())
            return run_verify(config, out, err);
        if (exact->parsed())
            return run_exact(config, out, err);
        if (gen->parsed())
            return run_gen(config, out);
        return run_scan(config, out, err);
    }
    catch (const InputFailure & e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::BudgetExceeded)
            return Inconclusive;
        return is_input_error(e.code()) ? InputError : PropertyViolation;
    }
}

} // namespace rainbow::cli
