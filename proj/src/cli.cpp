#include "imcn/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "imcn/evaluators.hpp"
#include "imcn/gen.hpp"
#include "imcn/lexproduct.hpp"
#include "imcn/oracle.hpp"
#include "imcn/ser.hpp"

namespace imcn {

namespace {

using ordered_json = nlohmann::ordered_json;

struct GlobalOpts {
    bool json = false;
    bool timing = false;
    int cap_edges = 20;
    long long cap_cycles = 1'000'000;
    unsigned seed = 0;

    Caps caps() const {
        Caps c;
        c.max_edges = cap_edges;
        c.max_cycles = cap_cycles;
        return c;
    }
};

// Collects one result record and prints it once, as text or as a single
// JSON document. Without --timing the bytes depend only on input and flags.
class Output {
public:
    Output(const GlobalOpts& opts, std::ostream& out)
        : opts_(opts), out_(out), start_(std::chrono::steady_clock::now()) {}

    void emit(ordered_json j, std::string text) {
        if (opts_.timing) {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start_)
                                .count();
            j["elapsed_ms"] = ms;
            text += "elapsed_ms: " + std::to_string(ms) + "\n";
        }
        if (opts_.json)
            out_ << j.dump() << "\n";
        else
            out_ << text;
    }

private:
    const GlobalOpts& opts_;
    std::ostream& out_;
    std::chrono::steady_clock::time_point start_;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw input_error("cannot read file '" + path + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

Graph load_graph(const std::string& path, std::istream& in) {
    return parse_graph_auto(read_input(path, in));
}

ordered_json coloring_json(const KTupleColoring& c) {
    ordered_json j;
    j["k"] = c.k;
    j["palette"] = c.palette;
    j["interleaved"] = c.interleaved;
    j["colors"] = c.colors;
    return j;
}

void run_analyze(const GlobalOpts& opts, std::ostream& out, std::istream& in,
                 const std::string& file) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);
    ScanStats stats;
    const IntWitness w = chi_int_star(g, opts.caps(), &stats);
    const ChiWitness cw = chi_via_orientations(g, opts.caps());

    ordered_json j;
    j["n"] = g.node_count();
    j["m"] = g.edge_count();
    j["forest"] = g.is_forest();
    j["chi_int_star"] = w.value.str();
    j["witness_orientation"] = w.orientation.str();
    if (w.critical_cycle) j["critical_cycle"] = w.critical_cycle->str();
    if (w.suggested_k) j["suggested_k"] = *w.suggested_k;
    j["chi"] = cw.chi;
    j["chi_witness"] = cw.orientation.str();
    j["orientations_scanned"] = stats.orientations;
    j["cycles"] = stats.cycles;

    std::ostringstream text;
    text << "graph: n=" << g.node_count() << " m=" << g.edge_count() << "\n";
    text << "forest: " << (g.is_forest() ? "true" : "false") << "\n";
    text << "chi_int_star: " << w.value.str() << "\n";
    text << "witness_orientation: " << w.orientation.str() << "\n";
    if (w.critical_cycle) text << "critical_cycle: " << w.critical_cycle->str() << "\n";
    if (w.suggested_k) text << "suggested_k: " << *w.suggested_k << "\n";
    text << "chi: " << cw.chi << "\n";
    text << "chi_witness: " << cw.orientation.str() << "\n";
    text << "orientations_scanned: " << stats.orientations << "\n";
    text << "cycles: " << stats.cycles << "\n";
    output.emit(std::move(j), text.str());
}

void run_chi(const GlobalOpts& opts, std::ostream& out, std::istream& in,
             const std::string& file) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);
    const ChiWitness cw = chi_via_orientations(g, opts.caps());

    ordered_json j;
    j["n"] = g.node_count();
    j["m"] = g.edge_count();
    j["chi"] = cw.chi;
    j["witness"] = cw.orientation.str();

    std::ostringstream text;
    text << "chi: " << cw.chi << "\n";
    text << "witness: " << cw.orientation.str() << "\n";
    output.emit(std::move(j), text.str());
}

void run_chi_int_k(const GlobalOpts& opts, std::ostream& out, std::istream& in,
                   const std::string& file, int k, bool with_coloring) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);
    const ChiIntK result = chi_int_k(g, k, opts.caps());

    ordered_json j;
    j["n"] = g.node_count();
    j["m"] = g.edge_count();
    j["k"] = k;
    j["chi_int_k"] = result.value;
    j["witness_orientation"] = result.witness.base.str();

    std::ostringstream text;
    text << "chi_int_k: " << result.value << "\n";
    text << "k: " << k << "\n";
    text << "witness_orientation: " << result.witness.base.str() << "\n";

    if (with_coloring) {
        const KTupleColoring coloring =
            derive_interleaved_coloring(g, result.witness.base, k, opts.caps());
        j["coloring"] = coloring_json(coloring);
        text << coloring.str();
    }
    output.emit(std::move(j), text.str());
}

void run_orientations(const GlobalOpts& opts, std::ostream& out, std::istream& in,
                      const std::string& file, bool list) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);

    ordered_json j;
    j["n"] = g.node_count();
    j["m"] = g.edge_count();
    std::ostringstream text;
    if (list) {
        const std::vector<Orientation> all = enumerate_acyclic(g, opts.caps());
        j["count"] = all.size();
        auto& items = j["orientations"] = ordered_json::array();
        text << "acyclic_orientations: " << all.size() << "\n";
        for (const Orientation& o : all) {
            items.push_back(o.str());
            text << o.str() << "\n";
        }
    } else {
        const long long count = count_acyclic(g, opts.caps());
        j["count"] = count;
        text << "acyclic_orientations: " << count << "\n";
    }
    output.emit(std::move(j), text.str());
}

void run_cycles(const GlobalOpts& opts, std::ostream& out, std::istream& in,
                const std::string& file, bool list) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);
    const std::vector<SimpleCycle> cycles = enumerate_simple_cycles(g, opts.caps());

    ordered_json j;
    j["n"] = g.node_count();
    j["m"] = g.edge_count();
    j["count"] = cycles.size();
    std::ostringstream text;
    text << "simple_cycles: " << cycles.size() << "\n";
    if (list) {
        auto& items = j["cycles"] = ordered_json::array();
        for (const SimpleCycle& c : cycles) {
            items.push_back(c.str());
            text << c.str() << "\n";
        }
    }
    output.emit(std::move(j), text.str());
}

void run_product(const GlobalOpts& opts, std::ostream& out, std::istream& in,
                 const std::string& file, int k) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);
    const ProductGraph p = build_product(g, k, opts.caps());

    ordered_json j;
    j["base_n"] = g.node_count();
    j["k"] = k;
    j["n"] = p.graph.node_count();
    j["m"] = p.graph.edge_count();
    auto& edges = j["edges"] = ordered_json::array();
    for (const Edge& e : p.graph.edges()) edges.push_back(ordered_json::array({e.u, e.v}));

    output.emit(std::move(j), p.graph.serialize(GraphFormat::edgelist));
}

void run_ser(const GlobalOpts& opts, std::ostream& out, std::istream& in,
             const std::string& file, const std::string& orientation_text, bool best,
             bool trace) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);

    if (!orientation_text.empty()) {
        const Orientation o = Orientation::from_string(g, orientation_text);
        const SerRun run = ser_run(o);
        const Rational value = concurrency(run);
        const int r = run.ops_per_node.front();

        ordered_json j;
        j["orientation"] = o.str();
        j["period"] = run.period;
        j["tail_start"] = run.tail_start;
        j["r"] = r;
        j["concurrency"] = value.str();

        std::ostringstream text;
        text << "orientation: " << o.str() << "\n";
        text << "period: " << run.period << "\n";
        text << "tail_start: " << run.tail_start << "\n";
        text << "r: " << r << "\n";
        text << "concurrency: " << value.str() << "\n";
        if (trace) {
            auto& states = j["trace"] = ordered_json::array();
            text << "trace:\n";
            for (size_t i = 0; i < run.states.size(); ++i) {
                states.push_back(run.states[i].str());
                text << i << ": " << run.states[i].str() << "\n";
            }
        }
        output.emit(std::move(j), text.str());
        return;
    }

    (void)best;  // default mode
    ScanStats stats;
    const auto [value, witness] = best_concurrency(g, opts.caps(), &stats);

    ordered_json j;
    j["best_concurrency"] = value.str();
    j["orientation"] = witness.str();
    j["orientations_scanned"] = stats.orientations;

    std::ostringstream text;
    text << "best_concurrency: " << value.str() << "\n";
    text << "orientation: " << witness.str() << "\n";
    text << "orientations_scanned: " << stats.orientations << "\n";
    output.emit(std::move(j), text.str());
}

void run_layer_check(const GlobalOpts& opts, std::ostream& out, std::istream& in,
                     const std::string& file, int k) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);
    if (g.edge_count() > opts.cap_edges)
        throw cap_exceeded("edge count " + std::to_string(g.edge_count()) + " exceeds cap " +
                           std::to_string(opts.cap_edges));

    long long orientations = 0;
    long long paths = 0;
    std::vector<std::string> violations;
    for_each_acyclic(g, [&](const std::vector<bool>& dirs) {
        ++orientations;
        const Orientation o(g, dirs);
        const LayerShapeReport report = check_layered_longest_paths(g, o, k, opts.caps());
        paths += report.paths_checked;
        for (const std::string& v : report.violations)
            violations.push_back("orientation " + o.str() + ": " + v);
        return true;
    });

    ordered_json j;
    j["k"] = k;
    j["orientations_checked"] = orientations;
    j["paths_checked"] = paths;
    j["violations"] = violations;
    j["ok"] = violations.empty();

    std::ostringstream text;
    text << "orientations_checked: " << orientations << "\n";
    text << "paths_checked: " << paths << "\n";
    text << "violations: " << violations.size() << "\n";
    for (const std::string& v : violations) text << "violation: " << v << "\n";
    text << "ok: " << (violations.empty() ? "true" : "false") << "\n";
    output.emit(std::move(j), text.str());
}

void run_gen(const GlobalOpts& opts, std::ostream& out, const std::string& type, int n, int m,
             bool has_m, const std::string& format) {
    Output output(opts, out);
    std::mt19937 rng(opts.seed);

    Graph g = [&]() {
        if (type == "forest") return gen_forest(n, rng);
        if (type == "random") {
            if (!has_m) throw input_error("--type random needs --m");
            return gen_random(n, m, rng);
        }
        if (type == "connected-cyclic") {
            if (!has_m) throw input_error("--type connected-cyclic needs --m");
            return gen_connected_cyclic(n, m, rng);
        }
        throw input_error("unknown --type '" + type + "'");
    }();

    GraphFormat fmt;
    if (format == "edgelist")
        fmt = GraphFormat::edgelist;
    else if (format == "dimacs")
        fmt = GraphFormat::dimacs;
    else
        throw input_error("unknown --format '" + format + "'");

    ordered_json j;
    j["type"] = type;
    j["seed"] = opts.seed;
    j["n"] = g.node_count();
    j["m"] = g.edge_count();
    auto& edges = j["edges"] = ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back(ordered_json::array({e.u, e.v}));

    output.emit(std::move(j), g.serialize(fmt));
}

void run_oracle_chi(const GlobalOpts& opts, std::ostream& out, std::istream& in,
                    const std::string& file) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);
    const int chi = oracle::brute_chromatic(g);
    ordered_json j;
    j["chi"] = chi;
    output.emit(std::move(j), std::to_string(chi) + "\n");
}

void run_oracle_chi_k(const GlobalOpts& opts, std::ostream& out, std::istream& in,
                      const std::string& file, int k, bool interleaved) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);
    const int value = oracle::brute_chi_k(g, k, interleaved);
    ordered_json j;
    j["k"] = k;
    j["interleaved"] = interleaved;
    j["value"] = value;
    output.emit(std::move(j), std::to_string(value) + "\n");
}

void run_oracle_cycles(const GlobalOpts& opts, std::ostream& out, std::istream& in,
                       const std::string& file, bool list) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);
    const std::vector<SimpleCycle> cycles = oracle::brute_cycles(g);
    ordered_json j;
    j["count"] = cycles.size();
    std::ostringstream text;
    text << cycles.size() << "\n";
    if (list) {
        auto& items = j["cycles"] = ordered_json::array();
        for (const SimpleCycle& c : cycles) {
            items.push_back(c.str());
            text << c.str() << "\n";
        }
    }
    output.emit(std::move(j), text.str());
}

void run_oracle_acyclic_count(const GlobalOpts& opts, std::ostream& out, std::istream& in,
                              const std::string& file) {
    Output output(opts, out);
    const Graph g = load_graph(file, in);
    const long long count = oracle::brute_acyclic_count(g);
    ordered_json j;
    j["count"] = count;
    output.emit(std::move(j), std::to_string(count) + "\n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact analyzer for interleaved multichromatic numbers of undirected graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_flag("--json", opts.json, "emit one JSON document instead of text");
    app.add_flag("--timing", opts.timing, "append elapsed milliseconds (output no longer reproducible)");
    app.add_option("--cap-edges", opts.cap_edges,
                   "refuse exhaustive orientation scans beyond this many edges (default 20)");
    app.add_option("--cap-cycles", opts.cap_cycles,
                   "abort cycle enumeration beyond this many cycles (default 1000000)");
    app.add_option("--seed", opts.seed, "random seed for gen (default 0)");

    std::string file;
    int k = 1;
    bool flag_coloring = false, flag_count = false, flag_list = false, flag_best = false,
         flag_trace = false, flag_interleaved = false;
    std::string orientation_text;
    std::string gen_type = "random", gen_format = "edgelist";
    int gen_n = 0, gen_m = 0;

    auto* analyze = app.add_subcommand("analyze", "full report: value, witnesses, chromatic number");
    analyze->add_option("file", file, "graph file, '-' for stdin")->required();
    analyze->callback([&] { run_analyze(opts, out, in, file); });

    auto* chi = app.add_subcommand("chi", "chromatic number via the orientation scan");
    chi->add_option("file", file, "graph file, '-' for stdin")->required();
    chi->callback([&] { run_chi(opts, out, in, file); });

    auto* cik = app.add_subcommand("chi-int-k", "interleaved k-tuple chromatic number");
    cik->add_option("file", file, "graph file, '-' for stdin")->required();
    cik->add_option("--k", k, "tuple size")->required();
    cik->add_flag("--coloring", flag_coloring, "emit the derived interleaved coloring");
    cik->callback([&] { run_chi_int_k(opts, out, in, file, k, flag_coloring); });

    auto* orient = app.add_subcommand("orientations", "acyclic orientation census");
    orient->add_option("file", file, "graph file, '-' for stdin")->required();
    auto* count_flag = orient->add_flag("--count", flag_count, "print the count only (default)");
    orient->add_flag("--list", flag_list, "list every orientation")->excludes(count_flag);
    orient->callback([&] { run_orientations(opts, out, in, file, flag_list); });

    auto* cyc = app.add_subcommand("cycles", "simple cycle census");
    cyc->add_option("file", file, "graph file, '-' for stdin")->required();
    cyc->add_flag("--list", flag_list, "list every cycle");
    cyc->callback([&] { run_cycles(opts, out, in, file, flag_list); });

    auto* product = app.add_subcommand("product", "lexicographic product with a complete graph");
    product->add_option("file", file, "graph file, '-' for stdin")->required();
    product->add_option("--k", k, "layer count")->required();
    product->callback([&] { run_product(opts, out, in, file, k); });

    auto* ser = app.add_subcommand("ser", "sink-reversal dynamics");
    ser->add_option("file", file, "graph file, '-' for stdin")->required();
    auto* ser_orient = ser->add_option("--orientation", orientation_text,
                                       "start state as 'u>v,...' over every edge");
    ser->add_flag("--best", flag_best, "scan all orientations for the highest concurrency (default)")
        ->excludes(ser_orient);
    ser->add_flag("--trace", flag_trace, "dump visited states (with --orientation)");
    ser->callback([&] { run_ser(opts, out, in, file, orientation_text, flag_best, flag_trace); });

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference computations");
    oracle_cmd->require_subcommand(1);
    oracle_cmd->fallthrough();

    auto* ochi = oracle_cmd->add_subcommand("chi", "chromatic number by backtracking");
    ochi->add_option("file", file, "graph file, '-' for stdin")->required();
    ochi->callback([&] { run_oracle_chi(opts, out, in, file); });

    auto* ochik = oracle_cmd->add_subcommand("chi-k", "k-tuple chromatic number by backtracking");
    ochik->add_option("file", file, "graph file, '-' for stdin")->required();
    ochik->add_option("--k", k, "tuple size")->required();
    ochik->add_flag("--interleaved", flag_interleaved, "require interleaved colorings");
    ochik->callback([&] { run_oracle_chi_k(opts, out, in, file, k, flag_interleaved); });

    auto* ocyc = oracle_cmd->add_subcommand("cycles", "simple cycles by subset permutation");
    ocyc->add_option("file", file, "graph file, '-' for stdin")->required();
    ocyc->add_flag("--list", flag_list, "list every cycle");
    ocyc->callback([&] { run_oracle_cycles(opts, out, in, file, flag_list); });

    auto* oac = oracle_cmd->add_subcommand("acyclic-count", "orientation count by directed DFS");
    oac->add_option("file", file, "graph file, '-' for stdin")->required();
    oac->callback([&] { run_oracle_acyclic_count(opts, out, in, file); });

    auto* l3 = app.add_subcommand("lemma3-check",
                                  "longest-path layer shape check over all orientations");
    l3->add_option("file", file, "graph file, '-' for stdin")->required();
    l3->add_option("--k", k, "layer count")->required();
    l3->callback([&] { run_layer_check(opts, out, in, file, k); });

    auto* gen = app.add_subcommand("gen", "deterministic random graph generation");
    gen->add_option("--type", gen_type, "forest | random | connected-cyclic")->required();
    gen->add_option("--n", gen_n, "node count")->required();
    auto* gen_m_opt = gen->add_option("--m", gen_m, "edge count (random, connected-cyclic)");
    gen->add_option("--format", gen_format, "edgelist (default) | dimacs");
    gen->callback(
        [&] { run_gen(opts, out, gen_type, gen_n, gen_m, gen_m_opt->count() > 0, gen_format); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("imcn");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const cap_exceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const invariant_violation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace imcn
