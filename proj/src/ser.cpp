#include "imcn/ser.hpp"

#include <map>

namespace imcn {

Orientation ser_step(const Orientation& o) {
    const Graph& g = o.graph();
    if (g.edge_count() < 1) throw input_error("graph has no edges");

    std::vector<bool> is_sink(static_cast<size_t>(g.node_count()), true);
    for (int e = 0; e < g.edge_count(); ++e) is_sink[static_cast<size_t>(o.tail_of(e))] = false;

    std::vector<bool> dirs = o.dirs();
    for (int e = 0; e < g.edge_count(); ++e)
        if (is_sink[static_cast<size_t>(o.head_of(e))]) dirs[static_cast<size_t>(e)] = !dirs[static_cast<size_t>(e)];

    if (!is_acyclic(g, dirs))
        throw invariant_violation("sink reversal produced a directed cycle");
    return Orientation(g, std::move(dirs));
}

SerRun ser_run(const Orientation& o, long long max_steps) {
    const int m = o.graph().edge_count();
    if (max_steps < 0) max_steps = m < 62 ? 2 * (1LL << m) : (1LL << 62);

    SerRun run;
    run.states.push_back(o);
    std::map<std::vector<bool>, int> first_seen;
    first_seen[o.dirs()] = 0;

    for (long long step = 1; step <= max_steps; ++step) {
        Orientation next = ser_step(run.states.back());
        const auto it = first_seen.find(next.dirs());
        if (it != first_seen.end()) {
            run.states.push_back(std::move(next));
            run.tail_start = it->second;
            run.period = static_cast<int>(step) - it->second;
            break;
        }
        first_seen[next.dirs()] = static_cast<int>(step);
        run.states.push_back(std::move(next));
        if (step == max_steps)
            throw cap_exceeded("no repeated state within " + std::to_string(max_steps) + " steps");
    }

    const Graph& g = o.graph();
    run.ops_per_node.assign(static_cast<size_t>(g.node_count()), 0);
    for (int s = run.tail_start; s < run.tail_start + run.period; ++s)
        for (int v : run.states[static_cast<size_t>(s)].sinks())
            ++run.ops_per_node[static_cast<size_t>(v)];
    return run;
}

Rational concurrency(const SerRun& run) {
    const Graph& g = run.initial().graph();
    if (g.components().size() != 1) throw input_error("concurrency needs a connected graph");
    if (g.is_forest()) throw input_error("concurrency is undefined on forests");

    const int r = run.ops_per_node.front();
    for (int ops : run.ops_per_node)
        if (ops != r)
            throw invariant_violation("nodes turned sink at different rates within one period");
    return Rational(r, run.period);
}

std::pair<Rational, Orientation> best_concurrency(const Graph& g, const Caps& caps,
                                                  ScanStats* stats) {
    if (g.components().size() != 1) throw input_error("concurrency needs a connected graph");
    if (g.is_forest()) throw input_error("concurrency is undefined on forests");
    if (g.edge_count() > caps.max_edges)
        throw cap_exceeded("edge count " + std::to_string(g.edge_count()) + " exceeds cap " +
                           std::to_string(caps.max_edges));
    if (stats) *stats = {};

    std::optional<Rational> best;
    std::vector<bool> best_dirs;
    for_each_acyclic(g, [&](const std::vector<bool>& dirs) {
        if (stats) ++stats->orientations;
        const Rational value = concurrency(ser_run(Orientation(g, dirs)));
        if (!best || value > *best) {
            best = value;
            best_dirs = dirs;
        }
        return true;
    });
    return {*best, Orientation(g, std::move(best_dirs))};
}

}  // namespace imcn
