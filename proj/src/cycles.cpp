#include "imcn/cycles.hpp"

#include <algorithm>
#include <sstream>

namespace imcn {

std::string SimpleCycle::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (i) out << ',';
        out << nodes[i];
    }
    return out.str();
}

SimpleCycle canonical_cycle(const Graph& g, std::vector<int> nodes) {
    const size_t len = nodes.size();
    if (len < 3) throw input_error("cycle needs at least 3 nodes");
    for (int v : nodes)
        if (v < 0 || v >= g.node_count())
            throw input_error("cycle node " + std::to_string(v) + " out of range");
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error("cycle repeats a node");
    for (size_t i = 0; i < len; ++i) {
        const int a = nodes[i];
        const int b = nodes[(i + 1) % len];
        if (!g.has_edge(a, b))
            throw input_error("cycle uses non-edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

    const auto min_it = std::min_element(nodes.begin(), nodes.end());
    std::rotate(nodes.begin(), min_it, nodes.end());
    if (nodes[1] > nodes.back()) {
        std::reverse(nodes.begin() + 1, nodes.end());
    }
    return SimpleCycle{std::move(nodes)};
}

namespace {

struct CycleSearch {
    const Graph& g;
    const Caps& caps;
    std::vector<SimpleCycle>& out;
    std::vector<int> path;
    std::vector<bool> on_path;
    int anchor = 0;

    void dfs(int v) {
        for (int w : g.neighbors(v)) {
            if (w == anchor && path.size() >= 3) {
                if (path[1] < path.back()) {
                    if (static_cast<long long>(out.size()) >= caps.max_cycles)
                        throw cap_exceeded("simple cycle count exceeds cap " +
                                           std::to_string(caps.max_cycles));
                    out.push_back(SimpleCycle{path});
                }
            } else if (w > anchor && !on_path[static_cast<size_t>(w)]) {
                on_path[static_cast<size_t>(w)] = true;
                path.push_back(w);
                dfs(w);
                path.pop_back();
                on_path[static_cast<size_t>(w)] = false;
            }
        }
    }
};

}  // namespace

std::vector<SimpleCycle> enumerate_simple_cycles(const Graph& g, const Caps& caps) {
    std::vector<SimpleCycle> out;
    CycleSearch search{g, caps, out, {}, std::vector<bool>(static_cast<size_t>(g.node_count()), false), 0};
    for (int a = 0; a < g.node_count(); ++a) {
        search.anchor = a;
        search.path.assign(1, a);
        search.on_path[static_cast<size_t>(a)] = true;
        search.dfs(a);
        search.on_path[static_cast<size_t>(a)] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycleSteps cycle_steps(const Graph& g, const SimpleCycle& c) {
    CycleSteps steps;
    const size_t len = c.nodes.size();
    steps.edge.reserve(len);
    steps.forward.reserve(len);
    for (size_t i = 0; i < len; ++i) {
        const int a = c.nodes[i];
        const int b = c.nodes[(i + 1) % len];
        const auto idx = g.edge_index(a, b);
        if (!idx)
            throw input_error("cycle uses non-edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        steps.edge.push_back(*idx);
        steps.forward.push_back(a < b);
    }
    return steps;
}

std::pair<int, int> direction_counts(const CycleSteps& steps, const std::vector<bool>& dirs) {
    int plus = 0;
    for (size_t i = 0; i < steps.edge.size(); ++i)
        if (dirs[static_cast<size_t>(steps.edge[i])] == steps.forward[i]) ++plus;
    return {plus, static_cast<int>(steps.edge.size()) - plus};
}

std::pair<int, int> direction_counts(const SimpleCycle& c, const Orientation& o) {
    return direction_counts(cycle_steps(o.graph(), c), o.dirs());
}

}  // namespace imcn
