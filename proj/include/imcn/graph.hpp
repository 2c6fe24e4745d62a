#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "imcn/common.hpp"

namespace imcn {

// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphFormat { dimacs, edgelist };

// Immutable undirected simple graph on nodes 0..n-1 with a canonical
// (lexicographically sorted) edge list. Construction validates: no
// self-loops, no duplicate edges, endpoints in range.
class Graph {
public:
    explicit Graph(int n, std::vector<std::pair<int, int>> edges = {});

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }

    // Index into edges() for {u,v} in either order, or nullopt.
    std::optional<int> edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

    // Connected components; blocks ordered by smallest member, nodes ascending.
    std::vector<std::vector<int>> components() const;

    // True iff the graph contains no cycle (every component is a tree).
    bool is_forest() const;

    std::string serialize(GraphFormat format) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Parses the given format; errors carry the offending line number.
// DIMACS: "p edge <n> <m>" header, "e <u> <v>" lines, 1-indexed.
// Edge list: "<n> <m>" first, then m lines "<u> <v>", 0-indexed.
// Lines starting with 'c' or '#' are comments in both formats.
Graph parse_graph(std::string_view text, GraphFormat format);

// DIMACS if the first significant line starts with "p ", else edge list.
Graph parse_graph_auto(std::string_view text);

}  // namespace imcn
