#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "imcn/common.hpp"
#include "imcn/graph.hpp"

namespace imcn {

// Out-adjacency view of an oriented graph, nodes 0..n-1.
struct Digraph {
    int n = 0;
    std::vector<std::vector<int>> out;
};

struct DirectedPath {
    int count = 0;           // nodes on the path
    std::vector<int> nodes;  // lexicographically least among maximum-length witnesses
};

// One direction bit per canonical edge: true points the edge from its lower
// endpoint to its higher one. Construction rejects direction vectors whose
// induced digraph has a directed cycle.
class Orientation {
public:
    Orientation(Graph g, std::vector<bool> dirs);

    // Parses "u>v,..." pairs; every graph edge must appear exactly once.
    static Orientation from_string(const Graph& g, std::string_view text);

    const Graph& graph() const { return graph_; }
    const std::vector<bool>& dirs() const { return dirs_; }

    int tail_of(int e) const;  // the arrow leaves this endpoint
    int head_of(int e) const;  // the arrow enters this endpoint

    // Isolated nodes are both a source and a sink.
    std::vector<int> sources() const;
    std::vector<int> sinks() const;

    Digraph digraph() const;
    Orientation reversed() const;

    // "u>v,..." in canonical edge order.
    std::string str() const;

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    Graph graph_;
    std::vector<bool> dirs_;
};

// True iff the induced digraph has a topological order (Kahn peeling).
bool is_acyclic(const Graph& g, const std::vector<bool>& dirs);

// Visits every acyclic direction vector in lexicographic order, dirs[0] most
// significant and false < true. Return false from fn to stop early. Scans all
// 2^m candidates; callers enforce edge caps.
void for_each_acyclic(const Graph& g, const std::function<bool(const std::vector<bool>&)>& fn);

long long count_acyclic(const Graph& g, const Caps& caps = {});
std::vector<Orientation> enumerate_acyclic(const Graph& g, const Caps& caps = {});

Digraph to_digraph(const Graph& g, const std::vector<bool>& dirs);

// f(v) = nodes on the longest directed path starting at v.
// Throws input_error when d is cyclic.
std::vector<int> path_counts_from(const Digraph& d);

DirectedPath longest_path(const Digraph& d);

}  // namespace imcn
