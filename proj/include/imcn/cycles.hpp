#pragma once

#include <string>
#include <utility>
#include <vector>

#include "imcn/common.hpp"
#include "imcn/graph.hpp"
#include "imcn/orientation.hpp"

namespace imcn {

// Simple cycle in canonical form: nodes[0] is the minimum id on the cycle and
// nodes[1] < nodes.back(), which fixes both rotation and reflection. The
// stored order defines the cycle's forward traversal direction.
struct SimpleCycle {
    std::vector<int> nodes;

    int size() const { return static_cast<int>(nodes.size()); }
    std::string str() const;  // "v0,v1,..."

    friend bool operator==(const SimpleCycle&, const SimpleCycle&) = default;
    friend auto operator<=>(const SimpleCycle&, const SimpleCycle&) = default;
};

// Validates a cyclic node sequence against g (distinct nodes, length >= 3,
// consecutive pairs adjacent, wraparound included) and canonicalizes it.
SimpleCycle canonical_cycle(const Graph& g, std::vector<int> nodes);

// All simple cycles, canonical, sorted lexicographically. Anchored DFS: from
// each node a, extend only through nodes > a and close back to a, so every
// cycle surfaces exactly at its minimum node; the nodes[1] < nodes.back()
// rule drops the mirrored copy.
std::vector<SimpleCycle> enumerate_simple_cycles(const Graph& g, const Caps& caps = {});

// Per-step lookup for direction counting: step i crosses edge[i], and
// forward[i] says the traversal runs low endpoint to high endpoint there.
struct CycleSteps {
    std::vector<int> edge;
    std::vector<bool> forward;
};
CycleSteps cycle_steps(const Graph& g, const SimpleCycle& c);

// (m_plus, m_minus): edges directed with the stored traversal vs against it.
std::pair<int, int> direction_counts(const SimpleCycle& c, const Orientation& o);
std::pair<int, int> direction_counts(const CycleSteps& steps, const std::vector<bool>& dirs);

}  // namespace imcn
