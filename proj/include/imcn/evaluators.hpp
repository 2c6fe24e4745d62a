#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "imcn/common.hpp"
#include "imcn/cycles.hpp"
#include "imcn/graph.hpp"
#include "imcn/orientation.hpp"
#include "imcn/rational.hpp"

namespace imcn {

// Result of the min-max scan. For forests the value is 2/1 by the forest
// rule, the orientation is the all-descending one and no cycle is critical.
// suggested_k is min{m_plus, m_minus} of the critical cycle: the tuple size
// at which the bound is expected to be attained.
struct IntWitness {
    Rational value;
    Orientation orientation;
    std::optional<SimpleCycle> critical_cycle;
    std::optional<int> suggested_k;
};

struct ChiWitness {
    int chi = 0;
    Orientation orientation;
};

// max over the given cycles of |cycle| / min{m_plus, m_minus} under o.
// Ties resolve to the canonically least cycle. Throws on an empty cycle set.
std::pair<Rational, SimpleCycle> orientation_score(const Graph& g, const Orientation& o,
                                                   const std::vector<SimpleCycle>& cycles);

// The interleaved multichromatic number: 2/1 for forests, otherwise the
// minimum of orientation_score over every acyclic orientation. Witness ties
// resolve to the lexicographically least direction vector.
IntWitness chi_int_star(const Graph& g, const Caps& caps = {}, ScanStats* stats = nullptr);

// Chromatic number as the shortest longest-directed-path node count over all
// acyclic orientations.
ChiWitness chi_via_orientations(const Graph& g, const Caps& caps = {}, ScanStats* stats = nullptr);

}  // namespace imcn
