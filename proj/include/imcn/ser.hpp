#pragma once

#include <utility>
#include <vector>

#include "imcn/common.hpp"
#include "imcn/graph.hpp"
#include "imcn/orientation.hpp"
#include "imcn/rational.hpp"

namespace imcn {

// One run of the sink-reversal dynamics: iterate until a state repeats, then
// split the trajectory into a transient prefix and a periodic tail.
struct SerRun {
    std::vector<Orientation> states;  // states[0] is the initial orientation
    int tail_start = 0;               // first index inside the periodic tail
    int period = 1;                   // states[tail_start + period] == states[tail_start]
    std::vector<int> ops_per_node;    // sink turns per node within one period

    const Orientation& initial() const { return states.front(); }
};

// All sinks reverse their incident edges at once. Sinks are never adjacent,
// so the flips cannot collide; the result stays acyclic.
Orientation ser_step(const Orientation& o);

// max_steps < 0 picks 2 * 2^|E|, enough to meet any repeat.
SerRun ser_run(const Orientation& o, long long max_steps = -1);

// Sink turns per node divided by the period. Demands a connected graph with
// a cycle; anything else degenerates (per-component rates drift apart, and
// forests collapse onto alternation).
Rational concurrency(const SerRun& run);

// Highest concurrency over every acyclic orientation, with the
// lexicographically least witness.
std::pair<Rational, Orientation> best_concurrency(const Graph& g, const Caps& caps = {},
                                                  ScanStats* stats = nullptr);

}  // namespace imcn
