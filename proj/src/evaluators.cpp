#include "imcn/evaluators.hpp"

#include <algorithm>

namespace imcn {

namespace {

// Score of one orientation over precomputed cycle steps, with optional
// pruning: once the running max reaches stop_at the caller cannot improve,
// so the scan aborts and reports nothing. The running max only grows, which
// keeps pruning sound.
std::optional<std::pair<Rational, int>> score_dirs(const std::vector<CycleSteps>& steps,
                                                   const std::vector<int>& sizes,
                                                   const std::vector<bool>& dirs,
                                                   const std::optional<Rational>& stop_at) {
    Rational best(0, 1);
    int argmax = -1;
    for (size_t c = 0; c < steps.size(); ++c) {
        const auto [plus, minus] = direction_counts(steps[c], dirs);
        const Rational ratio(sizes[c], std::min(plus, minus));
        if (argmax < 0 || ratio > best) {
            best = ratio;
            argmax = static_cast<int>(c);
            if (stop_at && best >= *stop_at) return std::nullopt;
        }
    }
    return std::make_pair(best, argmax);
}

}  // namespace

std::pair<Rational, SimpleCycle> orientation_score(const Graph& g, const Orientation& o,
                                                   const std::vector<SimpleCycle>& cycles) {
    if (cycles.empty()) throw input_error("orientation_score needs at least one cycle");
    std::vector<CycleSteps> steps;
    std::vector<int> sizes;
    steps.reserve(cycles.size());
    for (const SimpleCycle& c : cycles) {
        steps.push_back(cycle_steps(g, c));
        sizes.push_back(c.size());
    }
    const auto scored = score_dirs(steps, sizes, o.dirs(), std::nullopt);
    return {scored->first, cycles[static_cast<size_t>(scored->second)]};
}

IntWitness chi_int_star(const Graph& g, const Caps& caps, ScanStats* stats) {
    if (g.edge_count() < 1) throw input_error("graph has no edges");
    if (stats) *stats = {};

    if (g.is_forest()) {
        // Forest rule: value 2 regardless of structure; no cycle to blame.
        std::vector<bool> dirs(static_cast<size_t>(g.edge_count()), false);
        return IntWitness{Rational(2, 1), Orientation(g, std::move(dirs)), std::nullopt, std::nullopt};
    }

    if (g.edge_count() > caps.max_edges)
        throw cap_exceeded("edge count " + std::to_string(g.edge_count()) + " exceeds cap " +
                           std::to_string(caps.max_edges));
    const std::vector<SimpleCycle> cycles = enumerate_simple_cycles(g, caps);
    if (stats) stats->cycles = static_cast<long long>(cycles.size());

    std::vector<CycleSteps> steps;
    std::vector<int> sizes;
    steps.reserve(cycles.size());
    for (const SimpleCycle& c : cycles) {
        steps.push_back(cycle_steps(g, c));
        sizes.push_back(c.size());
    }

    std::optional<Rational> best;
    std::vector<bool> best_dirs;
    int best_cycle = -1;
    for_each_acyclic(g, [&](const std::vector<bool>& dirs) {
        if (stats) ++stats->orientations;
        const auto scored = score_dirs(steps, sizes, dirs, best);
        if (scored && (!best || scored->first < *best)) {
            best = scored->first;
            best_dirs = dirs;
            best_cycle = scored->second;
        }
        return true;
    });

    const SimpleCycle& critical = cycles[static_cast<size_t>(best_cycle)];
    const auto [plus, minus] =
        direction_counts(steps[static_cast<size_t>(best_cycle)], best_dirs);
    return IntWitness{*best, Orientation(g, std::move(best_dirs)), critical, std::min(plus, minus)};
}

ChiWitness chi_via_orientations(const Graph& g, const Caps& caps, ScanStats* stats) {
    if (g.edge_count() > caps.max_edges)
        throw cap_exceeded("edge count " + std::to_string(g.edge_count()) + " exceeds cap " +
                           std::to_string(caps.max_edges));
    if (stats) *stats = {};

    int best = -1;
    std::vector<bool> best_dirs;
    for_each_acyclic(g, [&](const std::vector<bool>& dirs) {
        if (stats) ++stats->orientations;
        const std::vector<int> f = path_counts_from(to_digraph(g, dirs));
        const int l = *std::max_element(f.begin(), f.end());
        if (best < 0 || l < best) {
            best = l;
            best_dirs = dirs;
        }
        return true;
    });
    return ChiWitness{best, Orientation(g, std::move(best_dirs))};
}

}  // namespace imcn
