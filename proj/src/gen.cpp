#include "imcn/gen.hpp"

#include <algorithm>
#include <limits>

#include "imcn/common.hpp"

namespace imcn {

std::uint32_t rng_below(std::mt19937& rng, std::uint32_t bound) {
    if (bound == 0) throw input_error("empty draw range");
    const std::uint32_t limit = std::numeric_limits<std::uint32_t>::max() / bound * bound;
    while (true) {
        const std::uint32_t x = rng();
        if (x < limit) return x % bound;
    }
}

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

void shuffle_pairs(std::vector<std::pair<int, int>>& pairs, std::mt19937& rng) {
    for (size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng_below(rng, static_cast<std::uint32_t>(i))]);
}

}  // namespace

Graph gen_forest(int n, std::mt19937& rng) {
    if (n < 2) throw input_error("forest generation needs at least 2 nodes");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        // One in five nodes starts a new tree.
        if (rng_below(rng, 5) == 0) continue;
        edges.emplace_back(static_cast<int>(rng_below(rng, static_cast<std::uint32_t>(v))), v);
    }
    if (edges.empty()) edges.emplace_back(0, 1);
    return Graph(n, std::move(edges));
}

Graph gen_random(int n, int m, std::mt19937& rng) {
    if (n < 1) throw input_error("graph needs at least 1 node");
    auto pairs = all_pairs(n);
    if (m < 0 || m > static_cast<int>(pairs.size()))
        throw input_error("edge count " + std::to_string(m) + " is out of range for " +
                          std::to_string(n) + " nodes");
    shuffle_pairs(pairs, rng);
    pairs.resize(static_cast<size_t>(m));
    return Graph(n, std::move(pairs));
}

Graph gen_connected_cyclic(int n, int m, std::mt19937& rng) {
    if (n < 3) throw input_error("a connected cyclic graph needs at least 3 nodes");
    const int max_edges = n * (n - 1) / 2;
    if (m < n || m > max_edges)
        throw input_error("edge count must lie in [" + std::to_string(n) + ", " +
                          std::to_string(max_edges) + "]");

    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng_below(rng, static_cast<std::uint32_t>(v))), v);

    std::vector<std::pair<int, int>> rest;
    for (auto& [u, v] : all_pairs(n)) {
        const bool used = std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
            return (e.first == u && e.second == v) || (e.first == v && e.second == u);
        });
        if (!used) rest.emplace_back(u, v);
    }
    shuffle_pairs(rest, rng);
    for (int i = 0; i < m - (n - 1); ++i) edges.push_back(rest[static_cast<size_t>(i)]);
    return Graph(n, std::move(edges));
}

}  // namespace imcn
