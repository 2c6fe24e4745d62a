#include "imcn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "imcn/common.hpp"

namespace imcn::oracle {

namespace {

int max_clique_size(const Graph& g) {
    const int n = g.node_count();
    int best = n > 0 ? 1 : 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        bool clique = true;
        for (int u = 0; u < n && clique; ++u) {
            if (!(mask & (1u << u))) continue;
            for (int v = u + 1; v < n && clique; ++v)
                if ((mask & (1u << v)) && !g.has_edge(u, v)) clique = false;
        }
        if (clique) best = size;
    }
    return best;
}

std::vector<int> bfs_order(const Graph& g) {
    const int n = g.node_count();
    std::vector<int> order;
    std::vector<bool> visited(static_cast<size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (visited[static_cast<size_t>(start)]) continue;
        visited[static_cast<size_t>(start)] = true;
        std::vector<int> queue{start};
        for (size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            order.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!visited[static_cast<size_t>(w)]) {
                    visited[static_cast<size_t>(w)] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    return order;
}

bool lists_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

bool lists_alternate(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<std::pair<int, int>> merged;
    for (int x : a) merged.emplace_back(x, 0);
    for (int x : b) merged.emplace_back(x, 1);
    std::sort(merged.begin(), merged.end());
    for (size_t i = 0; i + 1 < merged.size(); ++i) {
        if (merged[i].first == merged[i + 1].first) return false;
        if (merged[i].second == merged[i + 1].second) return false;
    }
    return true;
}

struct TupleSearch {
    const Graph& g;
    int k;
    bool interleaved;
    int budget;
    std::vector<int> order;
    std::vector<std::vector<int>> assigned;  // indexed by node, empty = not yet colored

    bool compatible(int node, const std::vector<int>& tuple) const {
        for (int w : g.neighbors(node)) {
            const auto& other = assigned[static_cast<size_t>(w)];
            if (other.empty()) continue;
            if (interleaved ? !lists_alternate(tuple, other) : !lists_disjoint(tuple, other))
                return false;
        }
        return true;
    }

    bool fill(size_t pos) {
        if (pos == order.size()) return true;
        const int node = order[pos];
        // k-subsets of {0..budget-1} in lexicographic order.
        std::vector<int> tuple(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) tuple[static_cast<size_t>(i)] = i;
        while (true) {
            if (compatible(node, tuple)) {
                assigned[static_cast<size_t>(node)] = tuple;
                if (fill(pos + 1)) return true;
                assigned[static_cast<size_t>(node)].clear();
            }
            int i = k - 1;
            while (i >= 0 && tuple[static_cast<size_t>(i)] == budget - k + i) --i;
            if (i < 0) return false;
            ++tuple[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                tuple[static_cast<size_t>(j)] = tuple[static_cast<size_t>(j - 1)] + 1;
        }
    }
};

}  // namespace

int brute_chi_k(const Graph& g, int k, bool interleaved) {
    if (g.node_count() > 6)
        throw cap_exceeded("brute k-tuple search is capped at 6 nodes");
    if (k > 3) throw cap_exceeded("brute k-tuple search is capped at k = 3");
    if (k < 1) throw input_error("k must be >= 1");

    // Colors {i, n+i, 2n+i, ...} per node always work, so the search ends.
    const int start = std::max(max_clique_size(g) * k, k);
    for (int budget = start;; ++budget) {
        TupleSearch search{g, k, interleaved, budget, bfs_order(g),
                           std::vector<std::vector<int>>(static_cast<size_t>(g.node_count()))};
        if (search.fill(0)) return budget;
    }
}

int brute_chromatic(const Graph& g) {
    const int n = g.node_count();
    if (n > 10) throw cap_exceeded("brute chromatic search is capped at 10 nodes");

    std::vector<int> color(static_cast<size_t>(n), -1);
    // Nodes in id order; a node may only open one fresh color beyond those
    // already used, which prunes color-class permutations.
    std::function<bool(int, int, int)> assign = [&](int v, int used, int budget) {
        if (v == n) return true;
        for (int c = 0; c < std::min(budget, used + 1); ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && color[static_cast<size_t>(w)] == c) ok = false;
            if (!ok) continue;
            color[static_cast<size_t>(v)] = c;
            if (assign(v + 1, std::max(used, c + 1), budget)) return true;
            color[static_cast<size_t>(v)] = -1;
        }
        return false;
    };

    for (int budget = std::max(max_clique_size(g), 1);; ++budget)
        if (assign(0, 0, budget)) return budget;
}

std::vector<SimpleCycle> brute_cycles(const Graph& g) {
    const int n = g.node_count();
    if (n > 8) throw cap_exceeded("brute cycle search is capped at 8 nodes");

    std::vector<SimpleCycle> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 3) continue;
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) members.push_back(v);

        // The smallest member stays put; spinning the rest tries every cyclic
        // order once the mirror rule filters reflections.
        std::sort(members.begin() + 1, members.end());
        do {
            if (members[1] > members.back()) continue;
            bool cycle = true;
            for (size_t i = 0; i < members.size() && cycle; ++i)
                if (!g.has_edge(members[i], members[(i + 1) % members.size()])) cycle = false;
            if (cycle) out.push_back(SimpleCycle{members});
        } while (std::next_permutation(members.begin() + 1, members.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool dfs_hits_cycle(int v, const std::vector<std::vector<int>>& out, std::vector<int>& state) {
    state[static_cast<size_t>(v)] = 1;
    for (int w : out[static_cast<size_t>(v)]) {
        if (state[static_cast<size_t>(w)] == 1) return true;
        if (state[static_cast<size_t>(w)] == 0 && dfs_hits_cycle(w, out, state)) return true;
    }
    state[static_cast<size_t>(v)] = 2;
    return false;
}

}  // namespace

long long brute_acyclic_count(const Graph& g) {
    const int m = g.edge_count();
    if (m > 12) throw cap_exceeded("brute orientation count is capped at 12 edges");

    long long count = 0;
    const auto& edges = g.edges();
    for (unsigned long long x = 0; x < (1ULL << m); ++x) {
        std::vector<std::vector<int>> out(static_cast<size_t>(g.node_count()));
        for (int e = 0; e < m; ++e) {
            const bool low_to_high = (x >> (m - 1 - e)) & 1ULL;
            const Edge& ed = edges[static_cast<size_t>(e)];
            if (low_to_high)
                out[static_cast<size_t>(ed.u)].push_back(ed.v);
            else
                out[static_cast<size_t>(ed.v)].push_back(ed.u);
        }
        std::vector<int> state(static_cast<size_t>(g.node_count()), 0);
        bool cyclic = false;
        for (int v = 0; v < g.node_count() && !cyclic; ++v)
            if (state[static_cast<size_t>(v)] == 0) cyclic = dfs_hits_cycle(v, out, state);
        if (!cyclic) ++count;
    }
    return count;
}

}  // namespace imcn::oracle
