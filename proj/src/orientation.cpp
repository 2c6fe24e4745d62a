#include "imcn/orientation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace imcn {

Orientation::Orientation(Graph g, std::vector<bool> dirs)
    : graph_(std::move(g)), dirs_(std::move(dirs)) {
    if (static_cast<int>(dirs_.size()) != graph_.edge_count())
        throw input_error("orientation has " + std::to_string(dirs_.size()) + " direction bits for " +
                          std::to_string(graph_.edge_count()) + " edges");
    if (!is_acyclic(graph_, dirs_)) throw input_error("orientation has a directed cycle");
}

Orientation Orientation::from_string(const Graph& g, std::string_view text) {
    std::vector<bool> dirs(static_cast<size_t>(g.edge_count()), false);
    std::vector<bool> seen(static_cast<size_t>(g.edge_count()), false);
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
        const size_t gt = item.find('>');
        if (item.empty() || gt == std::string_view::npos)
            throw input_error("bad orientation item '" + std::string(item) + "', expected 'u>v'");
        int a = -1, b = -1;
        const auto sa = item.substr(0, gt);
        const auto sb = item.substr(gt + 1);
        auto ra = std::from_chars(sa.data(), sa.data() + sa.size(), a);
        auto rb = std::from_chars(sb.data(), sb.data() + sb.size(), b);
        if (ra.ec != std::errc{} || ra.ptr != sa.data() + sa.size() || rb.ec != std::errc{} ||
            rb.ptr != sb.data() + sb.size())
            throw input_error("bad orientation item '" + std::string(item) + "', expected 'u>v'");
        const auto idx = g.edge_index(a, b);
        if (!idx) throw input_error("orientation names non-edge " + std::to_string(a) + ">" + std::to_string(b));
        if (seen[static_cast<size_t>(*idx)])
            throw input_error("orientation repeats edge " + std::to_string(a) + ">" + std::to_string(b));
        seen[static_cast<size_t>(*idx)] = true;
        dirs[static_cast<size_t>(*idx)] = a < b;  // arrow a->b: true iff it leaves the low endpoint
        pos = end + 1;
        if (end == text.size()) break;
    }
    for (size_t e = 0; e < seen.size(); ++e) {
        if (!seen[e])
            throw input_error("orientation misses edge (" + std::to_string(g.edges()[e].u) + "," +
                              std::to_string(g.edges()[e].v) + ")");
    }
    return Orientation(g, std::move(dirs));
}

int Orientation::tail_of(int e) const {
    const Edge& ed = graph_.edges()[static_cast<size_t>(e)];
    return dirs_[static_cast<size_t>(e)] ? ed.u : ed.v;
}

int Orientation::head_of(int e) const {
    const Edge& ed = graph_.edges()[static_cast<size_t>(e)];
    return dirs_[static_cast<size_t>(e)] ? ed.v : ed.u;
}

std::vector<int> Orientation::sources() const {
    std::vector<bool> has_in(static_cast<size_t>(graph_.node_count()), false);
    for (int e = 0; e < graph_.edge_count(); ++e) has_in[static_cast<size_t>(head_of(e))] = true;
    std::vector<int> out;
    for (int v = 0; v < graph_.node_count(); ++v)
        if (!has_in[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<int> Orientation::sinks() const {
    std::vector<bool> has_out(static_cast<size_t>(graph_.node_count()), false);
    for (int e = 0; e < graph_.edge_count(); ++e) has_out[static_cast<size_t>(tail_of(e))] = true;
    std::vector<int> out;
    for (int v = 0; v < graph_.node_count(); ++v)
        if (!has_out[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

Digraph Orientation::digraph() const { return to_digraph(graph_, dirs_); }

Orientation Orientation::reversed() const {
    std::vector<bool> flipped(dirs_.size());
    for (size_t e = 0; e < dirs_.size(); ++e) flipped[e] = !dirs_[e];
    return Orientation(graph_, std::move(flipped));
}

std::string Orientation::str() const {
    std::ostringstream out;
    for (int e = 0; e < graph_.edge_count(); ++e) {
        if (e) out << ',';
        out << tail_of(e) << '>' << head_of(e);
    }
    return out.str();
}

bool is_acyclic(const Graph& g, const std::vector<bool>& dirs) {
    if (static_cast<int>(dirs.size()) != g.edge_count())
        throw input_error("direction vector length " + std::to_string(dirs.size()) + " != edge count " +
                          std::to_string(g.edge_count()));
    const int n = g.node_count();
    std::vector<int> in_degree(static_cast<size_t>(n), 0);
    const auto& edges = g.edges();
    for (size_t e = 0; e < dirs.size(); ++e)
        ++in_degree[static_cast<size_t>(dirs[e] ? edges[e].v : edges[e].u)];

    // Kahn peeling: repeatedly remove in-degree-0 nodes; acyclic iff all go.
    std::vector<int> ready;
    for (int v = 0; v < n; ++v)
        if (in_degree[static_cast<size_t>(v)] == 0) ready.push_back(v);
    int removed = 0;
    const Digraph d = to_digraph(g, dirs);
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        ++removed;
        for (int w : d.out[static_cast<size_t>(v)])
            if (--in_degree[static_cast<size_t>(w)] == 0) ready.push_back(w);
    }
    return removed == n;
}

void for_each_acyclic(const Graph& g, const std::function<bool(const std::vector<bool>&)>& fn) {
    const int m = g.edge_count();
    if (m >= 62) throw cap_exceeded("2^" + std::to_string(m) + " direction vectors is out of range");
    std::vector<bool> dirs(static_cast<size_t>(m), false);
    const unsigned long long total = 1ULL << m;
    for (unsigned long long x = 0; x < total; ++x) {
        for (int e = 0; e < m; ++e) dirs[static_cast<size_t>(e)] = (x >> (m - 1 - e)) & 1ULL;
        if (is_acyclic(g, dirs) && !fn(dirs)) return;
    }
}

long long count_acyclic(const Graph& g, const Caps& caps) {
    if (g.edge_count() > caps.max_edges)
        throw cap_exceeded("edge count " + std::to_string(g.edge_count()) + " exceeds cap " +
                           std::to_string(caps.max_edges));
    long long count = 0;
    for_each_acyclic(g, [&](const std::vector<bool>&) {
        ++count;
        return true;
    });
    return count;
}

std::vector<Orientation> enumerate_acyclic(const Graph& g, const Caps& caps) {
    if (g.edge_count() > caps.max_edges)
        throw cap_exceeded("edge count " + std::to_string(g.edge_count()) + " exceeds cap " +
                           std::to_string(caps.max_edges));
    std::vector<Orientation> out;
    for_each_acyclic(g, [&](const std::vector<bool>& dirs) {
        out.emplace_back(g, dirs);
        return true;
    });
    return out;
}

Digraph to_digraph(const Graph& g, const std::vector<bool>& dirs) {
    Digraph d;
    d.n = g.node_count();
    d.out.assign(static_cast<size_t>(d.n), {});
    const auto& edges = g.edges();
    for (size_t e = 0; e < dirs.size(); ++e) {
        if (dirs[e])
            d.out[static_cast<size_t>(edges[e].u)].push_back(edges[e].v);
        else
            d.out[static_cast<size_t>(edges[e].v)].push_back(edges[e].u);
    }
    for (auto& lst : d.out) std::sort(lst.begin(), lst.end());
    return d;
}

std::vector<int> path_counts_from(const Digraph& d) {
    // Topological order by Kahn, then a backward sweep: f(v) = 1 + max f(out).
    std::vector<int> in_degree(static_cast<size_t>(d.n), 0);
    for (const auto& lst : d.out)
        for (int w : lst) ++in_degree[static_cast<size_t>(w)];
    std::vector<int> order;
    order.reserve(static_cast<size_t>(d.n));
    for (int v = 0; v < d.n; ++v)
        if (in_degree[static_cast<size_t>(v)] == 0) order.push_back(v);
    for (size_t i = 0; i < order.size(); ++i) {
        for (int w : d.out[static_cast<size_t>(order[i])])
            if (--in_degree[static_cast<size_t>(w)] == 0) order.push_back(w);
    }
    if (static_cast<int>(order.size()) != d.n) throw input_error("digraph has a directed cycle");

    std::vector<int> f(static_cast<size_t>(d.n), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (int w : d.out[static_cast<size_t>(*it)])
            f[static_cast<size_t>(*it)] = std::max(f[static_cast<size_t>(*it)], 1 + f[static_cast<size_t>(w)]);
    }
    return f;
}

DirectedPath longest_path(const Digraph& d) {
    const std::vector<int> f = path_counts_from(d);
    DirectedPath result;
    if (d.n == 0) return result;
    result.count = *std::max_element(f.begin(), f.end());

    // Lex-least witness: smallest start achieving the maximum, then greedily
    // the smallest successor that still spends the remaining length.
    int v = -1;
    for (int u = 0; u < d.n; ++u) {
        if (f[static_cast<size_t>(u)] == result.count) {
            v = u;
            break;
        }
    }
    result.nodes.push_back(v);
    while (f[static_cast<size_t>(v)] > 1) {
        for (int w : d.out[static_cast<size_t>(v)]) {
            if (f[static_cast<size_t>(w)] == f[static_cast<size_t>(v)] - 1) {
                v = w;
                break;
            }
        }
        result.nodes.push_back(v);
    }
    return result;
}

}  // namespace imcn
