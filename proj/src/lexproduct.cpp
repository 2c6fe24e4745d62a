#include "imcn/lexproduct.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace imcn {

ProductGraph build_product(const Graph& g, int k, const Caps& caps) {
    if (k < 1) throw input_error("layer count must be >= 1");
    const long long nodes = static_cast<long long>(g.node_count()) * k;
    if (nodes > caps.max_product_nodes)
        throw cap_exceeded("product needs " + std::to_string(nodes) + " nodes, cap is " +
                           std::to_string(caps.max_product_nodes));

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.node_count(); ++i) {
        for (int l1 = 1; l1 <= k; ++l1)
            for (int l2 = l1 + 1; l2 <= k; ++l2)
                edges.emplace_back(i * k + (l1 - 1), i * k + (l2 - 1));
    }
    for (const Edge& e : g.edges()) {
        for (int l1 = 1; l1 <= k; ++l1)
            for (int l2 = 1; l2 <= k; ++l2)
                edges.emplace_back(e.u * k + (l1 - 1), e.v * k + (l2 - 1));
    }
    Graph product(static_cast<int>(nodes), std::move(edges));
    return ProductGraph{g, k, std::move(product)};
}

std::vector<bool> layered_dirs(const ProductGraph& p, const std::vector<bool>& base_dirs) {
    if (static_cast<int>(base_dirs.size()) != p.base.edge_count())
        throw input_error("direction vector does not match the base graph");
    const auto& edges = p.graph.edges();
    std::vector<bool> dirs(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        const int lp = p.layer(edges[e].u);
        const int lq = p.layer(edges[e].v);
        if (lp == lq) {
            const int i = p.base_node(edges[e].u);
            const int j = p.base_node(edges[e].v);
            dirs[e] = base_dirs[static_cast<size_t>(*p.base.edge_index(i, j))];
        } else {
            // Between layers: higher layer points at lower.
            dirs[e] = lp > lq;
        }
    }
    return dirs;
}

LayeredOrientation layered_orientation(const Graph& g, const Orientation& o, int k,
                                       const Caps& caps) {
    ProductGraph p = build_product(g, k, caps);
    std::vector<bool> dirs = layered_dirs(p, o.dirs());
    return LayeredOrientation{std::move(p), o, std::move(dirs)};
}

ChiIntK chi_int_k(const Graph& g, int k, const Caps& caps, ScanStats* stats) {
    if (g.edge_count() < 1) throw input_error("graph has no edges");
    if (g.edge_count() > caps.max_edges)
        throw cap_exceeded("edge count " + std::to_string(g.edge_count()) + " exceeds cap " +
                           std::to_string(caps.max_edges));
    if (stats) *stats = {};
    const ProductGraph p = build_product(g, k, caps);

    int best = -1;
    std::vector<bool> best_dirs;
    for_each_acyclic(g, [&](const std::vector<bool>& dirs) {
        if (stats) ++stats->orientations;
        const std::vector<int> f = path_counts_from(to_digraph(p.graph, layered_dirs(p, dirs)));
        const int l = *std::max_element(f.begin(), f.end());
        if (best < 0 || l < best) {
            best = l;
            best_dirs = dirs;
        }
        return true;
    });

    Orientation base(g, best_dirs);
    std::vector<bool> product_dirs = layered_dirs(p, best_dirs);
    return ChiIntK{best, LayeredOrientation{p, std::move(base), std::move(product_dirs)}};
}

std::vector<int> monotonic_coloring(const Digraph& d) {
    std::vector<int> colors = path_counts_from(d);
    for (int& c : colors) --c;
    return colors;
}

Orientation orientation_from_coloring(const Graph& g, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != g.node_count())
        throw input_error("coloring has " + std::to_string(coloring.size()) + " entries for " +
                          std::to_string(g.node_count()) + " nodes");
    std::vector<bool> dirs(static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges()[static_cast<size_t>(e)];
        const int cu = coloring[static_cast<size_t>(ed.u)];
        const int cv = coloring[static_cast<size_t>(ed.v)];
        if (cu == cv)
            throw input_error("adjacent nodes " + std::to_string(ed.u) + " and " +
                              std::to_string(ed.v) + " share color " + std::to_string(cu));
        dirs[static_cast<size_t>(e)] = cu > cv;
    }
    return Orientation(g, std::move(dirs));
}

std::string KTupleColoring::str() const {
    std::ostringstream out;
    out << "k=" << k << " palette=" << palette << " interleaved=" << (interleaved ? "true" : "false")
        << '\n';
    for (size_t v = 0; v < colors.size(); ++v) {
        out << v << ": ";
        for (size_t i = 0; i < colors[v].size(); ++i) {
            if (i) out << ',';
            out << colors[v][i];
        }
        out << '\n';
    }
    return out.str();
}

bool is_valid_ktuple(const Graph& g, const KTupleColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.node_count()) return false;
    for (const auto& list : c.colors) {
        if (static_cast<int>(list.size()) != c.k) return false;
        for (size_t i = 0; i + 1 < list.size(); ++i)
            if (list[i] >= list[i + 1]) return false;
        if (!list.empty() && list.front() < 0) return false;
    }
    for (const Edge& e : g.edges()) {
        const auto& a = c.colors[static_cast<size_t>(e.u)];
        const auto& b = c.colors[static_cast<size_t>(e.v)];
        std::vector<int> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        if (!both.empty()) return false;
    }
    return true;
}

bool is_interleaved(const Graph& g, const KTupleColoring& c) {
    for (const Edge& e : g.edges()) {
        const auto& a = c.colors[static_cast<size_t>(e.u)];
        const auto& b = c.colors[static_cast<size_t>(e.v)];
        // Merge by value and require strict origin alternation.
        std::vector<std::pair<int, int>> merged;
        for (int x : a) merged.emplace_back(x, 0);
        for (int x : b) merged.emplace_back(x, 1);
        std::sort(merged.begin(), merged.end());
        for (size_t i = 0; i + 1 < merged.size(); ++i) {
            if (merged[i].first == merged[i + 1].first) return false;
            if (merged[i].second == merged[i + 1].second) return false;
        }
    }
    return true;
}

KTupleColoring derive_interleaved_coloring(const Graph& g, const Orientation& o, int k,
                                           const Caps& caps) {
    if (g.edge_count() < 1) throw input_error("graph has no edges");
    const LayeredOrientation lo = layered_orientation(g, o, k, caps);
    const std::vector<int> product_colors =
        monotonic_coloring(to_digraph(lo.product.graph, lo.product_dirs));

    KTupleColoring c;
    c.k = k;
    c.colors.resize(static_cast<size_t>(g.node_count()));
    std::vector<int> used;
    for (int i = 0; i < g.node_count(); ++i) {
        auto& list = c.colors[static_cast<size_t>(i)];
        for (int l = 1; l <= k; ++l) {
            const int col = product_colors[static_cast<size_t>(lo.product.node_id(i, l))];
            list.push_back(col);
            used.push_back(col);
        }
        std::sort(list.begin(), list.end());
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    c.palette = static_cast<int>(used.size());
    c.interleaved = is_interleaved(g, c);
    return c;
}

namespace {

std::string product_node_name(const ProductGraph& p, int id) {
    return std::to_string(p.base_node(id)) + "@" + std::to_string(p.layer(id));
}

}  // namespace

WindingPath winding_path(const SimpleCycle& c, const Orientation& o, int k, const Caps& caps) {
    if (k < 1) throw input_error("layer count must be >= 1");
    const Graph& g = o.graph();
    const CycleSteps stored = cycle_steps(g, c);  // validates the cycle against g
    const auto [stored_plus, stored_minus] = direction_counts(stored, o.dirs());

    // Traverse so that with-orientation edges are the majority.
    const int len = c.size();
    std::vector<int> seq;
    if (stored_plus >= stored_minus) {
        seq = c.nodes;
    } else {
        seq.push_back(c.nodes[0]);
        for (int i = len - 1; i >= 1; --i) seq.push_back(c.nodes[static_cast<size_t>(i)]);
    }

    std::vector<bool> with(static_cast<size_t>(len));
    int m_minus = 0;
    for (int i = 0; i < len; ++i) {
        const int a = seq[static_cast<size_t>(i)];
        const int b = seq[static_cast<size_t>((i + 1) % len)];
        const int e = *g.edge_index(a, b);
        with[static_cast<size_t>(i)] = o.tail_of(e) == a;
        if (!with[static_cast<size_t>(i)]) ++m_minus;
    }
    const int m_plus = len - m_minus;

    const int t = (k - 1) / m_minus;
    const int eps_minus = (k - 1) % m_minus;

    // Origin of the longest with-run, wrap included; earliest run wins ties.
    int run_start = 0, run_best = -1;
    for (int s = 0; s < len; ++s) {
        if (!with[static_cast<size_t>((s + len - 1) % len)] || m_minus == 0) {
            int r = 0;
            while (r < len && with[static_cast<size_t>((s + r) % len)]) ++r;
            if (r > run_best) {
                run_best = r;
                run_start = s;
            }
        }
    }

    // The partial lap from position s may pass eps_minus against-edges and
    // then extends through with-edges until the next against-edge. Take the
    // start that collects the most with-edges; scanning begins at the longest
    // run's origin so unambiguous cases start exactly there.
    auto extension = [&](int s) {
        int minus_seen = 0, plus = 0, j = s;
        while (true) {
            if (with[static_cast<size_t>(j % len)]) {
                ++plus;
            } else {
                if (minus_seen == eps_minus) break;
                ++minus_seen;
            }
            ++j;
        }
        return plus;
    };
    int start = run_start, eps_plus = extension(run_start);
    for (int d = 1; d < len; ++d) {
        const int s = (run_start + d) % len;
        const int ext = extension(s);
        if (ext > eps_plus) {
            eps_plus = ext;
            start = s;
        }
    }

    // Walk t full laps plus the partial lap, descending on against-edges.
    const ProductGraph p = build_product(g, k, caps);
    const std::vector<bool> product_dirs = layered_dirs(p, o.dirs());
    const int total_steps = t * len + eps_plus + eps_minus;
    int layer = k;
    int pos = start;
    std::vector<int> path{p.node_id(seq[static_cast<size_t>(start)], layer)};
    for (int step = 0; step < total_steps; ++step) {
        if (!with[static_cast<size_t>(pos % len)]) --layer;
        pos = (pos + 1) % len;
        path.push_back(p.node_id(seq[static_cast<size_t>(pos)], layer));
    }

    // The result must be a genuine directed path of the layered product.
    std::set<int> distinct(path.begin(), path.end());
    if (distinct.size() != path.size())
        throw invariant_violation("winding path revisits a product node");
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        const auto e = p.graph.edge_index(path[i], path[i + 1]);
        const bool forward =
            e && (product_dirs[static_cast<size_t>(*e)]
                      ? p.graph.edges()[static_cast<size_t>(*e)].u == path[i]
                      : p.graph.edges()[static_cast<size_t>(*e)].v == path[i]);
        if (!forward)
            throw invariant_violation("winding path step " + product_node_name(p, path[i]) + "->" +
                                      product_node_name(p, path[i + 1]) + " is not a directed edge");
    }

    return WindingPath{c, o, k, t, eps_plus, eps_minus, std::move(path)};
}

LayerShapeReport check_product_longest_paths(const ProductGraph& p,
                                             const std::vector<bool>& product_dirs,
                                             long long max_paths) {
    const Digraph d = to_digraph(p.graph, product_dirs);
    const std::vector<int> f = path_counts_from(d);
    const int target = *std::max_element(f.begin(), f.end());

    LayerShapeReport report;
    std::set<std::string> seen;

    auto note = [&](const std::string& msg) {
        if (seen.insert(msg).second) report.violations.push_back(msg);
    };

    auto check_edge = [&](int a, int b) {
        const int la = p.layer(a), lb = p.layer(b);
        const int ia = p.base_node(a), ib = p.base_node(b);
        const int drop = la - lb;
        if (drop != 0 && drop != 1) {
            note(product_node_name(p, a) + "->" + product_node_name(p, b) + ": layer drop " +
                 std::to_string(drop));
            return;
        }
        if (drop == 1) {
            if (ia == ib) {
                note(product_node_name(p, a) + "->" + product_node_name(p, b) +
                     ": layer drop within one base node");
                return;
            }
            // A drop i->j needs j->i directed inside every layer.
            for (int l = 1; l <= p.k; ++l) {
                const int from = p.node_id(ib, l);
                const int to = p.node_id(ia, l);
                const auto e = p.graph.edge_index(from, to);
                const bool ok = e && (product_dirs[static_cast<size_t>(*e)]
                                          ? p.graph.edges()[static_cast<size_t>(*e)].u == from
                                          : p.graph.edges()[static_cast<size_t>(*e)].v == from);
                if (!ok)
                    note(product_node_name(p, a) + "->" + product_node_name(p, b) + ": layer " +
                         std::to_string(l) + " lacks edge " + std::to_string(ib) + "->" +
                         std::to_string(ia));
            }
        }
    };

    std::vector<int> path;
    std::function<void(int)> walk = [&](int v) {
        path.push_back(v);
        if (f[static_cast<size_t>(v)] == 1) {
            if (report.paths_checked >= max_paths)
                throw cap_exceeded("longest path count exceeds " + std::to_string(max_paths));
            ++report.paths_checked;
            for (size_t i = 0; i + 1 < path.size(); ++i) check_edge(path[i], path[i + 1]);
        } else {
            for (int w : d.out[static_cast<size_t>(v)])
                if (f[static_cast<size_t>(w)] == f[static_cast<size_t>(v)] - 1) walk(w);
        }
        path.pop_back();
    };
    for (int v = 0; v < d.n; ++v)
        if (f[static_cast<size_t>(v)] == target) walk(v);

    std::sort(report.violations.begin(), report.violations.end());
    report.ok = report.violations.empty();
    return report;
}

LayerShapeReport check_layered_longest_paths(const Graph& g, const Orientation& o, int k,
                                             const Caps& caps) {
    const LayeredOrientation lo = layered_orientation(g, o, k, caps);
    return check_product_longest_paths(lo.product, lo.product_dirs);
}

}  // namespace imcn
