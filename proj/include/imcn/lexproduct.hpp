#pragma once

#include <string>
#include <vector>

#include "imcn/common.hpp"
#include "imcn/cycles.hpp"
#include "imcn/graph.hpp"
#include "imcn/orientation.hpp"

namespace imcn {

// Product of a base graph with the complete graph on k nodes: k copies
// ("layers" 1..k) of every base node, the copies of one node pairwise
// adjacent, copy sets of adjacent base nodes completely joined. Product node
// (i, layer) is flattened as i*k + (layer-1).
struct ProductGraph {
    Graph base;
    int k = 1;
    Graph graph;

    int node_id(int base_node, int layer) const { return base_node * k + (layer - 1); }
    int base_node(int p) const { return p / k; }
    int layer(int p) const { return p % k + 1; }
};

ProductGraph build_product(const Graph& g, int k, const Caps& caps = {});

// Direction bits for the product graph: within a layer every base edge keeps
// the base direction, every edge between layers points from the higher layer
// to the lower. Always acyclic.
std::vector<bool> layered_dirs(const ProductGraph& p, const std::vector<bool>& base_dirs);

struct LayeredOrientation {
    ProductGraph product;
    Orientation base;
    std::vector<bool> product_dirs;

    Orientation product_orientation() const { return Orientation(product.graph, product_dirs); }
};

LayeredOrientation layered_orientation(const Graph& g, const Orientation& o, int k,
                                       const Caps& caps = {});

struct ChiIntK {
    int value = 0;
    LayeredOrientation witness;
};

// Interleaved k-tuple chromatic number: the minimum over base orientations of
// the longest-path node count in the layered product. Only base orientations
// are scanned; the full product orientation space is never enumerated.
ChiIntK chi_int_k(const Graph& g, int k, const Caps& caps = {}, ScanStats* stats = nullptr);

// Longest-path level coloring of an acyclic digraph: color(v) = (nodes on the
// longest path starting at v) - 1. Colors strictly decrease along every edge.
std::vector<int> monotonic_coloring(const Digraph& d);

// Directs every edge from the higher-colored endpoint to the lower. Rejects
// improper colorings.
Orientation orientation_from_coloring(const Graph& g, const std::vector<int>& coloring);

struct KTupleColoring {
    int k = 1;
    std::vector<std::vector<int>> colors;  // per node, ascending, k entries
    int palette = 0;                       // distinct colors used overall
    bool interleaved = false;

    // "k=.. palette=.. interleaved=.." header, then one "node: c1,...,ck" line each.
    std::string str() const;
};

// True when every node has k distinct ascending colors and no edge shares one.
bool is_valid_ktuple(const Graph& g, const KTupleColoring& c);
// True when on every edge the two color lists strictly alternate.
bool is_interleaved(const Graph& g, const KTupleColoring& c);

// Colors the layered product monotonically and hands node i the colors of its
// k copies. The layered structure makes the result interleaved; both flags
// are set from explicit verification.
KTupleColoring derive_interleaved_coloring(const Graph& g, const Orientation& o, int k,
                                           const Caps& caps = {});

// Product path that keeps lapping a cycle, dropping one layer at every edge
// directed against the orientation: t full laps, then a maximal partial lap.
// The start is chosen among all cycle positions so the partial lap is
// longest, scanning from the origin of the longest run of with-orientation
// edges; node count then satisfies count/k >= |cycle|/min{m_plus,m_minus}.
struct WindingPath {
    SimpleCycle cycle;
    Orientation orientation;
    int k = 1;
    int t = 0;
    int eps_plus = 0;
    int eps_minus = 0;
    std::vector<int> path;  // product node ids

    int count() const { return static_cast<int>(path.size()); }
};

WindingPath winding_path(const SimpleCycle& c, const Orientation& o, int k, const Caps& caps = {});

// Longest-path shape check on an oriented product: every longest path must
// move within a layer or drop exactly one layer per edge, drops must change
// the base node, and each drop i->j must have j->i directed edges in every
// layer. Layered orientations always pass; corrupted ones report violations.
struct LayerShapeReport {
    bool ok = true;
    long long paths_checked = 0;
    std::vector<std::string> violations;
};

LayerShapeReport check_product_longest_paths(const ProductGraph& p,
                                             const std::vector<bool>& product_dirs,
                                             long long max_paths = 100000);
LayerShapeReport check_layered_longest_paths(const Graph& g, const Orientation& o, int k,
                                             const Caps& caps = {});

}  // namespace imcn
