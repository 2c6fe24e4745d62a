#include "imcn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace imcn {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool is_comment(std::string_view line) {
    if (line.empty()) return true;
    if (line.front() == '#') return true;
    if (line.front() == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t')) return true;
    return false;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, int line_no, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw input_error("line " + std::to_string(line_no) + ": bad " + what + " '" + std::string(tok) + "'");
    return value;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw input_error("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n_ < 1) throw input_error("graph must have at least one node");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw input_error("self-loop at node " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_)
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        edges_.push_back(Edge{u, v});
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw input_error("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    adj_.assign(static_cast<size_t>(n_), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    const Edge probe{u, v};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it == edges_.end() || !(*it == probe)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(static_cast<size_t>(n_), -1);
    std::vector<std::vector<int>> blocks;
    std::vector<int> stack;
    for (int start = 0; start < n_; ++start) {
        if (comp[static_cast<size_t>(start)] != -1) continue;
        const int id = static_cast<int>(blocks.size());
        blocks.emplace_back();
        stack.push_back(start);
        comp[static_cast<size_t>(start)] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            blocks[static_cast<size_t>(id)].push_back(v);
            for (int w : neighbors(v)) {
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(blocks.back().begin(), blocks.back().end());
    }
    return blocks;
}

bool Graph::is_forest() const {
    // A graph is a forest iff every component has |edges| = |nodes| - 1.
    const auto blocks = components();
    return edge_count() == n_ - static_cast<int>(blocks.size());
}

std::string Graph::serialize(GraphFormat format) const {
    std::ostringstream out;
    if (format == GraphFormat::dimacs) {
        out << "p edge " << n_ << ' ' << edges_.size() << '\n';
        for (const Edge& e : edges_) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    } else {
        out << n_ << ' ' << edges_.size() << '\n';
        for (const Edge& e : edges_) out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    const bool dimacs = format == GraphFormat::dimacs;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_lines;

    const auto lines = split_lines(text);
    for (size_t idx = 0; idx < lines.size(); ++idx) {
        const int line_no = static_cast<int>(idx) + 1;
        const std::string_view line = trim(lines[idx]);
        if (is_comment(line)) continue;
        const auto toks = tokens(line);

        if (n < 0) {
            // Header first.
            if (dimacs) {
                if (toks.size() != 4 || toks[0] != "p" || toks[1] != "edge")
                    fail(line_no, "expected header 'p edge <n> <m>'");
                n = parse_int(toks[2], line_no, "node count");
                m = parse_int(toks[3], line_no, "edge count");
            } else {
                if (toks.size() != 2) fail(line_no, "expected header '<n> <m>'");
                n = parse_int(toks[0], line_no, "node count");
                m = parse_int(toks[1], line_no, "edge count");
            }
            if (n < 1) fail(line_no, "node count must be >= 1");
            if (m < 0) fail(line_no, "edge count must be >= 0");
            continue;
        }

        int u, v;
        if (dimacs) {
            if (toks.size() != 3 || toks[0] != "e") fail(line_no, "expected edge line 'e <u> <v>'");
            u = parse_int(toks[1], line_no, "endpoint") - 1;
            v = parse_int(toks[2], line_no, "endpoint") - 1;
        } else {
            if (toks.size() != 2) fail(line_no, "expected edge line '<u> <v>'");
            u = parse_int(toks[0], line_no, "endpoint");
            v = parse_int(toks[1], line_no, "endpoint");
        }
        if (u == v) fail(line_no, "self-loop at node " + std::to_string(dimacs ? u + 1 : u));
        if (u < 0 || u >= n || v < 0 || v >= n) fail(line_no, "endpoint out of range");
        edges.emplace_back(u, v);
        edge_lines.push_back(line_no);
    }

    if (n < 0) throw input_error("missing header line");
    if (static_cast<long long>(edges.size()) != m)
        throw input_error("header announces " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));

    // Duplicate detection here so the error can name a line.
    std::vector<std::pair<Edge, int>> seen;
    seen.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        Edge e{std::min(edges[i].first, edges[i].second), std::max(edges[i].first, edges[i].second)};
        seen.emplace_back(e, edge_lines[i]);
    }
    std::sort(seen.begin(), seen.end());
    for (size_t i = 1; i < seen.size(); ++i) {
        if (seen[i].first == seen[i - 1].first)
            fail(seen[i].second, "duplicate edge (" + std::to_string(seen[i].first.u) + "," +
                                     std::to_string(seen[i].first.v) + ")");
    }

    return Graph(n, std::move(edges));
}

Graph parse_graph_auto(std::string_view text) {
    for (std::string_view raw : split_lines(text)) {
        const std::string_view line = trim(raw);
        if (is_comment(line)) continue;
        if (line.size() >= 2 && line[0] == 'p' && (line[1] == ' ' || line[1] == '\t'))
            return parse_graph(text, GraphFormat::dimacs);
        return parse_graph(text, GraphFormat::edgelist);
    }
    throw input_error("empty graph input");
}

}  // namespace imcn
