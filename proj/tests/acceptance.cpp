// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "imcn/evaluators.hpp"
#include "imcn/gen.hpp"
#include "imcn/lexproduct.hpp"
#include "imcn/oracle.hpp"
#include "imcn/ser.hpp"
#include "test_util.hpp"

using imcn::Graph;
using imcn::Orientation;
using imcn::Rational;

namespace {

// The asymptotic growth check allows the finite-k ratio to overshoot the
// limit by at most 15 percent: ratio <= limit * 23/20.
constexpr long long TOL_NUM = 23;
constexpr long long TOL_DEN = 20;

int failures = 0;

void criterion(const char* name, const std::function<bool(std::string&)>& fn) {
    std::string why;
    bool ok = false;
    try {
        ok = fn(why);
    } catch (const std::exception& e) {
        why = e.what();
    }
    if (ok) {
        std::cout << "[PASS] " << name << "\n";
    } else {
        std::cout << "[FAIL] " << name << (why.empty() ? "" : ": " + why) << "\n";
        ++failures;
    }
}

bool expect(bool cond, const std::string& msg, std::string& why) {
    if (!cond && why.empty()) why = msg;
    return cond;
}

}  // namespace

int main() {
    criterion("forest-rule", [](std::string& why) {
        std::mt19937 rng(1234);
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            const int n = 2 + i % 9;  // n ranges over 2..10
            const Graph g = imcn::gen_forest(n, rng);
            const auto w = imcn::chi_int_star(g);
            ok &= expect(g.is_forest(), "generator produced a cycle", why);
            ok &= expect(w.value == Rational(2, 1), "forest value is not 2/1 on " + g.serialize(imcn::GraphFormat::edgelist), why);
            ok &= expect(!w.critical_cycle && !w.suggested_k, "forest carries cycle fields", why);
            ok &= expect(imcn::chi_via_orientations(g).chi == 2, "forest chi is not 2", why);
        }
        return ok;
    });

    criterion("known-values", [](std::string& why) {
        bool ok = true;
        const std::vector<std::pair<const char*, Rational>> table = {
            {"c3.col", {3, 1}}, {"c4.col", {2, 1}}, {"c5.col", {5, 2}},
            {"c7.col", {7, 3}}, {"k4.col", {4, 1}}, {"k5.col", {5, 1}}};
        for (const auto& [name, want] : table) {
            const auto got = imcn::chi_int_star(testutil::load_fixture(name)).value;
            ok &= expect(got == want, std::string(name) + " gave " + got.str(), why);
        }
        ok &= expect(imcn::chi_int_k(testutil::load_fixture("c5.col"), 2).value == 5,
                     "pentagon pairs", why);
        ok &= expect(imcn::chi_int_k(testutil::load_fixture("c7.col"), 3).value == 7,
                     "heptagon triples", why);
        ok &= expect(imcn::chi_int_k(testutil::load_fixture("k4.col"), 1).value == 4,
                     "clique singletons", why);
        return ok;
    });

    criterion("tuple-equivalence", [](std::string& why) {
        bool ok = true;
        int graphs = 0;
        for (int n = 2; n <= 5; ++n) {
            for (const Graph& g : testutil::connected_graphs_up_to_iso(n)) {
                ++graphs;
                for (int k = 1; k <= 2; ++k) {
                    const int fast = imcn::chi_int_k(g, k).value;
                    const int slow = imcn::oracle::brute_chi_k(g, k, true);
                    ok &= expect(fast == slow,
                                 "mismatch " + std::to_string(fast) + " vs " + std::to_string(slow) +
                                     " at k=" + std::to_string(k) + " on " +
                                     g.serialize(imcn::GraphFormat::edgelist),
                                 why);
                }
            }
        }
        ok &= expect(graphs == 30, "expected 30 connected shapes, saw " + std::to_string(graphs), why);
        return ok;
    });

    criterion("chromatic-equivalence", [](std::string& why) {
        std::mt19937 rng(4321);
        bool ok = true;
        for (int i = 0; i < 50; ++i) {
            const int n = 2 + static_cast<int>(imcn::rng_below(rng, 5));  // up to 6 nodes
            const int pairs = n * (n - 1) / 2;
            const int m = static_cast<int>(imcn::rng_below(rng, static_cast<std::uint32_t>(pairs + 1)));
            const Graph g = imcn::gen_random(n, m, rng);
            ok &= expect(imcn::chi_via_orientations(g).chi == imcn::oracle::brute_chromatic(g),
                         "mismatch on " + g.serialize(imcn::GraphFormat::edgelist), why);
        }
        return ok;
    });

    criterion("layer-shape", [](std::string& why) {
        bool ok = true;
        long long paths = 0;
        for (int n = 2; n <= 4; ++n) {
            for (const Graph& g : testutil::all_graphs(n, 1, 5)) {
                for (const Orientation& o : imcn::enumerate_acyclic(g)) {
                    for (int k = 1; k <= 3; ++k) {
                        const auto report = imcn::check_layered_longest_paths(g, o, k);
                        paths += report.paths_checked;
                        ok &= expect(report.ok && report.violations.empty(),
                                     "violation under " + o.str() + " k=" + std::to_string(k), why);
                    }
                }
            }
        }
        return ok && expect(paths > 0, "no paths examined", why);
    });

    criterion("winding-growth", [](std::string& why) {
        const Graph c5 = testutil::cycle_graph(5);
        const auto w = imcn::chi_int_star(c5);
        bool ok = expect(w.critical_cycle.has_value(), "no critical cycle", why);
        if (!ok) return false;
        for (int k = 1; k <= 10; ++k) {
            const auto wp = imcn::winding_path(*w.critical_cycle, w.orientation, k);
            ok &= expect(Rational(wp.count(), k) >= Rational(5, 2),
                         "winding ratio dipped at k=" + std::to_string(k), why);
        }
        Rational prev(0, 1);
        for (int k = 5; k <= 20; k += 5) {
            // Ratio of the witness orientation's own product, not the min
            // over orientations: only the former decays monotonically here.
            const auto lo = imcn::layered_orientation(c5, w.orientation, k);
            const auto d = imcn::to_digraph(lo.product.graph, lo.product_dirs);
            const Rational ratio(imcn::longest_path(d).count, k);
            ok &= expect(ratio >= Rational(5, 2), "ratio below the limit at k=" + std::to_string(k), why);
            if (k > 5) ok &= expect(ratio <= prev, "ratio rose at k=" + std::to_string(k), why);
            prev = ratio;
        }
        ok &= expect(prev <= Rational(5 * TOL_NUM, 2 * TOL_DEN),
                     "k=20 ratio " + prev.str() + " misses 5/2 by over 15 percent", why);
        return ok;
    });

    criterion("orientation-counts", [](std::string& why) {
        bool ok = true;
        ok &= expect(imcn::count_acyclic(testutil::complete_graph(3)) == 6, "triangle", why);
        ok &= expect(imcn::count_acyclic(testutil::cycle_graph(4)) == 14, "square", why);
        ok &= expect(imcn::count_acyclic(testutil::cycle_graph(5)) == 30, "pentagon", why);
        ok &= expect(imcn::count_acyclic(testutil::complete_graph(4)) == 24, "tetrahedron", why);
        for (const std::string& name : testutil::fixture_names()) {
            const Graph g = testutil::load_fixture(name);
            if (g.edge_count() > 12) continue;
            ok &= expect(imcn::count_acyclic(g) == imcn::oracle::brute_acyclic_count(g),
                         "count mismatch on " + name, why);
        }
        return ok;
    });

    criterion("ser-cross-check", [](std::string& why) {
        bool ok = true;
        const std::vector<Graph> exhaustive = {testutil::cycle_graph(4), testutil::cycle_graph(5),
                                               testutil::complete_graph(4)};
        for (const Graph& g : exhaustive) {
            const auto cycles = imcn::enumerate_simple_cycles(g);
            for (const Orientation& o : imcn::enumerate_acyclic(g)) {
                const auto score = imcn::orientation_score(g, o, cycles).first;
                ok &= expect(imcn::concurrency(imcn::ser_run(o)) == score.reciprocal(),
                             "dynamics disagree under " + o.str(), why);
            }
        }
        std::mt19937 rng(2024);
        for (int i = 0; i < 20; ++i) {
            const int n = 3 + static_cast<int>(imcn::rng_below(rng, 4));  // up to 6 nodes
            const int pairs = n * (n - 1) / 2;
            const int m = n + static_cast<int>(imcn::rng_below(rng, static_cast<std::uint32_t>(pairs - n + 1)));
            const Graph g = imcn::gen_connected_cyclic(n, m, rng);
            ok &= expect(imcn::best_concurrency(g).first == imcn::chi_int_star(g).value.reciprocal(),
                         "best rate is not the inverse value on " + g.serialize(imcn::GraphFormat::edgelist),
                         why);
        }
        return ok;
    });

    criterion("sandwich", [](std::string& why) {
        bool ok = true;
        for (const std::string& name : testutil::fixture_names()) {
            const Graph g = testutil::load_fixture(name);
            const Rational v = imcn::chi_int_star(g).value;
            ok &= expect(v <= Rational(imcn::chi_via_orientations(g).chi, 1),
                         "value exceeds chi on " + name, why);
            for (int k = 1; k <= 3; ++k) {
                ok &= expect(v <= Rational(imcn::chi_int_k(g, k).value, k),
                             "value exceeds the k=" + std::to_string(k) + " ratio on " + name, why);
            }
        }
        return ok;
    });

    return failures;
}
