#include <random>
#include <vector>

#include "doctest.h"
#include "imcn/evaluators.hpp"
#include "imcn/gen.hpp"
#include "imcn/ser.hpp"
#include "test_util.hpp"

using imcn::Graph;
using imcn::Orientation;
using imcn::Rational;
using imcn::cap_exceeded;
using imcn::input_error;

TEST_CASE("single sinks walk around small graphs") {
    const Graph p2(2, {{0, 1}});
    CHECK(imcn::ser_step(Orientation(p2, {true})).str() == "1>0");
    CHECK(imcn::ser_step(Orientation(p2, {false})).str() == "0>1");

    const Graph p3 = testutil::path_graph(3);
    // 0->1<-2: node 1 is the lone sink and flips both incident edges.
    CHECK(imcn::ser_step(Orientation(p3, {true, false})).str() == "1>0,1>2");
}

TEST_CASE("steps preserve acyclicity and sinks are never adjacent") {
    std::vector<Graph> graphs = testutil::all_graphs(4, 1);
    graphs.push_back(testutil::cycle_graph(5));
    for (const Graph& g : graphs) {
        for (const Orientation& o : imcn::enumerate_acyclic(g)) {
            const auto sinks = o.sinks();
            for (size_t i = 0; i < sinks.size(); ++i)
                for (size_t j = i + 1; j < sinks.size(); ++j)
                    CHECK_FALSE(g.has_edge(sinks[i], sinks[j]));
            CHECK(imcn::is_acyclic(g, imcn::ser_step(o).dirs()));
        }
    }
}

TEST_CASE("runs split into transient and period") {
    const Graph p2(2, {{0, 1}});
    const auto run = imcn::ser_run(Orientation(p2, {true}));
    CHECK(run.states.size() == 3);
    CHECK(run.tail_start == 0);
    CHECK(run.period == 2);
    CHECK(run.ops_per_node == std::vector<int>{1, 1});
    CHECK(run.initial().str() == "0>1");
    CHECK(run.states[run.tail_start + run.period] == run.states[run.tail_start]);
}

TEST_CASE("balanced ring alternates at half concurrency") {
    const Graph c4 = testutil::cycle_graph(4);
    const auto run = imcn::ser_run(Orientation(c4, {true, true, false, true}));
    CHECK(run.tail_start == 0);
    CHECK(run.period == 2);
    CHECK(run.ops_per_node == std::vector<int>{1, 1, 1, 1});
    CHECK(imcn::concurrency(run) == Rational(1, 2));
}

TEST_CASE("pentagon witness settles at two fifths") {
    const Graph c5 = testutil::cycle_graph(5);
    const auto run = imcn::ser_run(Orientation::from_string(c5, "1>0,4>0,2>1,3>2,3>4"));
    CHECK(run.states.size() == 7);
    CHECK(run.tail_start == 1);
    CHECK(run.period == 5);
    CHECK(imcn::concurrency(run) == Rational(2, 5));
}

TEST_CASE("step budget aborts cleanly") {
    const Graph p2(2, {{0, 1}});
    CHECK_THROWS_AS(imcn::ser_run(Orientation(p2, {true}), 1), cap_exceeded);
    CHECK_NOTHROW(imcn::ser_run(Orientation(p2, {true}), 2));
}

TEST_CASE("concurrency demands one component with a cycle") {
    const Graph p2(2, {{0, 1}});
    CHECK_THROWS_AS(imcn::concurrency(imcn::ser_run(Orientation(p2, {true}))), input_error);
    const Graph g = testutil::load_fixture("p2c3.col");
    const auto o = imcn::enumerate_acyclic(g).front();
    CHECK_THROWS_AS(imcn::concurrency(imcn::ser_run(o)), input_error);
    CHECK_THROWS_AS(imcn::best_concurrency(testutil::path_graph(4)), input_error);
    CHECK_THROWS_AS(imcn::best_concurrency(g), input_error);
}

TEST_CASE("every wheel turns at the same rate") {
    const Graph c5 = testutil::cycle_graph(5);
    for (const Orientation& o : imcn::enumerate_acyclic(c5)) {
        const auto run = imcn::ser_run(o);
        for (int ops : run.ops_per_node) CHECK(ops == run.ops_per_node[0]);
        CHECK(run.ops_per_node[0] >= 1);
    }
}

TEST_CASE("concurrency equals the inverse cycle ratio orientation by orientation") {
    std::vector<Graph> graphs = {testutil::cycle_graph(4), testutil::cycle_graph(5),
                                 testutil::complete_graph(4),
                                 testutil::load_fixture("bowtie.col")};
    for (const Graph& g : graphs) {
        const auto cycles = imcn::enumerate_simple_cycles(g);
        for (const Orientation& o : imcn::enumerate_acyclic(g)) {
            const auto score = imcn::orientation_score(g, o, cycles).first;
            CHECK(imcn::concurrency(imcn::ser_run(o)) == score.reciprocal());
        }
    }
}

TEST_CASE("best concurrency inverts the interleaved value") {
    imcn::ScanStats stats;
    const auto [best, witness] = imcn::best_concurrency(testutil::cycle_graph(4), {}, &stats);
    CHECK(best == Rational(1, 2));
    CHECK(witness.str() == "1>0,3>0,2>1,2>3");
    CHECK(stats.orientations == 14);

    std::mt19937 rng(9);
    std::vector<Graph> graphs = {testutil::cycle_graph(5), testutil::complete_graph(4)};
    for (int i = 0; i < 6; ++i) graphs.push_back(imcn::gen_connected_cyclic(5, 6, rng));
    for (const Graph& g : graphs) {
        CHECK(imcn::best_concurrency(g).first == imcn::chi_int_star(g).value.reciprocal());
    }
}
