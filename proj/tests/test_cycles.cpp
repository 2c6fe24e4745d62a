#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "imcn/cycles.hpp"
#include "imcn/oracle.hpp"
#include "imcn/orientation.hpp"
#include "test_util.hpp"

using imcn::Graph;
using imcn::Orientation;
using imcn::SimpleCycle;
using imcn::canonical_cycle;
using imcn::cap_exceeded;
using imcn::enumerate_simple_cycles;
using imcn::input_error;

TEST_CASE("cycle counts on known graphs") {
    CHECK(enumerate_simple_cycles(testutil::cycle_graph(5)).size() == 1);
    CHECK(enumerate_simple_cycles(testutil::cycle_graph(7)).size() == 1);
    CHECK(enumerate_simple_cycles(testutil::path_graph(4)).empty());
    CHECK(enumerate_simple_cycles(testutil::load_fixture("tree.col")).empty());
    CHECK(enumerate_simple_cycles(testutil::complete_graph(4)).size() == 7);
    CHECK(enumerate_simple_cycles(testutil::complete_graph(5)).size() == 37);
    CHECK(enumerate_simple_cycles(testutil::load_fixture("p2c3.col")).size() == 1);
}

TEST_CASE("listing is canonical and sorted") {
    const auto k4 = enumerate_simple_cycles(testutil::complete_graph(4));
    std::vector<std::string> got;
    for (const auto& c : k4) got.push_back(c.str());
    const std::vector<std::string> want = {"0,1,2",   "0,1,2,3", "0,1,3", "0,1,3,2",
                                           "0,2,1,3", "0,2,3",   "1,2,3"};
    CHECK(got == want);

    const auto bowtie = enumerate_simple_cycles(testutil::load_fixture("bowtie.col"));
    REQUIRE(bowtie.size() == 2);
    CHECK(bowtie[0].str() == "0,1,2");
    CHECK(bowtie[1].str() == "2,3,4");
}

TEST_CASE("canonicalization fixes rotation and reflection") {
    const Graph c5 = testutil::cycle_graph(5);
    const SimpleCycle want{{0, 1, 2, 3, 4}};
    CHECK(canonical_cycle(c5, {3, 4, 0, 1, 2}) == want);
    CHECK(canonical_cycle(c5, {0, 4, 3, 2, 1}) == want);
    CHECK(canonical_cycle(c5, {2, 1, 0, 4, 3}) == want);
    CHECK(canonical_cycle(testutil::complete_graph(4), {2, 3, 1}) == SimpleCycle{{1, 2, 3}});
}

TEST_CASE("canonicalization validates the sequence") {
    const Graph c5 = testutil::cycle_graph(5);
    CHECK_THROWS_AS(canonical_cycle(c5, {0, 1}), input_error);
    CHECK_THROWS_AS(canonical_cycle(c5, {0, 1, 1}), input_error);
    CHECK_THROWS_AS(canonical_cycle(c5, {0, 1, 3}), input_error);       // 1-3 not adjacent
    CHECK_THROWS_AS(canonical_cycle(c5, {1, 2, 3, 4}), input_error);    // wrap 4-1 missing
    CHECK_THROWS_AS(canonical_cycle(c5, {0, 1, 2, 9}), input_error);
}

TEST_CASE("enumeration agrees with the permutation reference") {
    for (const Graph& g : testutil::all_graphs(5))
        CHECK(enumerate_simple_cycles(g) == imcn::oracle::brute_cycles(g));
    for (const std::string& name : testutil::fixture_names()) {
        const Graph g = testutil::load_fixture(name);
        CHECK(enumerate_simple_cycles(g) == imcn::oracle::brute_cycles(g));
    }
}

TEST_CASE("cycle cap aborts instead of truncating") {
    imcn::Caps caps;
    caps.max_cycles = 3;
    CHECK_THROWS_AS(enumerate_simple_cycles(testutil::complete_graph(4), caps), cap_exceeded);
    CHECK(enumerate_simple_cycles(testutil::cycle_graph(6), caps).size() == 1);
}

TEST_CASE("cycle steps name edges and travel directions") {
    const Graph c4 = testutil::cycle_graph(4);
    const auto steps = imcn::cycle_steps(c4, SimpleCycle{{0, 1, 2, 3}});
    // Canonical edges: (0,1) (0,3) (1,2) (2,3).
    CHECK(steps.edge == std::vector<int>{0, 2, 3, 1});
    CHECK(steps.forward == std::vector<bool>{true, true, true, false});
}

TEST_CASE("direction counts on explicit orientations") {
    const Graph c4 = testutil::cycle_graph(4);
    const SimpleCycle c{{0, 1, 2, 3}};
    CHECK(imcn::direction_counts(c, Orientation(c4, {false, false, false, false})) ==
          std::pair<int, int>{1, 3});
    CHECK(imcn::direction_counts(c, Orientation(c4, {true, true, false, true})) ==
          std::pair<int, int>{2, 2});

    const Graph k3 = testutil::complete_graph(3);
    CHECK(imcn::direction_counts(SimpleCycle{{0, 1, 2}}, Orientation(k3, {true, true, true})) ==
          std::pair<int, int>{2, 1});
}

TEST_CASE("both direction-count overloads agree") {
    const Graph g = testutil::load_fixture("bowtie.col");
    const auto cycles = enumerate_simple_cycles(g);
    for (const Orientation& o : imcn::enumerate_acyclic(g)) {
        for (const auto& c : cycles) {
            const auto steps = imcn::cycle_steps(g, c);
            CHECK(imcn::direction_counts(c, o) == imcn::direction_counts(steps, o.dirs()));
        }
    }
}

TEST_CASE("acyclic orientations split every cycle both ways") {
    const std::vector<Graph> graphs = {testutil::cycle_graph(5), testutil::complete_graph(4)};
    for (const Graph& g : graphs) {
        const auto cycles = enumerate_simple_cycles(g);
        for (const Orientation& o : imcn::enumerate_acyclic(g)) {
            for (const auto& c : cycles) {
                const auto [plus, minus] = imcn::direction_counts(c, o);
                CHECK(plus + minus == c.size());
                CHECK(plus >= 1);
                CHECK(minus >= 1);
            }
        }
    }
}
