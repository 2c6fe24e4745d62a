#include "doctest.h"
#include "imcn/oracle.hpp"
#include "test_util.hpp"

using imcn::Graph;
using imcn::cap_exceeded;
using imcn::input_error;
namespace oracle = imcn::oracle;

TEST_CASE("brute chromatic numbers") {
    CHECK(oracle::brute_chromatic(testutil::path_graph(3)) == 2);
    CHECK(oracle::brute_chromatic(testutil::cycle_graph(4)) == 2);
    CHECK(oracle::brute_chromatic(testutil::cycle_graph(5)) == 3);
    CHECK(oracle::brute_chromatic(testutil::cycle_graph(7)) == 3);
    CHECK(oracle::brute_chromatic(testutil::complete_graph(4)) == 4);
    CHECK(oracle::brute_chromatic(testutil::complete_graph(5)) == 5);
    CHECK(oracle::brute_chromatic(testutil::load_fixture("bowtie.col")) == 3);
    CHECK(oracle::brute_chromatic(testutil::load_fixture("p2c3.col")) == 3);
    CHECK(oracle::brute_chromatic(testutil::load_fixture("tree.col")) == 2);
    CHECK(oracle::brute_chromatic(Graph(3)) == 1);
}

TEST_CASE("one-tuple search collapses onto the chromatic number") {
    for (const Graph& g : testutil::all_graphs(4)) {
        const int chi = oracle::brute_chromatic(g);
        CHECK(oracle::brute_chi_k(g, 1, false) == chi);
        CHECK(oracle::brute_chi_k(g, 1, true) == chi);
    }
}

TEST_CASE("tuple palettes on cycles and cliques") {
    const Graph c5 = testutil::cycle_graph(5);
    CHECK(oracle::brute_chi_k(c5, 2, false) == 5);
    CHECK(oracle::brute_chi_k(c5, 2, true) == 5);
    CHECK(oracle::brute_chi_k(c5, 3, false) == 8);
    CHECK(oracle::brute_chi_k(c5, 3, true) == 8);

    const Graph c4 = testutil::cycle_graph(4);
    CHECK(oracle::brute_chi_k(c4, 2, false) == 4);
    CHECK(oracle::brute_chi_k(c4, 2, true) == 4);

    const Graph k4 = testutil::complete_graph(4);
    CHECK(oracle::brute_chi_k(k4, 2, false) == 8);
    CHECK(oracle::brute_chi_k(k4, 2, true) == 8);

    CHECK(oracle::brute_chi_k(Graph(2, {{0, 1}}), 3, true) == 6);
}

TEST_CASE("interleaving never lowers the palette") {
    for (const Graph& g : testutil::all_graphs(4, 1))
        for (int k = 1; k <= 2; ++k)
            CHECK(oracle::brute_chi_k(g, k, true) >= oracle::brute_chi_k(g, k, false));
}

TEST_CASE("brute searches enforce their caps") {
    CHECK_THROWS_AS(oracle::brute_chi_k(testutil::path_graph(7), 2, false), cap_exceeded);
    CHECK_THROWS_AS(oracle::brute_chi_k(testutil::path_graph(3), 4, false), cap_exceeded);
    CHECK_THROWS_AS(oracle::brute_chi_k(testutil::path_graph(3), 0, false), input_error);
    CHECK_THROWS_AS(oracle::brute_chromatic(testutil::path_graph(11)), cap_exceeded);
    CHECK_THROWS_AS(oracle::brute_cycles(testutil::path_graph(9)), cap_exceeded);
    CHECK_THROWS_AS(oracle::brute_acyclic_count(testutil::complete_graph(6)), cap_exceeded);
}

TEST_CASE("brute cycle lists on small graphs") {
    CHECK(oracle::brute_cycles(testutil::cycle_graph(5)).size() == 1);
    CHECK(oracle::brute_cycles(testutil::path_graph(5)).empty());
    const auto k4 = oracle::brute_cycles(testutil::complete_graph(4));
    REQUIRE(k4.size() == 7);
    CHECK(k4.front().str() == "0,1,2");
    CHECK(k4.back().str() == "1,2,3");
}

TEST_CASE("brute orientation counts on small graphs") {
    CHECK(oracle::brute_acyclic_count(testutil::complete_graph(3)) == 6);
    CHECK(oracle::brute_acyclic_count(testutil::cycle_graph(4)) == 14);
    CHECK(oracle::brute_acyclic_count(testutil::cycle_graph(5)) == 30);
    CHECK(oracle::brute_acyclic_count(testutil::complete_graph(4)) == 24);
    CHECK(oracle::brute_acyclic_count(testutil::path_graph(3)) == 4);
    CHECK(oracle::brute_acyclic_count(Graph(3)) == 1);
}
