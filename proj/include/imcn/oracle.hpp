#pragma once

#include <vector>

#include "imcn/cycles.hpp"
#include "imcn/graph.hpp"

namespace imcn::oracle {

// Reference implementations for cross-checking. Deliberately written with
// different algorithms than the main modules and restricted to tiny inputs.

// Minimum palette for a (plain or interleaved) k-tuple coloring, by
// backtracking over k-subsets of an increasing color budget. Hard caps
// n <= 6, k <= 3.
int brute_chi_k(const Graph& g, int k, bool interleaved);

// Exact chromatic number by backtracking with an increasing budget. n <= 10.
int brute_chromatic(const Graph& g);

// Simple cycles found by testing every node subset of size >= 3 for a
// spanning cyclic order (permutation check). n <= 8.
std::vector<SimpleCycle> brute_cycles(const Graph& g);

// Count of direction vectors passing a recursive directed-DFS cycle test
// (not the peeling check the main enumerator uses). |E| <= 12.
long long brute_acyclic_count(const Graph& g);

}  // namespace imcn::oracle
