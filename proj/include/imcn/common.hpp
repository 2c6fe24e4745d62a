#pragma once

#include <stdexcept>
#include <string>

namespace imcn {

// Bad or ill-formed input (parse errors, violated preconditions).
// The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive scan would exceed its configured budget.
// The CLI maps this to exit code 2.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check between two independent computations disagreed at runtime.
struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

// Budgets for the exhaustive scans. All analyses here are desk-scale by
// design; the caps turn "too big" into a clean error instead of a hang.
struct Caps {
    // Orientation scans iterate all 2^m direction vectors.
    int max_edges = 20;
    // Guard on |K|; exceeding it aborts instead of truncating.
    long long max_cycles = 1'000'000;
    // Node budget for lexicographic products.
    int max_product_nodes = 4096;
};

// Work counters surfaced in result records.
struct ScanStats {
    long long orientations = 0;
    long long cycles = 0;
};

}  // namespace imcn
