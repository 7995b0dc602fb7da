#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "sepdim/graph.hpp"
#include "sepdim/permutation.hpp"

namespace sepdim {

inline constexpr int kDefaultExactVertexCap = 10;
inline constexpr int kNoSolveLimit = std::numeric_limits<int>::max();

struct SearchStats {
    std::uint64_t nodes = 0;                    // set-cover search nodes
    std::size_t permutations_enumerated = 0;    // after the reversal halving
    std::size_t distinct_coverage_sets = 0;
    std::size_t candidates_after_domination = 0;
};

struct SolveResult {
    // Exact separation dimension when it is <= limit.
    std::optional<int> value;
    // True when the search exhausted all families of size <= limit, proving
    // sdim > limit.
    bool exceeded_limit = false;
    int limit = kNoSolveLimit;
    // Optimal witness family (empty when value is 0 or unset). Verified
    // suitable and of size exactly `value`.
    PermutationFamily family;
    SearchStats stats;
};

// Exact separation dimension by exhaustive coverage-set enumeration and
// minimum set cover: enumerate all n! permutations (one per reversal pair),
// deduplicate identical coverage sets, drop dominated ones, then iterative
// deepening with a greedy upper bound and the admissible bound
// ceil(uncovered / max coverage). Deterministic value and witness.
SolveResult sdim_exact(const Graph& g, int limit = kNoSolveLimit,
                       int vertex_cap = kDefaultExactVertexCap);

// Test oracle: true iff some k-subset of the distinct coverage sets covers
// every disjoint pair, by plain enumeration with no pruning. Requires
// n <= 7 and k <= 3.
bool sdim_brute(const Graph& g, int k);

}  // namespace sepdim
