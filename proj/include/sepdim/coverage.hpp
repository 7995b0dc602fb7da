#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sepdim/graph.hpp"
#include "sepdim/permutation.hpp"

namespace sepdim {

// All unordered pairs of vertex-disjoint edges of a graph, indexed in
// lexicographic order on (edge index, edge index). Coverage sets and
// set-cover candidates refer to these indices.
class DisjointPairUniverse {
public:
    explicit DisjointPairUniverse(const Graph& g);

    std::size_t size() const { return pairs_.size(); }
    std::pair<int, int> pair_at(std::size_t idx) const { return pairs_[idx]; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    // Index of the pair with edge indices {i, j}, or -1 when the edges are
    // not vertex-disjoint. O(1) via a dense matrix for small edge counts,
    // binary search otherwise.
    int index_of(int i, int j) const;

private:
    int edge_count_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> row_begin_;  // first pair index with given first edge
    std::vector<std::int32_t> matrix_;  // dense lookup when small enough
    bool use_matrix_ = false;
};

// Bitset over a disjoint-pair universe.
class CoverageSet {
public:
    CoverageSet() = default;
    explicit CoverageSet(std::size_t universe_size);

    std::size_t universe_size() const { return universe_; }
    void set(std::size_t idx);
    bool test(std::size_t idx) const;
    void clear();
    std::size_t count() const;
    bool is_subset_of(const CoverageSet& other) const;
    void union_with(const CoverageSet& other);

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const CoverageSet&, const CoverageSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct CoverageSetHash {
    std::size_t operator()(const CoverageSet& s) const;
};

// Set of disjoint edge pairs separated by sigma. Dispatches to the endpoint
// sweep when the graph has more than `sweep_threshold` edges; the quadratic
// scan and the sweep agree exactly.
inline constexpr int kCoverageSweepThreshold = 512;

CoverageSet coverage(const Permutation& sigma, const Graph& g, const DisjointPairUniverse& u);
CoverageSet coverage_quadratic(const Permutation& sigma, const Graph& g,
                               const DisjointPairUniverse& u);
CoverageSet coverage_sweep(const Permutation& sigma, const Graph& g,
                           const DisjointPairUniverse& u);

}  // namespace sepdim
