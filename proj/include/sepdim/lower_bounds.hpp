#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepdim/graph.hpp"
#include "sepdim/permutation.hpp"

namespace sepdim {

inline constexpr int kDefaultExpansionCap = 14;

enum class ExpansionMode { exhaustive, sampled };

// Small-set expansion check: every S with 2 <= |S| <= floor(eps*n) spans at
// most (1+delta)|S| internal edges.
struct ExpansionCertificate {
    double delta = 0;
    double eps = 0;
    ExpansionMode mode = ExpansionMode::exhaustive;
    int max_subset_size = 0;  // floor(eps * n)
    std::uint64_t checked_sets = 0;
    bool holds = false;
    std::vector<int> witness;       // violating subset, ascending ids
    std::size_t witness_edges = 0;  // internal edges of the witness
    std::uint64_t samples = 0;      // sampled mode only
    std::uint64_t seed = 0;         // sampled mode only
};

std::string to_string(const ExpansionCertificate& cert);

// Exhaustive mode enumerates subsets by size (2 upward) with incremental
// edge counts, stopping at the first violation; it requires
// floor(eps*n) <= exhaustive_cap. Sampled mode draws random subsets and can
// never back a certified bound.
ExpansionCertificate verify_expansion(const Graph& g, double delta, double eps,
                                      ExpansionMode mode,
                                      int exhaustive_cap = kDefaultExpansionCap,
                                      std::uint64_t samples = 1000, std::uint64_t seed = 0);

// Audit of the short-edge counting step: with threshold floor(delta*eps*n),
// the number of sigma-short edges is at most ((1+delta)/(1-delta)) n
// whenever the expansion certificate holds. Also exposes the overlapping
// block decomposition behind the count.
struct ShortEdgeBoundReport {
    int threshold = 0;  // floor(delta * eps * n)
    std::size_t short_count = 0;
    double bound = 0;  // ((1+delta)/(1-delta)) * n
    bool holds = false;
    int block_size = 0;  // b = floor(eps * n)
    int overlap = 0;     // floor(delta * b)
    std::vector<std::pair<int, int>> blocks;  // [start, end) rank ranges
    bool blocks_cover_short = false;  // every short edge inside some block
};

// Requires an exhaustive, holding certificate for the same (delta, eps)
// and delta < 1; throws precondition_error otherwise.
ShortEdgeBoundReport short_edge_count_bound(const Graph& g, const Permutation& sigma,
                                            double delta, double eps,
                                            const ExpansionCertificate& cert);

// Long edges (sigma-short for no family member, threshold floor(delta*eps*n))
// of the proper-edge-coloring class holding the most of them.
struct LongMatchingReport {
    std::vector<Edge> matching;  // long edges of the chosen class
    int color = -1;
    std::size_t total_long = 0;
    int short_threshold = 0;
    double class_threshold = 0;  // n / (4 (max_degree + 1))
    bool meets_threshold = false;
};

LongMatchingReport long_matching(const Graph& g, const PermutationFamily& fam, double delta,
                                 double eps);

// H_sigma: vertices are the matching edges, adjacency iff sigma separates.
struct SeparationGraph {
    std::vector<Edge> labels;            // the matching, canonical order
    std::vector<std::vector<char>> adj;  // symmetric |L| x |L|
    std::vector<std::pair<int, int>> h_edges;  // adjacency as index pairs i < j
};

// Throws domain_error when the edges are not pairwise disjoint.
SeparationGraph separation_graph(const std::vector<Edge>& matching, const Permutation& sigma);

// Crossing-point audit: with stride s = floor(delta*eps*n), every long edge
// spans some position js; edges over a common point have intersecting rank
// intervals, so each group is independent in H_sigma.
struct CrossingAudit {
    int stride = 0;
    std::size_t group_limit = 0;  // ceil(1 / (delta * eps))
    std::vector<int> point_of;    // spanned crossing position per matching index
    std::vector<std::pair<int, std::vector<int>>> groups;  // position -> members
    bool groups_independent = false;
    bool within_limit = false;
};

// Requires stride >= 1 and every matching edge long (rank gap > stride).
CrossingAudit crossing_point_audit(const SeparationGraph& h, const Permutation& sigma,
                                   double delta, double eps);

// The lower-bound pipeline's hypothesis checklist. implied_bound is set to
// ceil(d/2) only when every hypothesis holds; it never reports a bound it
// cannot justify.
struct LowerBoundCertificate {
    int n = 0;
    int d = -1;  // regular degree, -1 when not regular
    double delta = 0;
    double eps = 0;
    double size_threshold = 0;  // 4(d+1) (1/(delta*eps))^(d/2)

    enum class Status { passed, failed, skipped };
    struct Hypothesis {
        std::string name;
        Status status = Status::skipped;
        std::string detail;
    };
    std::vector<Hypothesis> hypotheses;
    std::optional<int> implied_bound;
    std::optional<ExpansionCertificate> expansion;
    std::string failure;  // name of the first failed hypothesis, empty if none
};

std::string to_string(const LowerBoundCertificate& cert);

LowerBoundCertificate certified_lower_bound(const Graph& g, double delta, double eps,
                                            int exhaustive_cap = kDefaultExpansionCap);

// Certifies sdim(g) > k by exhausted search (delegates to the exact solver).
bool exhaustive_lower_bound(const Graph& g, int k);

}  // namespace sepdim
