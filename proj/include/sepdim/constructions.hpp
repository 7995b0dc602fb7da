#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sepdim/graph.hpp"
#include "sepdim/permutation.hpp"

namespace sepdim {

// ── Partitioning ────────────────────────────────────────────────────

struct PartitionSpec {
    int parts = 1;                   // r
    int neighbor_cap = 1;            // t: allow |N(v) ∩ V_i| <= t
    std::uint64_t max_resamples = 0; // 0 = 50 * n
    std::uint64_t seed = 0;
};

struct LllStats {
    std::uint64_t resamples = 0;
};

// Moser-Tardos resampling: start from a uniform random part assignment;
// while some (v, part) violates the neighbor cap, take the lexicographically
// least violated pair and re-randomize the parts of N(v). Throws cap_error
// when max_resamples is exhausted (parameters outside the LLL regime).
Partition lll_partition(const Graph& g, const PartitionSpec& spec, LllStats* stats = nullptr);

// Closed forms behind the log-degree partition: r = ceil(400 d / log2 d),
// t = max(1, floor(log2(d) / 2)), and the multiplicative Chernoff bound
// c_delta^mu with mu = d/r and 1 + delta = t/mu. Pure arithmetic; `parts` is
// a double because r overflows 64-bit integers for degrees near 2^64.
struct PartitionPlan {
    double parts = 0;
    int neighbor_cap = 0;
    double failure_log2 = 0;   // log2 of the Chernoff bound
    double failure_bound = 0;  // may underflow to zero at astronomical degrees
};
PartitionPlan plan_partition_params(double max_degree);

// ── Part-level permutation families ─────────────────────────────────

struct PartPermutationFamily {
    int parts = 0;
    std::vector<Permutation> members;
    // Set only after explicit verification.
    bool triple_scrambling_verified = false;  // (a) every ordered triple realized
    bool pair_separation_verified = false;    // (b) every two disjoint part pairs separated
};

// Independent checkers used both by the sampler and by tests; they
// enumerate all ordered triples / all disjoint pair-pairs.
bool check_triple_scrambling(const PartPermutationFamily& fam);
bool check_pair_separation(const PartPermutationFamily& fam);

// Samples ceil(12 log2 max(r,2)) + 4 uniform permutations of the parts and
// verifies both properties, growing the sample by 2 on failure, at most 20
// rounds. For r <= 2 both properties are vacuous and the family is empty.
PartPermutationFamily scrambling_part_family(int parts, std::uint64_t seed);

// ── Combination and constructions ───────────────────────────────────

struct ConstructionReport {
    PermutationFamily family;
    std::size_t size = 0;
    std::size_t pair_block_rounds = 0;  // ingredient (A) member count
    std::size_t part_family_size = 0;   // ingredient (B) member count
    int recursion_depth = 0;
    bool verified = false;
};

std::string to_string(const ConstructionReport& report);

// Pair families keyed by part pairs {i,j} with i < j ({0,0} when r == 1).
// Each member is an order of the global vertex ids of V_i ∪ V_j and the
// family must be pairwise suitable for the induced subgraph.
using PairFamilies = std::map<std::pair<int, int>, std::vector<std::vector<int>>>;

// Builds a family that is pairwise suitable for the whole graph:
//   (A) for each color class of a round-robin edge coloring of the complete
//       graph on parts and each round u < max |F_ij|, concatenate the u-th
//       member of each matched pair family (cycling shorter families), with
//       unmatched parts appended in canonical order; handles pairs spanning
//       at most two parts.
//   (B) each part-family member lifted to a global permutation (parts in
//       member order, ids ascending inside each part); the triple-scrambling
//       property covers pairs spanning three parts and the pair-separation
//       property those spanning four.
// Missing map entries count as empty families. Throws precondition_error on
// an unsuitable pair family or unverified part family, verification_error
// if the combined family fails the final suitability check.
ConstructionReport combine_partition_families(const Graph& g, const Partition& p,
                                              const PairFamilies& pair_families,
                                              const PartPermutationFamily& part_family);

// Distance-two coloring baseline: pair unions of color classes are matchings,
// so every pair family is a single permutation laying the matched edges out
// consecutively.
ConstructionReport construct_distance_two(const Graph& g);

struct RecursionConfig {
    int base_cutoff = 8;
    // The asymptotic analysis uses c1 = 400 and c2 = 0.5; those defaults are
    // kept but are only sensible for astronomical degrees, so desk-scale runs
    // override them.
    double c1 = 400.0;
    double c2 = 0.5;
    std::uint64_t max_resamples = 0;  // 0 = 50 * n per level
    std::uint64_t seed = 0;
};

// Bounded-degree recursion: distance-two baseline at or below the cutoff;
// otherwise partition with lll_partition at r = ceil(c1 d / log2 d),
// t = max(1, floor(c2 log2 d)), recurse on every pair union (max degree at
// most 2t) and combine.
ConstructionReport construct_bounded_degree(const Graph& g, const RecursionConfig& cfg = {});

// Round-robin (circle method) proper edge coloring of the complete graph on
// r parts; at most r color classes, each a matching of part pairs (i < j).
std::vector<std::vector<std::pair<int, int>>> round_robin_schedule(int r);

// ── Closed-form bound ───────────────────────────────────────────────

// Iterated logarithm base 2: applications of log2 until the value is <= 1.
int iterated_log2(std::uint64_t d);

// min(2^(9 log2* d) * d, (4d-4)(ceil(log2 log2 (2d-2)) + 3) + 1), and 1 for
// d = 1. Exact integer arithmetic.
std::uint64_t upper_bound_formula(std::uint64_t d);

}  // namespace sepdim
