#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepdim/coverage.hpp"
#include "sepdim/graph.hpp"
#include "sepdim/permutation.hpp"

namespace sepdim {

// True iff every vertex of one edge precedes every vertex of the other.
// The two edges must be vertex-disjoint.
bool separates(const Permutation& sigma, const Edge& e, const Edge& f);

struct SuitabilityVerdict {
    bool suitable = false;
    // Present iff not suitable: a disjoint pair separated by no member.
    std::optional<std::pair<Edge, Edge>> witness;
};

// Prints "SUITABLE" or "NOT-SUITABLE e=(u,v) f=(x,y)".
std::string to_string(const SuitabilityVerdict& v);

// Decides Definition-style pairwise suitability of a family for a graph.
// The empty family is suitable exactly when the graph has no two disjoint
// edges. Throws domain_error on a vertex-count mismatch.
SuitabilityVerdict is_pairwise_suitable(const PermutationFamily& fam, const Graph& g);

// k = |family|; coords[v][i] = rank of v in member i. Throws on empty family.
SeparatingEmbedding family_to_embedding(const PermutationFamily& fam);

// One permutation per axis, sorted by coordinate with ties broken by
// ascending vertex id.
PermutationFamily embedding_to_family(const SeparatingEmbedding& emb);

// Suitable iff every disjoint edge pair has some axis on which the two
// coordinate intervals are strictly disjoint.
SuitabilityVerdict verify_embedding(const SeparatingEmbedding& emb, const Graph& g);

// Edges whose endpoint ranks differ by at most max_gap.
std::vector<Edge> short_edges(const Graph& g, const Permutation& sigma, int max_gap);

}  // namespace sepdim
