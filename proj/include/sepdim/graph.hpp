#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sepdim/errors.hpp"

namespace sepdim {

// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonicalizing constructor; rejects self-loops.
Edge make_edge(int u, int v);

bool share_vertex(const Edge& e, const Edge& f);

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Validates range, rejects self-loops and duplicates; edges are stored
    // sorted lexicographically and the adjacency lists sorted ascending.
    Graph(int n, std::vector<Edge> edges);

    static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;

    // Degree if the graph is regular (all degrees equal; n = 0 counts as 0-regular).
    std::optional<int> regular_degree() const;

    bool has_edge(int u, int v) const;

    // Index into edges() of {u,v}, or -1.
    int edge_index(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Labeled partition of 0..n-1 into parts 0..parts-1; parts may be empty.
struct Partition {
    std::vector<int> part_of;
    int parts = 0;
};

// Throws domain_error unless part_of covers exactly n vertices with values in range.
void validate_partition(const Partition& p, int n);

// Vertex lists per part, each sorted ascending.
std::vector<std::vector<int>> partition_classes(const Partition& p);

// Proper edge coloring; color_of is indexed by the graph's canonical edge order.
struct EdgeColoring {
    std::vector<int> color_of;
    int colors = 0;
};

// Induced subgraph with its vertex relabeling. `to_global[local] = original id`,
// `to_local[original] = local id or -1`.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_global;
    std::vector<int> to_local;
};

// `vertices` need not be sorted; duplicates are rejected.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Vertices of the result are the edges of g in canonical order; adjacency iff
// the edges share an endpoint.
Graph line_graph(const Graph& g);

// Relabel vertices: new id of v is `relabel[v]` (a bijection).
Graph relabel_graph(const Graph& g, const std::vector<int>& relabel);

}  // namespace sepdim
