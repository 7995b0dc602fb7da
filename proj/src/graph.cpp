#include "sepdim/graph.hpp"

#include <algorithm>
#include <string>

namespace sepdim {

Edge make_edge(int u, int v) {
    if (u == v) throw domain_error("edge endpoints must differ: " + std::to_string(u));
    if (u > v) std::swap(u, v);
    return Edge{u, v};
}

bool share_vertex(const Edge& e, const Edge& f) {
    return e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw domain_error("vertex count must be non-negative");
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v)
            throw domain_error("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw domain_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               ") out of range for n=" + std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw domain_error("duplicate edge");
    adj_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (auto [u, v] : pairs) es.push_back(make_edge(u, v));
    return Graph(n, std::move(es));
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
}

void validate_partition(const Partition& p, int n) {
    if (p.parts < 0) throw domain_error("negative part count");
    if (static_cast<int>(p.part_of.size()) != n)
        throw domain_error("partition covers " + std::to_string(p.part_of.size()) +
                           " vertices, expected " + std::to_string(n));
    for (int v = 0; v < n; ++v) {
        int i = p.part_of[static_cast<std::size_t>(v)];
        if (i < 0 || i >= p.parts)
            throw domain_error("vertex " + std::to_string(v) + " assigned to part " +
                               std::to_string(i) + " outside 0.." + std::to_string(p.parts - 1));
    }
}

std::vector<std::vector<int>> partition_classes(const Partition& p) {
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(p.parts));
    for (int v = 0; v < static_cast<int>(p.part_of.size()); ++v)
        classes[static_cast<std::size_t>(p.part_of[static_cast<std::size_t>(v)])].push_back(v);
    return classes;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    InducedSubgraph sub;
    sub.to_global.assign(vertices.begin(), vertices.end());
    std::sort(sub.to_global.begin(), sub.to_global.end());
    if (std::adjacent_find(sub.to_global.begin(), sub.to_global.end()) != sub.to_global.end())
        throw domain_error("duplicate vertex in induced subgraph selection");
    sub.to_local.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int local = 0; local < static_cast<int>(sub.to_global.size()); ++local) {
        int v = sub.to_global[static_cast<std::size_t>(local)];
        if (v < 0 || v >= g.vertex_count())
            throw domain_error("induced subgraph vertex out of range: " + std::to_string(v));
        sub.to_local[static_cast<std::size_t>(v)] = local;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int lu = sub.to_local[static_cast<std::size_t>(e.u)];
        int lv = sub.to_local[static_cast<std::size_t>(e.v)];
        if (lu >= 0 && lv >= 0) edges.push_back(make_edge(lu, lv));
    }
    sub.graph = Graph(static_cast<int>(sub.to_global.size()), std::move(edges));
    return sub;
}

Graph line_graph(const Graph& g) {
    std::vector<Edge> edges;
    for (int v = 0; v < g.vertex_count(); ++v) {
        // All edges incident to v are pairwise adjacent in the line graph.
        std::vector<int> inc;
        for (int w : g.neighbors(v)) inc.push_back(g.edge_index(v, w));
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                edges.push_back(make_edge(inc[a], inc[b]));
    }
    // Each shared endpoint is discovered once (at that vertex), so no duplicates.
    return Graph(g.edge_count(), std::move(edges));
}

Graph relabel_graph(const Graph& g, const std::vector<int>& relabel) {
    if (static_cast<int>(relabel.size()) != g.vertex_count())
        throw domain_error("relabeling size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        edges.push_back(make_edge(relabel[static_cast<std::size_t>(e.u)],
                                  relabel[static_cast<std::size_t>(e.v)]));
    return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace sepdim
