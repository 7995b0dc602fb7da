#include "sepdim/separation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace sepdim {

bool separates(const Permutation& sigma, const Edge& e, const Edge& f) {
    if (share_vertex(e, f))
        throw domain_error("separates: edges share a vertex; separation is defined only "
                           "for disjoint pairs");
    const auto& rank = sigma.ranks();
    int elo = std::min(rank[static_cast<std::size_t>(e.u)], rank[static_cast<std::size_t>(e.v)]);
    int ehi = std::max(rank[static_cast<std::size_t>(e.u)], rank[static_cast<std::size_t>(e.v)]);
    int flo = std::min(rank[static_cast<std::size_t>(f.u)], rank[static_cast<std::size_t>(f.v)]);
    int fhi = std::max(rank[static_cast<std::size_t>(f.u)], rank[static_cast<std::size_t>(f.v)]);
    return ehi < flo || fhi < elo;
}

std::string to_string(const SuitabilityVerdict& v) {
    if (v.suitable) return "SUITABLE";
    std::string s = "NOT-SUITABLE";
    if (v.witness) {
        const auto& [e, f] = *v.witness;
        s += " e=(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
        s += " f=(" + std::to_string(f.u) + "," + std::to_string(f.v) + ")";
    }
    return s;
}

SuitabilityVerdict is_pairwise_suitable(const PermutationFamily& fam, const Graph& g) {
    if (fam.n != g.vertex_count())
        throw domain_error("family over " + std::to_string(fam.n) +
                           " vertices does not match graph on " +
                           std::to_string(g.vertex_count()));
    for (const Permutation& p : fam.members)
        if (p.size() != g.vertex_count())
            throw domain_error("family member size mismatch");

    DisjointPairUniverse universe(g);
    const auto& edges = g.edges();

    // Per-pair scan with early exit. Members are probed from the back first:
    // construction pipelines put their broad-coverage permutations last, so
    // this is usually much faster, and the verdict does not depend on order.
    for (std::size_t idx = 0; idx < universe.size(); ++idx) {
        auto [i, j] = universe.pair_at(idx);
        const Edge& e = edges[static_cast<std::size_t>(i)];
        const Edge& f = edges[static_cast<std::size_t>(j)];
        bool covered = false;
        for (auto it = fam.members.rbegin(); it != fam.members.rend(); ++it) {
            if (separates(*it, e, f)) {
                covered = true;
                break;
            }
        }
        if (!covered) return SuitabilityVerdict{false, std::make_pair(e, f)};
    }
    return SuitabilityVerdict{true, std::nullopt};
}

SeparatingEmbedding family_to_embedding(const PermutationFamily& fam) {
    if (fam.members.empty()) throw domain_error("family_to_embedding: empty family");
    SeparatingEmbedding emb;
    emb.k = static_cast<int>(fam.members.size());
    emb.coords.assign(static_cast<std::size_t>(fam.n),
                      std::vector<int>(static_cast<std::size_t>(emb.k), 0));
    for (int axis = 0; axis < emb.k; ++axis) {
        const Permutation& p = fam.members[static_cast<std::size_t>(axis)];
        if (p.size() != fam.n) throw domain_error("family member size mismatch");
        for (int v = 0; v < fam.n; ++v)
            emb.coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(axis)] = p.rank_of(v);
    }
    return emb;
}

PermutationFamily embedding_to_family(const SeparatingEmbedding& emb) {
    PermutationFamily fam;
    fam.n = static_cast<int>(emb.coords.size());
    for (const auto& row : emb.coords)
        if (static_cast<int>(row.size()) != emb.k)
            throw domain_error("embedding row has wrong length");
    for (int axis = 0; axis < emb.k; ++axis) {
        std::vector<int> order(static_cast<std::size_t>(fam.n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return emb.coords[static_cast<std::size_t>(a)][static_cast<std::size_t>(axis)] <
                   emb.coords[static_cast<std::size_t>(b)][static_cast<std::size_t>(axis)];
        });
        fam.members.emplace_back(std::move(order));
    }
    return fam;
}

SuitabilityVerdict verify_embedding(const SeparatingEmbedding& emb, const Graph& g) {
    if (static_cast<int>(emb.coords.size()) != g.vertex_count())
        throw domain_error("embedding covers " + std::to_string(emb.coords.size()) +
                           " vertices, graph has " + std::to_string(g.vertex_count()));
    DisjointPairUniverse universe(g);
    const auto& edges = g.edges();
    auto coord = [&](int v, int axis) {
        return emb.coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(axis)];
    };
    for (std::size_t idx = 0; idx < universe.size(); ++idx) {
        auto [i, j] = universe.pair_at(idx);
        const Edge& e = edges[static_cast<std::size_t>(i)];
        const Edge& f = edges[static_cast<std::size_t>(j)];
        bool covered = false;
        for (int axis = 0; axis < emb.k && !covered; ++axis) {
            int elo = std::min(coord(e.u, axis), coord(e.v, axis));
            int ehi = std::max(coord(e.u, axis), coord(e.v, axis));
            int flo = std::min(coord(f.u, axis), coord(f.v, axis));
            int fhi = std::max(coord(f.u, axis), coord(f.v, axis));
            covered = ehi < flo || fhi < elo;
        }
        if (!covered) return SuitabilityVerdict{false, std::make_pair(e, f)};
    }
    return SuitabilityVerdict{true, std::nullopt};
}

std::vector<Edge> short_edges(const Graph& g, const Permutation& sigma, int max_gap) {
    if (max_gap < 0) throw domain_error("short_edges: negative threshold");
    std::vector<Edge> out;
    const auto& rank = sigma.ranks();
    for (const Edge& e : g.edges()) {
        int gap = std::abs(rank[static_cast<std::size_t>(e.u)] -
                           rank[static_cast<std::size_t>(e.v)]);
        if (gap <= max_gap) out.push_back(e);
    }
    return out;
}

}  // namespace sepdim
