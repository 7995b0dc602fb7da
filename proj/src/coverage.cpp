#include "sepdim/coverage.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace sepdim {

namespace {
constexpr int kMatrixEdgeLimit = 4096;  // 64 MB of int32 at the limit
}

DisjointPairUniverse::DisjointPairUniverse(const Graph& g) : edge_count_(g.edge_count()) {
    const auto& edges = g.edges();
    const int m = edge_count_;
    row_begin_.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 0; i < m; ++i) {
        row_begin_[static_cast<std::size_t>(i)] = static_cast<int>(pairs_.size());
        for (int j = i + 1; j < m; ++j)
            if (!share_vertex(edges[static_cast<std::size_t>(i)], edges[static_cast<std::size_t>(j)]))
                pairs_.emplace_back(i, j);
    }
    row_begin_[static_cast<std::size_t>(m)] = static_cast<int>(pairs_.size());

    use_matrix_ = m <= kMatrixEdgeLimit && m > 0;
    if (use_matrix_) {
        matrix_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
        for (std::size_t idx = 0; idx < pairs_.size(); ++idx) {
            auto [i, j] = pairs_[idx];
            matrix_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                    static_cast<std::size_t>(j)] = static_cast<std::int32_t>(idx);
            matrix_[static_cast<std::size_t>(j) * static_cast<std::size_t>(m) +
                    static_cast<std::size_t>(i)] = static_cast<std::int32_t>(idx);
        }
    }
}

int DisjointPairUniverse::index_of(int i, int j) const {
    if (i == j) return -1;
    if (i > j) std::swap(i, j);
    if (use_matrix_)
        return matrix_[static_cast<std::size_t>(i) * static_cast<std::size_t>(edge_count_) +
                       static_cast<std::size_t>(j)];
    auto first = pairs_.begin() + row_begin_[static_cast<std::size_t>(i)];
    auto last = pairs_.begin() + row_begin_[static_cast<std::size_t>(i) + 1];
    auto it = std::lower_bound(first, last, std::pair<int, int>{i, j});
    if (it == last || *it != std::pair<int, int>{i, j}) return -1;
    return static_cast<int>(it - pairs_.begin());
}

CoverageSet::CoverageSet(std::size_t universe_size)
    : universe_(universe_size), words_((universe_size + 63) / 64, 0) {}

void CoverageSet::set(std::size_t idx) {
    words_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
}

bool CoverageSet::test(std::size_t idx) const {
    return (words_[idx >> 6] >> (idx & 63)) & 1;
}

void CoverageSet::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

std::size_t CoverageSet::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool CoverageSet::is_subset_of(const CoverageSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

void CoverageSet::union_with(const CoverageSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

std::size_t CoverageSetHash::operator()(const CoverageSet& s) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : s.words()) {
        h ^= w;
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

CoverageSet coverage(const Permutation& sigma, const Graph& g, const DisjointPairUniverse& u) {
    if (g.edge_count() > kCoverageSweepThreshold) return coverage_sweep(sigma, g, u);
    return coverage_quadratic(sigma, g, u);
}

CoverageSet coverage_quadratic(const Permutation& sigma, const Graph& g,
                               const DisjointPairUniverse& u) {
    CoverageSet out(u.size());
    const auto& edges = g.edges();
    const auto& rank = sigma.ranks();
    for (std::size_t idx = 0; idx < u.size(); ++idx) {
        auto [i, j] = u.pair_at(idx);
        const Edge& e = edges[static_cast<std::size_t>(i)];
        const Edge& f = edges[static_cast<std::size_t>(j)];
        int elo = std::min(rank[static_cast<std::size_t>(e.u)], rank[static_cast<std::size_t>(e.v)]);
        int ehi = std::max(rank[static_cast<std::size_t>(e.u)], rank[static_cast<std::size_t>(e.v)]);
        int flo = std::min(rank[static_cast<std::size_t>(f.u)], rank[static_cast<std::size_t>(f.v)]);
        int fhi = std::max(rank[static_cast<std::size_t>(f.u)], rank[static_cast<std::size_t>(f.v)]);
        if (ehi < flo || fhi < elo) out.set(idx);
    }
    return out;
}

CoverageSet coverage_sweep(const Permutation& sigma, const Graph& g,
                           const DisjointPairUniverse& u) {
    CoverageSet out(u.size());
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const auto& rank = sigma.ranks();

    // Rank interval per edge, bucketed by left and right endpoint position.
    std::vector<std::vector<int>> starts_at(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> ends_at(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) {
        const Edge& e = g.edge(i);
        int lo = std::min(rank[static_cast<std::size_t>(e.u)], rank[static_cast<std::size_t>(e.v)]);
        int hi = std::max(rank[static_cast<std::size_t>(e.u)], rank[static_cast<std::size_t>(e.v)]);
        starts_at[static_cast<std::size_t>(lo)].push_back(i);
        ends_at[static_cast<std::size_t>(hi)].push_back(i);
    }

    // Sweep positions left to right. An edge opening at p is separated from
    // exactly the edges that closed strictly before p; edges closing at p
    // join the closed pool only after p's openers are processed, which makes
    // the shared-position case (hi == lo) count as overlapping.
    std::vector<int> closed;
    closed.reserve(static_cast<std::size_t>(m));
    for (int p = 0; p < n; ++p) {
        for (int opening : starts_at[static_cast<std::size_t>(p)]) {
            for (int done : closed) {
                int idx = u.index_of(done, opening);
                assert(idx >= 0 && "interval-disjoint edges must be vertex-disjoint");
                out.set(static_cast<std::size_t>(idx));
            }
        }
        for (int closing : ends_at[static_cast<std::size_t>(p)]) closed.push_back(closing);
    }
    return out;
}

}  // namespace sepdim
