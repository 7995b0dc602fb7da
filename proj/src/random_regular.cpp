#include "sepdim/random_regular.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sepdim/rng.hpp"

namespace sepdim {

namespace {

// One pairing pass. Returns the edges, or nullopt on a dead end.
std::optional<std::vector<Edge>> try_pairing(int n, int d, std::mt19937_64& rng) {
    std::vector<int> points;  // d copies of each vertex
    points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) points.push_back(v);

    std::set<std::pair<int, int>> used;
    std::vector<Edge> edges;
    edges.reserve(points.size() / 2);

    std::size_t live = points.size();
    int stale_draws = 0;
    while (live > 0) {
        std::size_t a = static_cast<std::size_t>(uniform_below(rng, live));
        std::size_t b = static_cast<std::size_t>(uniform_below(rng, live));
        int u = points[a];
        int v = points[b];
        bool ok = a != b && u != v && !used.count({std::min(u, v), std::max(u, v)});
        if (!ok) {
            // After enough fruitless draws, scan for any admissible pair so a
            // dead end is detected rather than spun on.
            if (++stale_draws < 64) continue;
            bool exists = false;
            for (std::size_t i = 0; i < live && !exists; ++i)
                for (std::size_t j = i + 1; j < live; ++j) {
                    int x = points[i], y = points[j];
                    if (x != y && !used.count({std::min(x, y), std::max(x, y)})) {
                        exists = true;
                        break;
                    }
                }
            if (!exists) return std::nullopt;
            stale_draws = 0;
            continue;
        }
        stale_draws = 0;
        used.insert({std::min(u, v), std::max(u, v)});
        edges.push_back(make_edge(u, v));
        // Remove both points; fill the higher slot first so the reads below
        // see the right survivors.
        if (a < b) std::swap(a, b);
        points[a] = points[live - 1];
        points[b] = points[live - 2];
        live -= 2;
    }
    return edges;
}

}  // namespace

Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts) {
    if (n < 0 || d < 0) throw domain_error("n and d must be non-negative");
    if (static_cast<long long>(n) * d % 2 != 0)
        throw domain_error("n*d must be even: n=" + std::to_string(n) +
                           " d=" + std::to_string(d));
    if (d >= n && !(d == 0 && n >= 0))
        throw domain_error("d-regular graph needs d < n: n=" + std::to_string(n) +
                           " d=" + std::to_string(d));
    if (d == 0) return Graph(n, {});

    std::mt19937_64 rng(mix_seed(seed));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto edges = try_pairing(n, d, rng);
        if (edges) return Graph(n, std::move(*edges));
    }
    throw cap_error("random_regular: no simple pairing after " +
                    std::to_string(max_attempts) + " attempts (n=" + std::to_string(n) +
                    ", d=" + std::to_string(d) + ")");
}

}  // namespace sepdim
