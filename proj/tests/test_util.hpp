#pragma once

#include <numeric>
#include <vector>

#include "sepdim/graph.hpp"
#include "sepdim/rng.hpp"

namespace sepdim::testutil {

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
    return Graph::from_pairs(n, pairs);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
    return Graph::from_pairs(n, pairs);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return Graph::from_pairs(n, pairs);
}

inline Graph matching_graph(int edges) {
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < edges; ++e) pairs.emplace_back(2 * e, 2 * e + 1);
    return Graph::from_pairs(2 * edges, pairs);
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v <= leaves; ++v) pairs.emplace_back(0, v);
    return Graph::from_pairs(leaves + 1, pairs);
}

// Uniform graph with a fixed number of edges drawn without replacement.
inline Graph random_graph(int n, int edges, std::uint64_t seed) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::mt19937_64 rng(mix_seed(seed));
    shuffle_vector(all, rng);
    all.resize(static_cast<std::size_t>(std::min<std::size_t>(all.size(),
                                                              static_cast<std::size_t>(edges))));
    return Graph::from_pairs(n, all);
}

inline std::vector<int> random_order(int n, std::mt19937_64& rng) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    shuffle_vector(order, rng);
    return order;
}

}  // namespace sepdim::testutil
