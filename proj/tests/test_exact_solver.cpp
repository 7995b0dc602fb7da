#include "doctest.h"

#include "sepdim/exact_solver.hpp"
#include "sepdim/separation.hpp"
#include "test_util.hpp"

using namespace sepdim;
using namespace sepdim::testutil;

TEST_CASE("pinned small values (confirmed by the brute oracle)") {
    CHECK(sdim_exact(matching_graph(2)).value == 1);
    CHECK(sdim_exact(cycle_graph(4)).value == 2);
    CHECK(sdim_exact(complete_graph(4)).value == 3);

    CHECK(sdim_brute(matching_graph(2), 0) == false);
    CHECK(sdim_brute(matching_graph(2), 1) == true);
    CHECK(sdim_brute(cycle_graph(4), 1) == false);
    CHECK(sdim_brute(cycle_graph(4), 2) == true);
    CHECK(sdim_brute(complete_graph(4), 2) == false);
    CHECK(sdim_brute(complete_graph(4), 3) == true);
    CHECK(sdim_brute(path_graph(3), 0) == true);
}

TEST_CASE("graphs without two disjoint edges have value 0") {
    for (const Graph& g : {path_graph(3), star_graph(4), cycle_graph(3), Graph(5, {}),
                           Graph::from_pairs(2, {{0, 1}})}) {
        SolveResult r = sdim_exact(g);
        CHECK(r.value == 0);
        CHECK(r.family.members.empty());
    }
}

TEST_CASE("witnesses are optimal families and verified suitable") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_graph(6, 7 + static_cast<int>(seed % 6), seed);
        SolveResult r = sdim_exact(g);
        REQUIRE(r.value.has_value());
        CHECK(static_cast<int>(r.family.members.size()) == *r.value);
        CHECK(is_pairwise_suitable(r.family, g).suitable);
        if (*r.value > 0) {
            PermutationFamily smaller{6, {}};
            for (std::size_t i = 0; i + 1 < r.family.members.size(); ++i)
                smaller.members.push_back(r.family.members[i]);
            CHECK(!is_pairwise_suitable(smaller, g).suitable);
        }
    }
}

TEST_CASE("oracle agreement on random 6-vertex graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(6, 4 + static_cast<int>(seed % 9), 100 + seed);
        SolveResult r = sdim_exact(g);
        REQUIRE(r.value.has_value());
        for (int k = 0; k <= 3; ++k) {
            bool expected = k >= *r.value;
            CHECK(sdim_brute(g, k) == expected);
        }
    }
}

TEST_CASE("limit handling") {
    SolveResult r = sdim_exact(complete_graph(4), 2);
    CHECK(!r.value.has_value());
    CHECK(r.exceeded_limit);
    SolveResult exact = sdim_exact(complete_graph(4), 3);
    CHECK(exact.value == 3);
    CHECK(!exact.exceeded_limit);
}

TEST_CASE("caps") {
    CHECK_THROWS_AS(sdim_exact(Graph(11, {})), cap_error);
    CHECK_THROWS_AS(sdim_brute(Graph(8, {}), 1), cap_error);
    CHECK_THROWS_AS(sdim_brute(Graph(4, {}), 4), cap_error);
}

TEST_CASE("monotone under edge addition") {
    std::mt19937_64 rng(mix_seed(31));
    int done = 0;
    for (std::uint64_t seed = 0; done < 40; ++seed) {
        Graph g = random_graph(6, 6, seed);
        std::vector<std::pair<int, int>> non_edges;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
        if (non_edges.empty()) continue;
        auto [u, v] = non_edges[uniform_below(rng, non_edges.size())];
        std::vector<Edge> edges = g.edges();
        edges.push_back(make_edge(u, v));
        Graph bigger(6, edges);
        CHECK(*sdim_exact(g).value <= *sdim_exact(bigger).value);
        ++done;
    }
}

TEST_CASE("isomorphism invariance over 100 instances") {
    std::mt19937_64 rng(mix_seed(77));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = random_graph(6, 5 + static_cast<int>(seed % 8), 500 + seed);
        Graph h = relabel_graph(g, random_order(6, rng));
        CHECK(sdim_exact(g).value == sdim_exact(h).value);
    }
}

TEST_CASE("search statistics are populated") {
    SolveResult r = sdim_exact(complete_graph(4));
    CHECK(r.stats.permutations_enumerated == 12);  // 4!/2
    CHECK(r.stats.distinct_coverage_sets == 3);
    CHECK(r.stats.candidates_after_domination == 3);
}
