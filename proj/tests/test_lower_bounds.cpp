#include "doctest.h"

#include <cmath>
#include <set>

#include "sepdim/constructions.hpp"
#include "sepdim/exact_solver.hpp"
#include "sepdim/lower_bounds.hpp"
#include "sepdim/random_regular.hpp"
#include "sepdim/separation.hpp"
#include "test_util.hpp"

using namespace sepdim;
using namespace sepdim::testutil;

namespace {

// Oracle: recount internal edges of every subset via bitmask enumeration.
bool naive_expansion_holds(const Graph& g, double delta, double eps) {
    const int n = g.vertex_count();
    const int smax = static_cast<int>(std::floor(eps * n));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 2 || size > smax) continue;
        int internal = 0;
        for (const Edge& e : g.edges())
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++internal;
        if (internal > (1.0 + delta) * size) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("verify_expansion") {
    SUBCASE("K4 holds at delta=0.5 eps=0.5") {
        ExpansionCertificate cert =
            verify_expansion(complete_graph(4), 0.5, 0.5, ExpansionMode::exhaustive);
        CHECK(cert.holds);
        CHECK(cert.max_subset_size == 2);
    }
    SUBCASE("K6 violated at delta=0.4 eps=0.7 with a 4-clique witness") {
        ExpansionCertificate cert =
            verify_expansion(complete_graph(6), 0.4, 0.7, ExpansionMode::exhaustive);
        CHECK(!cert.holds);
        CHECK(cert.witness.size() == 4);
        CHECK(cert.witness_edges == 6);  // 6 > 1.4 * 4
    }
    SUBCASE("matches the naive recount on random 3-regular n=14") {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            Graph g = random_regular(14, 3, seed);
            ExpansionCertificate cert =
                verify_expansion(g, 0.5, 0.3, ExpansionMode::exhaustive);
            CHECK(cert.holds == naive_expansion_holds(g, 0.5, 0.3));
        }
    }
    SUBCASE("cap and domain errors") {
        CHECK_THROWS_AS(verify_expansion(Graph(40, {}), 0.5, 0.9, ExpansionMode::exhaustive),
                        cap_error);
        CHECK_THROWS_AS(verify_expansion(Graph(4, {}), 0.0, 0.5, ExpansionMode::exhaustive),
                        domain_error);
        CHECK_THROWS_AS(verify_expansion(Graph(4, {}), 0.5, 1.5, ExpansionMode::exhaustive),
                        domain_error);
    }
    SUBCASE("sampled mode is marked and can find violations") {
        ExpansionCertificate cert =
            verify_expansion(complete_graph(6), 0.4, 0.7, ExpansionMode::sampled, 14, 500, 3);
        CHECK(cert.mode == ExpansionMode::sampled);
        CHECK(!cert.holds);  // dense graph, violations everywhere
    }
}

TEST_CASE("short_edge_count_bound") {
    SUBCASE("C8 with the identity order") {
        Graph c8 = cycle_graph(8);
        ExpansionCertificate cert = verify_expansion(c8, 0.5, 0.5, ExpansionMode::exhaustive);
        REQUIRE(cert.holds);
        ShortEdgeBoundReport rep =
            short_edge_count_bound(c8, Permutation::identity(8), 0.5, 0.5, cert);
        CHECK(rep.threshold == 2);
        CHECK(rep.short_count == 7);  // all edges except the wrap edge (gap 7)
        CHECK(rep.bound == doctest::Approx(24.0));
        CHECK(rep.holds);
        CHECK(rep.block_size == 4);
        CHECK(rep.overlap == 2);
        CHECK(rep.blocks_cover_short);
    }
    SUBCASE("edgeless graph") {
        Graph g(8, {});
        ExpansionCertificate cert = verify_expansion(g, 0.5, 0.5, ExpansionMode::exhaustive);
        ShortEdgeBoundReport rep =
            short_edge_count_bound(g, Permutation::identity(8), 0.5, 0.5, cert);
        CHECK(rep.short_count == 0);
        CHECK(rep.holds);
    }
    SUBCASE("holds across many permutations when the certificate holds (theorem-backed)") {
        Graph g = random_regular(20, 3, 5);
        ExpansionCertificate cert = verify_expansion(g, 0.5, 0.3, ExpansionMode::exhaustive);
        REQUIRE(cert.holds);
        std::mt19937_64 rng(mix_seed(8));
        for (int trial = 0; trial < 200; ++trial) {
            Permutation sigma(random_order(20, rng));
            ShortEdgeBoundReport rep = short_edge_count_bound(g, sigma, 0.5, 0.3, cert);
            CHECK(rep.holds);
            CHECK(rep.blocks_cover_short);
        }
    }
    SUBCASE("preconditions") {
        Graph c8 = cycle_graph(8);
        ExpansionCertificate sampled =
            verify_expansion(c8, 0.5, 0.5, ExpansionMode::sampled, 14, 50, 1);
        CHECK_THROWS_AS(
            short_edge_count_bound(c8, Permutation::identity(8), 0.5, 0.5, sampled),
            precondition_error);
        ExpansionCertificate cert = verify_expansion(c8, 0.5, 0.5, ExpansionMode::exhaustive);
        CHECK_THROWS_AS(short_edge_count_bound(c8, Permutation::identity(8), 0.4, 0.5, cert),
                        precondition_error);
    }
}

TEST_CASE("long_matching") {
    SUBCASE("C8 under the identity: only the wrap edge is long") {
        Graph c8 = cycle_graph(8);
        PermutationFamily fam{8, {Permutation::identity(8)}};
        LongMatchingReport rep = long_matching(c8, fam, 0.5, 0.5);  // threshold 2
        CHECK(rep.total_long == 1);
        REQUIRE(rep.matching.size() == 1);
        CHECK(rep.matching[0] == Edge{0, 7});
    }
    SUBCASE("output is always a matching") {
        std::mt19937_64 rng(mix_seed(10));
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Graph g = random_regular(20, 3, 40 + seed);
            PermutationFamily fam{20, {}};
            for (int i = 0; i < 2; ++i) fam.members.emplace_back(random_order(20, rng));
            LongMatchingReport rep = long_matching(g, fam, 0.5, 0.3);
            for (std::size_t a = 0; a < rep.matching.size(); ++a)
                for (std::size_t b = a + 1; b < rep.matching.size(); ++b)
                    CHECK(!share_vertex(rep.matching[a], rep.matching[b]));
        }
    }
    SUBCASE("degenerate: everything short yields an empty matching") {
        Graph m = matching_graph(2);
        PermutationFamily fam{4, {Permutation::identity(4)}};
        LongMatchingReport rep = long_matching(m, fam, 0.9, 0.9);  // threshold 3
        CHECK(rep.total_long == 0);
        CHECK(rep.matching.empty());
    }
    SUBCASE("empty family rejected") {
        CHECK_THROWS_AS(long_matching(cycle_graph(4), PermutationFamily{4, {}}, 0.5, 0.5),
                        domain_error);
    }
}

TEST_CASE("separation_graph") {
    Permutation sigma = Permutation::identity(8);
    SUBCASE("separated edges are adjacent") {
        SeparationGraph h = separation_graph({make_edge(0, 1), make_edge(4, 5)}, sigma);
        CHECK(h.h_edges.size() == 1);
    }
    SUBCASE("nested edges are not") {
        SeparationGraph h = separation_graph({make_edge(0, 7), make_edge(3, 4)}, sigma);
        CHECK(h.h_edges.empty());
    }
    SUBCASE("non-matching input rejected") {
        CHECK_THROWS_AS(separation_graph({make_edge(0, 1), make_edge(1, 2)}, sigma),
                        domain_error);
    }
}

TEST_CASE("crossing_point_audit") {
    SUBCASE("groups are independent and within the ceil(1/(delta*eps)) limit") {
        std::mt19937_64 rng(mix_seed(12));
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Graph g = random_regular(20, 3, 60 + seed);
            PermutationFamily fam{20, {}};
            for (int i = 0; i < 2; ++i) fam.members.emplace_back(random_order(20, rng));
            LongMatchingReport lm = long_matching(g, fam, 0.5, 0.3);
            if (lm.matching.empty()) continue;
            for (const Permutation& sigma : fam.members) {
                SeparationGraph h = separation_graph(lm.matching, sigma);
                CrossingAudit audit = crossing_point_audit(h, sigma, 0.5, 0.3);
                CHECK(audit.groups_independent);
                CHECK(audit.within_limit);
                CHECK(audit.point_of.size() == lm.matching.size());
            }
        }
    }
    SUBCASE("short edge rejected") {
        Permutation sigma = Permutation::identity(8);
        SeparationGraph h = separation_graph({make_edge(0, 1), make_edge(4, 5)}, sigma);
        CHECK_THROWS_AS(crossing_point_audit(h, sigma, 0.5, 0.5), precondition_error);
    }
}

TEST_CASE("suitable families make the union of H_sigma complete on matchings") {
    int verified_instances = 0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = random_regular(8, 3, 70 + seed);
        PermutationFamily fam = sdim_exact(g).family;  // small optimal witness
        REQUIRE(is_pairwise_suitable(fam, g).suitable);
        LongMatchingReport lm = long_matching(g, fam, 0.25, 0.5);  // threshold 1
        if (lm.matching.size() < 2) continue;
        std::set<std::pair<int, int>> covered;
        for (const Permutation& sigma : fam.members) {
            SeparationGraph h = separation_graph(lm.matching, sigma);
            for (auto& e : h.h_edges) covered.insert(e);
        }
        CHECK(covered.size() == lm.matching.size() * (lm.matching.size() - 1) / 2);
        ++verified_instances;
    }
    CHECK(verified_instances > 0);
}

TEST_CASE("certified_lower_bound") {
    SUBCASE("2-regular graph fails the degree hypothesis") {
        LowerBoundCertificate cert = certified_lower_bound(cycle_graph(8), 0.1, 0.3);
        CHECK(!cert.implied_bound.has_value());
        CHECK(cert.failure == "d-regular with d >= 3");
        CHECK(to_string(cert).find("not established: d-regular") != std::string::npos);
    }
    SUBCASE("non-regular graph records the failure, no error") {
        LowerBoundCertificate cert = certified_lower_bound(path_graph(5), 0.1, 0.3);
        CHECK(!cert.implied_bound.has_value());
        CHECK(cert.failure == "d-regular with d >= 3");
    }
    SUBCASE("desk-scale 3-regular input fails exactly the size hypothesis") {
        Graph g = random_regular(20, 3, 5);
        LowerBoundCertificate cert = certified_lower_bound(g, 0.1, 0.3);
        CHECK(!cert.implied_bound.has_value());
        CHECK(cert.failure == "size hypothesis");
        // threshold = 16 * (1/0.03)^1.5
        CHECK(cert.size_threshold ==
              doctest::Approx(16.0 * std::pow(1.0 / 0.03, 1.5)).epsilon(1e-12));
    }
    SUBCASE("delta too large for the contradiction step is reported") {
        Graph g = random_regular(20, 3, 5);
        LowerBoundCertificate cert = certified_lower_bound(g, 0.2, 0.01);
        CHECK(cert.failure == "delta condition");
        // size threshold closed form: 4(d+1)(1/(delta*eps))^(d/2) = 16*(500)^1.5
        CHECK(cert.size_threshold ==
              doctest::Approx(16.0 * std::pow(500.0, 1.5)).epsilon(1e-12));
    }
    SUBCASE("never a bound on any desk-scale input") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Graph g = random_regular(16 + 2 * static_cast<int>(seed % 3), 4, seed);
            LowerBoundCertificate cert = certified_lower_bound(g, 0.05, 0.3);
            CHECK(!cert.implied_bound.has_value());
        }
    }
}

TEST_CASE("exhaustive_lower_bound") {
    CHECK(exhaustive_lower_bound(complete_graph(4), 2));
    CHECK(exhaustive_lower_bound(matching_graph(2), 0));
    CHECK(!exhaustive_lower_bound(cycle_graph(4), 2));
}

TEST_CASE("desk-scale 4-regular n=10 exact values agree with ceil(d/2)") {
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
        Graph g = random_regular(10, 4, seed);
        CHECK(*sdim_exact(g).value >= 2);
    }
}
