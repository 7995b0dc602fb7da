#include "sepdim/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sepdim/coloring.hpp"
#include "sepdim/rng.hpp"
#include "sepdim/separation.hpp"

namespace sepdim {

// ── lll_partition ───────────────────────────────────────────────────

Partition lll_partition(const Graph& g, const PartitionSpec& spec, LllStats* stats) {
    if (spec.parts < 1) throw domain_error("lll_partition: parts must be >= 1");
    if (spec.neighbor_cap < 1) throw domain_error("lll_partition: neighbor cap must be >= 1");
    const int n = g.vertex_count();
    const int r = spec.parts;
    const int t = spec.neighbor_cap;
    const std::uint64_t max_resamples =
        spec.max_resamples > 0 ? spec.max_resamples : 50ULL * static_cast<std::uint64_t>(std::max(n, 1));

    std::mt19937_64 rng(mix_seed(spec.seed));
    std::vector<int> part_of(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        part_of[static_cast<std::size_t>(v)] = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(r)));

    // counts[v][i] = |N(v) ∩ V_i|
    std::vector<std::vector<int>> counts(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(r), 0));
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            ++counts[static_cast<std::size_t>(v)][static_cast<std::size_t>(part_of[static_cast<std::size_t>(w)])];

    std::uint64_t resamples = 0;
    while (true) {
        // Lexicographically least violated (v, i); only v steers the
        // resampling, the part index just fixes the scan order.
        int bad_v = -1;
        for (int v = 0; v < n && bad_v < 0; ++v)
            for (int i = 0; i < r; ++i)
                if (counts[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] > t) {
                    bad_v = v;
                    break;
                }
        if (bad_v < 0) break;
        if (resamples >= max_resamples)
            throw cap_error("lll_partition: no valid partition within " +
                            std::to_string(max_resamples) +
                            " resamples (r=" + std::to_string(r) + ", t=" + std::to_string(t) + ")");
        ++resamples;
        for (int w : g.neighbors(bad_v)) {
            int old_part = part_of[static_cast<std::size_t>(w)];
            int new_part = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(r)));
            if (old_part != new_part) {
                part_of[static_cast<std::size_t>(w)] = new_part;
                for (int x : g.neighbors(w)) {
                    --counts[static_cast<std::size_t>(x)][static_cast<std::size_t>(old_part)];
                    ++counts[static_cast<std::size_t>(x)][static_cast<std::size_t>(new_part)];
                }
            }
        }
    }
    if (stats) stats->resamples = resamples;
    return Partition{std::move(part_of), r};
}

PartitionPlan plan_partition_params(double max_degree) {
    if (!(max_degree >= 2)) throw domain_error("plan_partition_params: degree must be >= 2");
    PartitionPlan plan;
    const double log2d = std::log2(max_degree);
    plan.parts = std::ceil(400.0 * max_degree / log2d);
    plan.neighbor_cap = std::max(1, static_cast<int>(std::floor(0.5 * log2d)));
    const double mu = max_degree / plan.parts;
    const double one_plus_delta = static_cast<double>(plan.neighbor_cap) / mu;
    const double delta = one_plus_delta - 1.0;
    plan.failure_log2 =
        mu * (delta * std::numbers::log2e - one_plus_delta * std::log2(one_plus_delta));
    plan.failure_bound = std::exp2(plan.failure_log2);
    return plan;
}

// ── part-level families ─────────────────────────────────────────────

bool check_triple_scrambling(const PartPermutationFamily& fam) {
    const int r = fam.parts;
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            if (k == i) continue;
            for (int j = 0; j < r; ++j) {
                if (j == i || j == k) continue;
                bool realized = false;
                for (const Permutation& p : fam.members) {
                    if (p.rank_of(i) < p.rank_of(k) && p.rank_of(k) < p.rank_of(j)) {
                        realized = true;
                        break;
                    }
                }
                if (!realized) return false;
            }
        }
    return true;
}

bool check_pair_separation(const PartPermutationFamily& fam) {
    const int r = fam.parts;
    auto separated = [&](const Permutation& p, int a, int b, int c, int d) {
        int lo1 = std::min(p.rank_of(a), p.rank_of(b));
        int hi1 = std::max(p.rank_of(a), p.rank_of(b));
        int lo2 = std::min(p.rank_of(c), p.rank_of(d));
        int hi2 = std::max(p.rank_of(c), p.rank_of(d));
        return hi1 < lo2 || hi2 < lo1;
    };
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int c = a; c < r; ++c)
                for (int d = c + 1; d < r; ++d) {
                    if (std::make_pair(c, d) <= std::make_pair(a, b)) continue;
                    if (c == a || c == b || d == a || d == b) continue;
                    bool ok = false;
                    for (const Permutation& p : fam.members)
                        if (separated(p, a, b, c, d)) {
                            ok = true;
                            break;
                        }
                    if (!ok) return false;
                }
    return true;
}

PartPermutationFamily scrambling_part_family(int parts, std::uint64_t seed) {
    if (parts < 1) throw domain_error("scrambling_part_family: parts must be >= 1");
    PartPermutationFamily fam;
    fam.parts = parts;
    if (parts <= 2) {
        // No triples and no disjoint pair-pairs exist; both properties hold
        // vacuously for the empty family.
        fam.triple_scrambling_verified = check_triple_scrambling(fam);
        fam.pair_separation_verified = check_pair_separation(fam);
        return fam;
    }

    std::mt19937_64 rng(mix_seed(seed));
    int m = static_cast<int>(std::ceil(12.0 * std::log2(static_cast<double>(parts)))) + 4;
    for (int round = 0; round < 20; ++round, m += 2) {
        fam.members.clear();
        for (int s = 0; s < m; ++s) {
            std::vector<int> order(static_cast<std::size_t>(parts));
            std::iota(order.begin(), order.end(), 0);
            shuffle_vector(order, rng);
            fam.members.emplace_back(std::move(order));
        }
        if (check_triple_scrambling(fam) && check_pair_separation(fam)) {
            fam.triple_scrambling_verified = true;
            fam.pair_separation_verified = true;
            return fam;
        }
    }
    throw cap_error("scrambling_part_family: 20 sampling rounds exhausted (r=" +
                    std::to_string(parts) + "); this indicates an implementation bug");
}

// ── round robin ─────────────────────────────────────────────────────

std::vector<std::vector<std::pair<int, int>>> round_robin_schedule(int r) {
    std::vector<std::vector<std::pair<int, int>>> schedule;
    if (r <= 1) return schedule;
    if (r % 2 == 0) {
        // Fix r-1; rotate the rest.
        const int q = r - 1;
        for (int t = 0; t < q; ++t) {
            std::vector<std::pair<int, int>> cls;
            cls.emplace_back(std::min(r - 1, t), std::max(r - 1, t));
            for (int i = 1; i <= (q - 1) / 2; ++i) {
                int a = (t + i) % q;
                int b = (t - i + q) % q;
                cls.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(cls.begin(), cls.end());
            schedule.push_back(std::move(cls));
        }
    } else {
        // Odd r: in class t, x is matched with y iff x + y ≡ 2t (mod r);
        // vertex t sits out.
        for (int t = 0; t < r; ++t) {
            std::vector<std::pair<int, int>> cls;
            for (int i = 1; i <= (r - 1) / 2; ++i) {
                int a = (t + i) % r;
                int b = (t - i + r) % r;
                cls.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(cls.begin(), cls.end());
            schedule.push_back(std::move(cls));
        }
    }
    return schedule;
}

// ── combine ─────────────────────────────────────────────────────────

namespace {

std::vector<int> union_of_classes(const std::vector<std::vector<int>>& classes, int i, int j) {
    std::vector<int> out;
    if (i == j) return classes[static_cast<std::size_t>(i)];
    std::merge(classes[static_cast<std::size_t>(i)].begin(), classes[static_cast<std::size_t>(i)].end(),
               classes[static_cast<std::size_t>(j)].begin(), classes[static_cast<std::size_t>(j)].end(),
               std::back_inserter(out));
    return out;
}

const std::vector<std::vector<int>> kNoOrders{};

const std::vector<std::vector<int>>& orders_for(const PairFamilies& fams, int i, int j) {
    auto it = fams.find({i, j});
    return it == fams.end() ? kNoOrders : it->second;
}

// Checks that each order is a permutation of `verts` (global ids) and that
// the family separates every disjoint edge pair of the induced subgraph.
void require_suitable_pair_family(const Graph& g, const std::vector<int>& verts,
                                  const std::vector<std::vector<int>>& orders, int i, int j) {
    InducedSubgraph sub = induced_subgraph(g, verts);
    PermutationFamily local;
    local.n = sub.graph.vertex_count();
    for (const auto& order : orders) {
        if (order.size() != verts.size())
            throw precondition_error("pair family {" + std::to_string(i) + "," + std::to_string(j) +
                                     "}: order length mismatch");
        std::vector<int> local_order;
        local_order.reserve(order.size());
        for (int v : order) {
            if (v < 0 || v >= g.vertex_count() || sub.to_local[static_cast<std::size_t>(v)] < 0)
                throw precondition_error("pair family {" + std::to_string(i) + "," +
                                         std::to_string(j) + "}: vertex " + std::to_string(v) +
                                         " is not in the part union");
            local_order.push_back(sub.to_local[static_cast<std::size_t>(v)]);
        }
        try {
            local.members.emplace_back(std::move(local_order));
        } catch (const domain_error& e) {
            throw precondition_error("pair family {" + std::to_string(i) + "," + std::to_string(j) +
                                     "}: " + e.what());
        }
    }
    SuitabilityVerdict verdict = is_pairwise_suitable(local, sub.graph);
    if (!verdict.suitable)
        throw precondition_error("pair family {" + std::to_string(i) + "," + std::to_string(j) +
                                 "} is not suitable for its induced subgraph: " +
                                 to_string(verdict));
}

}  // namespace

ConstructionReport combine_partition_families(const Graph& g, const Partition& p,
                                              const PairFamilies& pair_families,
                                              const PartPermutationFamily& part_family) {
    const int n = g.vertex_count();
    validate_partition(p, n);
    const int r = p.parts;
    if (r < 1) throw precondition_error("combine: partition must have at least one part");
    if (part_family.parts != r)
        throw precondition_error("combine: part family is over " +
                                 std::to_string(part_family.parts) + " parts, partition has " +
                                 std::to_string(r));
    if (!part_family.triple_scrambling_verified || !part_family.pair_separation_verified)
        throw precondition_error("combine: part family properties are not verified");

    const auto classes = partition_classes(p);
    ConstructionReport report;
    report.family.n = n;

    if (r == 1) {
        const auto& orders = orders_for(pair_families, 0, 0);
        require_suitable_pair_family(g, classes[0], orders, 0, 0);
        for (const auto& order : orders) report.family.members.emplace_back(order);
        report.pair_block_rounds = report.family.members.size();
    } else {
        std::size_t h_hat = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                const auto& orders = orders_for(pair_families, i, j);
                require_suitable_pair_family(g, union_of_classes(classes, i, j), orders, i, j);
                h_hat = std::max(h_hat, orders.size());
            }

        // (A) pair-block rounds in (color, round) order.
        const auto schedule = round_robin_schedule(r);
        for (const auto& cls : schedule) {
            for (std::size_t u = 0; u < h_hat; ++u) {
                std::vector<int> order;
                order.reserve(static_cast<std::size_t>(n));
                std::vector<char> matched(static_cast<std::size_t>(r), 0);
                for (auto [i, j] : cls) {
                    matched[static_cast<std::size_t>(i)] = 1;
                    matched[static_cast<std::size_t>(j)] = 1;
                    const auto& orders = orders_for(pair_families, i, j);
                    if (orders.empty()) {
                        auto uni = union_of_classes(classes, i, j);
                        order.insert(order.end(), uni.begin(), uni.end());
                    } else {
                        const auto& member = orders[u % orders.size()];
                        order.insert(order.end(), member.begin(), member.end());
                    }
                }
                for (int part = 0; part < r; ++part)
                    if (!matched[static_cast<std::size_t>(part)])
                        order.insert(order.end(), classes[static_cast<std::size_t>(part)].begin(),
                                     classes[static_cast<std::size_t>(part)].end());
                report.family.members.emplace_back(std::move(order));
            }
        }
        report.pair_block_rounds = report.family.members.size();

        // (B) lifted part permutations.
        for (const Permutation& pi : part_family.members) {
            std::vector<int> order;
            order.reserve(static_cast<std::size_t>(n));
            for (int pos = 0; pos < r; ++pos) {
                const auto& cl = classes[static_cast<std::size_t>(pi.vertex_at(pos))];
                order.insert(order.end(), cl.begin(), cl.end());
            }
            report.family.members.emplace_back(std::move(order));
        }
        report.part_family_size = part_family.members.size();
    }

    report.size = report.family.members.size();
    SuitabilityVerdict verdict = is_pairwise_suitable(report.family, g);
    if (!verdict.suitable)
        throw verification_error("combine: combined family failed verification: " +
                                 to_string(verdict));
    report.verified = true;
    return report;
}

// ── constructions ───────────────────────────────────────────────────

namespace {

constexpr std::uint64_t kPartFamilySeedStream = 0x70617274ULL;  // fixed, deterministic

ConstructionReport empty_report(const Graph& g) {
    ConstructionReport report;
    report.family.n = g.vertex_count();
    report.verified = is_pairwise_suitable(report.family, g).suitable;
    if (!report.verified)
        throw verification_error("empty family is not suitable for a graph with disjoint edges");
    return report;
}

}  // namespace

ConstructionReport construct_distance_two(const Graph& g) {
    if (g.edge_count() == 0) {
        ConstructionReport report = empty_report(g);
        report.recursion_depth = 1;
        return report;
    }
    Partition p = distance_two_coloring(g);
    const auto classes = partition_classes(p);

    PairFamilies fams;
    auto matching_order = [&](const std::vector<int>& verts) -> std::vector<std::vector<int>> {
        InducedSubgraph sub = induced_subgraph(g, verts);
        if (sub.graph.edge_count() == 0) return {};
        // The pair union is a matching plus isolated vertices: lay the
        // matched edges out consecutively, isolated vertices at the end.
        std::vector<int> order;
        std::vector<char> placed(static_cast<std::size_t>(sub.graph.vertex_count()), 0);
        for (const Edge& e : sub.graph.edges()) {
            order.push_back(sub.to_global[static_cast<std::size_t>(e.u)]);
            order.push_back(sub.to_global[static_cast<std::size_t>(e.v)]);
            placed[static_cast<std::size_t>(e.u)] = 1;
            placed[static_cast<std::size_t>(e.v)] = 1;
        }
        for (int v = 0; v < sub.graph.vertex_count(); ++v)
            if (!placed[static_cast<std::size_t>(v)])
                order.push_back(sub.to_global[static_cast<std::size_t>(v)]);
        return {order};
    };

    if (p.parts == 1) {
        fams[{0, 0}] = matching_order(classes[0]);
    } else {
        for (int i = 0; i < p.parts; ++i)
            for (int j = i + 1; j < p.parts; ++j) {
                auto orders = matching_order(union_of_classes(classes, i, j));
                if (!orders.empty()) fams[{i, j}] = std::move(orders);
            }
    }

    PartPermutationFamily part_family =
        scrambling_part_family(p.parts, mix_seed(kPartFamilySeedStream, static_cast<std::uint64_t>(p.parts)));
    ConstructionReport report = combine_partition_families(g, p, fams, part_family);
    report.recursion_depth = 1;
    return report;
}

namespace {

ConstructionReport construct_recursive(const Graph& g, const RecursionConfig& cfg, int budget) {
    if (g.edge_count() == 0) return empty_report(g);
    const int max_deg = g.max_degree();
    if (max_deg <= cfg.base_cutoff) return construct_distance_two(g);
    if (budget <= 0)
        throw cap_error("construct_bounded_degree: recursion did not contract; "
                        "check c1/c2 against the base cutoff");

    const double log2d = std::log2(static_cast<double>(max_deg));
    const int r = std::max(2, static_cast<int>(std::ceil(cfg.c1 * max_deg / log2d)));
    const int t = std::max(1, static_cast<int>(std::floor(cfg.c2 * log2d)));

    PartitionSpec spec{r, t, cfg.max_resamples, mix_seed(cfg.seed, 0)};
    Partition p = lll_partition(g, spec);
    const auto classes = partition_classes(p);

    PairFamilies fams;
    int depth = 1;
    std::uint64_t pair_stream = 1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j, ++pair_stream) {
            auto verts = union_of_classes(classes, i, j);
            InducedSubgraph sub = induced_subgraph(g, verts);
            // The neighbor cap bounds each vertex to t neighbors per part,
            // so pair unions have max degree at most 2t.
            assert(sub.graph.max_degree() <= 2 * t);
            RecursionConfig child = cfg;
            child.seed = mix_seed(cfg.seed, pair_stream);
            ConstructionReport child_report = construct_recursive(sub.graph, child, budget - 1);
            depth = std::max(depth, 1 + child_report.recursion_depth);
            std::vector<std::vector<int>> orders;
            for (const Permutation& perm : child_report.family.members) {
                std::vector<int> order;
                order.reserve(perm.order().size());
                for (int local : perm.order())
                    order.push_back(sub.to_global[static_cast<std::size_t>(local)]);
                orders.push_back(std::move(order));
            }
            if (!orders.empty()) fams[{i, j}] = std::move(orders);
        }

    PartPermutationFamily part_family =
        scrambling_part_family(r, mix_seed(cfg.seed, kPartFamilySeedStream));
    ConstructionReport report = combine_partition_families(g, p, fams, part_family);
    report.recursion_depth = depth;
    return report;
}

}  // namespace

ConstructionReport construct_bounded_degree(const Graph& g, const RecursionConfig& cfg) {
    if (cfg.base_cutoff < 1) throw domain_error("construct_bounded_degree: base cutoff must be >= 1");
    if (!(cfg.c1 > 0) || !(cfg.c2 > 0))
        throw domain_error("construct_bounded_degree: scale factors must be positive");
    return construct_recursive(g, cfg, 64);
}

// ── closed forms ────────────────────────────────────────────────────

int iterated_log2(std::uint64_t d) {
    if (d < 1) throw domain_error("iterated_log2: domain is d >= 1");
    int count = 0;
    double x = static_cast<double>(d);
    while (x > 1.0) {
        x = std::log2(x);
        ++count;
    }
    return count;
}

std::uint64_t upper_bound_formula(std::uint64_t d) {
    if (d < 1) throw domain_error("upper_bound_formula: domain is d >= 1");
    if (d == 1) return 1;

    using u128 = unsigned __int128;
    const int shift = 9 * iterated_log2(d);  // at most 45 for 64-bit d
    const u128 recursion_branch = static_cast<u128>(d) << shift;

    // Small-degree branch (4d-4)(ceil(log2 log2 (2d-2)) + 3) + 1 with
    // ceil(log2 log2 a) computed as the least c with a <= 2^(2^c).
    const u128 a = static_cast<u128>(2) * d - 2;
    int c = 0;
    while (c < 7 && a > (static_cast<u128>(1) << (1 << c))) ++c;
    const u128 small_branch = (static_cast<u128>(4) * d - 4) * static_cast<u128>(c + 3) + 1;

    const u128 result = std::min(recursion_branch, small_branch);
    if (result > static_cast<u128>(~std::uint64_t{0}))
        throw domain_error("upper_bound_formula: result exceeds 64-bit range");
    return static_cast<std::uint64_t>(result);
}

std::string to_string(const ConstructionReport& report) {
    std::ostringstream out;
    out << "family size: " << report.size << '\n'
        << "breakdown: pair_block_rounds=" << report.pair_block_rounds
        << " part_family=" << report.part_family_size
        << " recursion_depth=" << report.recursion_depth << '\n'
        << "verified: " << (report.verified ? "SUITABLE" : "NOT-SUITABLE") << '\n';
    return out.str();
}

}  // namespace sepdim
