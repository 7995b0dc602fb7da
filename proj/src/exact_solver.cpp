#include "sepdim/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <string>
#include <unordered_map>

#include "sepdim/coverage.hpp"
#include "sepdim/separation.hpp"

namespace sepdim {

namespace {

struct Candidate {
    CoverageSet cover;
    std::vector<int> order;  // lexicographically least generating permutation
    std::size_t popcount = 0;
};

// Enumerate one permutation per reversal pair (coverage is reversal
// invariant), deduplicate identical coverage sets, and remember the first
// (lexicographically least) generator of each set. The loop runs n!/2
// times, so it works on a flat endpoint table with a reusable scratch set
// instead of going through coverage().
std::vector<Candidate> distinct_candidates(const Graph& g, const DisjointPairUniverse& universe,
                                           std::size_t& enumerated) {
    const int n = g.vertex_count();
    const std::size_t u_size = universe.size();

    std::vector<int> ends;
    ends.reserve(u_size * 4);
    for (std::size_t idx = 0; idx < u_size; ++idx) {
        auto [i, j] = universe.pair_at(idx);
        const Edge& e = g.edge(i);
        const Edge& f = g.edge(j);
        ends.push_back(e.u);
        ends.push_back(e.v);
        ends.push_back(f.u);
        ends.push_back(f.v);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> rank(static_cast<std::size_t>(n));
    CoverageSet scratch(u_size);

    std::unordered_map<CoverageSet, std::vector<int>, CoverageSetHash> seen;
    enumerated = 0;
    do {
        if (n >= 2 && order.front() > order.back()) continue;
        ++enumerated;
        for (int pos = 0; pos < n; ++pos) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
        scratch.clear();
        const int* pe = ends.data();
        for (std::size_t idx = 0; idx < u_size; ++idx, pe += 4) {
            const int a = rank[static_cast<std::size_t>(pe[0])];
            const int b = rank[static_cast<std::size_t>(pe[1])];
            const int c = rank[static_cast<std::size_t>(pe[2])];
            const int d = rank[static_cast<std::size_t>(pe[3])];
            const int ehi = a > b ? a : b;
            const int elo = a + b - ehi;
            const int fhi = c > d ? c : d;
            const int flo = c + d - fhi;
            if (ehi < flo || fhi < elo) scratch.set(idx);
        }
        if (seen.find(scratch) == seen.end()) seen.emplace(scratch, order);
    } while (std::next_permutation(order.begin(), order.end()));

    std::vector<Candidate> out;
    out.reserve(seen.size());
    for (auto& [cov, gen] : seen)
        out.push_back(Candidate{cov, gen, cov.count()});
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.popcount != b.popcount) return a.popcount > b.popcount;
        return a.cover.words() < b.cover.words();
    });
    return out;
}

// Drop any candidate whose coverage is a subset of an earlier (larger or
// equal) kept one. Sets are distinct, so subset means strictly dominated.
// Kept sets are indexed per universe element; a candidate is dominated iff
// the intersection of the kept-sets over its elements is nonempty, which
// usually empties after a couple of intersections.
std::vector<Candidate> drop_dominated(std::vector<Candidate> sorted) {
    std::vector<Candidate> kept;
    if (sorted.empty()) return kept;
    const std::size_t u_size = sorted.front().cover.universe_size();
    std::vector<std::vector<std::uint64_t>> by_element(u_size);
    std::vector<std::uint64_t> acc;

    for (auto& c : sorted) {
        bool dominated;
        if (c.popcount == 0) {
            dominated = !kept.empty();
        } else {
            bool first = true;
            bool alive = true;
            const auto& words = c.cover.words();
            for (std::size_t w = 0; w < words.size() && alive; ++w) {
                std::uint64_t x = words[w];
                while (x && alive) {
                    const std::size_t e = w * 64 + static_cast<std::size_t>(std::countr_zero(x));
                    x &= x - 1;
                    const auto& bs = by_element[e];
                    if (first) {
                        acc.assign(bs.begin(), bs.end());
                        first = false;
                    } else {
                        if (bs.size() < acc.size()) acc.resize(bs.size());
                        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] &= bs[i];
                    }
                    alive = false;
                    for (std::uint64_t word : acc)
                        if (word) {
                            alive = true;
                            break;
                        }
                }
            }
            dominated = alive;
        }
        if (!dominated) {
            const std::size_t idx = kept.size();
            kept.push_back(std::move(c));
            const auto& words = kept.back().cover.words();
            for (std::size_t w = 0; w < words.size(); ++w) {
                std::uint64_t x = words[w];
                while (x) {
                    const std::size_t e = w * 64 + static_cast<std::size_t>(std::countr_zero(x));
                    x &= x - 1;
                    auto& bs = by_element[e];
                    if (bs.size() <= idx / 64) bs.resize(idx / 64 + 1, 0);
                    bs[idx / 64] |= std::uint64_t{1} << (idx & 63);
                }
            }
        }
    }
    return kept;
}

std::size_t first_uncovered(const CoverageSet& covered, std::size_t universe_size) {
    const auto& words = covered.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t missing = ~words[w];
        if (w == words.size() - 1 && universe_size % 64 != 0)
            missing &= (std::uint64_t{1} << (universe_size % 64)) - 1;
        if (missing) return w * 64 + static_cast<std::size_t>(std::countr_zero(missing));
    }
    return universe_size;
}

struct CoverSearch {
    const std::vector<Candidate>& cands;
    const std::vector<std::vector<int>>& covering;  // per element: candidate ids
    std::size_t universe_size;
    std::size_t max_pop;
    std::uint64_t nodes = 0;

    bool dfs(const CoverageSet& covered, std::size_t covered_count, int remaining,
             std::vector<int>& chosen) {
        if (covered_count == universe_size) return true;
        if (remaining == 0) return false;
        std::size_t missing = universe_size - covered_count;
        if ((missing + max_pop - 1) / max_pop > static_cast<std::size_t>(remaining)) return false;
        ++nodes;
        std::size_t e = first_uncovered(covered, universe_size);
        // Candidate lists are sorted by descending coverage size, so once a
        // candidate is too small for the rest of the budget, all later ones
        // are too: even covering its full popcount, the other remaining-1
        // sets can close at most (remaining-1)*max_pop elements.
        const std::size_t rest_budget = (static_cast<std::size_t>(remaining) - 1) * max_pop;
        for (int ci : covering[e]) {
            const Candidate& cand = cands[static_cast<std::size_t>(ci)];
            if (cand.popcount + rest_budget < missing) break;
            CoverageSet next = covered;
            next.union_with(cand.cover);
            chosen.push_back(ci);
            if (dfs(next, next.count(), remaining - 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

PermutationFamily family_from(const std::vector<int>& chosen, const std::vector<Candidate>& cands,
                              int n) {
    std::vector<std::vector<int>> orders;
    orders.reserve(chosen.size());
    for (int ci : chosen) orders.push_back(cands[static_cast<std::size_t>(ci)].order);
    std::sort(orders.begin(), orders.end());
    PermutationFamily fam;
    fam.n = n;
    for (auto& o : orders) fam.members.emplace_back(std::move(o));
    return fam;
}

}  // namespace

SolveResult sdim_exact(const Graph& g, int limit, int vertex_cap) {
    const int n = g.vertex_count();
    if (n > vertex_cap)
        throw cap_error("sdim_exact: n=" + std::to_string(n) + " exceeds the configured cap " +
                        std::to_string(vertex_cap));
    if (limit < 0) throw domain_error("sdim_exact: negative limit");

    SolveResult result;
    result.limit = limit;
    result.family.n = n;

    DisjointPairUniverse universe(g);
    if (universe.size() == 0) {
        result.value = 0;
        return result;
    }

    auto sorted = distinct_candidates(g, universe, result.stats.permutations_enumerated);
    result.stats.distinct_coverage_sets = sorted.size();
    auto cands = drop_dominated(std::move(sorted));
    result.stats.candidates_after_domination = cands.size();

    std::vector<std::vector<int>> covering(universe.size());
    for (std::size_t ci = 0; ci < cands.size(); ++ci)
        for (std::size_t e = 0; e < universe.size(); ++e)
            if (cands[ci].cover.test(e)) covering[e].push_back(static_cast<int>(ci));

    std::size_t max_pop = 0;
    for (const auto& c : cands) max_pop = std::max(max_pop, c.popcount);
    assert(max_pop > 0);

    // Greedy cover: upper bound plus fallback witness.
    std::vector<int> greedy;
    {
        CoverageSet covered(universe.size());
        std::size_t covered_count = 0;
        while (covered_count < universe.size()) {
            int best = -1;
            std::size_t best_gain = 0;
            for (std::size_t ci = 0; ci < cands.size(); ++ci) {
                CoverageSet u = covered;
                u.union_with(cands[ci].cover);
                std::size_t gain = u.count() - covered_count;
                if (gain > best_gain) {
                    best_gain = gain;
                    best = static_cast<int>(ci);
                }
            }
            assert(best >= 0);
            greedy.push_back(best);
            covered.union_with(cands[static_cast<std::size_t>(best)].cover);
            covered_count = covered.count();
        }
    }

    CoverSearch search{cands, covering, universe.size(), max_pop};
    const int greedy_size = static_cast<int>(greedy.size());
    for (int k = 0; k <= std::min(limit, greedy_size); ++k) {
        if (k == greedy_size) {
            result.value = k;
            result.family = family_from(greedy, cands, n);
            break;
        }
        CoverageSet covered(universe.size());
        std::vector<int> chosen;
        if (search.dfs(covered, 0, k, chosen)) {
            result.value = k;
            result.family = family_from(chosen, cands, n);
            break;
        }
    }
    result.stats.nodes = search.nodes;
    if (!result.value) result.exceeded_limit = true;
    return result;
}

bool sdim_brute(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n > 7) throw cap_error("sdim_brute: n=" + std::to_string(n) + " exceeds cap 7");
    if (k > 3) throw cap_error("sdim_brute: k=" + std::to_string(k) + " exceeds cap 3");
    if (k < 0) throw domain_error("sdim_brute: negative k");

    DisjointPairUniverse universe(g);
    const std::size_t target = universe.size();
    if (target == 0) return true;
    if (k == 0) return false;

    // All n! permutations, identical coverage sets deduplicated.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::unordered_map<CoverageSet, char, CoverageSetHash> seen;
    do {
        seen.emplace(coverage_quadratic(Permutation(order), g, universe), 1);
    } while (std::next_permutation(order.begin(), order.end()));

    std::vector<CoverageSet> sets;
    sets.reserve(seen.size());
    for (auto& [cov, _] : seen) sets.push_back(cov);
    std::sort(sets.begin(), sets.end(), [](const CoverageSet& a, const CoverageSet& b) {
        std::size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca > cb;
        return a.words() < b.words();
    });

    const std::size_t d = sets.size();
    const std::size_t s = std::min<std::size_t>(static_cast<std::size_t>(k), d);
    if (s == 0) return false;

    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        CoverageSet u = sets[idx[0]];
        for (std::size_t t = 1; t < s; ++t) u.union_with(sets[idx[t]]);
        if (u.count() == target) return true;
        // next combination of s indices out of d
        int pos = static_cast<int>(s) - 1;
        while (pos >= 0 &&
               idx[static_cast<std::size_t>(pos)] == d - s + static_cast<std::size_t>(pos))
            --pos;
        if (pos < 0) return false;
        ++idx[static_cast<std::size_t>(pos)];
        for (std::size_t t = static_cast<std::size_t>(pos) + 1; t < s; ++t)
            idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace sepdim
