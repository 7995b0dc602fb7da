#include "sepdim/lower_bounds.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "sepdim/coloring.hpp"
#include "sepdim/exact_solver.hpp"
#include "sepdim/rng.hpp"
#include "sepdim/separation.hpp"

namespace sepdim {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Adjacency rows as bit masks for fast incremental internal-edge counts.
std::vector<std::vector<std::uint64_t>> adjacency_masks(const Graph& g) {
    const int n = g.vertex_count();
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(n),
                                                 std::vector<std::uint64_t>(words, 0));
    for (const Edge& e : g.edges()) {
        rows[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v) >> 6] |=
            std::uint64_t{1} << (e.v & 63);
        rows[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u) >> 6] |=
            std::uint64_t{1} << (e.u & 63);
    }
    return rows;
}

std::size_t mask_intersection(const std::vector<std::uint64_t>& a,
                              const std::vector<std::uint64_t>& b) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

struct SubsetEnumerator {
    const Graph& g;
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::uint64_t> mask;
    std::vector<int> current;
    double delta;
    int target_size = 0;
    std::uint64_t checked = 0;
    bool violated = false;
    std::vector<int> witness;
    std::size_t witness_edges = 0;

    SubsetEnumerator(const Graph& graph, double d)
        : g(graph),
          rows(adjacency_masks(graph)),
          mask((static_cast<std::size_t>(graph.vertex_count()) + 63) / 64, 0),
          delta(d) {}

    void run(int start, std::size_t internal_edges) {
        if (violated) return;
        const std::size_t size = current.size();
        if (size >= 2) {
            ++checked;
            if (static_cast<double>(internal_edges) > (1.0 + delta) * static_cast<double>(size)) {
                violated = true;
                witness = current;
                witness_edges = internal_edges;
                return;
            }
        }
        if (static_cast<int>(size) == target_size) return;
        for (int v = start; v < g.vertex_count(); ++v) {
            std::size_t added = mask_intersection(rows[static_cast<std::size_t>(v)], mask);
            current.push_back(v);
            mask[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
            run(v + 1, internal_edges + added);
            mask[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
            current.pop_back();
            if (violated) return;
        }
    }
};

}  // namespace

std::string to_string(const ExpansionCertificate& cert) {
    std::ostringstream out;
    out << "expansion certificate: delta=" << fmt_double(cert.delta)
        << " eps=" << fmt_double(cert.eps)
        << " mode=" << (cert.mode == ExpansionMode::exhaustive ? "exhaustive" : "sampled")
        << " max_subset=" << cert.max_subset_size << " checked=" << cert.checked_sets;
    if (cert.mode == ExpansionMode::sampled) out << " samples=" << cert.samples;
    out << " verdict=" << (cert.holds ? "holds" : "violated");
    if (!cert.holds) {
        out << " witness={";
        for (std::size_t i = 0; i < cert.witness.size(); ++i)
            out << (i ? "," : "") << cert.witness[i];
        out << "} internal_edges=" << cert.witness_edges;
    }
    return out.str();
}

ExpansionCertificate verify_expansion(const Graph& g, double delta, double eps,
                                      ExpansionMode mode, int exhaustive_cap,
                                      std::uint64_t samples, std::uint64_t seed) {
    if (!(eps > 0.0 && eps <= 1.0)) throw domain_error("verify_expansion: need 0 < eps <= 1");
    if (!(delta > 0.0)) throw domain_error("verify_expansion: need delta > 0");
    const int n = g.vertex_count();

    ExpansionCertificate cert;
    cert.delta = delta;
    cert.eps = eps;
    cert.mode = mode;
    cert.max_subset_size = static_cast<int>(std::floor(eps * n));
    cert.holds = true;

    if (mode == ExpansionMode::exhaustive) {
        if (cert.max_subset_size > exhaustive_cap)
            throw cap_error("verify_expansion: floor(eps*n)=" +
                            std::to_string(cert.max_subset_size) + " exceeds the exhaustive cap " +
                            std::to_string(exhaustive_cap));
        SubsetEnumerator enumerator(g, delta);
        for (int s = 2; s <= cert.max_subset_size && !enumerator.violated; ++s) {
            enumerator.target_size = s;
            enumerator.run(0, 0);
        }
        cert.checked_sets = enumerator.checked;
        if (enumerator.violated) {
            cert.holds = false;
            cert.witness = enumerator.witness;
            cert.witness_edges = enumerator.witness_edges;
        }
        return cert;
    }

    cert.samples = samples;
    cert.seed = seed;
    std::mt19937_64 rng(mix_seed(seed));
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (std::uint64_t i = 0; i < samples && cert.max_subset_size >= 2; ++i) {
        int s = 2 + static_cast<int>(uniform_below(
                        rng, static_cast<std::uint64_t>(cert.max_subset_size - 1)));
        // Partial Fisher-Yates: the first s entries become a uniform subset.
        for (int k = 0; k < s; ++k) {
            std::size_t j = static_cast<std::size_t>(k) +
                            static_cast<std::size_t>(uniform_below(
                                rng, static_cast<std::uint64_t>(n - k)));
            std::swap(pool[static_cast<std::size_t>(k)], pool[j]);
        }
        std::vector<int> subset(pool.begin(), pool.begin() + s);
        std::sort(subset.begin(), subset.end());
        std::size_t internal = 0;
        for (std::size_t a = 0; a < subset.size(); ++a)
            for (std::size_t b = a + 1; b < subset.size(); ++b)
                if (g.has_edge(subset[a], subset[b])) ++internal;
        ++cert.checked_sets;
        if (static_cast<double>(internal) > (1.0 + delta) * s) {
            cert.holds = false;
            cert.witness = subset;
            cert.witness_edges = internal;
            break;
        }
    }
    return cert;
}

ShortEdgeBoundReport short_edge_count_bound(const Graph& g, const Permutation& sigma,
                                            double delta, double eps,
                                            const ExpansionCertificate& cert) {
    if (cert.mode != ExpansionMode::exhaustive)
        throw precondition_error("short_edge_count_bound: a sampled certificate cannot back "
                                 "the bound");
    if (!cert.holds)
        throw precondition_error("short_edge_count_bound: the expansion certificate does not hold");
    if (cert.delta != delta || cert.eps != eps)
        throw precondition_error("short_edge_count_bound: certificate parameters do not match");
    if (!(delta > 0.0 && delta < 1.0))
        throw domain_error("short_edge_count_bound: need 0 < delta < 1");
    const int n = g.vertex_count();
    if (sigma.size() != n) throw domain_error("short_edge_count_bound: permutation size mismatch");

    ShortEdgeBoundReport report;
    report.threshold = static_cast<int>(std::floor(delta * eps * n));
    auto shorts = short_edges(g, sigma, report.threshold);
    report.short_count = shorts.size();
    report.bound = (1.0 + delta) / (1.0 - delta) * n;
    report.holds = static_cast<double>(report.short_count) <= report.bound;

    report.block_size = static_cast<int>(std::floor(eps * n));
    report.overlap = static_cast<int>(std::floor(delta * report.block_size));
    if (report.block_size >= 1) {
        const int stride = report.block_size - report.overlap;  // >= 1 since delta < 1
        for (int start = 0; start < n; start += stride)
            report.blocks.emplace_back(start, std::min(start + report.block_size, n));
    }
    report.blocks_cover_short = true;
    const auto& rank = sigma.ranks();
    for (const Edge& e : shorts) {
        int lo = std::min(rank[static_cast<std::size_t>(e.u)], rank[static_cast<std::size_t>(e.v)]);
        int hi = std::max(rank[static_cast<std::size_t>(e.u)], rank[static_cast<std::size_t>(e.v)]);
        bool inside = false;
        for (const auto& [start, end] : report.blocks)
            if (lo >= start && hi < end) {
                inside = true;
                break;
            }
        if (!inside) {
            report.blocks_cover_short = false;
            break;
        }
    }
    return report;
}

LongMatchingReport long_matching(const Graph& g, const PermutationFamily& fam, double delta,
                                 double eps) {
    if (fam.members.empty()) throw domain_error("long_matching: the family must be nonempty");
    if (fam.n != g.vertex_count()) throw domain_error("long_matching: family size mismatch");
    const int n = g.vertex_count();

    LongMatchingReport report;
    report.short_threshold = static_cast<int>(std::floor(delta * eps * n));

    // Long = short in no member.
    std::vector<char> is_long(static_cast<std::size_t>(g.edge_count()), 1);
    for (const Permutation& sigma : fam.members) {
        const auto& rank = sigma.ranks();
        for (int ei = 0; ei < g.edge_count(); ++ei) {
            const Edge& e = g.edge(ei);
            int gap = std::abs(rank[static_cast<std::size_t>(e.u)] -
                               rank[static_cast<std::size_t>(e.v)]);
            if (gap <= report.short_threshold) is_long[static_cast<std::size_t>(ei)] = 0;
        }
    }
    for (char b : is_long) report.total_long += b;

    EdgeColoring coloring = edge_coloring(g);
    report.class_threshold = n / (4.0 * (g.max_degree() + 1));
    if (coloring.colors == 0) {
        report.meets_threshold = 0 >= report.class_threshold;
        return report;
    }
    std::vector<std::size_t> long_per_color(static_cast<std::size_t>(coloring.colors), 0);
    for (int ei = 0; ei < g.edge_count(); ++ei)
        if (is_long[static_cast<std::size_t>(ei)])
            ++long_per_color[static_cast<std::size_t>(coloring.color_of[static_cast<std::size_t>(ei)])];
    int best = 0;
    for (int c = 1; c < coloring.colors; ++c)
        if (long_per_color[static_cast<std::size_t>(c)] > long_per_color[static_cast<std::size_t>(best)])
            best = c;
    report.color = best;
    for (int ei = 0; ei < g.edge_count(); ++ei)
        if (is_long[static_cast<std::size_t>(ei)] &&
            coloring.color_of[static_cast<std::size_t>(ei)] == best)
            report.matching.push_back(g.edge(ei));
    report.meets_threshold =
        static_cast<double>(report.matching.size()) >= report.class_threshold;
    return report;
}

SeparationGraph separation_graph(const std::vector<Edge>& matching, const Permutation& sigma) {
    SeparationGraph h;
    h.labels = matching;
    std::sort(h.labels.begin(), h.labels.end());
    for (std::size_t i = 0; i < h.labels.size(); ++i)
        for (std::size_t j = i + 1; j < h.labels.size(); ++j)
            if (share_vertex(h.labels[i], h.labels[j]))
                throw domain_error("separation_graph: input is not a matching");
    for (const Edge& e : h.labels)
        if (e.u < 0 || e.v >= sigma.size())
            throw domain_error("separation_graph: edge endpoint outside the permutation");

    const std::size_t count = h.labels.size();
    h.adj.assign(count, std::vector<char>(count, 0));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (separates(sigma, h.labels[i], h.labels[j])) {
                h.adj[i][j] = h.adj[j][i] = 1;
                h.h_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
    return h;
}

CrossingAudit crossing_point_audit(const SeparationGraph& h, const Permutation& sigma,
                                   double delta, double eps) {
    const int n = sigma.size();
    CrossingAudit audit;
    audit.stride = static_cast<int>(std::floor(delta * eps * n));
    if (audit.stride < 1)
        throw domain_error("crossing_point_audit: floor(delta*eps*n) must be >= 1");
    audit.group_limit = static_cast<std::size_t>(std::ceil(1.0 / (delta * eps)));

    const auto& rank = sigma.ranks();
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < h.labels.size(); ++i) {
        const Edge& e = h.labels[i];
        int lo = std::min(rank[static_cast<std::size_t>(e.u)], rank[static_cast<std::size_t>(e.v)]);
        int hi = std::max(rank[static_cast<std::size_t>(e.u)], rank[static_cast<std::size_t>(e.v)]);
        if (hi - lo <= audit.stride)
            throw precondition_error("crossing_point_audit: edge (" + std::to_string(e.u) + "," +
                                     std::to_string(e.v) + ") is not long for this permutation");
        const int s = audit.stride;
        int j = std::max(1, (lo + s - 1) / s);  // least multiple of s in [lo, hi]
        int point = j * s;
        assert(point >= lo && point <= hi);
        audit.point_of.push_back(point);
        groups[point].push_back(static_cast<int>(i));
    }
    audit.groups_independent = true;
    for (auto& [point, members] : groups) {
        for (std::size_t a = 0; a < members.size() && audit.groups_independent; ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (h.adj[static_cast<std::size_t>(members[a])][static_cast<std::size_t>(members[b])]) {
                    audit.groups_independent = false;
                    break;
                }
        audit.groups.emplace_back(point, members);
    }
    audit.within_limit = audit.groups.size() <= audit.group_limit;
    return audit;
}

LowerBoundCertificate certified_lower_bound(const Graph& g, double delta, double eps,
                                            int exhaustive_cap) {
    if (!(eps > 0.0 && eps <= 1.0)) throw domain_error("certified_lower_bound: need 0 < eps <= 1");
    if (!(delta > 0.0)) throw domain_error("certified_lower_bound: need delta > 0");

    LowerBoundCertificate cert;
    cert.n = g.vertex_count();
    cert.delta = delta;
    cert.eps = eps;
    auto deg = g.regular_degree();
    cert.d = deg.value_or(-1);

    using Status = LowerBoundCertificate::Status;
    auto add = [&](const std::string& name, Status st, const std::string& detail) {
        cert.hypotheses.push_back({name, st, detail});
        if (st == Status::failed && cert.failure.empty()) cert.failure = name;
    };

    // (i) regularity with d >= 3
    bool regular_ok = deg.has_value() && *deg >= 3;
    if (!deg.has_value())
        add("d-regular with d >= 3", Status::failed, "graph is not regular");
    else if (*deg < 3)
        add("d-regular with d >= 3", Status::failed,
            "d=" + std::to_string(*deg) + "; d >= 3 required");
    else
        add("d-regular with d >= 3", Status::passed, "d=" + std::to_string(*deg));

    // (ii) delta small enough: ((d-1)/2) (1+delta)/(1-delta) <= (2d-1)/4
    bool delta_ok = false;
    if (!regular_ok) {
        add("delta condition", Status::skipped, "");
    } else if (!(delta < 1.0)) {
        add("delta condition", Status::failed, "delta must be below 1");
    } else {
        const double d = static_cast<double>(*deg);
        const double lhs = (d - 1.0) / 2.0 * (1.0 + delta) / (1.0 - delta);
        const double rhs = (2.0 * d - 1.0) / 4.0;
        delta_ok = lhs <= rhs;
        std::string detail = "((d-1)/2)(1+delta)/(1-delta)=" + fmt_double(lhs) +
                             (delta_ok ? " <= " : " > ") + fmt_double(rhs);
        add("delta condition", delta_ok ? Status::passed : Status::failed, detail);
    }

    // (iii) n > 4(d+1) (1/(delta*eps))^(d/2)
    bool size_ok = false;
    if (!regular_ok) {
        add("size hypothesis", Status::skipped, "");
    } else {
        const double d = static_cast<double>(*deg);
        cert.size_threshold = 4.0 * (d + 1.0) * std::pow(1.0 / (delta * eps), d / 2.0);
        size_ok = static_cast<double>(cert.n) > cert.size_threshold;
        std::string detail = "n=" + std::to_string(cert.n) + (size_ok ? " > " : " <= ") +
                             fmt_double(cert.size_threshold);
        add("size hypothesis", size_ok ? Status::passed : Status::failed, detail);
    }

    // (iv) exhaustive small-set expansion
    if (regular_ok && delta_ok && size_ok) {
        int max_subset = static_cast<int>(std::floor(eps * cert.n));
        if (max_subset > exhaustive_cap) {
            add("expansion", Status::failed,
                "exhaustive check needs floor(eps*n)=" + std::to_string(max_subset) +
                    " <= cap " + std::to_string(exhaustive_cap));
        } else {
            cert.expansion = verify_expansion(g, delta, eps, ExpansionMode::exhaustive,
                                              exhaustive_cap);
            add("expansion", cert.expansion->holds ? Status::passed : Status::failed,
                cert.expansion->holds ? "holds" : "violated");
        }
    } else {
        add("expansion", Status::skipped, "");
    }

    if (cert.failure.empty() && regular_ok)
        cert.implied_bound = (*deg + 1) / 2;  // ceil(d/2)
    return cert;
}

std::string to_string(const LowerBoundCertificate& cert) {
    std::ostringstream out;
    out << "lower-bound certificate\n";
    out << "  n: " << cert.n << "  d: " << cert.d << "  delta: " << fmt_double(cert.delta)
        << "  eps: " << fmt_double(cert.eps) << '\n';
    if (cert.d >= 0)
        out << "  size threshold 4(d+1)(1/(delta*eps))^(d/2): " << fmt_double(cert.size_threshold)
            << '\n';
    for (const auto& h : cert.hypotheses) {
        out << "  hypothesis " << h.name << ": ";
        switch (h.status) {
            case LowerBoundCertificate::Status::passed: out << "passed"; break;
            case LowerBoundCertificate::Status::failed: out << "failed"; break;
            case LowerBoundCertificate::Status::skipped: out << "skipped"; break;
        }
        if (!h.detail.empty()) out << " (" << h.detail << ")";
        out << '\n';
    }
    if (cert.expansion) out << "  " << to_string(*cert.expansion) << '\n';
    if (cert.implied_bound)
        out << "  implied bound: sdim >= " << *cert.implied_bound << '\n';
    else
        out << "  implied bound: not established: " << cert.failure << '\n';
    return out.str();
}

bool exhaustive_lower_bound(const Graph& g, int k) {
    if (k < 0) throw domain_error("exhaustive_lower_bound: negative k");
    SolveResult result = sdim_exact(g, k);
    return result.exceeded_limit;
}

}  // namespace sepdim
