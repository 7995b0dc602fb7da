#include "sepdim/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace sepdim {

namespace {

// Misra-Gries working state. Colors are 0..max_colors-1 with
// max_colors = Delta + 1; at[v][c] = neighbor joined to v by color c, or -1.
struct MisraGries {
    const Graph& g;
    int max_colors;
    std::vector<std::vector<int>> at;
    std::vector<int> color_of;  // per edge index, -1 = uncolored

    explicit MisraGries(const Graph& graph)
        : g(graph),
          max_colors(graph.max_degree() + 1),
          at(static_cast<std::size_t>(graph.vertex_count()),
             std::vector<int>(static_cast<std::size_t>(graph.max_degree() + 1), -1)),
          color_of(static_cast<std::size_t>(graph.edge_count()), -1) {}

    int partner(int v, int c) const {
        return at[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
    }

    bool is_free(int v, int c) const { return partner(v, c) == -1; }

    int free_color(int v) const {
        for (int c = 0; c < max_colors; ++c)
            if (is_free(v, c)) return c;
        assert(false && "no free color within Delta+1");
        return -1;
    }

    int color_between(int u, int w) const {
        return color_of[static_cast<std::size_t>(g.edge_index(u, w))];
    }

    void set_color(int u, int w, int c) {
        int idx = g.edge_index(u, w);
        int old = color_of[static_cast<std::size_t>(idx)];
        if (old != -1) {
            at[static_cast<std::size_t>(u)][static_cast<std::size_t>(old)] = -1;
            at[static_cast<std::size_t>(w)][static_cast<std::size_t>(old)] = -1;
        }
        color_of[static_cast<std::size_t>(idx)] = c;
        if (c != -1) {
            at[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] = w;
            at[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] = u;
        }
    }

    // Maximal fan of u starting at v: fan[0] = v with (u,v) uncolored; each
    // later vertex w has (u,w) colored with a color free on the previous fan
    // vertex. Candidates are scanned in ascending neighbor id.
    std::vector<int> build_fan(int u, int v) const {
        std::vector<int> fan{v};
        std::vector<char> in_fan(static_cast<std::size_t>(g.vertex_count()), 0);
        in_fan[static_cast<std::size_t>(v)] = 1;
        bool extended = true;
        while (extended) {
            extended = false;
            for (int w : g.neighbors(u)) {
                if (in_fan[static_cast<std::size_t>(w)]) continue;
                int c = color_between(u, w);
                if (c != -1 && is_free(fan.back(), c)) {
                    fan.push_back(w);
                    in_fan[static_cast<std::size_t>(w)] = 1;
                    extended = true;
                    break;
                }
            }
        }
        return fan;
    }

    // Invert the maximal path starting at u whose edges alternate d,c,d,...
    // Returns the terminal vertex (u when the path is empty).
    int invert_path(int u, int c, int d) {
        std::vector<int> nodes{u};
        int col = d;
        while (true) {
            int next = partner(nodes.back(), col);
            if (next == -1) break;
            nodes.push_back(next);
            col = (col == d) ? c : d;
        }
        std::vector<int> cols(nodes.size() > 0 ? nodes.size() - 1 : 0);
        col = d;
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            cols[i] = col;
            col = (col == d) ? c : d;
        }
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) set_color(nodes[i], nodes[i + 1], -1);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            set_color(nodes[i], nodes[i + 1], cols[i] == d ? c : d);
        return nodes.back();
    }

    // Shift each fan edge's color one step toward the front and leave the
    // last fan edge uncolored.
    void rotate(int u, const std::vector<int>& fan) {
        std::vector<int> cols(fan.size());
        for (std::size_t i = 1; i < fan.size(); ++i) cols[i] = color_between(u, fan[i]);
        for (std::size_t i = 1; i < fan.size(); ++i) set_color(u, fan[i], -1);
        for (std::size_t i = 0; i + 1 < fan.size(); ++i) set_color(u, fan[i], cols[i + 1]);
    }
};

}  // namespace

EdgeColoring edge_coloring(const Graph& g) {
    EdgeColoring out;
    out.color_of.assign(static_cast<std::size_t>(g.edge_count()), -1);
    out.colors = 0;
    if (g.edge_count() == 0) return out;

    MisraGries mg(g);
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge e = g.edge(ei);
        const int u = e.u;
        std::vector<int> fan = mg.build_fan(u, e.v);
        const int c = mg.free_color(u);
        const int d = mg.free_color(fan.back());
        if (!mg.is_free(u, d)) {
            // The d-colored neighbor of u must sit in the fan, else the fan
            // would be extendable by it.
            int z = mg.partner(u, d);
            auto it = std::find(fan.begin(), fan.end(), z);
            assert(it != fan.end() && it != fan.begin());
            std::size_t h = static_cast<std::size_t>(it - fan.begin()) - 1;
            int terminal = mg.invert_path(u, c, d);
            // If the inverted path did not end at fan[h], d is still free
            // there and the prefix fan[0..h] stays a fan; otherwise the whole
            // fan survives and d is free on its last vertex.
            if (terminal != fan[h]) fan.resize(h + 1);
        }
        mg.rotate(u, fan);
        assert(mg.is_free(u, d) && mg.is_free(fan.back(), d));
        mg.set_color(u, fan.back(), d);
    }

    out.color_of = mg.color_of;
    int maxc = -1;
    for (int c : out.color_of) maxc = std::max(maxc, c);
    out.colors = maxc + 1;
    return out;
}

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.color_of.size()) != g.edge_count()) return false;
    for (int col : c.color_of)
        if (col < 0 || col >= std::max(c.colors, 1)) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<char> seen(static_cast<std::size_t>(std::max(c.colors, 1)), 0);
        for (int w : g.neighbors(v)) {
            int col = c.color_of[static_cast<std::size_t>(g.edge_index(v, w))];
            if (seen[static_cast<std::size_t>(col)]) return false;
            seen[static_cast<std::size_t>(col)] = 1;
        }
    }
    return true;
}

Partition distance_two_coloring(const Graph& g) {
    const int n = g.vertex_count();
    Partition p;
    p.part_of.assign(static_cast<std::size_t>(n), -1);
    int parts = 0;
    std::vector<char> banned;
    for (int v = 0; v < n; ++v) {
        banned.assign(static_cast<std::size_t>(parts + 1), 0);
        auto ban = [&](int w) {
            int c = p.part_of[static_cast<std::size_t>(w)];
            if (c >= 0) banned[static_cast<std::size_t>(c)] = 1;
        };
        for (int w : g.neighbors(v)) {
            ban(w);
            for (int x : g.neighbors(w))
                if (x != v) ban(x);
        }
        int c = 0;
        while (banned[static_cast<std::size_t>(c)]) ++c;
        p.part_of[static_cast<std::size_t>(v)] = c;
        parts = std::max(parts, c + 1);
    }
    p.parts = (n == 0) ? 0 : parts;
    return p;
}

bool is_distance_two_proper(const Graph& g, const Partition& p) {
    validate_partition(p, g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        int cv = p.part_of[static_cast<std::size_t>(v)];
        for (int w : g.neighbors(v)) {
            if (p.part_of[static_cast<std::size_t>(w)] == cv) return false;
            for (int x : g.neighbors(w))
                if (x != v && p.part_of[static_cast<std::size_t>(x)] == cv) return false;
        }
    }
    return true;
}

}  // namespace sepdim
