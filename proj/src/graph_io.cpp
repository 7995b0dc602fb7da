#include "sepdim/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sepdim {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

long long parse_int(const std::string& tok, int line_no) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + tok + "'", line_no);
    }
    if (pos != tok.size())
        throw parse_error("trailing characters in integer '" + tok + "'", line_no);
    return value;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        ls >> a;
        if (n < 0) {
            if (ls >> extra) throw parse_error("header must be a single vertex count", line_no);
            n = parse_int(a, line_no);
            if (n < 0) throw parse_error("vertex count must be non-negative", line_no);
            continue;
        }
        if (!(ls >> b)) throw parse_error("expected 'u v'", line_no);
        if (ls >> extra) throw parse_error("unexpected token '" + extra + "'", line_no);
        long long u = parse_int(a, line_no);
        long long v = parse_int(b, line_no);
        if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u), line_no);
        if (u < 0 || v >= n || u >= n || v < 0)
            throw parse_error("vertex out of range 0.." + std::to_string(n - 1), line_no);
        if (u > v) throw parse_error("edges must be written with u < v", line_no);
        edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v)});
    }
    if (n < 0) throw parse_error("missing vertex count header", line_no);
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    write_graph(g, out);
    if (!out) throw parse_error("write failed for '" + path + "'");
}

}  // namespace sepdim
