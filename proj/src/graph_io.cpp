#include "extremal/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace extremal {

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& what) {
    throw std::runtime_error("edge list, line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0) bad_line(lineno, "expected vertex count");
            std::string rest;
            if (ls >> rest) bad_line(lineno, "trailing tokens after vertex count");
            g = Graph(int(n));
            continue;
        }
        long u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) bad_line(lineno, "expected two endpoints");
        std::string rest;
        if (ls >> rest) bad_line(lineno, "trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            bad_line(lineno, "endpoint out of range [0," + std::to_string(n - 1) + "]");
        if (u == v) bad_line(lineno, "self-loop");
        if (g.has_edge(int(u), int(v))) bad_line(lineno, "duplicate edge");
        g.add_edge(int(u), int(v));
    }
    if (n < 0) throw std::runtime_error("edge list: empty input");
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph from_graph6(const std::string& s) {
    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= s.size()) throw std::runtime_error("graph6: truncated input");
        unsigned char c = s[pos++];
        if (c < 63 || c > 126)
            throw std::runtime_error("graph6: invalid byte at position " + std::to_string(pos));
        return c - 63;
    };
    long n;
    int c0 = take();
    if (c0 < 63) {
        n = c0;
    } else {
        // c0 == 63 means '~': 18-bit vertex count follows
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | take();
    }
    Graph g{int(n)};
    int bits = 0, buf = 0;
    for (long v = 1; v < n; ++v)
        for (long u = 0; u < v; ++u) {
            if (bits == 0) {
                buf = take();
                bits = 6;
            }
            if (buf & (1 << (bits - 1))) g.add_edge(int(u), int(v));
            --bits;
        }
    return g;
}

std::string to_graph6(const Graph& g) {
    const long n = g.order();
    if (n > 258047) throw std::domain_error("graph6: graph too large");
    std::string s;
    if (n < 63) {
        s.push_back(char(n + 63));
    } else {
        s.push_back(126);
        s.push_back(char(((n >> 12) & 63) + 63));
        s.push_back(char(((n >> 6) & 63) + 63));
        s.push_back(char((n & 63) + 63));
    }
    int bits = 0, buf = 0;
    for (long v = 1; v < n; ++v)
        for (long u = 0; u < v; ++u) {
            buf = (buf << 1) | (g.has_edge(int(u), int(v)) ? 1 : 0);
            if (++bits == 6) {
                s.push_back(char(buf + 63));
                bits = 0;
                buf = 0;
            }
        }
    if (bits > 0) s.push_back(char((buf << (6 - bits)) + 63));
    return s;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::string first;
    if (!std::getline(in, first)) throw std::runtime_error("empty graph file: " + path);
    // strip trailing CR/space
    while (!first.empty() && (first.back() == '\r' || first.back() == ' ')) first.pop_back();
    bool numeric = !first.empty();
    for (char c : first)
        if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
    in.clear();
    in.seekg(0);
    if (numeric) return read_edge_list(in);
    return from_graph6(first);
}

void write_graph_file(const std::string& path, const Graph& g, const std::string& format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    if (format == "edgelist")
        write_edge_list(out, g);
    else if (format == "graph6")
        out << to_graph6(g) << "\n";
    else
        throw std::domain_error("unknown graph format: " + format);
}

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);       // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);             // spokes
    }
    return g;
}

// Points 0..6, lines 7..13; the seven lines of the Fano plane.
Graph fano_incidence() {
    static const int lines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                    {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    Graph g(14);
    for (int l = 0; l < 7; ++l)
        for (int p : lines[l]) g.add_edge(p, 7 + l);
    return g;
}

Graph prism3() {
    Graph g(6);
    // two triangles {0,1,2},{3,4,5} plus the matching i -- i+3
    for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(i, 3 + i);
    }
    return g;
}

std::optional<int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return std::stoi(s);
}

}  // namespace

std::optional<Graph> named_graph(const std::string& name) {
    if (name == "paw") {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        return g;
    }
    if (name == "diamond") {
        Graph g = complete(4);
        Graph h(4);
        for (auto [u, v] : g.edges())
            if (!(u == 2 && v == 3)) h.add_edge(u, v);
        return h;
    }
    if (name == "prism") return prism3();
    if (name == "petersen") return petersen();
    if (name == "fano") return fano_incidence();
    if (name.size() >= 2) {
        char kind = name[0];
        std::string rest = name.substr(1);
        if (kind == 'k') {
            auto comma = rest.find(',');
            if (comma != std::string::npos) {
                auto a = parse_int(rest.substr(0, comma));
                auto b = parse_int(rest.substr(comma + 1));
                if (a && b) return complete_bipartite(*a, *b);
                return std::nullopt;
            }
            if (auto n = parse_int(rest)) return complete(*n);
        }
        if (kind == 'c')
            if (auto n = parse_int(rest); n && *n >= 3) return cycle(*n);
        if (kind == 'p')
            if (auto n = parse_int(rest)) return path(*n);
        if (kind == 'e')
            if (auto n = parse_int(rest)) return Graph(*n);
        if (name.rfind("star", 0) == 0)
            if (auto n = parse_int(name.substr(4))) return complete_bipartite(1, *n);
    }
    return std::nullopt;
}

Graph resolve_graph(const std::string& name_or_path) {
    if (auto g = named_graph(name_or_path)) return *g;
    return read_graph_file(name_or_path);
}

}  // namespace extremal
