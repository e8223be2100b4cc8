#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "extremal/graph.hpp"

namespace extremal {

// Line-oriented edge list: vertex count on line 1, then "u v" per edge.
// Rejects out-of-range endpoints, self-loops and duplicate edges with a
// diagnostic naming the offending line.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// graph6 as used by the usual graph corpora (<= 258047 vertices).
Graph from_graph6(const std::string& s);
std::string to_graph6(const Graph& g);

// Reads a graph from a file; a leading integer line means edge list,
// anything else is parsed as graph6.
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g,
                      const std::string& format);  // "edgelist" | "graph6"

// Small named menagerie for CLI/test convenience: kN, cN, pN (path on N
// vertices), kA,B (complete bipartite), starN (= K_{1,N}), eN (edgeless),
// paw, diamond, prism, petersen, fano (Fano plane incidence graph).
std::optional<Graph> named_graph(const std::string& name);

// named_graph(name), else read_graph_file(name).
Graph resolve_graph(const std::string& name_or_path);

}  // namespace extremal
