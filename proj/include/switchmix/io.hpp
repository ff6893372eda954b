#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "switchmix/degseq.hpp"
#include "switchmix/graph.hpp"

namespace switchmix {

// Degree sequence files hold one integer per line (undirected) or one
// "in out" pair per line (directed). Blank lines and lines starting with '#'
// are skipped. Parse errors throw std::invalid_argument with the line number.
DegreeSequence read_degree_sequence(std::istream& in);
DirectedDegreeSequence read_directed_degree_sequence(std::istream& in);

/// Inline form: "3,3,1,1" (undirected) or "1:1,1:1,1:1" (directed, in:out).
DegreeSequence parse_degree_sequence(std::string_view text);
DirectedDegreeSequence parse_directed_degree_sequence(std::string_view text);

// Edge-list format (0-indexed vertices):
//   n <vertex count>
//   u v
//   ...
// Graphs write edges as stored with u < v; digraphs write "tail head".
// write(read(text)) == text for any text produced by write.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, const Digraph& g);
Graph read_graph(std::istream& in);
Digraph read_digraph(std::istream& in);

std::string to_edge_list(const Graph& g);
std::string to_edge_list(const Digraph& g);

}  // namespace switchmix
