#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ktsp/graph.hpp"

namespace ktsp {

/// Decodes one graph6 string (optional ">>graph6<<" header, trailing newline
/// allowed). sparse6 strings (leading ':') are accepted as well.
Graph parse_graph6(std::string_view text);

/// Unweighted graphs only. Orders above 62 use the long size prefix.
std::string encode_graph6(const Graph& g);

/// One graph per nonempty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// Edge-list text: optional first line "n <count>", then "u v" or "u v w"
/// lines (w a nonnegative decimal or p/q). Blank lines and '#' comments are
/// skipped. Without a header every index in [0, max] must occur.
Graph parse_edge_list_graph(std::string_view text);
Digraph parse_edge_list_digraph(std::string_view text);
AnyGraph parse_edge_list(std::string_view text, bool directed);

template <bool Directed>
std::string encode_edge_list(const BasicGraph<Directed>& g);

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Reads a graph from file contents. Auto picks graph6 when the first
/// nonempty line looks like a graph6/sparse6 string.
AnyGraph read_graph(std::string_view text, GraphFormat format, bool directed);

}  // namespace ktsp
