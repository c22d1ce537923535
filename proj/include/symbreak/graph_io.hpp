#pragma once

#include <string>
#include <string_view>

#include "symbreak/graph.hpp"

namespace symbreak {

enum class GraphFormat { edgelist, graph6 };

// edgelist: first line "n m", then m lines "u v" (0-indexed, LF endings).
// graph6: the public graph6 encoding; an optional ">>graph6<<" header is accepted.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// picks the format from the content: a leading digit means edgelist
GraphFormat sniff_format(std::string_view text);

Graph read_graph_file(const std::string& path, GraphFormat format);
Graph read_graph_file_auto(const std::string& path);

}  // namespace symbreak
