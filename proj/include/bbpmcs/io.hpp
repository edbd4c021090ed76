#pragma once

#include <string>

#include "bbpmcs/graph.hpp"

namespace bbpmcs {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u,v < n and u != v. Duplicate edge lines collapse to one edge.
// A JSON mirror {"n": int, "edges": [[u,v],...]} is accepted wherever the
// text format is; the two are distinguished by the first non-space byte.
Graph parse_graph(const std::string& text);

Graph parse_graph_file(const std::string& path);

std::string to_edge_list(const Graph& g);
std::string to_json_graph(const Graph& g);

}  // namespace bbpmcs
