#pragma once

#include <string>
#include <string_view>

#include "orc/graph.hpp"

namespace orc {

// Graph JSON: {"n": 4, "edges": [[0,1],[1,2],...], "labels": [...]} with
// canonical output ordering (u < v, lexicographic) and labels omitted when
// unset. The reader accepts edges in any order or orientation and
// canonicalizes; malformed documents raise Error("ParseError") naming the
// offending field.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace orc
