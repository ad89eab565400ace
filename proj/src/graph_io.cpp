#include "orc/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "orc/errors.hpp"

namespace orc {

using nlohmann::ordered_json;

std::string graph_to_json(const Graph& g) {
  ordered_json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = ordered_json::array();
  for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
  if (!g.labels().empty()) doc["labels"] = g.labels();
  return doc.dump();
}

Graph graph_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    fail("ParseError", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("ParseError", "graph document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    fail("ParseError", "field 'n' missing or not an integer");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    fail("ParseError", "field 'edges' missing or not an array");

  const int n = doc["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail("ParseError", "field 'edges' must hold [u,v] integer pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  Graph g(n, edges);
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array())
      fail("ParseError", "field 'labels' must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& l : doc["labels"]) {
      if (!l.is_string())
        fail("ParseError", "field 'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    g.set_labels(std::move(labels));
  }
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("ParseError", "cannot write graph file '" + path + "'");
  out << graph_to_json(g) << "\n";
}

}  // namespace orc
