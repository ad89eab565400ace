// Command-line front end: generate or load graphs, compute curvatures and
// idleness profiles for selected pairs, run the verification suites, and
// emit exact-rational tables as CSV or JSON.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orc/curvature.hpp"
#include "orc/errors.hpp"
#include "orc/generators.hpp"
#include "orc/graph.hpp"
#include "orc/graph_io.hpp"
#include "orc/rational.hpp"
#include "orc/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace orc;

struct SourceOptions {
  std::string graph_file;
  std::string gen_spec;
};

struct SelectOptions {
  std::string pair;
  bool all_pairs = false;
  int at_distance = -1;
  bool edges = false;
};

struct OutputOptions {
  std::string path;  // empty: stdout
  std::string format = "csv";
  bool decimal_hint = false;
};

struct LoadedGraph {
  Graph graph;
  std::optional<std::pair<int, int>> marked;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, sep)) out.push_back(token);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

int parse_int_field(const std::string& token, const std::string& field) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    fail("ParseError", "field '" + field + "': expected an integer, got '" + token + "'");
  }
  if (pos != token.size()) {
    fail("ParseError", "field '" + field + "': expected an integer, got '" + token + "'");
  }
  return value;
}

// Generator specs use "kind:comma-separated-ints", e.g. cycle:6,
// family:1,1,0, hex:20,20, tree:3,2; figure3 takes no parameters.
LoadedGraph graph_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    for (const auto& tok : split(spec.substr(colon + 1), ',')) {
      params.push_back(parse_int_field(tok, "--gen " + kind));
    }
  }
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      fail("ParseError", "generator '" + kind + "' takes " + std::to_string(n) +
                             " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (kind == "figure3") {
    need(0);
    auto marked = gen_figure3_graph();
    return {std::move(marked.graph), {{marked.x, marked.y}}};
  }
  if (kind == "family") {
    need(3);
    auto marked = gen_family(params[0], params[1], params[2]);
    return {std::move(marked.graph), {{marked.x, marked.y}}};
  }
  if (kind == "tree") {
    need(2);
    return {gen_tree_ball(params[0], params[1]).graph, std::nullopt};
  }
  if (kind == "hex") {
    need(2);
    return {gen_hex_torus(params[0], params[1]), std::nullopt};
  }
  if (kind == "path" || kind == "cycle" || kind == "complete" || kind == "star") {
    need(1);
    return {gen_basic(parse_basic_kind(kind), params[0]), std::nullopt};
  }
  fail("ParseError", "unknown generator '" + kind +
                         "' (expected path, cycle, complete, star, figure3, family, "
                         "tree, or hex)");
}

LoadedGraph load_source(const SourceOptions& src) {
  if (src.graph_file.empty() == src.gen_spec.empty()) {
    fail("ParseError", "exactly one of --graph and --gen is required");
  }
  if (!src.graph_file.empty()) return {load_graph_file(src.graph_file), std::nullopt};
  return graph_from_spec(src.gen_spec);
}

// Labels win over indices, so `--pair x,y` works on the marked generators.
int resolve_vertex(const Graph& g, const std::string& token) {
  if (auto v = g.vertex_by_label(token)) return *v;
  int v = parse_int_field(token, "--pair");
  if (v < 0 || v >= g.vertex_count()) {
    fail("IndexOutOfRange", "field '--pair': vertex " + token + " not in [0, " +
                                std::to_string(g.vertex_count()) + ")");
  }
  return v;
}

std::vector<std::pair<int, int>> select_pairs(const Graph& g, const DistanceMatrix& dm,
                                              const SelectOptions& sel,
                                              const std::optional<std::pair<int, int>>& marked) {
  const int chosen = (!sel.pair.empty() ? 1 : 0) + (sel.all_pairs ? 1 : 0) +
                     (sel.at_distance >= 0 ? 1 : 0) + (sel.edges ? 1 : 0);
  if (chosen > 1) {
    fail("ParseError", "--pair, --all-pairs, --at-distance, and --edges are mutually exclusive");
  }
  std::vector<std::pair<int, int>> pairs;
  if (!sel.pair.empty()) {
    auto tokens = split(sel.pair, ',');
    if (tokens.size() != 2) {
      fail("ParseError", "field '--pair': expected two comma-separated vertices");
    }
    pairs.emplace_back(resolve_vertex(g, tokens[0]), resolve_vertex(g, tokens[1]));
  } else if (sel.all_pairs || sel.at_distance >= 0) {
    for (int u = 0; u < g.vertex_count(); ++u) {
      for (int v = u + 1; v < g.vertex_count(); ++v) {
        if (!dm.reachable(u, v)) continue;
        if (sel.at_distance >= 0 && dm(u, v) != sel.at_distance) continue;
        pairs.emplace_back(u, v);
      }
    }
  } else if (sel.edges) {
    pairs = g.edges();
  } else if (marked) {
    pairs.push_back(*marked);
  } else {
    fail("ParseError", "no pair selected: use --pair, --all-pairs, --at-distance, or --edges");
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<Rational> parse_idleness_list(const std::string& list) {
  if (list.empty()) fail("ParseError", "field '--p': at least one idleness value is required");
  std::vector<Rational> out;
  for (const auto& tok : split(list, ',')) {
    Rational p;
    try {
      p = parse_rational(tok);
    } catch (const Error&) {
      fail("ParseError", "field '--p': expected a rational like 1/2, got '" + tok + "'");
    }
    if (p < 0 || p > 1) {
      fail("ParseError", "field '--p': idleness " + tok + " outside [0,1]");
    }
    out.push_back(p);
  }
  return out;
}

void write_text(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) fail("IoError", "cannot open '" + out.path + "' for writing");
  file << text;
  if (!file) fail("IoError", "write to '" + out.path + "' failed");
}

std::string display_vertex(const Graph& g, int v) {
  if (!g.labels().empty()) return g.labels()[v];
  return std::to_string(v);
}

void check_format(const OutputOptions& out) {
  if (out.format != "csv" && out.format != "json") {
    fail("ParseError", "field '--format': expected csv or json, got '" + out.format + "'");
  }
}

void add_pair_fields(ordered_json& row, const Graph& g, int u, int v) {
  row["x"] = u;
  row["y"] = v;
  if (!g.labels().empty()) {
    row["label_x"] = g.labels()[u];
    row["label_y"] = g.labels()[v];
  }
}

int run_curvature(const SourceOptions& src, const SelectOptions& sel,
                  const std::string& p_list, const OutputOptions& out, bool lly) {
  check_format(out);
  auto loaded = load_source(src);
  const Graph& g = loaded.graph;
  auto dm = all_pairs_distances(g);
  auto pairs = select_pairs(g, dm, sel, loaded.marked);
  std::vector<Rational> ps;
  if (!lly) ps = parse_idleness_list(p_list);

  std::string text;
  if (out.format == "csv") {
    std::string header = lly ? "x,y,kappa_lly" : "x,y,p,kappa";
    if (out.decimal_hint) header += lly ? ",kappa_lly_decimal" : ",kappa_decimal";
    text = header + "\n";
    for (const auto& [u, v] : pairs) {
      if (lly) {
        const Rational k = kappa_lly(g, dm, u, v);
        text += display_vertex(g, u) + "," + display_vertex(g, v) + "," + format_rational(k);
        if (out.decimal_hint) text += "," + decimal_hint(k);
        text += "\n";
      } else {
        for (const Rational& p : ps) {
          const Rational k = kappa_p(g, dm, u, v, p);
          text += display_vertex(g, u) + "," + display_vertex(g, v) + "," +
                  format_rational(p) + "," + format_rational(k);
          if (out.decimal_hint) text += "," + decimal_hint(k);
          text += "\n";
        }
      }
    }
  } else {
    ordered_json rows = ordered_json::array();
    for (const auto& [u, v] : pairs) {
      if (lly) {
        ordered_json row;
        add_pair_fields(row, g, u, v);
        row["kappa_lly"] = format_rational(kappa_lly(g, dm, u, v));
        rows.push_back(std::move(row));
      } else {
        for (const Rational& p : ps) {
          ordered_json row;
          add_pair_fields(row, g, u, v);
          row["p"] = format_rational(p);
          row["kappa"] = format_rational(kappa_p(g, dm, u, v, p));
          rows.push_back(std::move(row));
        }
      }
    }
    text = rows.dump(2) + "\n";
  }
  write_text(out, text);
  return 0;
}

// Profile of one pair as a JSON object: the closed form at distance >= 2,
// the sampling reconstruction for neighbors.
ordered_json profile_object(const Graph& g, const DistanceMatrix& dm, int u, int v) {
  if (dm(u, v) >= 2) {
    return ordered_json::parse(profile_to_json(idleness_profile(g, dm, u, v)));
  }
  PiecewiseLinear pl = reconstruct_by_sampling(g, dm, u, v);
  ordered_json doc;
  doc["delta"] = dm(u, v);
  doc["critical_points"] = ordered_json::array();
  for (std::size_t i = 1; i + 1 < pl.breakpoints().size(); ++i) {
    doc["critical_points"].push_back(format_rational(pl.breakpoints()[i]));
  }
  doc["pieces"] = ordered_json::array();
  for (int i = 0; i < pl.piece_count(); ++i) {
    const Rational from = pl.breakpoints()[i], to = pl.breakpoints()[i + 1];
    const Rational slope = pl.slope(i);
    ordered_json piece;
    piece["from"] = format_rational(from);
    piece["to"] = format_rational(to);
    piece["slope"] = format_rational(slope);
    piece["intercept"] = format_rational(pl.values()[i] - slope * from);
    doc["pieces"].push_back(std::move(piece));
  }
  return doc;
}

int run_idleness(const SourceOptions& src, const SelectOptions& sel,
                 const OutputOptions& out) {
  check_format(out);
  auto loaded = load_source(src);
  const Graph& g = loaded.graph;
  auto dm = all_pairs_distances(g);
  auto pairs = select_pairs(g, dm, sel, loaded.marked);

  std::string text;
  if (out.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& [u, v] : pairs) {
      ordered_json row;
      add_pair_fields(row, g, u, v);
      row["profile"] = profile_object(g, dm, u, v);
      rows.push_back(std::move(row));
    }
    text = rows.dump(2) + "\n";
  } else {
    std::string header = "x,y,delta,piece_from,piece_to,slope,intercept";
    if (out.decimal_hint) header += ",slope_decimal,intercept_decimal";
    text = header + "\n";
    for (const auto& [u, v] : pairs) {
      ordered_json profile = profile_object(g, dm, u, v);
      for (const auto& piece : profile["pieces"]) {
        text += display_vertex(g, u) + "," + display_vertex(g, v) + "," +
                profile["delta"].dump() + "," + piece["from"].get<std::string>() +
                "," + piece["to"].get<std::string>() + "," +
                piece["slope"].get<std::string>() + "," +
                piece["intercept"].get<std::string>();
        if (out.decimal_hint) {
          text += "," + decimal_hint(parse_rational(piece["slope"].get<std::string>())) +
                  "," + decimal_hint(parse_rational(piece["intercept"].get<std::string>()));
        }
        text += "\n";
      }
    }
  }
  write_text(out, text);
  return 0;
}

int run_gen(const std::string& spec, const OutputOptions& out) {
  auto loaded = graph_from_spec(spec);
  write_text(out, graph_to_json(loaded.graph) + "\n");
  return 0;
}

int run_verify(const std::string& suite, std::optional<int> m, std::optional<int> n,
               std::optional<int> k, std::uint64_t seed, const OutputOptions& out) {
  const bool family_args = m.has_value() || n.has_value() || k.has_value();
  if (family_args && suite != "family") {
    fail("ParseError", "--m/--n/--k are only valid with the family suite");
  }
  verify::SuiteResult result;
  if (suite == "family") {
    if (family_args) {
      if (!(m && n && k)) fail("ParseError", "family needs all of --m, --n, --k");
      result = verify::family_single(*m, *n, *k);
    } else {
      result = verify::family_suite();
    }
  } else if (suite == "hexagon") {
    result = verify::hexagon_suite();
  } else if (suite == "tree") {
    result = verify::tree_suite();
  } else if (suite == "product") {
    result = verify::product_suite(seed);
  } else if (suite == "bounds") {
    result = verify::bounds_suite(seed);
  } else if (suite == "figure3") {
    result = verify::figure3_suite();
  } else {
    fail("ParseError", "unknown suite '" + suite +
                           "' (expected family, hexagon, tree, product, bounds, or figure3)");
  }

  std::string text;
  for (const auto& check : result.checks) {
    text += (check.pass ? "PASS  " : "FAIL  ") + check.name +
            "  expected=" + check.expected + " computed=" + check.computed + "\n";
  }
  const int total = static_cast<int>(result.checks.size());
  text += "suite " + result.suite + ": " + std::to_string(total - result.failed_count()) +
          "/" + std::to_string(total) + " checks passed\n";
  write_text(out, text);
  return result.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ollivier-Ricci curvature over idleness on finite graphs"};
  app.require_subcommand(1);

  SourceOptions src;
  SelectOptions sel;
  OutputOptions out;
  std::string p_list;

  auto add_common = [&](CLI::App* cmd, bool with_p) {
    cmd->add_option("--graph", src.graph_file, "graph JSON file");
    cmd->add_option("--gen", src.gen_spec,
                    "generator spec: path:N, cycle:N, complete:N, star:N, figure3, "
                    "family:M,N,K, tree:D,R, hex:A,B");
    cmd->add_option("--pair", sel.pair, "one pair, by label or index: x,y or 0,3");
    cmd->add_flag("--all-pairs", sel.all_pairs, "every reachable pair");
    cmd->add_option("--at-distance", sel.at_distance, "every pair at this distance");
    cmd->add_flag("--edges", sel.edges, "every edge");
    if (with_p) cmd->add_option("--p", p_list, "comma-separated idleness rationals, e.g. 0,1/4,1/2");
    cmd->add_option("--format", out.format, "csv or json (default csv)");
    cmd->add_flag("--decimal-hint", out.decimal_hint,
                  "append informational 12-digit decimal columns to CSV");
    cmd->add_option("--output", out.path, "write to this file instead of stdout");
  };

  auto* curvature = app.add_subcommand("curvature", "kappa_p table for selected pairs");
  add_common(curvature, true);
  auto* idleness = app.add_subcommand(
      "idleness", "full idleness profile (constants, breakpoints, pieces) per pair");
  add_common(idleness, false);
  auto* lly = app.add_subcommand("lly", "Lin-Lu-Yau curvature table for selected pairs");
  add_common(lly, false);

  auto* gen = app.add_subcommand("gen", "write a generated graph as JSON");
  std::string gen_positional;
  gen->add_option("spec", gen_positional, "generator spec, e.g. cycle:6 or family:1,1,0");
  gen->add_option("--gen", src.gen_spec, "generator spec (alternative to the positional)");
  gen->add_option("--output", out.path, "write to this file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::optional<int> fam_m, fam_n, fam_k;
  std::uint64_t seed = orc::verify::kDefaultSeed;
  verify_cmd->add_option("suite", suite, "family, hexagon, tree, product, bounds, or figure3")
      ->required();
  verify_cmd->add_option("--m", fam_m, "family parameter m");
  verify_cmd->add_option("--n", fam_n, "family parameter n");
  verify_cmd->add_option("--k", fam_k, "family parameter k");
  verify_cmd->add_option("--seed", seed, "seed for the randomized suites");
  verify_cmd->add_option("--output", out.path, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (curvature->parsed()) return run_curvature(src, sel, p_list, out, false);
    if (idleness->parsed()) return run_idleness(src, sel, out);
    if (lly->parsed()) return run_curvature(src, sel, p_list, out, true);
    if (gen->parsed()) {
      if (gen_positional.empty() == src.gen_spec.empty()) {
        fail("ParseError", "gen needs exactly one spec (positional or --gen)");
      }
      return run_gen(gen_positional.empty() ? src.gen_spec : gen_positional, out);
    }
    if (verify_cmd->parsed()) return run_verify(suite, fam_m, fam_n, fam_k, seed, out);
  } catch (const orc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
