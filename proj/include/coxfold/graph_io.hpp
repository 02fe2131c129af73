#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "coxfold/coxeter_matrix.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/labeled_graph.hpp"

namespace coxfold {

using Json = nlohmann::ordered_json;

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArguments("cannot write " + path);
  out << text;
}

inline Json parse_json(std::string const& text) {
  try {
    return Json::parse(text);
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string dump_json(Json const& j) { return j.dump(2) + "\n"; }

// ---- Coxeter matrices ----------------------------------------------------

/// {"generators": [...], "upper": [[m_01, m_02, ...], [m_12, ...], ...]},
/// entries are integers or "inf".
inline Json matrix_to_json(CoxeterMatrix const& m) {
  Json upper = Json::array();
  for (std::size_t i = 0; i + 1 < m.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = i + 1; j < m.rank(); ++j) {
      auto e = m.entry(Letter(i), Letter(j));
      if (e == CoxeterMatrix::infinity)
        row.push_back("inf");
      else
        row.push_back(e);
    }
    upper.push_back(row);
  }
  return Json{{"generators", m.generators()}, {"upper", upper}};
}

inline CoxeterMatrix matrix_from_json(Json const& j) {
  try {
    auto names = j.at("generators").get<std::vector<std::string>>();
    std::size_t n = names.size();
    std::vector<std::vector<CoxeterMatrix::Entry>> e(n, std::vector<CoxeterMatrix::Entry>(n, 1));
    auto const& upper = j.at("upper");
    if (n > 0 && upper.size() != n - 1) throw ParseError("\"upper\" must have n-1 rows");
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto const& row = upper.at(i);
      if (row.size() != n - 1 - i) throw ParseError("row " + std::to_string(i) + " has wrong length");
      for (std::size_t k = 0; k < row.size(); ++k) {
        CoxeterMatrix::Entry v;
        if (row[k].is_string())
          v = parse_entry(row[k].get<std::string>());
        else if (row[k].is_number_unsigned())
          v = row[k].get<CoxeterMatrix::Entry>();
        else
          throw ParseError("matrix entries must be positive integers or \"inf\"");
        if (v == 1) throw ParseError("off-diagonal entry 1 is not allowed");
        e[i][i + 1 + k] = e[i + 1 + k][i] = v;
      }
    }
    return CoxeterMatrix(names, e);
  } catch (nlohmann::json::exception const& ex) {
    throw ParseError(std::string("bad matrix JSON: ") + ex.what());
  } catch (InvalidArguments const& ex) {
    throw ParseError(ex.what());
  }
}

/// Text or JSON, chosen by the first non-blank character.
inline CoxeterMatrix parse_matrix(std::string const& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return matrix_from_json(parse_json(text));
  return parse_matrix_text(text);
}

inline CoxeterMatrix load_matrix(std::string const& path) { return parse_matrix(read_file(path)); }

// ---- Graphs ---------------------------------------------------------------

inline Json alphabet_to_json(Alphabet const& a) {
  return Json{{"mode", a.mode() == AlphabetMode::involutive ? "involutive" : "free"},
              {"generators", a.generators()}};
}

inline Alphabet alphabet_from_json(Json const& j) {
  auto mode = j.at("mode").get<std::string>();
  auto gens = j.at("generators").get<std::vector<std::string>>();
  if (mode == "involutive") return Alphabet::involutive(gens);
  if (mode == "free") return Alphabet::free(gens);
  throw ParseError("alphabet mode must be \"involutive\" or \"free\"");
}

/// Canonical form: vertices ascending, one record per geometric edge keyed by
/// its smaller id.
inline Json graph_to_json(LabeledGraph const& g, std::optional<VertexId> basepoint = std::nullopt) {
  Json j;
  j["alphabet"] = alphabet_to_json(g.alphabet());
  j["vertices"] = Json(std::vector<VertexId>(g.vertices().begin(), g.vertices().end()));
  Json edges = Json::array();
  for (EdgeId e : g.geometric_edges()) {
    auto const& r = g.edge(e);
    edges.push_back(Json{{"id", e},
                         {"inv", r.inverse},
                         {"alpha", r.source},
                         {"omega", r.target},
                         {"label", g.alphabet().letter_name(r.label)}});
  }
  j["edges"] = edges;
  if (basepoint) j["basepoint"] = *basepoint;
  return j;
}

inline Json graph_to_json(BasedGraph const& bg) { return graph_to_json(bg.graph, bg.basepoint); }

inline LabeledGraph graph_from_json(Json const& j, std::optional<VertexId>* basepoint = nullptr) {
  try {
    LabeledGraph g(alphabet_from_json(j.at("alphabet")));
    for (auto const& v : j.at("vertices")) g.add_vertex(v.get<VertexId>());
    for (auto const& r : j.at("edges")) {
      Letter x = g.alphabet().parse_letter(r.at("label").get<std::string>());
      g.add_edge_pair(r.at("id").get<EdgeId>(), r.at("inv").get<EdgeId>(),
                      r.at("alpha").get<VertexId>(), r.at("omega").get<VertexId>(), x);
    }
    if (basepoint) {
      if (j.contains("basepoint")) {
        auto b = j.at("basepoint").get<VertexId>();
        if (!g.has_vertex(b)) throw ParseError("basepoint is not a vertex");
        *basepoint = b;
      } else {
        *basepoint = std::nullopt;
      }
    }
    return g;
  } catch (nlohmann::json::exception const& ex) {
    throw ParseError(std::string("bad graph JSON: ") + ex.what());
  } catch (InvalidArguments const& ex) {
    throw ParseError(ex.what());
  }
}

/// A graph file as a based graph; without a stored basepoint the smallest
/// vertex is used.
inline BasedGraph based_graph_from_json(Json const& j) {
  std::optional<VertexId> b;
  LabeledGraph g = graph_from_json(j, &b);
  VertexId base = b ? *b : (g.vertices().empty() ? 0 : *g.vertices().begin());
  return {std::move(g), base};
}

inline BasedGraph load_graph(std::string const& path) {
  return based_graph_from_json(parse_json(read_file(path)));
}

inline std::string dot_escape(std::string const& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// Graphviz text.  Involutive graphs are undirected; free-alphabet edges
/// point along their generator label.
inline std::string graph_to_dot(LabeledGraph const& g, std::optional<VertexId> basepoint = std::nullopt,
                                std::string const& name = "G") {
  bool directed = g.mode() == AlphabetMode::free;
  std::ostringstream out;
  out << (directed ? "digraph " : "graph ") << name << " {\n";
  for (VertexId v : g.vertices()) {
    out << "  v" << v << " [label=\"" << v << "\", shape="
        << (basepoint && *basepoint == v ? "doublecircle" : "circle") << "];\n";
  }
  for (EdgeId e : g.geometric_edges()) {
    EdgeId d = e;
    if (directed && (g.label(d) & 1)) d = g.inverse(d);
    out << "  v" << g.source(d) << (directed ? " -> " : " -- ") << "v" << g.target(d)
        << " [label=\"" << dot_escape(g.alphabet().letter_name(g.label(d))) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string graph_to_dot(BasedGraph const& bg) { return graph_to_dot(bg.graph, bg.basepoint); }

}  // namespace coxfold
