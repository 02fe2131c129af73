#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "coxfold/decomposition.hpp"
#include "coxfold/graph_io.hpp"
#include "coxfold/tameness.hpp"

namespace coxfold {

/// A decomposition file: the decomposition plus an optional marking (given
/// by vertices and edges of Delta, whose image is the marking) and optional
/// witness words.
struct DecompositionFile {
  Decomposition decomposition;
  Subgraph marking_in_delta;
  std::optional<Witnesses> witnesses;

  Subgraph marking() const { return decomposition.bar(marking_in_delta); }
};

namespace detail {

inline Json id_set_to_json(LabeledGraph const& g, Subgraph const& s) {
  Json vs = Json::array(), es = Json::array();
  for (VertexId v : s.vertices) vs.push_back(v);
  for (EdgeId e : s.edges)
    if (e == g.representative(e)) es.push_back(e);
  return Json{{"vertices", vs}, {"edges", es}};
}

inline Subgraph id_set_from_json(LabeledGraph const& g, Json const& j) {
  Subgraph s;
  if (j.contains("vertices"))
    for (auto const& v : j.at("vertices")) {
      VertexId id = v.get<VertexId>();
      if (!g.has_vertex(id)) throw ParseError("unknown vertex " + std::to_string(id));
      s.vertices.insert(id);
    }
  if (j.contains("edges"))
    for (auto const& e : j.at("edges")) {
      EdgeId id = e.get<EdgeId>();
      if (!g.has_edge(id)) throw ParseError("unknown edge " + std::to_string(id));
      s.add_edge(g, id);
    }
  return s;
}

}  // namespace detail

inline Json decomposition_to_json(DecompositionFile const& f) {
  Decomposition const& d = f.decomposition;
  Json j;
  j["matrix"] = matrix_to_json(d.matrix);
  j["gamma"] = graph_to_json(d.gamma, d.gamma_basepoint);
  Json paths = Json::array();
  for (auto const& sp : d.delta.paths)
    paths.push_back(Json{{"start", sp.path.start},
                         {"edges", sp.path.edges},
                         {"type", {d.matrix.name(sp.s), d.matrix.name(sp.t)}}});
  j["delta"] = Json{{"graph", graph_to_json(d.delta.graph)}, {"special_paths", paths}};
  j["forest"] = detail::id_set_to_json(d.delta.graph, d.forest);
  Json av = Json::array(), ae = Json::array();
  for (auto const& [v, pv] : d.attach.vertices) av.push_back({v, pv});
  for (auto const& [e, pe] : d.attach.edges)
    if (e == d.delta.graph.representative(e)) ae.push_back({e, pe});
  j["attach"] = Json{{"vertices", av}, {"edges", ae}};
  if (!f.marking_in_delta.empty()) j["marking"] = detail::id_set_to_json(d.delta.graph, f.marking_in_delta);
  if (f.witnesses) {
    Json w = Json::object();
    for (auto const& [s, word] : *f.witnesses) w[d.matrix.name(s)] = format_word(word, d.matrix);
    j["witnesses"] = w;
  }
  return j;
}

inline DecompositionFile decomposition_from_json(Json const& j) {
  try {
    CoxeterMatrix m = matrix_from_json(j.at("matrix"));
    std::optional<VertexId> gb;
    LabeledGraph gamma = graph_from_json(j.at("gamma"), &gb);
    Json const& dj = j.at("delta");
    SpecialGraph delta{graph_from_json(dj.at("graph")), {}};
    for (auto const* g : {&gamma, &delta.graph})
      if (g->mode() != AlphabetMode::involutive || g->alphabet().generators() != m.generators())
        throw ParseError("graphs must use the involutive alphabet of the matrix");
    for (auto const& pj : dj.at("special_paths")) {
      SpecialPath sp;
      sp.path.start = pj.at("start").get<VertexId>();
      sp.path.edges = pj.at("edges").get<std::vector<EdgeId>>();
      auto type = pj.at("type").get<std::vector<std::string>>();
      if (type.size() != 2) throw ParseError("a special path type has two generators");
      Letter a = m.index_of(type[0]), b = m.index_of(type[1]);
      sp.s = std::min(a, b);
      sp.t = std::max(a, b);
      delta.paths.push_back(std::move(sp));
    }
    Subgraph forest = j.contains("forest") ? detail::id_set_from_json(delta.graph, j.at("forest")) : Subgraph{};
    Attachment p;
    if (j.contains("attach")) {
      for (auto const& pair : j.at("attach").value("vertices", Json::array()))
        p.vertices[pair.at(0).get<VertexId>()] = pair.at(1).get<VertexId>();
      for (auto const& pair : j.at("attach").value("edges", Json::array()))
        p.edges[pair.at(0).get<EdgeId>()] = pair.at(1).get<EdgeId>();
    }
    DecompositionFile f{assemble(m, std::move(gamma), std::move(delta), std::move(forest), std::move(p), gb), {}, {}};
    if (j.contains("marking")) f.marking_in_delta = detail::id_set_from_json(f.decomposition.delta.graph, j.at("marking"));
    if (j.contains("witnesses")) {
      Witnesses w;
      for (auto const& [name, word] : j.at("witnesses").items())
        w[m.index_of(name)] = parse_word(word.get<std::string>(), m);
      f.witnesses = std::move(w);
    }
    return f;
  } catch (nlohmann::json::exception const& ex) {
    throw ParseError(std::string("bad decomposition JSON: ") + ex.what());
  }
}

inline DecompositionFile load_decomposition(std::string const& path) {
  return decomposition_from_json(parse_json(read_file(path)));
}

/// Gamma and Delta side by side, Delta drawn thick, p as dotted arrows.
inline std::string decomposition_to_dot(Decomposition const& d) {
  std::ostringstream out;
  auto const& names = d.matrix.generators();
  out << "digraph decomposition {\n  edge [arrowhead=none];\n";
  out << "  subgraph cluster_gamma {\n    label=\"Gamma\";\n";
  for (VertexId v : d.gamma.vertices())
    out << "    g" << v << " [label=\"" << v << "\", shape="
        << (d.gamma_basepoint && *d.gamma_basepoint == v ? "doublecircle" : "circle") << "];\n";
  for (EdgeId e : d.gamma.geometric_edges())
    out << "    g" << d.gamma.source(e) << " -> g" << d.gamma.target(e) << " [label=\""
        << dot_escape(names.at(d.gamma.label(e))) << "\"];\n";
  out << "  }\n  subgraph cluster_delta {\n    label=\"Delta\";\n";
  for (VertexId v : d.delta.graph.vertices()) out << "    d" << v << " [label=\"" << v << "\", shape=circle];\n";
  for (EdgeId e : d.delta.graph.geometric_edges())
    out << "    d" << d.delta.graph.source(e) << " -> d" << d.delta.graph.target(e) << " [label=\""
        << dot_escape(names.at(d.delta.graph.label(e))) << "\", penwidth=3];\n";
  out << "  }\n";
  for (auto const& [v, pv] : d.attach.vertices)
    out << "  d" << v << " -> g" << pv << " [style=dotted, arrowhead=normal, constraint=false];\n";
  out << "}\n";
  return out.str();
}

}  // namespace coxfold
