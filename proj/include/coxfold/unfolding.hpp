#pragma once

// Unfoldings change Gamma, F and p without changing Delta.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coxfold/decomposition.hpp"

namespace coxfold {

namespace detail {

inline void require_unfoldable(Decomposition const& d) {
  if (betti(d.delta.graph, d.forest) != 0) throw InvalidState("F is not a forest");
  if (!is_connected(d.theta.graph)) throw InvalidState("Theta is not connected");
  if (d.gamma.empty()) throw InvalidState("Gamma is empty");
}

inline std::map<VertexId, std::size_t> forest_components(Decomposition const& d) {
  return component_labels(d.delta.graph, d.forest);
}

}  // namespace detail

/// The smallest vertex of each component of F.
inline std::vector<VertexId> default_component_choice(Decomposition const& d) {
  std::map<std::size_t, VertexId> pick;
  for (auto const& [v, c] : detail::forest_components(d)) pick.emplace(c, v);
  std::vector<VertexId> out;
  for (auto const& [c, v] : pick) out.push_back(v);
  return out;
}

/// Unfolding 1: F' consists of the chosen vertices, one per component of F.
inline Decomposition unfold_components(Decomposition const& d, std::vector<VertexId> const& chosen) {
  detail::require_unfoldable(d);
  auto comp = detail::forest_components(d);
  std::set<std::size_t> hit;
  for (VertexId v : chosen) {
    if (!d.forest.has_vertex(v)) throw InvalidState("chosen vertex " + std::to_string(v) + " is not in F");
    if (!hit.insert(comp.at(v)).second) throw InvalidState("two chosen vertices in one component of F");
  }
  std::set<std::size_t> all;
  for (auto const& [v, c] : comp) all.insert(c);
  if (hit != all) throw InvalidState("some component of F has no chosen vertex");
  Subgraph f;
  Attachment p;
  for (VertexId v : chosen) {
    f.vertices.insert(v);
    p.vertices[v] = d.attach.vertices.at(v);
  }
  return reassemble(d, d.gamma, f, p);
}

inline Decomposition unfold_components(Decomposition const& d) {
  return unfold_components(d, default_component_choice(d));
}

/// Unfolding 2: for x, y in distinct components T, T' of F lying in one
/// component of Delta, and a path gamma in Delta from x to y, glue a copy of
/// gamma to Gamma from p(x) to p(y) and drop T' from F.
inline Decomposition unfold_merge(Decomposition const& d, VertexId x, VertexId y, GraphPath const& gamma) {
  detail::require_unfoldable(d);
  LabeledGraph const& dg = d.delta.graph;
  if (!d.forest.has_vertex(x) || !d.forest.has_vertex(y)) throw InvalidState("x and y must be vertices of F");
  auto comp = detail::forest_components(d);
  if (comp.at(x) == comp.at(y)) throw InvalidState("x and y lie in the same component of F");
  if (!is_well_formed(dg, gamma) || gamma.start != x || path_end(dg, gamma) != y)
    throw InvalidState("gamma is not a path in Delta from x to y");
  LabeledGraph g = d.gamma;
  VertexId at = d.attach.vertices.at(x), end = d.attach.vertices.at(y);
  for (std::size_t i = 0; i < gamma.edges.size(); ++i) {
    VertexId next = i + 1 == gamma.edges.size() ? end : g.add_vertex();
    g.add_edge(at, next, dg.label(gamma.edges[i]));
    at = next;
  }
  std::size_t drop = comp.at(y);
  Subgraph f;
  Attachment p;
  for (VertexId v : d.forest.vertices)
    if (comp.at(v) != drop) {
      f.vertices.insert(v);
      p.vertices[v] = d.attach.vertices.at(v);
    }
  for (EdgeId e : d.forest.edges)
    if (comp.at(dg.source(e)) != drop) {
      f.edges.insert(e);
      p.edges[e] = d.attach.edges.at(e);
    }
  return reassemble(d, std::move(g), std::move(f), std::move(p));
}

/// Unfolding 3: for an isolated vertex v of F and an edge e of Delta at v,
/// add a spur of two edges labeled l(e) at p(v) and move p(v) to its end.
inline Decomposition unfold_isolated(Decomposition const& d, VertexId v, EdgeId e) {
  detail::require_unfoldable(d);
  LabeledGraph const& dg = d.delta.graph;
  if (!d.forest.has_vertex(v)) throw InvalidState("v is not a vertex of F");
  for (EdgeId f : dg.out_edges(v))
    if (d.forest.has_edge(f)) throw InvalidState("v is not isolated in F");
  if (!dg.has_edge(e) || (dg.source(e) != v && dg.target(e) != v))
    throw InvalidState("e is not adjacent to v");
  LabeledGraph g = d.gamma;
  VertexId pv = d.attach.vertices.at(v);
  VertexId mid = g.add_vertex();
  VertexId tip = g.add_vertex();
  g.add_edge(pv, mid, dg.label(e));
  g.add_edge(mid, tip, dg.label(e));
  Attachment p = d.attach;
  p.vertices[v] = tip;
  return reassemble(d, std::move(g), d.forest, std::move(p));
}

}  // namespace coxfold
