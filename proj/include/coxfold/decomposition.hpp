#pragma once

// Decompositions (M, Gamma, Delta, F, p, Theta): Theta is Gamma and Delta
// glued along the map p from the subgraph F of Delta (minus loops) to Gamma.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxfold/coxeter_matrix.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/labeled_graph.hpp"
#include "coxfold/special_graph.hpp"

namespace coxfold {

/// The attaching map p: F -> Gamma.  `edges` holds both orientations.
struct Attachment {
  std::map<VertexId, VertexId> vertices;
  std::map<EdgeId, EdgeId> edges;
  friend bool operator==(Attachment const&, Attachment const&) = default;
};

struct Decomposition {
  CoxeterMatrix matrix;
  LabeledGraph gamma;
  std::optional<VertexId> gamma_basepoint;
  SpecialGraph delta;
  Subgraph forest;
  Attachment attach;

  BasedGraph theta;
  // bar maps into Theta
  std::map<VertexId, VertexId> gamma_vertex_bar, delta_vertex_bar;
  std::map<EdgeId, EdgeId> gamma_edge_bar, delta_edge_bar;

  VertexId bar_vertex(VertexId delta_vertex) const { return delta_vertex_bar.at(delta_vertex); }
  EdgeId bar_edge(EdgeId delta_edge) const { return delta_edge_bar.at(delta_edge); }

  /// Image in Theta of a subgraph of Delta.
  Subgraph bar(Subgraph const& s) const {
    Subgraph out;
    for (VertexId v : s.vertices) out.vertices.insert(delta_vertex_bar.at(v));
    for (EdgeId e : s.edges) out.edges.insert(delta_edge_bar.at(e));
    return out;
  }

  GraphPath bar(GraphPath const& p) const {
    GraphPath out{delta_vertex_bar.at(p.start), {}};
    for (EdgeId e : p.edges) out.edges.push_back(delta_edge_bar.at(e));
    return out;
  }

  Subgraph delta_bar() const { return bar(Subgraph::whole(delta.graph)); }
  Subgraph delta_minus_loops_bar() const { return bar(delta.without_loops()); }

  /// Preimage in Delta minus loops of a subgraph of Theta.
  Subgraph preimage(Subgraph const& omega) const {
    Subgraph out;
    Subgraph dl = delta.without_loops();
    for (VertexId v : dl.vertices)
      if (omega.has_vertex(delta_vertex_bar.at(v))) out.vertices.insert(v);
    for (EdgeId e : dl.edges)
      if (omega.has_edge(delta_edge_bar.at(e))) out.edges.insert(e);
    return out;
  }
};

inline Subgraph forest_of_vertices(std::vector<VertexId> const& vs) {
  Subgraph s;
  s.vertices.insert(vs.begin(), vs.end());
  return s;
}

/// Builds Theta.  Gamma keeps its ids in Theta; vertices and edges of Delta
/// outside F receive fresh ids in increasing order.
inline Decomposition assemble(CoxeterMatrix m, LabeledGraph gamma, SpecialGraph delta, Subgraph forest,
                              Attachment attach, std::optional<VertexId> gamma_basepoint = std::nullopt) {
  LabeledGraph const& dg = delta.graph;
  for (VertexId v : forest.vertices)
    if (!dg.has_vertex(v)) throw InvalidAttachment("F vertex " + std::to_string(v) + " is not in Delta");
  for (EdgeId e : forest.edges) {
    if (!dg.has_edge(e)) throw InvalidAttachment("F edge " + std::to_string(e) + " is not in Delta");
    if (dg.is_loop(e)) throw InvalidAttachment("F contains the loop edge " + std::to_string(e));
    if (!forest.has_edge(dg.inverse(e)) || !forest.has_vertex(dg.source(e)))
      throw InvalidAttachment("F is not a subgraph");
  }
  // complete p on inverse edges
  for (auto [e, pe] : std::map<EdgeId, EdgeId>(attach.edges)) {
    if (!dg.has_edge(e) || !gamma.has_edge(pe)) throw InvalidAttachment("p maps an unknown edge");
    attach.edges.emplace(dg.inverse(e), gamma.inverse(pe));
  }
  for (VertexId v : forest.vertices) {
    auto it = attach.vertices.find(v);
    if (it == attach.vertices.end()) throw InvalidAttachment("p is undefined at vertex " + std::to_string(v));
    if (!gamma.has_vertex(it->second)) throw InvalidAttachment("p maps to a vertex outside Gamma");
  }
  for (auto const& [v, pv] : attach.vertices)
    if (!forest.has_vertex(v)) throw InvalidAttachment("p is defined outside F at vertex " + std::to_string(v));
  for (EdgeId e : forest.edges) {
    auto it = attach.edges.find(e);
    if (it == attach.edges.end()) throw InvalidAttachment("p is undefined at edge " + std::to_string(e));
    EdgeId pe = it->second;
    if (gamma.label(pe) != dg.label(e))
      throw InvalidAttachment("p does not preserve the label of edge " + std::to_string(e));
    if (gamma.source(pe) != attach.vertices.at(dg.source(e)) ||
        gamma.target(pe) != attach.vertices.at(dg.target(e)))
      throw InvalidAttachment("p does not commute with the endpoints of edge " + std::to_string(e));
    if (attach.edges.at(dg.inverse(e)) != gamma.inverse(pe))
      throw InvalidAttachment("p does not commute with inversion");
  }
  for (auto const& [e, pe] : attach.edges)
    if (!forest.has_edge(e)) throw InvalidAttachment("p is defined outside F at edge " + std::to_string(e));

  Decomposition d;
  d.matrix = std::move(m);
  d.gamma_basepoint = gamma_basepoint;
  d.forest = std::move(forest);
  d.attach = std::move(attach);
  LabeledGraph theta = gamma;
  for (VertexId v : gamma.vertices()) d.gamma_vertex_bar[v] = v;
  for (auto const& [e, rec] : gamma.edges()) d.gamma_edge_bar[e] = e;
  VertexId next_v = gamma.next_vertex_id();
  EdgeId next_e = gamma.next_edge_id();
  for (VertexId v : dg.vertices()) {
    if (d.forest.has_vertex(v)) {
      d.delta_vertex_bar[v] = d.attach.vertices.at(v);
    } else {
      theta.add_vertex(next_v);
      d.delta_vertex_bar[v] = next_v++;
    }
  }
  for (EdgeId e : dg.geometric_edges()) {
    EdgeId inv = dg.inverse(e);
    if (d.forest.has_edge(e)) {
      d.delta_edge_bar[e] = d.attach.edges.at(e);
      d.delta_edge_bar[inv] = d.attach.edges.at(inv);
      continue;
    }
    theta.add_edge_pair(next_e, next_e + 1, d.delta_vertex_bar.at(dg.source(e)),
                        d.delta_vertex_bar.at(dg.target(e)), dg.label(e));
    d.delta_edge_bar[e] = next_e;
    d.delta_edge_bar[inv] = next_e + 1;
    next_e += 2;
  }
  VertexId base = 0;
  if (gamma_basepoint) {
    if (!gamma.has_vertex(*gamma_basepoint)) throw InvalidAttachment("Gamma basepoint is not a vertex");
    base = *gamma_basepoint;
  } else if (!theta.vertices().empty()) {
    base = *theta.vertices().begin();
  }
  d.theta = BasedGraph{std::move(theta), base};
  d.gamma = std::move(gamma);
  d.delta = std::move(delta);
  if (euler(d.theta.graph) != euler(d.gamma) + euler(d.delta.graph) - euler(d.forest))
    throw InvalidState("Euler characteristic identity fails for the assembled graph");
  return d;
}

/// The same decomposition rebuilt with a new Gamma, F and p.
inline Decomposition reassemble(Decomposition const& d, LabeledGraph gamma, Subgraph forest, Attachment attach) {
  return assemble(d.matrix, std::move(gamma), d.delta, std::move(forest), std::move(attach), d.gamma_basepoint);
}

/// A decomposition with empty Delta: Theta = Gamma.
inline Decomposition trivial_decomposition(CoxeterMatrix m, BasedGraph gamma) {
  SpecialGraph empty{LabeledGraph(Alphabet::of(m)), {}};
  return assemble(std::move(m), std::move(gamma.graph), std::move(empty), {}, {}, gamma.basepoint);
}

/// Graph distance inside `within` from the vertices of `seed`.
inline std::map<VertexId, std::size_t> distances(LabeledGraph const& g, Subgraph const& within,
                                                 Subgraph const& seed) {
  std::map<VertexId, std::size_t> dist;
  std::deque<VertexId> queue;
  for (VertexId v : seed.vertices) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(v)) {
      if (!within.has_edge(e)) continue;
      VertexId w = g.target(e);
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

/// k-neighborhood of `seed` inside `within`: vertices at distance <= k and
/// every edge having an endpoint at distance <= k - 1, plus the seed.
inline Subgraph neighborhood(LabeledGraph const& g, Subgraph const& within, Subgraph const& seed, std::size_t k) {
  Subgraph out = seed;
  if (k == 0) return out;
  auto dist = distances(g, within, seed);
  for (auto const& [v, dv] : dist)
    if (dv <= k) out.vertices.insert(v);
  for (EdgeId e : within.edges) {
    auto it = dist.find(g.source(e));
    if (it != dist.end() && it->second + 1 <= k) {
      out.edges.insert(e);
      out.edges.insert(g.inverse(e));
    }
  }
  return out;
}

struct OmegaNeighborhood {
  Subgraph in_theta;  // Omega_k inside the image of Delta minus loops
  Subgraph in_delta;  // tilde Omega_k inside Delta minus loops
};

inline OmegaNeighborhood omega_neighborhood(Decomposition const& d, Subgraph const& omega, std::size_t k) {
  Subgraph tilde = d.preimage(omega);
  OmegaNeighborhood out;
  out.in_theta = neighborhood(d.theta.graph, d.delta_minus_loops_bar(), omega, k);
  out.in_delta = neighborhood(d.delta.graph, d.delta.without_loops(), tilde, k);
  Subgraph img = d.bar(out.in_delta);
  for (VertexId v : img.vertices)
    if (!out.in_theta.has_vertex(v)) throw InvalidState("image of tilde Omega_k is not inside Omega_k");
  for (EdgeId e : img.edges)
    if (!out.in_theta.has_edge(e)) throw InvalidState("image of tilde Omega_k is not inside Omega_k");
  return out;
}

/// Checks that a marking lies in the image of Delta minus loops.
inline void require_marking(Decomposition const& d, Subgraph const& omega) {
  Subgraph img = d.delta_minus_loops_bar();
  for (VertexId v : omega.vertices)
    if (!img.has_vertex(v)) throw InvalidArguments("marking vertex " + std::to_string(v) + " is outside the image of Delta");
  for (EdgeId e : omega.edges)
    if (!img.has_edge(e)) throw InvalidArguments("marking edge " + std::to_string(e) + " is outside the image of Delta");
}

}  // namespace coxfold
