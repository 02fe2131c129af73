#pragma once

// Halving a special type {s,t} with m_st even: every special path
// e_0, ..., e_n of that type is folded onto its first half by identifying
// e_i with e_{n-i}^-1, the middle edge becomes a loop edge, and m_st is
// replaced by m_st / 2.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "coxfold/decomposition.hpp"
#include "coxfold/special_graph.hpp"

namespace coxfold {

struct HalvingResult {
  Decomposition decomposition;
  ConditionReport validity;  // validate_special of the new Delta against the new matrix
  std::map<VertexId, VertexId> vertex_map;  // old Delta -> new Delta
  std::map<EdgeId, EdgeId> edge_map;
};

namespace detail {

template <class Id>
struct UnionFind {
  std::map<Id, Id> parent;
  Id find(Id x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Id a, Id b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

inline HalvingResult halve_special_type(Decomposition const& d, Letter s, Letter t) {
  if (s == t || s >= d.matrix.rank() || t >= d.matrix.rank()) throw InvalidArguments("invalid type");
  auto mst = d.matrix.entry(s, t);
  if (mst == CoxeterMatrix::infinity || mst % 2 != 0 || mst < 4)
    throw InvalidArguments("halving needs an even finite m_st >= 4");
  if (s > t) std::swap(s, t);
  LabeledGraph const& g = d.delta.graph;

  detail::UnionFind<VertexId> vu;
  detail::UnionFind<EdgeId> eu;
  for (VertexId v : g.vertices()) vu.find(v);
  for (auto const& [e, rec] : g.edges()) eu.find(e);
  auto identify = [&](EdgeId a, EdgeId b) {
    eu.unite(a, b);
    eu.unite(g.inverse(a), g.inverse(b));
    vu.unite(g.source(a), g.source(b));
    vu.unite(g.target(a), g.target(b));
  };

  std::vector<bool> halved(d.delta.paths.size(), false);
  for (std::size_t k = 0; k < d.delta.paths.size(); ++k) {
    auto const& sp = d.delta.paths[k];
    if (sp.s != s || sp.t != t) continue;
    halved[k] = true;
    auto const& es = sp.path.edges;
    if (!is_well_formed(g, sp.path) || !detail::is_simple_or_simple_closed(g, sp.path))
      throw PreconditionError("special path " + std::to_string(k) + " is not simple or simple closed");
    if (es.size() % 2 == 0) throw PreconditionError("special path " + std::to_string(k) + " has even length");
    auto loops = relator_loops(d.delta, sp, d.matrix);
    if (!loops) throw PreconditionError("special path " + std::to_string(k) + " does not read its relator");
    std::size_t n = es.size() - 1;
    for (std::size_t i = 0; i < n / 2; ++i) identify(es[i], g.inverse(es[n - i]));
    if (loops->first != loops->second) identify(loops->first, loops->second);
  }

  std::map<VertexId, VertexId> vmap;
  for (VertexId v : g.vertices()) vmap[v] = vu.find(v);
  std::map<EdgeId, EdgeId> emap;
  for (auto const& [e, rec] : g.edges()) emap[e] = eu.find(e);
  LabeledGraph h(g.alphabet());
  for (VertexId v : g.vertices())
    if (vmap[v] == v) h.add_vertex(v);
  for (auto const& [e, rec] : g.edges()) {
    EdgeId r = emap[e], ri = emap[rec.inverse];
    if (r == ri) throw InvalidState("halving identifies an edge with its inverse");
    if (r != e || r > ri) continue;
    h.add_edge_pair(r, ri, vmap[rec.source], vmap[rec.target], rec.label);
  }
  for (auto const& [e, rec] : g.edges()) {
    Edge const& img = h.edge(emap[e]);
    if (img.label != rec.label || img.source != vmap[rec.source] || img.target != vmap[rec.target])
      throw InvalidState("halving produced an inconsistent quotient");
  }

  SpecialGraph nd{h, {}};
  for (std::size_t k = 0; k < d.delta.paths.size(); ++k) {
    auto const& sp = d.delta.paths[k];
    std::size_t keep = halved[k] ? (sp.path.edges.size() - 1) / 2 : sp.path.edges.size();
    SpecialPath np{{vmap.at(sp.path.start), {}}, sp.s, sp.t};
    for (std::size_t i = 0; i < keep; ++i) np.path.edges.push_back(emap.at(sp.path.edges[i]));
    nd.paths.push_back(std::move(np));
  }

  Subgraph f;
  Attachment p;
  for (VertexId v : d.forest.vertices) {
    VertexId nv = vmap.at(v);
    VertexId pv = d.attach.vertices.at(v);
    auto [it, fresh] = p.vertices.emplace(nv, pv);
    if (!fresh && it->second != pv) throw InvalidState("halving merges F vertices with different images");
    f.vertices.insert(nv);
  }
  for (EdgeId e : d.forest.edges) {
    EdgeId ne = emap.at(e);
    EdgeId pe = d.attach.edges.at(e);
    auto [it, fresh] = p.edges.emplace(ne, pe);
    if (!fresh && it->second != pe) throw InvalidState("halving merges F edges with different images");
    if (h.is_loop(ne)) throw InvalidState("halving turns an F edge into a loop edge");
    f.edges.insert(ne);
  }

  CoxeterMatrix m2 = d.matrix.with_entry(s, t, mst / 2);
  HalvingResult out{assemble(m2, d.gamma, nd, f, p, d.gamma_basepoint), {}, vmap, emap};
  out.validity = validate_special(out.decomposition.delta, m2);
  return out;
}

}  // namespace coxfold
