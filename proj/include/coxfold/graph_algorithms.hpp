#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "coxfold/errors.hpp"
#include "coxfold/fold.hpp"
#include "coxfold/labeled_graph.hpp"

namespace coxfold {

/// One cycle through the basepoint per word, labeled by that word.
inline BasedGraph wedge_graph(std::vector<Word> const& words, Alphabet alphabet) {
  BasedGraph bg{LabeledGraph(std::move(alphabet)), 0};
  LabeledGraph& g = bg.graph;
  VertexId v0 = g.add_vertex();
  bg.basepoint = v0;
  for (auto const& w : words) {
    if (w.empty()) throw InvalidArguments("wedge_graph needs nonempty words");
    VertexId at = v0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      VertexId next = i + 1 == w.size() ? v0 : g.add_vertex();
      g.add_edge(at, next, w[i]);
      at = next;
    }
  }
  return bg;
}

inline BasedGraph wedge_graph(std::vector<Word> const& words, CoxeterMatrix const& m) {
  return wedge_graph(words, Alphabet::of(m));
}

/// Reduced edge path obtained by cancelling e, e^-1 pairs.
inline GraphPath reduce_path(LabeledGraph const& g, GraphPath const& p) {
  GraphPath out{p.start, {}};
  for (EdgeId e : p.edges) {
    if (!out.edges.empty() && out.edges.back() == g.inverse(e))
      out.edges.pop_back();
    else
      out.edges.push_back(e);
  }
  return out;
}

/// Depth-first spanning tree from the basepoint, exploring edges in id
/// order.  `parent[v]` is the tree edge entering v.
inline std::map<VertexId, EdgeId> spanning_tree(LabeledGraph const& g, VertexId root) {
  std::map<VertexId, EdgeId> parent;
  std::set<VertexId> seen{root};
  std::vector<std::pair<VertexId, std::set<EdgeId>::const_iterator>> stack;
  stack.emplace_back(root, g.out_edges(root).begin());
  while (!stack.empty()) {
    auto& [v, it] = stack.back();
    if (it == g.out_edges(v).end()) {
      stack.pop_back();
      continue;
    }
    EdgeId e = *it++;
    VertexId w = g.target(e);
    if (seen.insert(w).second) {
      parent[w] = e;
      stack.emplace_back(w, g.out_edges(w).begin());
    }
  }
  return parent;
}

/// Closed paths at the basepoint, one per non-tree geometric edge (taken in
/// the orientation of its smaller id), forming a free basis of pi_1.
inline std::vector<GraphPath> pi1_generators(BasedGraph const& bg) {
  LabeledGraph const& g = bg.graph;
  if (!g.has_vertex(bg.basepoint)) throw InvalidArguments("basepoint is not a vertex");
  if (!is_connected(g)) throw InvalidArguments("pi1_generators needs a connected graph");
  auto parent = spanning_tree(g, bg.basepoint);
  std::set<EdgeId> tree;
  for (auto const& [v, e] : parent) {
    tree.insert(e);
    tree.insert(g.inverse(e));
  }
  auto path_to = [&](VertexId v) {
    std::vector<EdgeId> rev;
    while (v != bg.basepoint) {
      EdgeId e = parent.at(v);
      rev.push_back(e);
      v = g.source(e);
    }
    return std::vector<EdgeId>(rev.rbegin(), rev.rend());
  };
  std::vector<GraphPath> out;
  for (EdgeId e : g.geometric_edges()) {
    if (tree.count(e)) continue;
    GraphPath p{bg.basepoint, path_to(g.source(e))};
    p.edges.push_back(e);
    auto back = path_to(g.target(e));
    for (auto it = back.rbegin(); it != back.rend(); ++it) p.edges.push_back(g.inverse(*it));
    out.push_back(std::move(p));
  }
  return out;
}

/// Follows w deterministically from the basepoint of a folded graph.
inline bool accepts(BasedGraph const& bg, Word const& w) {
  if (!is_folded(bg.graph)) throw InvalidArguments("accepts needs a folded graph");
  VertexId at = bg.basepoint;
  for (Letter x : w) {
    std::optional<VertexId> next;
    for (EdgeId e : bg.graph.out_edges(at))
      if (bg.graph.label(e) == x) {
        next = bg.graph.target(e);
        break;
      }
    if (!next) return false;
    at = *next;
  }
  return at == bg.basepoint;
}

/// Whether some closed path at v (not necessarily reduced) reads w.  Works on
/// arbitrary graphs by tracking the set of reachable vertices.
inline bool has_closed_path_with_label(LabeledGraph const& g, VertexId v, Word const& w) {
  std::set<VertexId> at{v};
  for (Letter x : w) {
    std::set<VertexId> next;
    for (VertexId u : at)
      for (EdgeId e : g.out_edges(u))
        if (g.label(e) == x) next.insert(g.target(e));
    if (next.empty()) return false;
    at = std::move(next);
  }
  return at.count(v) != 0;
}

/// A closed path at v reading w, if one exists.
inline std::optional<GraphPath> find_closed_path_with_label(LabeledGraph const& g, VertexId v,
                                                            Word const& w) {
  std::vector<std::map<VertexId, EdgeId>> layers(w.size() + 1);
  layers[0][v] = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (auto const& [u, via] : layers[i])
      for (EdgeId e : g.out_edges(u))
        if (g.label(e) == w[i]) layers[i + 1].emplace(g.target(e), e);
  if (!layers[w.size()].count(v)) return std::nullopt;
  GraphPath p{v, std::vector<EdgeId>(w.size())};
  VertexId at = v;
  for (std::size_t i = w.size(); i-- > 0;) {
    EdgeId e = layers[i + 1].at(at);
    p.edges[i] = e;
    at = g.source(e);
  }
  return p;
}

/// Label- and basepoint-preserving isomorphism test for folded connected
/// graphs, by simultaneous traversal.
inline bool based_isomorphic(BasedGraph const& a, BasedGraph const& b) {
  for (auto const* x : {&a, &b}) {
    if (!is_folded(x->graph)) throw InvalidArguments("based_isomorphic needs folded graphs");
    if (!is_connected(x->graph)) throw InvalidArguments("based_isomorphic needs connected graphs");
  }
  if (a.graph.vertex_count() != b.graph.vertex_count() ||
      a.graph.edge_count() != b.graph.edge_count())
    return false;
  auto moves = [](LabeledGraph const& g, VertexId v) {
    std::multimap<Letter, VertexId> out;
    for (EdgeId e : g.out_edges(v)) out.emplace(g.label(e), g.target(e));
    return out;
  };
  std::map<VertexId, VertexId> fwd, bwd;
  std::queue<VertexId> queue;
  fwd[a.basepoint] = b.basepoint;
  bwd[b.basepoint] = a.basepoint;
  queue.push(a.basepoint);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    auto ma = moves(a.graph, u), mb = moves(b.graph, fwd[u]);
    if (ma.size() != mb.size()) return false;
    for (auto ia = ma.begin(), ib = mb.begin(); ia != ma.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      auto [fa, fa_new] = fwd.emplace(ia->second, ib->second);
      auto [ba, ba_new] = bwd.emplace(ib->second, ia->second);
      if (fa->second != ib->second || ba->second != ia->second) return false;
      if (fa_new) queue.push(ia->second);
    }
  }
  return fwd.size() == a.graph.vertex_count();
}

}  // namespace coxfold
