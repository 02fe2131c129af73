#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "coxfold/errors.hpp"
#include "coxfold/labeled_graph.hpp"

namespace coxfold {

/// Two distinct edges with the same initial vertex and label.  A loop and its
/// own inverse never form a site.
struct FoldSite {
  EdgeId first;
  EdgeId second;
  friend bool operator==(FoldSite const&, FoldSite const&) = default;
};

struct FoldTrace {
  LabeledGraph result;
  std::map<VertexId, VertexId> vertex_map;
  std::map<EdgeId, EdgeId> edge_map;
  std::vector<FoldSite> steps;  // ids as they were when each fold happened

  VertexId image(VertexId v) const { return vertex_map.at(v); }
  EdgeId edge_image(EdgeId e) const { return edge_map.at(e); }

  GraphPath image(GraphPath const& p) const {
    GraphPath out{vertex_map.at(p.start), {}};
    for (EdgeId e : p.edges) out.edges.push_back(edge_map.at(e));
    return out;
  }
};

inline bool is_fold_site(LabeledGraph const& g, EdgeId e1, EdgeId e2) {
  if (!g.has_edge(e1) || !g.has_edge(e2) || e1 == e2) return false;
  if (g.inverse(e1) == e2) return false;
  return g.source(e1) == g.source(e2) && g.label(e1) == g.label(e2);
}

/// All fold sites with first < second, ordered by (vertex, label, ids).
inline std::vector<FoldSite> fold_sites(LabeledGraph const& g) {
  std::vector<FoldSite> out;
  for (VertexId v : g.vertices()) {
    std::map<Letter, std::vector<EdgeId>> by_label;
    for (EdgeId e : g.out_edges(v)) by_label[g.label(e)].push_back(e);
    for (auto const& [label, es] : by_label)
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
          if (g.inverse(es[i]) != es[j]) out.push_back({es[i], es[j]});
  }
  return out;
}

inline bool is_folded(LabeledGraph const& g) {
  for (VertexId v : g.vertices()) {
    std::map<Letter, std::vector<EdgeId>> by_label;
    for (EdgeId e : g.out_edges(v)) by_label[g.label(e)].push_back(e);
    for (auto const& [label, es] : by_label) {
      if (es.size() > 2) return false;
      if (es.size() == 2 && g.inverse(es[0]) != es[1]) return false;
    }
  }
  return true;
}

namespace detail {

inline FoldTrace identity_trace(LabeledGraph const& g) {
  FoldTrace t;
  t.result = g;
  for (VertexId v : g.vertices()) t.vertex_map[v] = v;
  for (auto const& [e, rec] : g.edges()) t.edge_map[e] = e;
  return t;
}

}  // namespace detail

namespace detail {

struct FoldEffect {
  EdgeId keep, drop, keep_inv, drop_inv;
  VertexId keep_v, drop_v;
};

inline FoldEffect fold_in_place(LabeledGraph& h, EdgeId e1, EdgeId e2) {
  if (!is_fold_site(h, e1, e2))
    throw InvalidFold("edges do not share initial vertex and label, or are not distinct");
  auto keep_pair_of = [&](EdgeId e) { return std::min(e, h.inverse(e)); };
  FoldEffect fx{};
  fx.keep = keep_pair_of(e1) < keep_pair_of(e2) ? e1 : e2;
  fx.drop = fx.keep == e1 ? e2 : e1;
  fx.keep_inv = h.inverse(fx.keep);
  fx.drop_inv = h.inverse(fx.drop);
  VertexId w1 = h.target(fx.keep), w2 = h.target(fx.drop);
  fx.keep_v = std::min(w1, w2);
  fx.drop_v = std::max(w1, w2);
  h.remove_edge(fx.drop);
  if (fx.keep_v != fx.drop_v) {
    std::vector<EdgeId> moving;
    for (EdgeId e : h.out_edges(fx.drop_v)) moving.push_back(h.representative(e));
    std::sort(moving.begin(), moving.end());
    moving.erase(std::unique(moving.begin(), moving.end()), moving.end());
    for (EdgeId e : moving) {
      Edge rec = h.edge(e);
      h.remove_edge(e);
      VertexId a = rec.source == fx.drop_v ? fx.keep_v : rec.source;
      VertexId b = rec.target == fx.drop_v ? fx.keep_v : rec.target;
      h.add_edge_pair(e, rec.inverse, a, b, rec.label);
    }
    h.remove_vertex(fx.drop_v);
  }
  return fx;
}

}  // namespace detail

/// Identifies e1 with e2, their inverses, and their terminal vertices.  The
/// surviving edge pair is the one containing the smaller id; the surviving
/// vertex is the smaller id.
inline FoldTrace fold_once(LabeledGraph const& g, EdgeId e1, EdgeId e2) {
  if (!is_fold_site(g, e1, e2))
    throw InvalidFold("edges do not share initial vertex and label, or are not distinct");
  FoldTrace t = detail::identity_trace(g);
  auto fx = detail::fold_in_place(t.result, e1, e2);
  t.vertex_map[fx.drop_v] = fx.keep_v;
  t.edge_map[fx.drop] = fx.keep;
  t.edge_map[fx.drop_inv] = fx.keep_inv;
  t.steps.push_back({e1, e2});
  return t;
}

/// Applies `step` to the result of `first`, composing the maps.
inline FoldTrace compose(FoldTrace first, FoldTrace const& step) {
  for (auto& [v, img] : first.vertex_map) img = step.vertex_map.at(img);
  for (auto& [e, img] : first.edge_map) img = step.edge_map.at(img);
  first.result = step.result;
  first.steps.insert(first.steps.end(), step.steps.begin(), step.steps.end());
  return first;
}

/// Folds until no site remains.  `choose(sites)` picks the index of the next
/// site to fold; the default takes the first in fold_sites order.
template <class Chooser>
FoldTrace fold(LabeledGraph const& g, Chooser&& choose) {
  FoldTrace t = detail::identity_trace(g);
  for (;;) {
    auto sites = fold_sites(t.result);
    if (sites.empty()) return t;
    std::size_t k = choose(sites);
    auto fx = detail::fold_in_place(t.result, sites.at(k).first, sites.at(k).second);
    for (auto& [v, img] : t.vertex_map)
      if (img == fx.drop_v) img = fx.keep_v;
    for (auto& [e, img] : t.edge_map) {
      if (img == fx.drop) img = fx.keep;
      else if (img == fx.drop_inv) img = fx.keep_inv;
    }
    t.steps.push_back(sites[k]);
  }
}

inline FoldTrace fold(LabeledGraph const& g) {
  return fold(g, [](std::vector<FoldSite> const&) { return std::size_t{0}; });
}

inline BasedGraph fold(BasedGraph const& bg) {
  auto t = fold(bg.graph);
  return {std::move(t.result), t.vertex_map.at(bg.basepoint)};
}

/// Lifts a path of fold_once(g, e1, e2).result back to g.  Wherever the
/// lifted path would have to jump between the two identified terminal
/// vertices it inserts e_i^-1 e_j, whose label is trivial in the group.
/// `start` must map to p.start.
inline GraphPath lift_path(LabeledGraph const& g, EdgeId e1, EdgeId e2, GraphPath const& p,
                           VertexId start) {
  auto bridge = [&](VertexId from, VertexId to, GraphPath& out) {
    if (from == to) return;
    EdgeId a = g.target(e1) == from ? e1 : e2;
    EdgeId b = a == e1 ? e2 : e1;
    if (g.target(a) != from || g.target(b) != to)
      throw InvalidArguments("path does not lift through this fold");
    out.edges.push_back(g.inverse(a));
    out.edges.push_back(b);
  };
  GraphPath out{start, {}};
  VertexId at = start;
  for (EdgeId e : p.edges) {
    bridge(at, g.source(e), out);
    out.edges.push_back(e);
    at = g.target(e);
  }
  return out;
}

}  // namespace coxfold
