#pragma once

// Arzhantseva-Ol'shanskii moves.  Given a path gamma = pre . hat . suf whose
// inner part `hat` runs through valence-2 vertices other than the basepoint,
// and a word w equal in the group to l(gamma), remove hat and glue a fresh
// segment reading w from alpha(gamma) to omega(gamma).

#include <algorithm>
#include <cstddef>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

#include "coxfold/errors.hpp"
#include "coxfold/graph_algorithms.hpp"
#include "coxfold/labeled_graph.hpp"
#include "coxfold/tits.hpp"

namespace coxfold {

struct AOMove {
  BasedGraph before;
  BasedGraph after;
  GraphPath gamma;
  std::size_t inner_begin;
  std::size_t inner_end;
  Word word;
  GraphPath segment;  // the new segment in `after`, from alpha(gamma) to omega(gamma)
  VertexId merged_from = 0;  // for an empty word: vertex absorbed into merged_into
  VertexId merged_into = 0;

  GraphPath prefix() const { return sub(0, inner_begin); }
  GraphPath inner() const { return sub(inner_begin, inner_end); }
  GraphPath suffix() const { return sub(inner_end, gamma.edges.size()); }

 private:
  GraphPath sub(std::size_t b, std::size_t e) const {
    VertexId start = b == 0 ? gamma.start : before.graph.target(gamma.edges[b - 1]);
    return {start, std::vector<EdgeId>(gamma.edges.begin() + std::ptrdiff_t(b),
                                       gamma.edges.begin() + std::ptrdiff_t(e))};
  }
};

namespace detail {

inline VertexId merge_vertices(LabeledGraph& g, VertexId keep, VertexId drop) {
  std::vector<EdgeId> moving;
  for (EdgeId e : g.out_edges(drop)) moving.push_back(g.representative(e));
  std::sort(moving.begin(), moving.end());
  moving.erase(std::unique(moving.begin(), moving.end()), moving.end());
  for (EdgeId e : moving) {
    Edge rec = g.edge(e);
    g.remove_edge(e);
    g.add_edge_pair(e, rec.inverse, rec.source == drop ? keep : rec.source,
                    rec.target == drop ? keep : rec.target, rec.label);
  }
  g.remove_vertex(drop);
  return keep;
}

}  // namespace detail

/// Performs the move; `equal(a, b)` decides a =_G b and must return false
/// when undecided.  Edges [inner_begin, inner_end) of gamma form the inner
/// subpath.
template <class Equal>
  requires std::is_invocable_r_v<bool, Equal&, Word const&, Word const&>
AOMove ao_move(BasedGraph const& bg, GraphPath const& gamma, std::size_t inner_begin,
               std::size_t inner_end, Word const& w, Equal&& equal) {
  LabeledGraph const& g = bg.graph;
  if (!is_well_formed(g, gamma)) throw InvalidArguments("gamma is not a path in the graph");
  if (inner_begin >= inner_end || inner_end > gamma.edges.size())
    throw InvalidMove("inner subpath must be a nonempty range of gamma");
  for (std::size_t p = inner_begin; p + 1 < inner_end; ++p) {
    VertexId v = g.target(gamma.edges[p]);
    if (v == bg.basepoint) throw InvalidMove("inner subpath passes through the basepoint");
    if (g.valence(v) != 2) throw InvalidMove("inner subpath passes through a vertex of valence != 2");
  }
  std::set<EdgeId> inner_edges;
  for (std::size_t p = inner_begin; p < inner_end; ++p) {
    EdgeId r = g.representative(gamma.edges[p]);
    if (!inner_edges.insert(r).second) throw InvalidMove("inner subpath repeats an edge");
  }
  for (std::size_t p = 0; p < gamma.edges.size(); ++p) {
    if (p >= inner_begin && p < inner_end) continue;
    if (inner_edges.count(g.representative(gamma.edges[p])))
      throw InvalidMove("gamma uses an inner edge outside its inner subpath");
  }
  if (!equal(w, path_label(g, gamma))) throw InvalidMove("word is not equal to the label of gamma");

  AOMove mv{bg, bg, gamma, inner_begin, inner_end, w, {}, 0, 0};
  LabeledGraph& h = mv.after.graph;
  std::set<VertexId> interior;
  for (std::size_t p = inner_begin; p + 1 < inner_end; ++p) interior.insert(g.target(gamma.edges[p]));
  for (EdgeId r : inner_edges) h.remove_edge(r);
  for (VertexId v : interior) h.remove_vertex(v);

  VertexId a = gamma.start, z = path_end(g, gamma);
  if (!h.has_vertex(a) || !h.has_vertex(z)) throw InvalidMove("gamma's endpoints would be removed");
  mv.segment.start = a;
  if (w.empty()) {
    if (a != z) {
      VertexId keep = std::min(a, z), drop = std::max(a, z);
      detail::merge_vertices(h, keep, drop);
      mv.merged_from = drop;
      mv.merged_into = keep;
      if (mv.after.basepoint == drop) mv.after.basepoint = keep;
      mv.segment.start = keep;
    }
    return mv;
  }
  VertexId at = a;
  for (std::size_t i = 0; i < w.size(); ++i) {
    VertexId next = i + 1 == w.size() ? z : h.add_vertex();
    mv.segment.edges.push_back(h.add_edge(at, next, w[i]));
    at = next;
  }
  return mv;
}

/// Coxeter version: equality is decided by the word-problem engine; an
/// indeterminate answer rejects the move.
inline AOMove ao_move(BasedGraph const& bg, GraphPath const& gamma, std::size_t inner_begin,
                      std::size_t inner_end, Word const& w, CoxeterMatrix const& m,
                      std::size_t budget = kDefaultBudget) {
  return ao_move(bg, gamma, inner_begin, inner_end, w, [&](Word const& a, Word const& b) {
    return equal_in_group(a, b, m, budget).value_or(false);
  });
}

/// Free-group version: equality of free reductions.
inline AOMove ao_move_free(BasedGraph const& bg, GraphPath const& gamma, std::size_t inner_begin,
                           std::size_t inner_end, Word const& w) {
  Alphabet const& al = bg.graph.alphabet();
  return ao_move(bg, gamma, inner_begin, inner_end, w, [&](Word const& a, Word const& b) {
    return al.free_reduce(a) == al.free_reduce(b);
  });
}

namespace detail {

inline void append(std::vector<EdgeId>& out, GraphPath const& p) {
  out.insert(out.end(), p.edges.begin(), p.edges.end());
}

inline bool matches_at(std::vector<EdgeId> const& xs, std::size_t i, std::vector<EdgeId> const& pat) {
  if (pat.empty() || i + pat.size() > xs.size()) return false;
  return std::equal(pat.begin(), pat.end(), xs.begin() + std::ptrdiff_t(i));
}

}  // namespace detail

/// Image in `after` of a closed path at the basepoint of `before`: every
/// traversal of the inner subpath is replaced by pre^-1 . segment . suf^-1.
/// The result has the same label in the group.
inline GraphPath ao_transport(AOMove const& mv, GraphPath const& p) {
  LabeledGraph const& g = mv.before.graph;
  GraphPath red = reduce_path(g, p);
  auto hat = mv.inner();
  auto hat_inv = path_inverse(g, hat);
  auto pre_inv = path_inverse(g, mv.prefix());
  auto suf_inv = path_inverse(g, mv.suffix());
  std::set<EdgeId> inner_ids;
  for (EdgeId e : hat.edges) {
    inner_ids.insert(e);
    inner_ids.insert(g.inverse(e));
  }
  LabeledGraph const& h = mv.after.graph;
  GraphPath seg_inv = path_inverse(h, mv.segment);
  auto img = [&](VertexId v) { return v == mv.merged_from && mv.merged_from != mv.merged_into ? mv.merged_into : v; };
  GraphPath out{img(red.start), {}};
  std::size_t i = 0;
  while (i < red.edges.size()) {
    if (!inner_ids.count(red.edges[i])) {
      out.edges.push_back(red.edges[i++]);
      continue;
    }
    if (detail::matches_at(red.edges, i, hat.edges)) {
      detail::append(out.edges, pre_inv);
      detail::append(out.edges, mv.segment);
      detail::append(out.edges, suf_inv);
      i += hat.edges.size();
    } else if (detail::matches_at(red.edges, i, hat_inv.edges)) {
      detail::append(out.edges, mv.suffix());
      detail::append(out.edges, seg_inv);
      detail::append(out.edges, mv.prefix());
      i += hat.edges.size();
    } else {
      throw InvalidArguments("path enters the inner subpath without traversing it");
    }
  }
  return out;
}

/// Lift to `before` of a closed path at the basepoint of `after`: every
/// traversal of the new segment is replaced by gamma.
inline GraphPath ao_lift(AOMove const& mv, GraphPath const& p) {
  LabeledGraph const& h = mv.after.graph;
  LabeledGraph const& g = mv.before.graph;
  GraphPath red = reduce_path(h, p);
  GraphPath const& gamma = mv.gamma;
  GraphPath gamma_inv = path_inverse(g, gamma);
  GraphPath seg_inv = path_inverse(h, mv.segment);
  VertexId a = gamma.start, z = path_end(g, gamma);
  GraphPath out{mv.before.basepoint, {}};
  VertexId at = out.start;
  auto go_to = [&](VertexId v) {
    if (at == v) return;
    if (at == a && v == z)
      detail::append(out.edges, gamma);
    else if (at == z && v == a)
      detail::append(out.edges, gamma_inv);
    else
      throw InvalidArguments("path does not lift through this move");
    at = v;
  };
  std::size_t i = 0;
  while (i < red.edges.size()) {
    if (detail::matches_at(red.edges, i, mv.segment.edges)) {
      go_to(a);
      detail::append(out.edges, gamma);
      at = z;
      i += mv.segment.edges.size();
    } else if (detail::matches_at(red.edges, i, seg_inv.edges)) {
      go_to(z);
      detail::append(out.edges, gamma_inv);
      at = a;
      i += mv.segment.edges.size();
    } else {
      EdgeId e = red.edges[i++];
      if (!g.has_edge(e)) throw InvalidArguments("path enters the new segment without traversing it");
      go_to(g.source(e));
      out.edges.push_back(e);
      at = g.target(e);
    }
  }
  go_to(mv.before.basepoint);
  return out;
}

}  // namespace coxfold
