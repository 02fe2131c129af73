#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxfold/coxeter_matrix.hpp"
#include "coxfold/labeled_graph.hpp"
#include "coxfold/words.hpp"

namespace coxfold {

struct SpecialPath {
  GraphPath path;
  Letter s = 0;  // type {s, t}, stored with s < t
  Letter t = 0;
  friend bool operator==(SpecialPath const&, SpecialPath const&) = default;
};

struct SpecialGraph {
  LabeledGraph graph;
  std::vector<SpecialPath> paths;

  /// Loop edges, one id per geometric loop.
  std::vector<EdgeId> loop_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e : graph.geometric_edges())
      if (graph.is_loop(e)) out.push_back(e);
    return out;
  }

  /// Delta minus its loop edges (all vertices kept).
  Subgraph without_loops() const {
    Subgraph s;
    s.vertices = graph.vertices();
    for (auto const& [e, rec] : graph.edges())
      if (rec.source != rec.target) s.edges.insert(e);
    return s;
  }
};

/// Per-condition outcome of a validator.
struct ConditionResult {
  ConditionResult() = default;
  explicit ConditionResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::vector<std::string> details;  // offending elements
  std::vector<std::string> notes;    // flagged but accepted configurations

  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
};

struct ConditionReport {
  std::vector<ConditionResult> conditions;

  bool ok() const {
    return std::all_of(conditions.begin(), conditions.end(), [](auto const& c) { return c.pass; });
  }

  ConditionResult const& at(std::string const& name) const {
    for (auto const& c : conditions)
      if (c.name == name) return c;
    throw InvalidArguments("no condition named " + name);
  }
};

namespace detail {

inline std::vector<VertexId> path_vertices(LabeledGraph const& g, GraphPath const& p) {
  std::vector<VertexId> vs{p.start};
  for (EdgeId e : p.edges) vs.push_back(g.target(e));
  return vs;
}

inline bool is_simple_or_simple_closed(LabeledGraph const& g, GraphPath const& p) {
  auto vs = path_vertices(g, p);
  std::size_t k = vs.size();
  if (k >= 2 && vs.front() == vs.back()) --k;
  std::set<VertexId> seen(vs.begin(), vs.begin() + std::ptrdiff_t(k));
  return seen.size() == k;
}

inline std::string path_name(std::size_t i) { return "special path " + std::to_string(i); }

}  // namespace detail

/// The loop labels (e, f) at alpha(delta), omega(delta) making delta f
/// delta^-1 e read (st)^m, if any.
inline std::optional<std::pair<EdgeId, EdgeId>> relator_loops(SpecialGraph const& d,
                                                              SpecialPath const& sp,
                                                              CoxeterMatrix const& m) {
  LabeledGraph const& g = d.graph;
  if (sp.s == sp.t || !m.is_finite(sp.s, sp.t)) return std::nullopt;
  std::size_t mst = m.entry(sp.s, sp.t);
  Word lab = path_label(g, sp.path);
  Word back(lab.rbegin(), lab.rend());
  auto loops_at = [&](VertexId v) {
    std::vector<EdgeId> out;
    for (EdgeId e : g.out_edges(v))
      if (g.is_loop(e) && e == g.representative(e)) out.push_back(e);
    return out;
  };
  Word r1 = alternating_word(sp.s, sp.t, 2 * mst), r2 = alternating_word(sp.t, sp.s, 2 * mst);
  VertexId a = sp.path.start, z = path_end(g, sp.path);
  for (EdgeId e : loops_at(a))
    for (EdgeId f : loops_at(z)) {
      Word w = lab;
      w.push_back(g.label(f));
      w.insert(w.end(), back.begin(), back.end());
      w.push_back(g.label(e));
      if (w == r1 || w == r2) return std::make_pair(e, f);
    }
  return std::nullopt;
}

/// Checks Delta1-Delta6 and that every type is a finite entry of M.
inline ConditionReport validate_special(SpecialGraph const& d, CoxeterMatrix const& m) {
  LabeledGraph const& g = d.graph;
  ConditionResult c1{"Delta1"}, c2{"Delta2"}, c3{"Delta3"}, c4{"Delta4"}, c5{"Delta5"}, c6{"Delta6"},
      ct{"type"};
  std::vector<bool> well_formed(d.paths.size());
  for (std::size_t i = 0; i < d.paths.size(); ++i) {
    auto const& sp = d.paths[i];
    well_formed[i] = is_well_formed(g, sp.path);
    if (!well_formed[i]) {
      c3.fail(detail::path_name(i) + " is not a path in the graph");
      continue;
    }
    if (sp.path.length() < 5)
      c1.fail(detail::path_name(i) + " has length " + std::to_string(sp.path.length()));
    if (!detail::is_simple_or_simple_closed(g, sp.path))
      c3.fail(detail::path_name(i) + " is neither simple nor simple closed");
    if (sp.s >= m.rank() || sp.t >= m.rank() || sp.s == sp.t) {
      ct.fail(detail::path_name(i) + " has an invalid type");
      continue;
    }
    if (!m.is_finite(sp.s, sp.t))
      ct.fail(detail::path_name(i) + " has type {" + m.name(sp.s) + "," + m.name(sp.t) +
              "} with infinite entry");
    else if (!relator_loops(d, sp, m))
      c6.fail(detail::path_name(i) + " does not read (" + m.name(sp.s) + m.name(sp.t) + ")^" +
              std::to_string(m.entry(sp.s, sp.t)) + " with loops at its ends");
  }

  std::set<EdgeId> covered;
  for (std::size_t i = 0; i < d.paths.size(); ++i)
    if (well_formed[i])
      for (EdgeId e : d.paths[i].path.edges) covered.insert(g.representative(e));
  for (EdgeId e : g.geometric_edges())
    if (!g.is_loop(e) && !covered.count(e))
      c2.fail("edge " + std::to_string(e) + " lies on no special path");
  for (VertexId v : g.vertices())
    if (g.valence(v) == 0) c2.fail("vertex " + std::to_string(v) + " is isolated");

  for (std::size_t i = 0; i < d.paths.size(); ++i) {
    if (!well_formed[i]) continue;
    auto vi = detail::path_vertices(g, d.paths[i].path);
    std::set<VertexId> ext_i{vi.front(), vi.back()};
    std::set<VertexId> vset_i(vi.begin(), vi.end());
    for (EdgeId e : g.geometric_edges()) {
      if (!g.is_loop(e) || !vset_i.count(g.source(e))) continue;
      if (!ext_i.count(g.source(e)))
        c5.fail("loop edge " + std::to_string(e) + " is based at an inner vertex of " +
                detail::path_name(i));
    }
    for (std::size_t j = i + 1; j < d.paths.size(); ++j) {
      if (!well_formed[j]) continue;
      auto vj = detail::path_vertices(g, d.paths[j].path);
      std::set<VertexId> ext_j{vj.front(), vj.back()};
      auto edge_set = [&](GraphPath const& p) {
        std::set<EdgeId> s;
        for (EdgeId e : p.edges) s.insert(g.representative(e));
        return s;
      };
      auto extremal_edges = [&](GraphPath const& p) {
        std::set<EdgeId> s;
        if (!p.edges.empty()) {
          s.insert(g.representative(p.edges.front()));
          s.insert(g.representative(p.edges.back()));
        }
        return s;
      };
      auto ei = edge_set(d.paths[i].path), ej = edge_set(d.paths[j].path);
      auto xi = extremal_edges(d.paths[i].path), xj = extremal_edges(d.paths[j].path);
      Subgraph common;
      for (VertexId v : vi)
        if (std::find(vj.begin(), vj.end(), v) != vj.end()) common.vertices.insert(v);
      for (EdgeId e : ei)
        if (ej.count(e)) {
          common.edges.insert(e);
          common.edges.insert(g.inverse(e));
        }
      if (common.empty()) continue;
      std::map<std::size_t, std::vector<VertexId>> comp_vertices;
      std::map<std::size_t, std::vector<EdgeId>> comp_edges;
      auto labels = component_labels(g, common);
      for (auto const& [v, c] : labels) comp_vertices[c].push_back(v);
      for (EdgeId e : common.edges)
        if (e == g.representative(e)) comp_edges[labels.at(g.source(e))].push_back(e);
      std::string pair = detail::path_name(i) + " and " + detail::path_name(j);
      for (auto const& [c, vs] : comp_vertices) {
        bool has_common_extremal = std::any_of(vs.begin(), vs.end(), [&](VertexId v) {
          return ext_i.count(v) && ext_j.count(v);
        });
        if (!has_common_extremal) {
          c4.fail(pair + " meet away from a common extremal vertex");
          continue;
        }
        auto const& es = comp_edges[c];
        for (EdgeId e : es)
          if (!xi.count(e) || !xj.count(e))
            c4.fail(pair + " share edge " + std::to_string(e) + " which is not extremal in both");
        if (es.size() > 2) c4.fail(pair + " share more than two extremal edges");
        if (es.size() == 2) c4.notes.push_back(pair + " share two extremal edges in one component");
      }
    }
  }
  return ConditionReport{{c1, c2, c3, c4, c5, c6, ct}};
}

}  // namespace coxfold
