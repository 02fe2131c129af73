#pragma once

// Hand-built decompositions.  make_fixtures writes them to data/ and the
// tests compare the stored files with a fresh build.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxfold/coxfold.hpp"

namespace fixtures {

using namespace coxfold;

inline CoxeterMatrix matrix3(CoxeterMatrix::Entry st, CoxeterMatrix::Entry tu, CoxeterMatrix::Entry su) {
  using E = CoxeterMatrix::Entry;
  std::vector<std::vector<E>> m{{1, st, su}, {st, 1, tu}, {su, tu, 1}};
  return CoxeterMatrix({"s", "t", "u"}, m);
}

/// Appends a path from `from` reading `labels`, ending at `to` or at a new vertex.
inline GraphPath add_path(LabeledGraph& g, VertexId from, Word const& labels, std::optional<VertexId> to = std::nullopt) {
  GraphPath p{from, {}};
  VertexId at = from;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    VertexId next = (i + 1 == labels.size() && to) ? *to : g.add_vertex();
    p.edges.push_back(g.add_edge(at, next, labels[i]));
    at = next;
  }
  return p;
}

/// A special path reading gamma_ab(m_ab - 1) from `from`.  Adds the loop at
/// the start unless `start_loop` is false, and the loop at the end unless the
/// path is closed or `end_loop` is false.
inline SpecialPath add_special(LabeledGraph& g, CoxeterMatrix const& m, VertexId from, Letter a, Letter b,
                               bool closed = false, bool start_loop = true, bool end_loop = true) {
  std::size_t len = m.entry(a, b) - 1;
  Word w = alternating_word(a, b, len);
  SpecialPath sp{add_path(g, from, w, closed ? std::optional<VertexId>(from) : std::nullopt), std::min(a, b),
                 std::max(a, b)};
  Letter last = w.back();
  if (start_loop) g.add_edge(from, from, b);
  if (!closed && end_loop) {
    VertexId z = path_end(g, sp.path);
    g.add_edge(z, z, last == a ? b : a);
  }
  return sp;
}

inline LabeledGraph rose(CoxeterMatrix const& m, Word const& labels) {
  LabeledGraph g(Alphabet::of(m));
  VertexId v = g.add_vertex();
  for (Letter x : labels) g.add_edge(v, v, x);
  return g;
}

inline Witnesses standard_witnesses(CoxeterMatrix const& m) {
  Witnesses w;
  for (std::size_t s = 0; s < m.rank(); ++s) w[Letter(s)] = Word{Letter(s)};
  return w;
}

// ---- special graphs and decompositions from the figures -------------------

/// A closed {s,t} path with m_st = 6 and an open {t,u} path with m_tu = 7
/// sharing the loop t at their common start.
inline DecompositionFile fig5() {
  CoxeterMatrix m = matrix3(6, 7, CoxeterMatrix::infinity);
  SpecialGraph d{LabeledGraph(Alphabet::of(m)), {}};
  VertexId v = d.graph.add_vertex();
  d.paths.push_back(add_special(d.graph, m, v, 0, 1, true));
  d.paths.push_back(add_special(d.graph, m, v, 2, 1, false, false));
  return {assemble(m, LabeledGraph(Alphabet::of(m)), d, {}, {}), {}, {}};
}

/// Gamma is a u-triangle with one s side; the first edge of an {s,t} path
/// with m_st = 7 is glued onto that side.
inline DecompositionFile fig6() {
  CoxeterMatrix m = matrix3(7, CoxeterMatrix::infinity, CoxeterMatrix::infinity);
  LabeledGraph gamma(Alphabet::of(m));
  VertexId g0 = gamma.add_vertex(), g1 = gamma.add_vertex(), g2 = gamma.add_vertex();
  EdgeId gs = gamma.add_edge(g0, g1, 0);
  gamma.add_edge(g1, g2, 2);
  gamma.add_edge(g2, g0, 2);
  SpecialGraph d{LabeledGraph(Alphabet::of(m)), {}};
  VertexId x = d.graph.add_vertex();
  d.paths.push_back(add_special(d.graph, m, x, 0, 1));
  EdgeId first = d.paths[0].path.edges[0];
  Subgraph f;
  f.add_edge(d.graph, first);
  Attachment p;
  p.vertices[x] = g0;
  p.vertices[d.graph.target(first)] = g1;
  p.edges[first] = gs;
  return {assemble(m, gamma, d, f, p, g0), {}, {}};
}

/// F is the first two edges of an {s,t} path, glued onto an s,t path of Gamma.
inline DecompositionFile fig8() {
  CoxeterMatrix m = matrix3(6, CoxeterMatrix::infinity, CoxeterMatrix::infinity);
  LabeledGraph gamma(Alphabet::of(m));
  VertexId g0 = gamma.add_vertex();
  GraphPath gp = add_path(gamma, g0, {0, 1, 2});
  SpecialGraph d{LabeledGraph(Alphabet::of(m)), {}};
  VertexId x = d.graph.add_vertex();
  d.paths.push_back(add_special(d.graph, m, x, 0, 1));
  Subgraph f;
  Attachment p;
  VertexId at = x, gat = g0;
  p.vertices[at] = gat;
  for (std::size_t i = 0; i < 2; ++i) {
    EdgeId e = d.paths[0].path.edges[i];
    f.add_edge(d.graph, e);
    at = d.graph.target(e);
    gat = gamma.target(gp.edges[i]);
    p.vertices[at] = gat;
    p.edges[e] = gp.edges[i];
  }
  return {assemble(m, gamma, d, f, p, g0), {}, {}};
}

/// The two ends of an {s,t} path are separate components of F, glued to the
/// ends of a u edge.
inline DecompositionFile fig9() {
  CoxeterMatrix m = matrix3(6, CoxeterMatrix::infinity, CoxeterMatrix::infinity);
  LabeledGraph gamma(Alphabet::of(m));
  VertexId g0 = gamma.add_vertex(), g1 = gamma.add_vertex();
  gamma.add_edge(g0, g1, 2);
  SpecialGraph d{LabeledGraph(Alphabet::of(m)), {}};
  VertexId x = d.graph.add_vertex();
  d.paths.push_back(add_special(d.graph, m, x, 0, 1));
  VertexId y = path_end(d.graph, d.paths[0].path);
  Attachment p;
  p.vertices[x] = g0;
  p.vertices[y] = g1;
  return {assemble(m, gamma, d, forest_of_vertices({x, y}), p, g0), {}, {}};
}

/// F is a single vertex glued to a u rose.
inline DecompositionFile fig10() {
  CoxeterMatrix m = matrix3(6, CoxeterMatrix::infinity, CoxeterMatrix::infinity);
  LabeledGraph gamma = rose(m, {2});
  SpecialGraph d{LabeledGraph(Alphabet::of(m)), {}};
  VertexId x = d.graph.add_vertex();
  d.paths.push_back(add_special(d.graph, m, x, 0, 1));
  Attachment p;
  p.vertices[x] = 0;
  return {assemble(m, gamma, d, forest_of_vertices({x}), p, VertexId(0)), {}, {}};
}

/// Gamma a rose of four loops; Delta a closed {s,t} path with one loop and two
/// open {t,u} paths with two loops each, every component glued at one vertex.
inline DecompositionFile fig11() {
  CoxeterMatrix m = matrix3(6, 7, CoxeterMatrix::infinity);
  LabeledGraph gamma = rose(m, {0, 1, 2, 2});
  SpecialGraph d{LabeledGraph(Alphabet::of(m)), {}};
  std::vector<VertexId> starts;
  starts.push_back(d.graph.add_vertex());
  d.paths.push_back(add_special(d.graph, m, starts.back(), 0, 1, true));
  for (int i = 0; i < 2; ++i) {
    starts.push_back(d.graph.add_vertex());
    d.paths.push_back(add_special(d.graph, m, starts.back(), 1, 2));
  }
  Attachment p;
  for (VertexId v : starts) p.vertices[v] = 0;
  return {assemble(m, gamma, d, forest_of_vertices(starts), p, VertexId(0)), {}, {}};
}

// ---- tame fixtures ----------------------------------------------------------

inline constexpr CoxeterMatrix::Entry kTameEntry = 192;

/// (D_S, empty): Gamma = Theta is the standard rose, Delta is empty.
inline DecompositionFile tame_rose() {
  CoxeterMatrix m = CoxeterMatrix::uniform({"s", "t", "u"}, kTameEntry);
  DecompositionFile f{trivial_decomposition(m, BasedGraph{rose(m, {0, 1, 2}), 0}), {}, standard_witnesses(m)};
  return f;
}

/// Standard rose with one {s,t} path glued at its start.
inline DecompositionFile tame_single() {
  CoxeterMatrix m = CoxeterMatrix::uniform({"s", "t", "u"}, kTameEntry);
  SpecialGraph d{LabeledGraph(Alphabet::of(m)), {}};
  VertexId x = d.graph.add_vertex();
  d.paths.push_back(add_special(d.graph, m, x, 0, 1));
  Attachment p;
  p.vertices[x] = 0;
  return {assemble(m, rose(m, {0, 1, 2}), d, forest_of_vertices({x}), p, VertexId(0)), {}, standard_witnesses(m)};
}

/// Both ends of an {s,t} path glued to the rose vertex; the marking is that vertex.
inline DecompositionFile tame_ends() {
  CoxeterMatrix m = CoxeterMatrix::uniform({"s", "t", "u"}, kTameEntry);
  SpecialGraph d{LabeledGraph(Alphabet::of(m)), {}};
  VertexId x = d.graph.add_vertex();
  d.paths.push_back(add_special(d.graph, m, x, 0, 1));
  VertexId y = path_end(d.graph, d.paths[0].path);
  Attachment p;
  p.vertices[x] = 0;
  p.vertices[y] = 0;
  DecompositionFile f{assemble(m, rose(m, {0, 1, 2}), d, forest_of_vertices({x, y}), p, VertexId(0)), {},
                      standard_witnesses(m)};
  f.marking_in_delta.vertices.insert(x);
  return f;
}

/// As tame_ends, with the first edge of the path also in F, glued onto an
/// extra s edge of Gamma.
inline DecompositionFile tame_edge() {
  CoxeterMatrix m = CoxeterMatrix::uniform({"s", "t", "u"}, kTameEntry);
  LabeledGraph gamma = rose(m, {0, 1, 2});
  VertexId g1 = gamma.add_vertex();
  EdgeId gs = gamma.add_edge(0, g1, 0);
  SpecialGraph d{LabeledGraph(Alphabet::of(m)), {}};
  VertexId x = d.graph.add_vertex();
  d.paths.push_back(add_special(d.graph, m, x, 0, 1));
  EdgeId first = d.paths[0].path.edges[0];
  VertexId y = path_end(d.graph, d.paths[0].path);
  Subgraph f = forest_of_vertices({y});
  f.add_edge(d.graph, first);
  Attachment p;
  p.vertices[x] = 0;
  p.vertices[d.graph.target(first)] = g1;
  p.vertices[y] = 0;
  p.edges[first] = gs;
  DecompositionFile out{assemble(m, gamma, d, f, p, VertexId(0)), {}, standard_witnesses(m)};
  out.marking_in_delta.vertices.insert(x);
  return out;
}

// ---- halving ---------------------------------------------------------------

/// Standard rose with a closed {s,t} path of length m - 1 and a single loop.
inline DecompositionFile halving(CoxeterMatrix::Entry mst) {
  CoxeterMatrix m = matrix3(mst, CoxeterMatrix::infinity, CoxeterMatrix::infinity);
  SpecialGraph d{LabeledGraph(Alphabet::of(m)), {}};
  VertexId x = d.graph.add_vertex();
  d.paths.push_back(add_special(d.graph, m, x, 0, 1, true));
  Attachment p;
  p.vertices[x] = 0;
  return {assemble(m, rose(m, {0, 1, 2}), d, forest_of_vertices({x}), p, VertexId(0)), {}, standard_witnesses(m)};
}

/// Every stored fixture by file stem.
inline std::map<std::string, DecompositionFile> all() {
  std::map<std::string, DecompositionFile> out{
      {"fig5", fig5()},       {"fig6", fig6()},
      {"fig8", fig8()},       {"fig9", fig9()},
      {"fig10", fig10()},     {"fig11", fig11()},
      {"tame_rose", tame_rose()}, {"tame_single", tame_single()},
      {"tame_ends", tame_ends()}, {"tame_edge", tame_edge()}};
  for (CoxeterMatrix::Entry m : {6u, 8u, 10u, 12u}) out.emplace("halving_m" + std::to_string(m), halving(m));
  return out;
}

inline std::vector<std::string> tame_names() { return {"tame_rose", "tame_single", "tame_ends", "tame_edge"}; }

}  // namespace fixtures
