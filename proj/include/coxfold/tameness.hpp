#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxfold/complexity.hpp"
#include "coxfold/decomposition.hpp"
#include "coxfold/graph_algorithms.hpp"
#include "coxfold/tits.hpp"

namespace coxfold {

enum class Status { pass, fail, not_verified };

inline char const* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_verified: return "not verified";
  }
  return "?";
}

struct TameCondition {
  TameCondition() = default;
  explicit TameCondition(std::string n) : name(std::move(n)) {}

  std::string name;
  Status status = Status::pass;
  std::vector<std::string> details;

  void fail(std::string why) {
    status = Status::fail;
    details.push_back(std::move(why));
  }
};

struct TameReport {
  std::vector<TameCondition> conditions;

  TameCondition const& at(std::string const& name) const {
    for (auto const& c : conditions)
      if (c.name == name) return c;
    throw InvalidArguments("no condition named " + name);
  }
  Status status(std::string const& name) const { return at(name).status; }

  bool tame() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](auto const& c) { return c.status == Status::pass; });
  }

  /// Omega1-Omega4 all pass.
  bool omega_ok() const {
    for (char const* n : {"Omega1", "Omega2", "Omega3", "Omega4"})
      if (status(n) != Status::pass) return false;
    return true;
  }
};

/// Witness words, one per generator: each must label a closed path at the
/// basepoint of Theta and equal its generator in W(M).
using Witnesses = std::map<Letter, Word>;

/// 8 (chi(Delta) - chi(bar Delta) - chi(Omega)).
inline long long omega3_budget(Decomposition const& d, Subgraph const& omega) {
  return 8 * (euler(d.delta.graph) - euler(d.delta_bar()) - euler(omega));
}

/// A reduced path of length <= 8 in the image of Delta minus loops with both
/// endpoints in Omega and some vertex or edge outside Omega.
inline std::optional<GraphPath> find_omega4_violation(Decomposition const& d, Subgraph const& omega) {
  LabeledGraph const& g = d.theta.graph;
  Subgraph within = d.delta_minus_loops_bar();
  std::optional<GraphPath> found;
  GraphPath cur;
  std::function<void(VertexId, bool)> dfs = [&](VertexId v, bool outside) {
    if (found) return;
    if (!cur.edges.empty() && outside && omega.has_vertex(v)) {
      found = cur;
      return;
    }
    if (cur.edges.size() == 8) return;
    for (EdgeId e : g.out_edges(v)) {
      if (!within.has_edge(e)) continue;
      if (!cur.edges.empty() && g.inverse(cur.edges.back()) == e) continue;
      VertexId w = g.target(e);
      cur.edges.push_back(e);
      dfs(w, outside || !omega.has_edge(e) || !omega.has_vertex(w));
      cur.edges.pop_back();
      if (found) return;
    }
  };
  for (VertexId v : omega.vertices) {
    cur = GraphPath{v, {}};
    dfs(v, false);
    if (found) return found;
  }
  return std::nullopt;
}

/// Whether 6 * 2^c <= m, exactly, for any integer c.
inline bool meets_exponential_bound(std::uint64_t m, long long c) {
  if (c < 0) {
    long long shift = -c;
    if (shift >= 3) return true;
    return (m << shift) >= 6;
  }
  if (c >= 60) return false;
  return m >= (std::uint64_t{6} << c);
}

inline TameReport check_tame(Decomposition const& d, Subgraph const& omega,
                             std::optional<Witnesses> const& witnesses = std::nullopt,
                             std::size_t budget = kDefaultBudget) {
  require_marking(d, omega);
  LabeledGraph const& theta = d.theta.graph;
  TameCondition theta_c{"Theta"}, o1{"Omega1"}, o2{"Omega2"}, o3{"Omega3"}, o4{"Omega4"},
      dstar{"DeltaBarStar"}, mc{"M"};

  if (!is_connected(theta)) {
    theta_c.fail("Theta is not connected");
  } else if (!witnesses) {
    theta_c.status = Status::not_verified;
    theta_c.details.push_back("no witnesses supplied");
  } else {
    for (std::size_t s = 0; s < d.matrix.rank(); ++s) {
      auto it = witnesses->find(Letter(s));
      std::string name = d.matrix.name(Letter(s));
      if (it == witnesses->end()) {
        theta_c.status = Status::not_verified;
        theta_c.details.push_back("no witness for " + name);
        continue;
      }
      if (!has_closed_path_with_label(theta, d.theta.basepoint, it->second)) {
        theta_c.status = Status::not_verified;
        theta_c.details.push_back("witness for " + name + " is not a closed path at the basepoint");
        continue;
      }
      auto eq = equal_in_group(it->second, Word{Letter(s)}, d.matrix, budget);
      if (!eq || !*eq) {
        theta_c.status = Status::not_verified;
        theta_c.details.push_back(eq ? "witness for " + name + " is not equal to " + name
                                     : "witness for " + name + " is undecided within the budget");
      }
    }
  }

  auto nb = omega_neighborhood(d, omega, 3);
  Subgraph const& tilde3 = nb.in_delta;
  std::map<VertexId, std::vector<VertexId>> fibres;
  for (VertexId x : d.forest.vertices) fibres[d.attach.vertices.at(x)].push_back(x);
  for (auto const& [px, xs] : fibres) {
    if (xs.size() < 2) continue;
    for (VertexId x : xs)
      if (!tilde3.has_vertex(x))
        o1.fail("vertex " + std::to_string(x) + " shares its image under p but lies outside tilde Omega_3");
  }
  for (EdgeId e : d.forest.edges)
    if (e == d.delta.graph.representative(e) && !tilde3.has_edge(e))
      o2.fail("F edge " + std::to_string(e) + " lies outside tilde Omega_3");

  long long omega_edges = static_cast<long long>(omega.edge_count());
  long long budget3 = omega3_budget(d, omega);
  if (omega_edges > budget3)
    o3.fail("|E Omega| = " + std::to_string(omega_edges) + " exceeds " + std::to_string(budget3));

  if (auto bad = find_omega4_violation(d, omega)) {
    std::string s = "reduced path from " + std::to_string(bad->start) + " via edges";
    for (EdgeId e : bad->edges) s += " " + std::to_string(e);
    o4.fail(s + " leaves Omega");
  }

  for (std::size_t i = 0; i < d.delta.paths.size(); ++i) {
    std::set<EdgeId> img;
    auto const& p = d.delta.paths[i].path;
    for (EdgeId e : p.edges) img.insert(theta.representative(d.bar_edge(e)));
    if (img.size() != p.edges.size())
      dstar.fail("special path " + std::to_string(i) + " has " + std::to_string(p.edges.size()) +
                 " edges but its image has " + std::to_string(img.size()));
  }

  long long c_star = potential(d);
  for (std::size_t s = 0; s < d.matrix.rank(); ++s)
    for (std::size_t t = s + 1; t < d.matrix.rank(); ++t) {
      auto e = d.matrix.entry(Letter(s), Letter(t));
      if (e == CoxeterMatrix::infinity) continue;
      if (!meets_exponential_bound(e, c_star))
        mc.fail("m_" + d.matrix.name(Letter(s)) + d.matrix.name(Letter(t)) + " = " + std::to_string(e) +
                " < 6*2^" + std::to_string(c_star));
    }
  return TameReport{{theta_c, o1, o2, o3, o4, dstar, mc}};
}

/// Adjoins violating short paths to Omega until Omega4 holds.
inline Subgraph saturate_omega4(Decomposition const& d, Subgraph omega) {
  while (auto bad = find_omega4_violation(d, omega)) {
    LabeledGraph const& g = d.theta.graph;
    for (EdgeId e : bad->edges) omega.add_edge(g, e);
  }
  return omega;
}

/// The terms of the estimate bounding |E Omega| by the potential, for a
/// nonempty marking.  Each term is at most the next.
struct TamenessChain {
  long long omega_edges;  // |E Omega|
  long long budget;       // 8 (chi(Delta) - chi(bar Delta) - chi(Omega))
  long long expanded;     // the same through cc and b of Delta\E, its image, and Omega
  long long bounded;      // 8 (cc(Delta\E) + b(image) - 1 + b(Omega) - 1)
  long long in_terms_of_theta;  // 8 cc(Delta) + 16 (b(Theta) - |E| - 1)
  long long potential_bound;    // 16 (c_* - 1) - 8

  std::vector<long long> terms() const {
    return {omega_edges, budget, expanded, bounded, in_terms_of_theta, potential_bound};
  }
  bool holds() const {
    auto t = terms();
    return budget == expanded && std::is_sorted(t.begin(), t.end());
  }
};

inline TamenessChain tameness_chain(Decomposition const& d, Subgraph const& omega) {
  LabeledGraph const& dg = d.delta.graph;
  LabeledGraph const& tg = d.theta.graph;
  Subgraph dl = d.delta.without_loops();
  Subgraph dl_bar = d.delta_minus_loops_bar();
  long long loops = static_cast<long long>(d.delta.loop_edges().size());
  long long cc_dl = static_cast<long long>(components(dg, dl)), b_dl = betti(dg, dl);
  long long cc_img = static_cast<long long>(components(tg, dl_bar)), b_img = betti(tg, dl_bar);
  long long cc_om = static_cast<long long>(components(tg, omega)), b_om = betti(tg, omega);
  TamenessChain c{};
  c.omega_edges = static_cast<long long>(omega.edge_count());
  c.budget = omega3_budget(d, omega);
  c.expanded = 8 * ((cc_dl - b_dl) + (b_img - cc_img) + (b_om - cc_om));
  c.bounded = 8 * (cc_dl + b_img - 1 + b_om - 1);
  c.in_terms_of_theta = 8 * static_cast<long long>(components(dg)) + 16 * (betti(tg) - loops - 1);
  c.potential_bound = 16 * (potential(d) - 1) - 8;
  return c;
}

/// Whether tilde Omega_3 and F are forests.  Requires Omega1-Omega4.
inline bool forest_check(Decomposition const& d, Subgraph const& omega) {
  if (!check_tame(d, omega).omega_ok()) throw PreconditionError("forest_check needs a marking satisfying Omega1-Omega4");
  auto nb = omega_neighborhood(d, omega, 3);
  return betti(d.delta.graph, nb.in_delta) == 0 && betti(d.delta.graph, d.forest) == 0;
}

/// Whether no special path has all its inner edges in tilde Omega_3.
/// Requires Omega1-Omega4.
inline bool o3_coverage_check(Decomposition const& d, Subgraph const& omega) {
  if (!check_tame(d, omega).omega_ok())
    throw PreconditionError("o3_coverage_check needs a marking satisfying Omega1-Omega4");
  auto nb = omega_neighborhood(d, omega, 3);
  for (auto const& sp : d.delta.paths) {
    auto const& es = sp.path.edges;
    if (es.size() < 3) return false;
    bool all = true;
    for (std::size_t i = 1; i + 1 < es.size() && all; ++i) all = nb.in_delta.has_edge(es[i]);
    if (all) return false;
  }
  return true;
}

}  // namespace coxfold
