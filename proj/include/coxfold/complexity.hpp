#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <set>
#include <string>

#include "coxfold/decomposition.hpp"
#include "coxfold/fold.hpp"

namespace coxfold {

/// c_* = b(Theta) + cc(Delta) - |E|.
inline long long potential(Decomposition const& d) {
  return betti(d.theta.graph) + static_cast<long long>(components(d.delta.graph)) -
         static_cast<long long>(d.delta.loop_edges().size());
}

struct ComplexityTuple {
  std::array<long long, 7> c{};  // c[0] = c1, ..., c[6] = c7
  long long c_star = 0;

  long long operator[](std::size_t i) const { return c.at(i - 1); }  // 1-based
  std::array<long long, 5> primary() const { return {c[0], c[1], c[2], c[3], c[4]}; }

  /// Lexicographic on (c1, ..., c7); the potential is not compared.
  friend std::strong_ordering operator<=>(ComplexityTuple const& a, ComplexityTuple const& b) {
    return a.c <=> b.c;
  }
  friend bool operator==(ComplexityTuple const& a, ComplexityTuple const& b) { return a.c == b.c; }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < 7; ++i) out += (i ? ", " : "") + std::to_string(c[i]);
    return out + ")";
  }
};

inline ComplexityTuple complexity(Decomposition const& d, Subgraph const& omega) {
  ComplexityTuple t;
  long long b_theta = betti(d.theta.graph);
  t.c[0] = b_theta - static_cast<long long>(d.delta.paths.size());
  t.c[1] = b_theta + euler(d.delta.graph);

  FoldTrace f = fold(d.theta.graph);
  std::set<EdgeId> delta_f;
  for (EdgeId e : d.delta_bar().edges) delta_f.insert(f.result.representative(f.edge_image(e)));
  long long theta_f_edges = static_cast<long long>(f.result.edge_count());
  t.c[2] = theta_f_edges - static_cast<long long>(delta_f.size());
  t.c[3] = theta_f_edges;
  t.c[4] = static_cast<long long>(d.delta.graph.edge_count());
  t.c[5] = static_cast<long long>(d.theta.graph.edge_count());

  auto nb = omega_neighborhood(d, omega, 3);
  long long c7 = 0;
  for (EdgeId e : nb.in_delta.edges)
    if (e == d.delta.graph.representative(e) && !d.forest.has_edge(e)) ++c7;
  t.c[6] = c7;
  t.c_star = potential(d);
  return t;
}

}  // namespace coxfold
