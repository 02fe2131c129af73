#pragma once

// Independent reference implementations used by the tests.  None of them
// call the rewriting engine or the fold code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "coxfold/coxeter_matrix.hpp"
#include "coxfold/labeled_graph.hpp"

namespace oracle {

using coxfold::Letter;
using coxfold::Word;

// ---- dihedral group of order 2m ---------------------------------------------

/// x -> eps x + r on Z/m.  s is x -> -x and t is x -> 1 - x, so st has order m.
struct Affine {
  int eps = 1;
  long r = 0;
  friend bool operator==(Affine const&, Affine const&) = default;
  friend auto operator<=>(Affine const&, Affine const&) = default;
};

class Dihedral {
 public:
  explicit Dihedral(long m) : m_(m) {}

  Affine gen(Letter x) const { return x == 0 ? Affine{-1, 0} : Affine{-1, 1 % m_}; }

  Affine mul(Affine a, Affine b) const { return {a.eps * b.eps, mod(a.eps * b.r + a.r)}; }

  Affine eval(Word const& w) const {
    Affine out;
    for (Letter x : w) out = mul(out, gen(x));
    return out;
  }

  /// Word length of every element, by breadth-first search in the Cayley graph.
  std::map<Affine, std::size_t> lengths() const {
    std::map<Affine, std::size_t> dist{{Affine{}, 0}};
    std::vector<Affine> frontier{Affine{}};
    while (!frontier.empty()) {
      std::vector<Affine> next;
      for (auto g : frontier)
        for (Letter x : {Letter(0), Letter(1)}) {
          Affine h = mul(g, gen(x));
          if (dist.emplace(h, dist[g] + 1).second) next.push_back(h);
        }
      frontier = std::move(next);
    }
    return dist;
  }

  std::size_t order() const { return 2 * std::size_t(m_); }

 private:
  long mod(long x) const { return ((x % m_) + m_) % m_; }
  long m_;
};

// ---- quadratic integers a + b x with x^2 = p x + q --------------------------

struct QuadRing {
  long p, q;
};

struct Quad {
  long a = 0, b = 0;
  friend bool operator==(Quad const&, Quad const&) = default;
  friend auto operator<=>(Quad const&, Quad const&) = default;
};

inline Quad add(Quad x, Quad y) { return {x.a + y.a, x.b + y.b}; }

inline Quad mul(QuadRing const& R, Quad x, Quad y) {
  // (a + b x)(c + d x) = ac + (ad + bc) x + bd (p x + q)
  return {x.a * y.a + x.b * y.b * R.q, x.a * y.b + x.b * y.a + x.b * y.b * R.p};
}

/// The geometric representation of a Coxeter group whose finite entries all
/// share one value m, with 2 cos(pi/m) represented exactly.  Supported m:
/// 2, 3, 4 (x = sqrt 2), 5 (x = golden ratio), 6 (x = sqrt 3), and infinity.
class TitsRepresentation {
 public:
  using Matrix = std::vector<std::vector<Quad>>;

  explicit TitsRepresentation(coxfold::CoxeterMatrix const& m) : n_(m.rank()) {
    std::optional<std::uint32_t> common;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        auto e = m.entry(Letter(i), Letter(j));
        if (e == coxfold::CoxeterMatrix::infinity || e == 2 || e == 3) continue;
        if (common && *common != e) throw std::invalid_argument("mixed irrational entries unsupported");
        common = e;
      }
    ring_ = QuadRing{0, 2};
    Quad irrational{0, 1};
    if (common) {
      switch (*common) {
        case 4: ring_ = {0, 2}; break;
        case 5: ring_ = {1, 1}; break;
        case 6: ring_ = {0, 3}; break;
        default: throw std::invalid_argument("unsupported entry");
      }
    }
    // c[i][j] = 2 cos(pi / m_ij)
    std::vector<std::vector<Quad>> c(n_, std::vector<Quad>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        auto e = m.entry(Letter(i), Letter(j));
        if (e == coxfold::CoxeterMatrix::infinity)
          c[i][j] = {2, 0};
        else if (e == 2)
          c[i][j] = {0, 0};
        else if (e == 3)
          c[i][j] = {1, 0};
        else
          c[i][j] = irrational;
      }
    // sigma_s(e_j) = e_j + c_sj e_s for j != s, sigma_s(e_s) = -e_s.  Column j
    // holds the image of e_j.
    for (std::size_t s = 0; s < n_; ++s) {
      Matrix g = identity();
      g[s][s] = {-1, 0};
      for (std::size_t j = 0; j < n_; ++j)
        if (j != s) g[s][j] = c[s][j];
      gens_.push_back(g);
    }
  }

  Matrix identity() const {
    Matrix id(n_, std::vector<Quad>(n_));
    for (std::size_t i = 0; i < n_; ++i) id[i][i] = {1, 0};
    return id;
  }

  Matrix mul(Matrix const& a, Matrix const& b) const {
    Matrix out(n_, std::vector<Quad>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        if (a[i][k] == Quad{}) continue;
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = add(out[i][j], oracle::mul(ring_, a[i][k], b[k][j]));
      }
    return out;
  }

  Matrix const& gen(Letter s) const { return gens_.at(s); }

  Matrix eval(Word const& w) const {
    Matrix out = identity();
    for (Letter x : w) out = mul(out, gen(x));
    return out;
  }

  std::size_t rank() const { return n_; }

 private:
  std::size_t n_;
  QuadRing ring_{0, 2};
  std::vector<Matrix> gens_;
};

/// Every word without a repeated adjacent letter, of length lo..hi, that
/// equals a generator in the group, found by walking the Cayley graph of the
/// faithful representation.
inline std::vector<Word> words_equal_to_generator(coxfold::CoxeterMatrix const& m, std::size_t lo, std::size_t hi) {
  TitsRepresentation rep(m);
  std::vector<TitsRepresentation::Matrix> targets;
  for (std::size_t s = 0; s < m.rank(); ++s) targets.push_back(rep.gen(Letter(s)));
  std::vector<Word> out;
  struct Node {
    Word w;
    TitsRepresentation::Matrix g;
  };
  std::vector<Node> layer{{Word{}, rep.identity()}};
  for (std::size_t len = 1; len <= hi; ++len) {
    std::vector<Node> next;
    for (auto const& nd : layer)
      for (std::size_t s = 0; s < m.rank(); ++s) {
        if (!nd.w.empty() && nd.w.back() == Letter(s)) continue;
        Node child{nd.w, rep.mul(nd.g, rep.gen(Letter(s)))};
        child.w.push_back(Letter(s));
        if (len >= lo && std::find(targets.begin(), targets.end(), child.g) != targets.end()) out.push_back(child.w);
        next.push_back(std::move(child));
      }
    layer = std::move(next);
  }
  return out;
}

// ---- graphs -------------------------------------------------------------------

/// Random graph with `vertices` vertices and `edges` geometric edges whose
/// labels are drawn from the first `labels` letters.  Edge ids are shuffled.
inline coxfold::LabeledGraph random_graph(std::mt19937_64& rng, coxfold::Alphabet alphabet, std::size_t vertices,
                                          std::size_t edges, std::size_t labels, bool connected) {
  coxfold::LabeledGraph g(std::move(alphabet));
  for (std::size_t i = 0; i < vertices; ++i) g.add_vertex();
  std::vector<coxfold::EdgeId> ids(2 * edges);
  std::iota(ids.begin(), ids.end(), 0u);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::uniform_int_distribution<std::size_t> pick_v(0, vertices - 1), pick_l(0, labels - 1);
  for (std::size_t k = 0; k < edges; ++k) {
    coxfold::VertexId a, b;
    if (connected && k + 1 < vertices) {
      a = coxfold::VertexId(k + 1);
      b = coxfold::VertexId(std::uniform_int_distribution<std::size_t>(0, k)(rng));
    } else {
      a = coxfold::VertexId(pick_v(rng));
      b = coxfold::VertexId(pick_v(rng));
    }
    g.add_edge_pair(ids[2 * k], ids[2 * k + 1], a, b, Letter(pick_l(rng)));
  }
  return g;
}

/// Folded quotient computed by repeated union-find merging: two vertices are
/// merged whenever some vertex has two edges with the same label into them.
/// Returns the class of every vertex and the set of labeled transitions.
struct FoldedQuotient {
  std::map<coxfold::VertexId, coxfold::VertexId> cls;
  std::set<std::tuple<coxfold::VertexId, Letter, coxfold::VertexId>> arrows;
  std::size_t vertex_count() const {
    std::set<coxfold::VertexId> vs;
    for (auto const& [v, c] : cls) vs.insert(c);
    return vs.size();
  }
};

inline FoldedQuotient folded_quotient(coxfold::LabeledGraph const& g) {
  std::map<coxfold::VertexId, coxfold::VertexId> parent;
  for (auto v : g.vertices()) parent[v] = v;
  auto find = [&](coxfold::VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<coxfold::VertexId, Letter>, coxfold::VertexId> target;
    for (auto const& [e, rec] : g.edges()) {
      auto key = std::make_pair(find(rec.source), rec.label);
      auto t = find(rec.target);
      auto [it, fresh] = target.emplace(key, t);
      if (!fresh && find(it->second) != t) {
        parent[std::max(find(it->second), t)] = std::min(find(it->second), t);
        changed = true;
      }
    }
  }
  FoldedQuotient q;
  for (auto v : g.vertices()) q.cls[v] = find(v);
  for (auto const& [e, rec] : g.edges()) q.arrows.insert({find(rec.source), rec.label, find(rec.target)});
  return q;
}

/// Betti number by counting: |E| - |V| + number of components, with
/// components found by depth-first search.
inline long betti_by_search(coxfold::LabeledGraph const& g) {
  std::set<coxfold::VertexId> seen;
  long comps = 0;
  for (auto v : g.vertices()) {
    if (seen.count(v)) continue;
    ++comps;
    std::vector<coxfold::VertexId> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto e : g.out_edges(x)) {
        auto y = g.target(e);
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
  }
  return long(g.edge_count()) - long(g.vertex_count()) + comps;
}

}  // namespace oracle
