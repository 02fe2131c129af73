#pragma once

// S-labeled graphs.  Edges come in pairs (e, e^-1) related by a fixed-point
// free involution with alpha(e) = omega(e^-1).  In the involutive alphabet
// (Coxeter generators) l(e^-1) = l(e); in the free alphabet letters are
// encoded as 2g (generator g) and 2g+1 (its inverse), so l(e^-1) = l(e) ^ 1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxfold/coxeter_matrix.hpp"
#include "coxfold/errors.hpp"

namespace coxfold {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class AlphabetMode { involutive, free };

class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(AlphabetMode mode, std::vector<std::string> generators)
      : mode_(mode), generators_(std::move(generators)) {}

  static Alphabet involutive(std::vector<std::string> generators) {
    return {AlphabetMode::involutive, std::move(generators)};
  }
  static Alphabet free(std::vector<std::string> generators) {
    return {AlphabetMode::free, std::move(generators)};
  }
  static Alphabet of(CoxeterMatrix const& m) { return involutive(m.generators()); }

  AlphabetMode mode() const { return mode_; }
  std::vector<std::string> const& generators() const { return generators_; }

  Letter inverse(Letter x) const { return mode_ == AlphabetMode::involutive ? x : Letter(x ^ 1); }

  static Letter free_letter(std::size_t generator, bool inverted) {
    return Letter(2 * generator + (inverted ? 1 : 0));
  }

  std::size_t letter_count() const {
    return mode_ == AlphabetMode::involutive ? generators_.size() : 2 * generators_.size();
  }

  std::string letter_name(Letter x) const {
    if (mode_ == AlphabetMode::involutive) {
      if (x < generators_.size()) return generators_[x];
      return std::to_string(x);
    }
    std::size_t g = x / 2;
    std::string base = g < generators_.size() ? generators_[g] : std::to_string(g);
    return (x & 1) ? base + "^-1" : base;
  }

  std::vector<std::string> letter_names() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < letter_count(); ++i) out.push_back(letter_name(Letter(i)));
    return out;
  }

  Letter parse_letter(std::string_view token) const {
    auto names = letter_names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == token) return Letter(i);
    throw ParseError("unknown letter '" + std::string(token) + "'");
  }

  Word parse(std::string_view text) const { return parse_word(text, letter_names()); }
  std::string format(Word const& w) const { return format_word(w, letter_names()); }

  Word inverse(Word const& w) const {
    Word out(w.rbegin(), w.rend());
    for (auto& x : out) x = inverse(x);
    return out;
  }

  /// Free reduction with respect to this alphabet's inversion.
  Word free_reduce(Word const& w) const {
    Word out;
    for (Letter x : w) {
      if (!out.empty() && out.back() == inverse(x))
        out.pop_back();
      else
        out.push_back(x);
    }
    return out;
  }

  friend bool operator==(Alphabet const&, Alphabet const&) = default;

 private:
  AlphabetMode mode_ = AlphabetMode::involutive;
  std::vector<std::string> generators_;
};

struct Edge {
  EdgeId inverse;
  VertexId source;
  VertexId target;
  Letter label;
  friend bool operator==(Edge const&, Edge const&) = default;
};

class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  Alphabet const& alphabet() const { return alphabet_; }
  AlphabetMode mode() const { return alphabet_.mode(); }

  VertexId add_vertex() {
    VertexId v = next_vertex_;
    add_vertex(v);
    return v;
  }

  void add_vertex(VertexId v) {
    if (!vertices_.insert(v).second) throw InvalidArguments("vertex already exists");
    out_[v];
    next_vertex_ = std::max(next_vertex_, v + 1);
  }

  /// Adds e: from -> to with label, plus e^-1.  Returns e; e^-1 has id e + 1.
  EdgeId add_edge(VertexId from, VertexId to, Letter label) {
    EdgeId e = next_edge_;
    add_edge_pair(e, e + 1, from, to, label);
    return e;
  }

  void add_edge_pair(EdgeId e, EdgeId inv, VertexId from, VertexId to, Letter label) {
    if (e == inv) throw InvalidArguments("an edge cannot be its own inverse");
    if (edges_.count(e) || edges_.count(inv)) throw InvalidArguments("edge id already in use");
    if (!has_vertex(from) || !has_vertex(to)) throw InvalidArguments("edge endpoint missing");
    edges_[e] = Edge{inv, from, to, label};
    edges_[inv] = Edge{e, to, from, alphabet_.inverse(label)};
    out_[from].insert(e);
    out_[to].insert(inv);
    next_edge_ = std::max(next_edge_, std::max(e, inv) + 1);
  }

  /// Removes e and its inverse.
  void remove_edge(EdgeId e) {
    auto const& rec = edge(e);
    EdgeId inv = rec.inverse;
    out_[rec.source].erase(e);
    out_[rec.target].erase(inv);
    edges_.erase(inv);
    edges_.erase(e);
  }

  void remove_vertex(VertexId v) {
    if (!out_edges(v).empty()) throw InvalidArguments("vertex still has incident edges");
    vertices_.erase(v);
    out_.erase(v);
  }

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }

  Edge const& edge(EdgeId e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw InvalidArguments("no edge with id " + std::to_string(e));
    return it->second;
  }
  EdgeId inverse(EdgeId e) const { return edge(e).inverse; }
  VertexId source(EdgeId e) const { return edge(e).source; }
  VertexId target(EdgeId e) const { return edge(e).target; }
  Letter label(EdgeId e) const { return edge(e).label; }
  bool is_loop(EdgeId e) const { return source(e) == target(e); }

  /// The smaller id of {e, e^-1}; names the geometric edge.
  EdgeId representative(EdgeId e) const { return std::min(e, inverse(e)); }

  std::set<VertexId> const& vertices() const { return vertices_; }
  std::map<EdgeId, Edge> const& edges() const { return edges_; }

  std::vector<EdgeId> geometric_edges() const {
    std::vector<EdgeId> out;
    for (auto const& [id, rec] : edges_)
      if (id < rec.inverse) out.push_back(id);
    return out;
  }

  /// Oriented edges e with alpha(e) = v.  A loop contributes e and e^-1.
  std::set<EdgeId> const& out_edges(VertexId v) const {
    auto it = out_.find(v);
    if (it == out_.end()) throw InvalidArguments("no vertex with id " + std::to_string(v));
    return it->second;
  }

  std::size_t valence(VertexId v) const { return out_edges(v).size(); }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size() / 2; }
  bool empty() const { return vertices_.empty(); }

  VertexId next_vertex_id() const { return next_vertex_; }
  EdgeId next_edge_id() const { return next_edge_; }

  friend bool operator==(LabeledGraph const& a, LabeledGraph const& b) {
    return a.alphabet_ == b.alphabet_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  Alphabet alphabet_;
  std::set<VertexId> vertices_;
  std::map<EdgeId, Edge> edges_;
  std::map<VertexId, std::set<EdgeId>> out_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

struct BasedGraph {
  LabeledGraph graph;
  VertexId basepoint = 0;
};

/// Edge path e_1, ..., e_k.  `start` fixes alpha of the empty path.
struct GraphPath {
  VertexId start = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(GraphPath const&, GraphPath const&) = default;
};

inline bool is_well_formed(LabeledGraph const& g, GraphPath const& p) {
  if (!g.has_vertex(p.start)) return false;
  VertexId at = p.start;
  for (EdgeId e : p.edges) {
    if (!g.has_edge(e) || g.source(e) != at) return false;
    at = g.target(e);
  }
  return true;
}

inline VertexId path_end(LabeledGraph const& g, GraphPath const& p) {
  return p.edges.empty() ? p.start : g.target(p.edges.back());
}

inline bool is_closed(LabeledGraph const& g, GraphPath const& p) {
  return path_end(g, p) == p.start;
}

/// No backtracking: e_{i+1} != e_i^-1.
inline bool is_reduced(LabeledGraph const& g, GraphPath const& p) {
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i)
    if (p.edges[i + 1] == g.inverse(p.edges[i])) return false;
  return true;
}

inline Word path_label(LabeledGraph const& g, GraphPath const& p) {
  Word w;
  w.reserve(p.edges.size());
  for (EdgeId e : p.edges) w.push_back(g.label(e));
  return w;
}

inline GraphPath path_inverse(LabeledGraph const& g, GraphPath const& p) {
  GraphPath out{path_end(g, p), {}};
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) out.edges.push_back(g.inverse(*it));
  return out;
}

inline GraphPath path_concat(GraphPath a, GraphPath const& b) {
  a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
  return a;
}

/// A subgraph given by id sets into a parent graph.  `edges` holds both
/// orientations of every geometric edge it contains.
struct Subgraph {
  std::set<VertexId> vertices;
  std::set<EdgeId> edges;

  bool has_vertex(VertexId v) const { return vertices.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges.count(e) != 0; }
  bool empty() const { return vertices.empty() && edges.empty(); }
  std::size_t edge_count() const { return edges.size() / 2; }

  /// Adds e, e^-1 and both endpoints.
  void add_edge(LabeledGraph const& g, EdgeId e) {
    edges.insert(e);
    edges.insert(g.inverse(e));
    vertices.insert(g.source(e));
    vertices.insert(g.target(e));
  }

  static Subgraph whole(LabeledGraph const& g) {
    Subgraph s;
    s.vertices = g.vertices();
    for (auto const& [id, rec] : g.edges()) s.edges.insert(id);
    return s;
  }

  friend bool operator==(Subgraph const&, Subgraph const&) = default;
};

/// Connected components of a subgraph; every vertex lies in one.
inline std::map<VertexId, std::size_t> component_labels(LabeledGraph const& g, Subgraph const& s) {
  std::map<VertexId, VertexId> parent;
  for (VertexId v : s.vertices) parent[v] = v;
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : s.edges) {
    auto a = find(g.source(e)), b = find(g.target(e));
    if (a != b) parent[a] = b;
  }
  std::map<VertexId, std::size_t> root_index;
  std::map<VertexId, std::size_t> out;
  for (VertexId v : s.vertices) {
    auto r = find(v);
    auto [it, inserted] = root_index.emplace(r, root_index.size());
    out[v] = it->second;
  }
  return out;
}

inline std::size_t components(LabeledGraph const& g, Subgraph const& s) {
  std::set<std::size_t> ids;
  for (auto const& [v, c] : component_labels(g, s)) ids.insert(c);
  return ids.size();
}

/// chi = |V| - |E| with E counted geometrically.
inline long long euler(Subgraph const& s) {
  return static_cast<long long>(s.vertices.size()) - static_cast<long long>(s.edge_count());
}

inline long long betti(LabeledGraph const& g, Subgraph const& s) {
  return static_cast<long long>(components(g, s)) - euler(s);
}

inline std::size_t components(LabeledGraph const& g) { return components(g, Subgraph::whole(g)); }

inline long long euler(LabeledGraph const& g) {
  return static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count());
}

inline long long betti(LabeledGraph const& g) {
  return static_cast<long long>(components(g)) - euler(g);
}

inline bool is_connected(LabeledGraph const& g) { return components(g) == 1; }

}  // namespace coxfold
