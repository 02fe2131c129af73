#pragma once

// Contents of every generated data file, keyed by file name.

#include <map>
#include <string>

#include "coxfold/coxfold.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace generated {

using namespace coxfold;

inline std::string fig6_bad_delta6() {
  Json j = decomposition_to_json(fixtures::fig6());
  for (auto& e : j["delta"]["graph"]["edges"])
    if (e["alpha"] == e["omega"] && e["label"] == "t") {
      e["label"] = "u";
      break;
    }
  return dump_json(j);
}

/// Longest word (then lexicographically first) of length <= 12 equal to a
/// generator in the rank-3 group with entries 4.
inline std::string almost_relator_word() {
  CoxeterMatrix m = CoxeterMatrix::uniform({"s", "t", "u"}, 4);
  auto words = oracle::words_equal_to_generator(m, 2, 12);
  Word best;
  for (auto const& w : words)
    if (w.size() > best.size() || (w.size() == best.size() && w < best)) best = w;
  return format_word(best, m) + "\n";
}

inline std::map<std::string, std::string> files() {
  std::map<std::string, std::string> out;
  for (auto const& [name, f] : fixtures::all()) out[name + ".json"] = dump_json(decomposition_to_json(f));
  out["tame_rose_gamma.json"] = dump_json(graph_to_json(fixtures::tame_rose().decomposition.theta));
  out["fig6_theta.json"] = dump_json(graph_to_json(fixtures::fig6().decomposition.theta));
  out["fig6_bad_delta6.json"] = fig6_bad_delta6();

  Alphabet free = Alphabet::free({"a", "b", "c"});
  BasedGraph wedge = wedge_graph({free.parse("a b^-1"), free.parse("c a b"), free.parse("a b^-1 a a")}, free);
  out["fig1_wedge.json"] = dump_json(graph_to_json(wedge));

  LabeledGraph two(Alphabet::free({"a", "b"}));
  for (int i = 0; i < 3; ++i) two.add_vertex();
  two.add_edge(0, 1, Alphabet::free_letter(0, false));
  two.add_edge(0, 2, Alphabet::free_letter(0, false));
  two.add_edge(1, 2, Alphabet::free_letter(1, false));
  out["fig2_graph.json"] = dump_json(graph_to_json(two, VertexId(0)));
  out["fig2_folded.json"] = dump_json(graph_to_json(fold(BasedGraph{two, 0})));

  CoxeterMatrix m3 = CoxeterMatrix::uniform({"s", "t", "u"}, 384);
  out["matrix_384.txt"] = format_matrix_text(m3);
  out["matrix_even.txt"] = format_matrix_text(CoxeterMatrix(
      {"a", "b", "c", "d"}, {{1, 4, 2, 6}, {4, 1, 8, 0}, {2, 8, 1, 4}, {6, 0, 4, 1}}));
  out["matrix_intro.txt"] = format_matrix_text(fixtures::matrix3(3, 2, 2));
  out["matrix_a1.txt"] = format_matrix_text(CoxeterMatrix::uniform({"s", "t", "u"}, 4));
  out["almost_relator_word.txt"] = almost_relator_word();
  return out;
}

}  // namespace generated
