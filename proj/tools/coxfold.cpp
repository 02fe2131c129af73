#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxfold/coxfold.hpp"

using namespace coxfold;

namespace {

// Exit codes shared by every command.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kIndeterminate = 2;
constexpr int kInvariantBreach = 3;

struct Globals {
  bool json = false;
  std::size_t budget = kDefaultBudget;
};

void emit(Globals const& g, Json const& j, std::string const& text) {
  if (g.json)
    std::cout << dump_json(j);
  else
    std::cout << text;
}

Json budget_json(std::size_t explored, std::size_t budget, bool exhausted) {
  return Json{{"explored", explored}, {"limit", budget}, {"exhausted", exhausted}};
}

std::string budget_line(std::size_t explored, std::size_t budget, bool exhausted) {
  std::ostringstream out;
  out << "budget: " << explored << " of " << budget << " words explored"
      << (exhausted ? " (exhausted, answer indeterminate)" : "") << "\n";
  return out.str();
}

// ---- word ------------------------------------------------------------------

struct WordArgs {
  std::string matrix;
  std::string action;
  std::string word;
  std::string word2;
};

int cmd_word(Globals const& g, WordArgs const& a) {
  CoxeterMatrix m = load_matrix(a.matrix);
  Word w = parse_word(a.word, m);
  Json j{{"action", a.action}, {"word", format_word(w, m)}};
  std::ostringstream text;

  if (a.action == "kappa") {
    std::size_t k = kappa(w);
    j["kappa"] = k;
    text << "kappa = " << k << "\n";
    emit(g, j, text.str());
    return kOk;
  }
  if (a.action == "scan-relator") {
    auto r = find_almost_relator(w, m);
    if (r) {
      std::size_t len = r->end - r->begin;
      j["found"] = true;
      j["begin"] = r->begin;
      j["end"] = r->end;
      j["type"] = {m.name(r->s), m.name(r->t)};
      j["length"] = len;
      j["m"] = m.entry(r->s, r->t);
      text << "almost relator of type {" << m.name(r->s) << "," << m.name(r->t) << "} at [" << r->begin << ", "
           << r->end << "), length " << len << " >= 2*" << m.entry(r->s, r->t) << "-3\n";
    } else {
      j["found"] = false;
      text << "no almost relator\n";
    }
    emit(g, j, text.str());
    return kOk;
  }

  Word target = w;
  if (a.action == "equal") {
    if (a.word2.empty()) throw InvalidArguments("equal needs a second word");
    Word w2 = parse_word(a.word2, m);
    j["word2"] = format_word(w2, m);
    target = concat(w, inverse(w2));
  } else if (a.action != "reduce" && a.action != "is-identity") {
    throw InvalidArguments("unknown action '" + a.action + "'");
  }
  auto out = reduce_with_stats(target, m, g.budget);
  bool exhausted = !out.word.has_value();
  j["budget"] = budget_json(out.words_explored, g.budget, exhausted);
  if (exhausted) {
    j["result"] = nullptr;
    text << "indeterminate\n";
  } else if (a.action == "reduce") {
    j["result"] = format_word(*out.word, m);
    j["length"] = out.word->size();
    text << (out.word->empty() ? std::string("1") : format_word(*out.word, m)) << "\n";
  } else {
    bool r = out.word->empty();
    j["result"] = r;
    text << (r ? "true" : "false") << "\n";
  }
  text << budget_line(out.words_explored, g.budget, exhausted);
  emit(g, j, text.str());
  return exhausted ? kIndeterminate : kOk;
}

// ---- fold ------------------------------------------------------------------

struct FoldArgs {
  std::string graph;
  std::string out;
  std::string dot;
  bool trace = false;
};

int cmd_fold(Globals const& g, FoldArgs const& a) {
  BasedGraph bg = load_graph(a.graph);
  LabeledGraph cur = bg.graph;
  VertexId base = bg.basepoint;
  Json steps = Json::array();
  std::ostringstream trace;
  std::size_t n = 0;
  for (;;) {
    auto sites = fold_sites(cur);
    if (sites.empty()) break;
    auto [e1, e2] = sites.front();
    VertexId v = cur.source(e1);
    std::string label = cur.alphabet().letter_name(cur.label(e1));
    auto t = fold_once(cur, e1, e2);
    base = t.image(base);
    ++n;
    steps.push_back(Json{{"step", n}, {"vertex", v}, {"label", label}, {"edges", {e1, e2}},
                         {"kept", t.edge_image(e2)}, {"vertices", t.result.vertex_count()},
                         {"edges_after", t.result.edge_count()}, {"betti", betti(t.result)}});
    trace << "step " << n << ": fold edges " << e1 << " and " << e2 << " at vertex " << v << " (label " << label
          << "), kept " << t.edge_image(e2) << "; " << t.result.vertex_count() << " vertices, "
          << t.result.edge_count() << " edges, b = " << betti(t.result) << "\n";
    cur = std::move(t.result);
  }
  BasedGraph folded{std::move(cur), base};
  std::string out_json = dump_json(graph_to_json(folded));
  if (!a.out.empty()) write_file(a.out, out_json);
  if (!a.dot.empty()) write_file(a.dot, graph_to_dot(folded));

  Json j{{"folds", n},
         {"vertices", folded.graph.vertex_count()},
         {"edges", folded.graph.edge_count()},
         {"betti", betti(folded.graph)},
         {"basepoint", folded.basepoint}};
  if (a.trace) j["trace"] = steps;
  if (a.out.empty()) j["graph"] = graph_to_json(folded);
  std::ostringstream text;
  if (a.trace) text << trace.str();
  text << n << " folds; " << folded.graph.vertex_count() << " vertices, " << folded.graph.edge_count()
       << " edges, b = " << betti(folded.graph) << "\n";
  if (a.out.empty()) text << out_json;
  emit(g, j, text.str());
  return kOk;
}

// ---- bounds ----------------------------------------------------------------

int cmd_bounds(Globals const& g, std::string const& matrix) {
  CoxeterMatrix m = load_matrix(matrix);
  std::size_t n = m.rank();
  std::size_t mod2 = mod2_rank_bound(m);
  auto pt = petersen_thom_bound(m);
  auto threshold = rank_threshold(n);
  bool applies = rank_threshold_applies(m);
  Json j{{"n", n},
         {"mod2_rank_bound", mod2},
         {"petersen_thom_bound", pt ? Json(*pt) : Json(nullptr)},
         {"threshold", threshold},
         {"rank_equals_n", applies}};
  if (applies) j["rank"] = n;
  std::ostringstream text;
  text << "n = " << n << "\n";
  text << "mod-2 rank bound: " << mod2 << "\n";
  text << "Petersen-Thom bound: " << (pt ? std::to_string(*pt) : std::string("n/a")) << "\n";
  text << "threshold 6*2^n = " << threshold << "\n";
  text << "rank bound applies: " << (applies ? "yes; rank = " + std::to_string(n) : std::string("no")) << "\n";
  emit(g, j, text.str());
  return kOk;
}

// ---- check-decomposition ---------------------------------------------------

struct CheckArgs {
  std::string decomposition;
  std::string dot;
};

int cmd_check_decomposition(Globals const& g, CheckArgs const& a) {
  DecompositionFile f = load_decomposition(a.decomposition);
  Decomposition const& d = f.decomposition;
  Subgraph omega = f.marking();
  if (!a.dot.empty()) write_file(a.dot, decomposition_to_dot(d));

  ConditionReport valid = validate_special(d.delta, d.matrix);
  TameReport tame = check_tame(d, omega, f.witnesses, g.budget);
  ComplexityTuple c = complexity(d, omega);

  Json conds = Json::array();
  std::ostringstream text;
  text << "condition      status\n";
  for (auto const& r : valid.conditions) {
    conds.push_back(Json{{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"details", r.details},
                         {"notes", r.notes}});
    text << r.name << std::string(15 - std::min<std::size_t>(14, r.name.size()), ' ') << (r.pass ? "pass" : "FAIL")
         << "\n";
    for (auto const& s : r.details) text << "    " << s << "\n";
    for (auto const& s : r.notes) text << "    note: " << s << "\n";
  }
  bool undecided = false;
  for (auto const& r : tame.conditions) {
    conds.push_back(Json{{"name", r.name}, {"status", to_string(r.status)}, {"details", r.details}});
    text << r.name << std::string(15 - std::min<std::size_t>(14, r.name.size()), ' ')
         << (r.status == Status::fail ? "FAIL" : to_string(r.status)) << "\n";
    for (auto const& s : r.details) {
      text << "    " << s << "\n";
      if (s.find("undecided") != std::string::npos) undecided = true;
    }
  }
  Json cj = Json::array();
  for (auto v : c.c) cj.push_back(v);
  Json j{{"conditions", conds},
         {"valid", valid.ok()},
         {"tame", tame.tame()},
         {"complexity", cj},
         {"c_star", c.c_star}};
  text << "special graph: " << (valid.ok() ? "valid" : "INVALID") << "\n";
  text << "tame: " << (tame.tame() ? "yes" : "no") << "\n";
  text << "complexity (c1..c7) = " << c.to_string() << "\n";
  text << "c_star = " << c.c_star << "\n";
  emit(g, j, text.str());
  if (!valid.ok()) {
    for (auto const& r : valid.conditions)
      if (!r.pass) std::cerr << "invariant violated: " << r.name << "\n";
    return kInvariantBreach;
  }
  return undecided ? kIndeterminate : kOk;
}

// ---- non-example -----------------------------------------------------------

struct NonExampleArgs {
  std::size_t q = 7;
  bool large = false;
  bool verify = false;
  std::string out_dir;
};

char const* step_op(StepKind k) {
  switch (k) {
    case StepKind::input: return "input";
    case StepKind::conjugate: return "conjugate";
    case StepKind::multiply: return "multiply";
  }
  return "?";
}

int cmd_non_example(Globals const& g, NonExampleArgs a) {
  std::size_t budget = g.budget;
  std::size_t flat_cap = 20'000;
  if (a.large) {
    a.q = 101;
    budget = std::max<std::size_t>(budget, 20'000'000);
    flat_cap = 1'000;
  }
  ExampleFamily f = example_family(a.q);
  CoxeterMatrix const& m = f.matrix;
  std::size_t k = (a.q - 1) / 2;
  Derivation d = derive_witnesses(f, budget);

  std::ostringstream text;
  text << "family: n = 5, q = " << a.q << ", exponent (q-1)/2 = " << k << "\n";
  text << format_matrix_text(m);
  Json xs = Json::array();
  for (std::size_t i = 0; i < f.generators_x.size(); ++i) {
    xs.push_back(format_word(f.generators_x[i], m));
    text << "x" << i + 1 << " = " << format_word(f.generators_x[i], m) << "\n";
  }

  Json steps = Json::array();
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    auto const& st = d.steps[i];
    Json sj{{"id", i}, {"op", step_op(st.kind)}};
    if (st.kind == StepKind::input) sj["x"] = st.a + 1;
    if (st.kind == StepKind::conjugate) {
      sj["of"] = st.a;
      sj["by"] = st.b;
    }
    if (st.kind == StepKind::multiply) {
      sj["base"] = st.a;
      sj["pair"] = {st.b, st.c};
      sj["times"] = st.times;
    }
    sj["value"] = format_word(st.value, m);
    steps.push_back(sj);
  }

  text << "witnesses found: " << d.generator_step.size() << " of " << m.rank() << " (" << d.steps.size()
       << " program steps)\n";
  Json wit = Json::object();
  std::vector<std::pair<Letter, std::vector<Syllable>>> flat;
  for (auto const& [s, i] : d.generator_step) {
    auto e = expand_step(d, i, flat_cap);
    Json wj{{"step", i}};
    if (e) {
      wj["syllables"] = e->size();
      wj["expression"] = format_expression(*e);
      flat.emplace_back(s, *e);
      text << "  " << m.name(s) << ": step " << i << ", " << e->size() << " syllables over X\n";
    } else {
      wj["expression"] = nullptr;
      text << "  " << m.name(s) << ": step " << i << ", expansion longer than " << flat_cap << " syllables\n";
    }
    wit[m.name(s)] = wj;
  }

  Json j{{"q", a.q},
         {"n", 5},
         {"matrix", matrix_to_json(m)},
         {"X", xs},
         {"steps", steps},
         {"witnesses", wit},
         {"complete", d.complete}};

  int rc = kOk;
  if (!d.complete) {
    text << "search did not find every generator\n";
    rc = d.indeterminate ? kIndeterminate : kInvariantBreach;
  }
  if (a.verify && d.complete) {
    auto v = verify_derivation(d, f, budget);
    bool flat_ok = true, flat_undecided = false;
    for (auto const& [s, e] : flat) {
      auto eq = equal_in_group(evaluate(f, e), Word{s}, m, budget);
      if (!eq)
        flat_undecided = true;
      else if (!*eq)
        flat_ok = false;
    }
    j["verified"] = v ? Json(*v && flat_ok) : Json(nullptr);
    if (!v || flat_undecided) {
      text << "verification indeterminate within budget " << budget << "\n";
      rc = kIndeterminate;
    } else if (!*v || !flat_ok) {
      text << "verification FAILED\n";
      rc = kInvariantBreach;
    } else {
      text << "every program step certified; " << flat.size() << " expanded witnesses certified\n";
      text << "rank(W(M)) <= 4 certified\n";
    }
  }

  std::size_t bound = std::size_t{1} << (5 - 2);
  std::size_t smallest = std::min<std::size_t>(8, a.q);
  bool meets = smallest >= bound;
  j["contrast"] = Json{{"bound", bound}, {"m_12", 8}, {"m_2j", a.q}, {"meets_bound_shape", meets}};
  text << "contrast: m_12 = 8 = 2^(n-2), m_2j = " << a.q << (a.q >= bound ? " >= " : " < ") << bound
       << "; every finite off-diagonal entry " << (meets ? "meets" : "does not meet")
       << " m_st >= 2^(n-2), while the rank is at most 4 < n = 5\n";

  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    std::string dir = a.out_dir + "/";
    std::string tag = "q" + std::to_string(a.q);
    write_file(dir + "matrix_" + tag + ".txt", format_matrix_text(m));
    std::string xtext;
    for (auto const& x : f.generators_x) xtext += format_word(x, m) + "\n";
    write_file(dir + "X_" + tag + ".txt", xtext);
    write_file(dir + "witnesses_" + tag + ".json", dump_json(j));
    text << "wrote " << dir << "{matrix,X,witnesses}_" << tag << "\n";
  }
  emit(g, j, text.str());
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter groups, Stallings folds and special-graph decompositions"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_option("--budget", g.budget, "Word-problem budget (words explored)")->check(CLI::PositiveNumber);

  WordArgs wa;
  auto* word = app.add_subcommand("word", "Word-problem queries");
  word->fallthrough();
  word->add_option("--matrix", wa.matrix, "Coxeter matrix file")->required();
  word->add_option("action", wa.action, "reduce | is-identity | equal | scan-relator | kappa")
      ->required()
      ->check(CLI::IsMember({"reduce", "is-identity", "equal", "scan-relator", "kappa"}));
  word->add_option("word", wa.word, "Word, e.g. \"s t s\"")->required();
  word->add_option("word2", wa.word2, "Second word for equal");

  FoldArgs fa;
  auto* fold = app.add_subcommand("fold", "Fold a labeled graph");
  fold->fallthrough();
  fold->add_option("--graph", fa.graph, "Graph file")->required();
  fold->add_option("--out", fa.out, "Write the folded graph here instead of stdout");
  fold->add_option("--emit-dot", fa.dot, "Write Graphviz output");
  fold->add_flag("--trace", fa.trace, "Print every fold step");

  std::string bounds_matrix;
  auto* bounds = app.add_subcommand("bounds", "Rank bounds for a Coxeter matrix");
  bounds->fallthrough();
  bounds->add_option("--matrix", bounds_matrix, "Coxeter matrix file")->required();

  CheckArgs ca;
  auto* check = app.add_subcommand("check-decomposition", "Validate a decomposition");
  check->fallthrough();
  check->add_option("--decomposition", ca.decomposition, "Decomposition file")->required();
  check->add_option("--emit-dot", ca.dot, "Write Graphviz output");

  NonExampleArgs na;
  auto* non = app.add_subcommand("non-example", "Rank-5 family generated by four elements");
  non->fallthrough();
  non->add_option("--q", na.q, "Odd integer >= 3");
  non->add_flag("--large", na.large, "Use q = 101 with an enlarged budget");
  non->add_flag("--verify", na.verify, "Certify every witness");
  non->add_option("--out-dir", na.out_dir, "Write matrix, X and witness files here");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*word) return cmd_word(g, wa);
    if (*fold) return cmd_fold(g, fa);
    if (*bounds) return cmd_bounds(g, bounds_matrix);
    if (*check) return cmd_check_decomposition(g, ca);
    if (*non) return cmd_non_example(g, na);
  } catch (InvalidAttachment const& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariantBreach;
  } catch (InvalidState const& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariantBreach;
  } catch (Indeterminate const& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return kIndeterminate;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
