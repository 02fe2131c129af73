#pragma once

// The rank-5 family with m_12 = 8, m_2j = q (j >= 3) and all other entries
// infinite, generated by the four elements
//   x1 = s2, x2 = (s1s2)^3 s1 (s3s2)^k, x3 = s1s2s1 (s4s2)^k, x4 = s1 (s5s2)^k
// with k = (q-1)/2.  Generation is certified by a straight-line program
// whose every step is checked with the word-problem engine.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "coxfold/coxeter_matrix.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/tits.hpp"
#include "coxfold/words.hpp"

namespace coxfold {

struct ExampleFamily {
  std::size_t q = 0;
  CoxeterMatrix matrix;
  std::vector<Word> generators_x;  // x1..x4
};

inline ExampleFamily example_family(std::size_t q) {
  if (q < 3 || q % 2 == 0) throw InvalidArguments("q must be an odd integer >= 3");
  if (q > 1'000'000) throw InvalidArguments("q is too large");
  using E = CoxeterMatrix::Entry;
  E inf = CoxeterMatrix::infinity;
  std::vector<std::vector<E>> m(5, std::vector<E>(5, inf));
  for (std::size_t i = 0; i < 5; ++i) m[i][i] = 1;
  m[0][1] = m[1][0] = 8;
  for (std::size_t j = 2; j < 5; ++j) m[1][j] = m[j][1] = E(q);
  ExampleFamily f{q, CoxeterMatrix({"s1", "s2", "s3", "s4", "s5"}, m), {}};
  std::size_t k = (q - 1) / 2;
  auto tail = [&](Letter j) {
    Word w;
    for (std::size_t i = 0; i < k; ++i) {
      w.push_back(j);
      w.push_back(1);
    }
    return w;
  };
  f.generators_x.push_back(Word{1});
  f.generators_x.push_back(concat(alternating_word(0, 1, 7), tail(2)));
  f.generators_x.push_back(concat(Word{0, 1, 0}, tail(3)));
  f.generators_x.push_back(concat(Word{0}, tail(4)));
  return f;
}

enum class StepKind { input, conjugate, multiply };

/// One line of the program.  input: x_{a+1}.  conjugate: b^-1 a b.
/// multiply: a (b c)^times.  Operands are earlier step indices.
struct Step {
  StepKind kind = StepKind::input;
  std::size_t a = 0, b = 0, c = 0;
  std::size_t times = 0;
  Word value;  // reduced word over S
};

struct Derivation {
  std::vector<Step> steps;
  std::map<Letter, std::size_t> generator_step;  // generator -> step whose value is that letter
  bool complete = false;
  bool indeterminate = false;
};

/// The word a step denotes, built from the values of its operands.
inline Word step_word(Derivation const& d, ExampleFamily const& f, Step const& st) {
  switch (st.kind) {
    case StepKind::input: return f.generators_x.at(st.a);
    case StepKind::conjugate: {
      Word const& y = d.steps.at(st.b).value;
      return concat(concat(inverse(y), d.steps.at(st.a).value), y);
    }
    case StepKind::multiply: {
      Word w = d.steps.at(st.a).value;
      Word pair = concat(d.steps.at(st.b).value, d.steps.at(st.c).value);
      for (std::size_t i = 0; i < st.times; ++i) w = concat(w, pair);
      return w;
    }
  }
  return {};
}

/// Bounded search.  Each round tries every conjugate b^-1 a b of program
/// elements, keeping those equal to a new generator, and every product
/// a (s t)^j with s, t known generators and j <= (q-1)/2, keeping the
/// shortest when it is shorter than a.  Stops when all generators are found.
inline Derivation derive_witnesses(ExampleFamily const& f, std::size_t budget = kDefaultBudget,
                                   std::size_t max_rounds = 12) {
  Derivation d;
  CoxeterMatrix const& m = f.matrix;
  std::set<Word> values;
  auto add = [&](Step st) -> bool {
    if (!values.insert(st.value).second) return false;
    if (st.value.size() == 1 && !d.generator_step.count(st.value[0]))
      d.generator_step[st.value[0]] = d.steps.size();
    d.steps.push_back(std::move(st));
    return true;
  };
  for (std::size_t i = 0; i < f.generators_x.size(); ++i) {
    Step st{StepKind::input, i, 0, 0, 0, {}};
    auto r = reduce(f.generators_x[i], m, budget);
    if (!r) {
      d.indeterminate = true;
      return d;
    }
    st.value = *r;
    add(std::move(st));
  }
  std::size_t k = (f.q - 1) / 2;
  std::set<std::pair<std::size_t, std::size_t>> tried_conj;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> tried_mult;
  for (std::size_t round = 0; round < max_rounds && d.generator_step.size() < m.rank(); ++round) {
    bool progress = false;
    std::size_t n = d.steps.size();
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (y == z || !tried_conj.insert({z, y}).second) continue;
        Step st{StepKind::conjugate, z, y, 0, 0, {}};
        auto r = reduce(step_word(d, f, st), m, budget);
        if (!r) {
          d.indeterminate = true;
          continue;
        }
        if (r->size() != 1 || d.generator_step.count((*r)[0])) continue;
        st.value = *r;
        progress |= add(std::move(st));
      }
    if (d.generator_step.size() == m.rank()) break;
    n = d.steps.size();
    auto gens = d.generator_step;
    for (std::size_t y = 0; y < n; ++y)
      for (auto const& [s, is] : gens)
        for (auto const& [t, it] : gens) {
          if (s == t || !tried_mult.insert({y, is, it}).second) continue;
          std::optional<Step> best;
          for (std::size_t j = 1; j <= k; ++j) {
            Step st{StepKind::multiply, y, is, it, j, {}};
            auto r = reduce(step_word(d, f, st), m, budget);
            if (!r) {
              d.indeterminate = true;
              continue;
            }
            st.value = *r;
            if (!best || st.value.size() < best->value.size()) best = std::move(st);
          }
          if (best && best->value.size() < d.steps[y].value.size()) progress |= add(std::move(*best));
        }
    if (!progress) break;
  }
  d.complete = d.generator_step.size() == m.rank();
  return d;
}

/// Re-checks every step: the word built from its operands equals its
/// recorded value.  Empty when some check is undecided.
inline std::optional<bool> verify_derivation(Derivation const& d, ExampleFamily const& f,
                                             std::size_t budget = kDefaultBudget) {
  bool indeterminate = false;
  for (auto const& st : d.steps) {
    auto eq = equal_in_group(step_word(d, f, st), st.value, f.matrix, budget);
    if (!eq) {
      indeterminate = true;
      continue;
    }
    if (!*eq) return false;
  }
  for (auto const& [s, i] : d.generator_step)
    if (d.steps.at(i).value != Word{s}) return false;
  if (indeterminate) return std::nullopt;
  return d.generator_step.size() == f.matrix.rank();
}

/// A syllable x_i^{+-1} of a product expression over X.
struct Syllable {
  std::size_t index;
  bool inverted;
  friend bool operator==(Syllable const&, Syllable const&) = default;
};

/// Expands a step into a product over X, cancelling x x^-1 pairs.  Empty if
/// the expansion would exceed `cap` syllables.
inline std::optional<std::vector<Syllable>> expand_step(Derivation const& d, std::size_t step,
                                                        std::size_t cap = 100'000) {
  std::map<std::size_t, std::vector<Syllable>> memo;
  auto push = [](std::vector<Syllable>& out, Syllable s) {
    if (!out.empty() && out.back().index == s.index && out.back().inverted != s.inverted)
      out.pop_back();
    else
      out.push_back(s);
  };
  auto inv = [&](std::vector<Syllable> const& xs) {
    std::vector<Syllable> out;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) push(out, {it->index, !it->inverted});
    return out;
  };
  bool too_big = false;
  auto append = [&](std::vector<Syllable>& out, std::vector<Syllable> const& xs) {
    for (auto s : xs) push(out, s);
    if (out.size() > cap) too_big = true;
  };
  for (std::size_t i = 0; i <= step && !too_big; ++i) {
    Step const& st = d.steps.at(i);
    std::vector<Syllable> out;
    switch (st.kind) {
      case StepKind::input: out.push_back({st.a, false}); break;
      case StepKind::conjugate:
        append(out, inv(memo.at(st.b)));
        append(out, memo.at(st.a));
        append(out, memo.at(st.b));
        break;
      case StepKind::multiply:
        append(out, memo.at(st.a));
        for (std::size_t j = 0; j < st.times && !too_big; ++j) {
          append(out, memo.at(st.b));
          append(out, memo.at(st.c));
        }
        break;
    }
    memo[i] = std::move(out);
  }
  if (too_big) return std::nullopt;
  return memo.at(step);
}

inline Word evaluate(ExampleFamily const& f, std::vector<Syllable> const& expr) {
  Word w;
  for (auto const& s : expr) {
    Word const& x = f.generators_x.at(s.index);
    w = concat(w, s.inverted ? inverse(x) : x);
  }
  return w;
}

inline std::string format_expression(std::vector<Syllable> const& expr) {
  if (expr.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < expr.size(); ++i) {
    if (i) out += ' ';
    out += "x" + std::to_string(expr[i].index + 1);
    if (expr[i].inverted) out += "^-1";
  }
  return out;
}

inline std::vector<Syllable> parse_expression(std::string const& text, std::size_t inputs = 4) {
  std::vector<Syllable> out;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    if (tok == "1") continue;
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    if (tok.size() < 2 || tok[0] != 'x') throw ParseError("bad syllable '" + tok + "'");
    std::size_t idx = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') throw ParseError("bad syllable '" + tok + "'");
      idx = idx * 10 + std::size_t(tok[i] - '0');
    }
    if (idx < 1 || idx > inputs) throw ParseError("syllable index out of range in '" + tok + "'");
    out.push_back({idx - 1, inv});
  }
  return out;
}

}  // namespace coxfold
