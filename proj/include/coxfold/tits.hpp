#pragma once

// Tits' solution of the word problem.  Cancellations (xssy -> xy) and
// homotopies (x gamma_st(m) y -> x gamma_ts(m) y) never lengthen a word, so
// the set of words reachable from w is finite; w = 1 iff the empty word is
// reachable.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "coxfold/coxeter_matrix.hpp"
#include "coxfold/words.hpp"

namespace coxfold {

/// Default cap on the number of distinct words a word-problem query explores.
inline constexpr std::size_t kDefaultBudget = 2'000'000;

struct TitsClosure {
  Word origin;
  std::vector<Word> members;  // sorted by (length, lexicographic)
  bool budget_exhausted = false;

  bool contains(Word const& w) const {
    return std::binary_search(members.begin(), members.end(), w, shortlex_less);
  }

  static bool shortlex_less(Word const& a, Word const& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

namespace detail {

inline std::string key_of(Word const& w) { return std::string(w.begin(), w.end()); }

inline Word word_of(std::string const& k) { return Word(k.begin(), k.end()); }

}  // namespace detail

/// Breadth-first closure of {w} under cancellations and homotopies, capped at
/// `budget` distinct members.
inline TitsClosure tits_closure(Word const& w, CoxeterMatrix const& m,
                                std::size_t budget = kDefaultBudget) {
  if (budget == 0) throw InvalidArguments("tits_closure budget must be positive");
  TitsClosure out;
  out.origin = w;
  std::unordered_set<std::string> seen;
  std::deque<Word> queue;
  seen.insert(detail::key_of(w));
  queue.push_back(w);
  auto visit = [&](Word next) {
    if (out.budget_exhausted) return;
    auto [it, inserted] = seen.insert(detail::key_of(next));
    if (!inserted) return;
    if (seen.size() > budget) {
      seen.erase(it);
      out.budget_exhausted = true;
      return;
    }
    queue.push_back(std::move(next));
  };
  while (!queue.empty() && !out.budget_exhausted) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t pos : cancellation_sites(cur)) visit(apply_cancellation(cur, pos));
    for (auto const& site : homotopy_sites(cur, m)) visit(apply_homotopy(cur, site, m));
  }
  out.members.reserve(seen.size());
  for (auto const& k : seen) out.members.push_back(detail::word_of(k));
  std::sort(out.members.begin(), out.members.end(), TitsClosure::shortlex_less);
  return out;
}

struct ReduceOutcome {
  std::optional<Word> word;  // empty optional: budget exhausted
  std::size_t words_explored = 0;
};

/// Shortest member of the Tits closure of w, ties broken lexicographically
/// in generator order.
///
/// Instead of materialising the whole closure this descends: it freely
/// reduces, then searches the homotopy class of the current word for a word
/// with a cancellation site.  A word admits no such descent exactly when it
/// is reduced, and all reduced words for one element form a single homotopy
/// class, so the final class is the set of shortest members of the closure.
inline ReduceOutcome reduce_with_stats(Word const& w, CoxeterMatrix const& m,
                                       std::size_t budget = kDefaultBudget) {
  ReduceOutcome out;
  Word cur = free_reduce(w);
  for (;;) {
    std::unordered_set<std::string> seen;
    std::deque<Word> queue;
    seen.insert(detail::key_of(cur));
    queue.push_back(cur);
    if (++out.words_explored > budget) return out;
    std::optional<Word> shorter;
    while (!queue.empty() && !shorter) {
      Word x = std::move(queue.front());
      queue.pop_front();
      for (auto const& site : homotopy_sites(x, m)) {
        Word y = apply_homotopy(x, site, m);
        if (!seen.insert(detail::key_of(y)).second) continue;
        if (++out.words_explored > budget) return out;
        if (!is_freely_reduced(y)) {
          shorter = std::move(y);
          break;
        }
        queue.push_back(std::move(y));
      }
    }
    if (shorter) {
      cur = free_reduce(*shorter);
      continue;
    }
    Word best = cur;
    for (auto const& k : seen) {
      Word cand = detail::word_of(k);
      if (cand < best) best = std::move(cand);
    }
    out.word = std::move(best);
    return out;
  }
}

inline std::optional<Word> reduce(Word const& w, CoxeterMatrix const& m,
                                  std::size_t budget = kDefaultBudget) {
  return reduce_with_stats(w, m, budget).word;
}

/// Tri-state: true / false, or empty when the budget ran out.
inline std::optional<bool> is_identity(Word const& w, CoxeterMatrix const& m,
                                       std::size_t budget = kDefaultBudget) {
  auto r = reduce(w, m, budget);
  if (!r) return std::nullopt;
  return r->empty();
}

inline std::optional<bool> equal_in_group(Word const& a, Word const& b, CoxeterMatrix const& m,
                                          std::size_t budget = kDefaultBudget) {
  return is_identity(concat(a, inverse(b)), m, budget);
}

/// Geodesic test: |reduce(w)| == |w|.
inline std::optional<bool> is_reduced(Word const& w, CoxeterMatrix const& m,
                                      std::size_t budget = kDefaultBudget) {
  auto r = reduce(w, m, budget);
  if (!r) return std::nullopt;
  return r->size() == w.size();
}

}  // namespace coxfold
