#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "coxfold/coxeter_matrix.hpp"
#include "coxfold/errors.hpp"

namespace coxfold {

/// gamma_st(k): the alternating word s t s t ... of length k starting with s.
inline Word alternating_word(Letter s, Letter t, std::size_t k) {
  if (s == t) throw InvalidArguments("alternating_word needs two distinct generators");
  Word w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = (i % 2 == 0) ? s : t;
  return w;
}

/// Positions i with w[i] == w[i+1].
inline std::vector<std::size_t> cancellation_sites(Word const& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) out.push_back(i);
  return out;
}

inline Word apply_cancellation(Word const& w, std::size_t pos) {
  if (pos + 1 >= w.size() || w[pos] != w[pos + 1])
    throw InvalidArguments("no cancellation site at this position");
  Word out;
  out.reserve(w.size() - 2);
  out.insert(out.end(), w.begin(), w.begin() + std::ptrdiff_t(pos));
  out.insert(out.end(), w.begin() + std::ptrdiff_t(pos) + 2, w.end());
  return out;
}

/// An occurrence of gamma_st(m_st) at `position`.
struct HomotopySite {
  std::size_t position;
  Letter s;
  Letter t;
  friend bool operator==(HomotopySite const&, HomotopySite const&) = default;
};

namespace detail {

// Length of the alternating run in {w[pos], w[pos+1]} that starts at pos.
inline std::size_t alternating_run_from(Word const& w, std::size_t pos) {
  if (pos >= w.size()) return 0;
  if (pos + 1 >= w.size() || w[pos] == w[pos + 1]) return 1;
  std::size_t len = 2;
  while (pos + len < w.size() && w[pos + len] == w[pos + len - 2]) ++len;
  return len;
}

}  // namespace detail

/// Every position where gamma_st(m_st) occurs with m_st finite.
inline std::vector<HomotopySite> homotopy_sites(Word const& w, CoxeterMatrix const& m) {
  std::vector<HomotopySite> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    Letter s = w[i], t = w[i + 1];
    if (s == t || !m.is_finite(s, t)) continue;
    std::size_t need = m.entry(s, t);
    if (i + need > w.size()) continue;
    bool ok = true;
    for (std::size_t k = 2; k < need && ok; ++k) ok = w[i + k] == w[i + k - 2];
    if (ok) out.push_back({i, s, t});
  }
  return out;
}

/// Replaces gamma_st(m_st) at the site by gamma_ts(m_st).
inline Word apply_homotopy(Word const& w, HomotopySite const& site, CoxeterMatrix const& m) {
  std::size_t len = m.entry(site.s, site.t);
  Word out = w;
  for (std::size_t k = 0; k < len; ++k) out[site.position + k] = (k % 2 == 0) ? site.t : site.s;
  return out;
}

/// Removes adjacent equal letters until none remain.
inline Word free_reduce(Word const& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline bool is_freely_reduced(Word const& w) { return cancellation_sites(w).empty(); }

/// A maximal alternating subword w[begin, end) in two distinct letters.
struct AlternatingRun {
  std::size_t begin;
  std::size_t end;
  Letter first;
  Letter second;
  std::size_t length() const { return end - begin; }
  friend bool operator==(AlternatingRun const&, AlternatingRun const&) = default;
};

/// Maximal alternating subwords of length >= 2, left to right.  In a freely
/// reduced word consecutive runs overlap in exactly one letter.
inline std::vector<AlternatingRun> maximal_alternating_runs(Word const& w) {
  std::vector<AlternatingRun> runs;
  std::size_t i = 0;
  while (i + 1 < w.size()) {
    if (w[i] == w[i + 1]) {
      ++i;
      continue;
    }
    std::size_t len = detail::alternating_run_from(w, i);
    runs.push_back({i, i + len, w[i], w[i + 1]});
    i += len - 1;
  }
  return runs;
}

/// Minimal number of maximal alternating subwords covering a freely reduced
/// word.  Computed exactly by dynamic programming over the runs.
inline std::size_t kappa(Word const& w) {
  if (!is_freely_reduced(w)) throw PreconditionError("kappa is only defined on reduced words");
  if (w.empty()) return 0;
  if (w.size() == 1) return 1;
  auto runs = maximal_alternating_runs(w);
  // best[k]: fewest runs among runs[0..k] covering w[0, runs[k].end) and using runs[k].
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(runs.size(), inf);
  for (std::size_t k = 0; k < runs.size(); ++k) {
    if (runs[k].begin == 0) {
      best[k] = 1;
      continue;
    }
    for (std::size_t j = 0; j < k; ++j)
      if (best[j] != inf && runs[j].end >= runs[k].begin) best[k] = std::min(best[k], best[j] + 1);
  }
  std::size_t answer = inf;
  for (std::size_t k = 0; k < runs.size(); ++k)
    if (runs[k].end == w.size()) answer = std::min(answer, best[k]);
  return answer;
}

/// Location of an almost-whole relator gamma_st(l) with l >= 2 m_st - 3.
struct AlmostRelator {
  std::size_t begin;
  std::size_t end;
  Letter s;
  Letter t;
  friend bool operator==(AlmostRelator const&, AlmostRelator const&) = default;
};

/// Leftmost maximal alternating subword of type {s,t} with m_st finite and
/// length >= 2 m_st - 3.  The pair is reported with s < t.
inline std::optional<AlmostRelator> find_almost_relator(Word const& w, CoxeterMatrix const& m) {
  for (auto const& run : maximal_alternating_runs(w)) {
    if (!m.is_finite(run.first, run.second)) continue;
    std::size_t mst = m.entry(run.first, run.second);
    if (run.length() + 3 >= 2 * mst) {
      Letter s = std::min(run.first, run.second), t = std::max(run.first, run.second);
      return AlmostRelator{run.begin, run.end, s, t};
    }
  }
  return std::nullopt;
}

}  // namespace coxfold
