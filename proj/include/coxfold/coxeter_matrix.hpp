#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coxfold/errors.hpp"

namespace coxfold {

/// Index of a generator (or, for free-alphabet graphs, of a signed letter).
using Letter = std::uint8_t;

/// A word over the generating set.  Generators are involutions, so the
/// inverse of a word is its reversal.
using Word = std::vector<Letter>;

inline Word inverse(Word const& w) { return Word(w.rbegin(), w.rend()); }

inline Word concat(Word a, Word const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Symmetric matrix (m_st) over an ordered generator set.  Entries are
/// integers >= 2 off the diagonal, or infinity.
class CoxeterMatrix {
 public:
  using Entry = std::uint32_t;
  static constexpr Entry infinity = 0;

  CoxeterMatrix() = default;

  /// `entries` is the full n x n matrix; `infinity` marks m_st = inf.
  CoxeterMatrix(std::vector<std::string> generators,
                std::vector<std::vector<Entry>> const& entries)
      : names_(std::move(generators)), n_(names_.size()) {
    if (n_ > 255) throw InvalidArguments("at most 255 generators supported");
    if (entries.size() != n_) throw InvalidArguments("matrix has wrong number of rows");
    m_.assign(n_ * n_, 1);
    for (std::size_t i = 0; i < n_; ++i) {
      if (entries[i].size() != n_) throw InvalidArguments("matrix has wrong number of columns");
      for (std::size_t j = 0; j < n_; ++j) {
        Entry e = entries[i][j];
        if (i == j) {
          if (e != 1) throw InvalidArguments("diagonal entries must be 1");
        } else if (e == 1) {
          throw InvalidArguments("off-diagonal entries must be >= 2 or inf");
        }
        if (entries[j][i] != e) throw InvalidArguments("matrix must be symmetric");
        m_[i * n_ + j] = e;
      }
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (names_[i] == names_[j]) throw InvalidArguments("duplicate generator name " + names_[i]);
  }

  /// Every off-diagonal entry equal to `m`.
  static CoxeterMatrix uniform(std::vector<std::string> generators, Entry m) {
    std::size_t n = generators.size();
    std::vector<std::vector<Entry>> e(n, std::vector<Entry>(n, m));
    for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
    return CoxeterMatrix(std::move(generators), e);
  }

  std::size_t rank() const { return n_; }
  std::vector<std::string> const& generators() const { return names_; }
  std::string const& name(Letter s) const { return names_.at(s); }

  /// Raw entry; `infinity` (== 0) for m_st = inf.
  Entry entry(Letter s, Letter t) const { return m_.at(std::size_t(s) * n_ + t); }
  bool is_finite(Letter s, Letter t) const { return entry(s, t) != infinity; }
  std::optional<Entry> order(Letter s, Letter t) const {
    Entry e = entry(s, t);
    if (e == infinity) return std::nullopt;
    return e;
  }

  /// All off-diagonal entries are at least 3.
  bool is_skew_angled() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && m_[i * n_ + j] != infinity && m_[i * n_ + j] < 3) return false;
    return true;
  }

  /// Copy with m_st = m_ts = value.
  CoxeterMatrix with_entry(Letter s, Letter t, Entry value) const {
    if (s == t) throw InvalidArguments("cannot change a diagonal entry");
    CoxeterMatrix out = *this;
    out.m_.at(std::size_t(s) * n_ + t) = value;
    out.m_.at(std::size_t(t) * n_ + s) = value;
    return out;
  }

  std::optional<Letter> find(std::string_view name) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (names_[i] == name) return Letter(i);
    return std::nullopt;
  }

  Letter index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw ParseError("unknown generator '" + std::string(name) + "'");
  }

  friend bool operator==(CoxeterMatrix const&, CoxeterMatrix const&) = default;

 private:
  std::vector<std::string> names_;
  std::size_t n_ = 0;
  std::vector<Entry> m_;
};

inline std::string entry_to_string(CoxeterMatrix::Entry e) {
  return e == CoxeterMatrix::infinity ? std::string("inf") : std::to_string(e);
}

inline CoxeterMatrix::Entry parse_entry(std::string_view token) {
  if (token == "inf" || token == "infinity") return CoxeterMatrix::infinity;
  CoxeterMatrix::Entry value = 0;
  if (token.empty()) throw ParseError("empty matrix entry");
  for (char c : token) {
    if (c < '0' || c > '9') throw ParseError("bad matrix entry '" + std::string(token) + "'");
    value = value * 10 + CoxeterMatrix::Entry(c - '0');
    if (value > 1'000'000'000) throw ParseError("matrix entry too large");
  }
  return value;
}

/// Text format: first non-comment line lists generator names; the next n-1
/// lines give the strictly upper-triangular rows (row i lists m_{i,j} for
/// j > i).  A row may also start with the diagonal 1.  `#` starts a comment.
inline CoxeterMatrix parse_matrix_text(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  if (rows.empty()) throw ParseError("matrix file is empty");
  std::vector<std::string> names = rows[0];
  std::size_t n = names.size();
  if (rows.size() != n) {
    if (!(n == 1 && rows.size() == 1))
      throw ParseError("expected " + std::to_string(n - 1) + " rows of entries, got " +
                       std::to_string(rows.size() - 1));
  }
  std::vector<std::vector<CoxeterMatrix::Entry>> m(n, std::vector<CoxeterMatrix::Entry>(n, 1));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto row = rows[i + 1];
    if (row.size() == n - i && row.front() == "1") row.erase(row.begin());
    if (row.size() != n - 1 - i)
      throw ParseError("row " + std::to_string(i + 1) + " must have " + std::to_string(n - 1 - i) +
                       " entries");
    for (std::size_t k = 0; k < row.size(); ++k) {
      auto e = parse_entry(row[k]);
      if (e == 1) throw ParseError("off-diagonal entry 1 is not allowed");
      m[i][i + 1 + k] = m[i + 1 + k][i] = e;
    }
  }
  try {
    return CoxeterMatrix(names, m);
  } catch (InvalidArguments const& e) {
    throw ParseError(e.what());
  }
}

inline CoxeterMatrix parse_matrix_text(std::string const& text) {
  std::istringstream in(text);
  return parse_matrix_text(in);
}

inline std::string format_matrix_text(CoxeterMatrix const& m) {
  std::ostringstream out;
  auto const& g = m.generators();
  for (std::size_t i = 0; i < g.size(); ++i) out << (i ? " " : "") << g[i];
  out << '\n';
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j)
      out << (j > i + 1 ? " " : "") << entry_to_string(m.entry(Letter(i), Letter(j)));
    out << '\n';
  }
  return out.str();
}

/// Parses a word.  Whitespace-separated tokens are generator names; a token
/// that is not a name is split greedily into the longest matching names, so
/// "s1s2s1" and "s t s" both work.  "1", "e" and "" denote the empty word.
inline Word parse_word(std::string_view text, std::vector<std::string> const& names) {
  Word w;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    if (tok == "1" || tok == "e" || tok == "()") continue;
    std::size_t pos = 0;
    while (pos < tok.size()) {
      std::size_t best_len = 0;
      std::size_t best = 0;
      for (std::size_t i = 0; i < names.size(); ++i) {
        auto const& nm = names[i];
        if (nm.size() > best_len && tok.compare(pos, nm.size(), nm) == 0) {
          best_len = nm.size();
          best = i;
        }
      }
      if (best_len == 0) throw ParseError("cannot parse '" + tok + "' as a word");
      w.push_back(Letter(best));
      pos += best_len;
    }
  }
  return w;
}

inline Word parse_word(std::string_view text, CoxeterMatrix const& m) {
  return parse_word(text, m.generators());
}

inline std::string format_word(Word const& w, std::vector<std::string> const& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += names.at(w[i]);
  }
  return out;
}

inline std::string format_word(Word const& w, CoxeterMatrix const& m) {
  return format_word(w, m.generators());
}

}  // namespace coxfold
