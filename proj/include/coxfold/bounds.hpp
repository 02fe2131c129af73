#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxfold/coxeter_matrix.hpp"

namespace coxfold {

/// Rank of the image of W(M) in its mod-2 abelianization: the number of
/// connected components of the graph on S with an edge s-t whenever m_st is
/// odd.  A lower bound for rk W(M).
inline std::size_t mod2_rank_bound(CoxeterMatrix const& m) {
  std::size_t n = m.rank();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto e = m.entry(Letter(i), Letter(j));
      if (e == CoxeterMatrix::infinity || e % 2 == 0) continue;
      auto a = find(i), b = find(j);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  return components;
}

/// (1/2) * sum over ordered pairs s != t of 1/m_st, with 1/inf = 0.  Equal to
/// the sum over unordered pairs.  Exact.
inline boost::multiprecision::cpp_rational reciprocal_order_sum(CoxeterMatrix const& m) {
  boost::multiprecision::cpp_rational sum = 0;
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j) {
      auto e = m.entry(Letter(i), Letter(j));
      if (e != CoxeterMatrix::infinity) sum += boost::multiprecision::cpp_rational(1, e);
    }
  return sum;
}

/// ceil(n/2) when the reciprocal sum is below 1, else nothing.
inline std::optional<std::size_t> petersen_thom_bound(CoxeterMatrix const& m) {
  if (reciprocal_order_sum(m) < 1) return (m.rank() + 1) / 2;
  return std::nullopt;
}

/// 6 * 2^n, saturating at the largest representable value.
inline std::uint64_t rank_threshold(std::size_t n) {
  if (n >= 60) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{6} << n;
}

/// Whether every off-diagonal entry reaches 6 * 2^n, so that rk W(M) = n.
inline bool rank_threshold_applies(CoxeterMatrix const& m) {
  auto threshold = rank_threshold(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j) {
      auto e = m.entry(Letter(i), Letter(j));
      if (e != CoxeterMatrix::infinity && e < threshold) return false;
    }
  return true;
}

}  // namespace coxfold
