#pragma once

#include <cstdint>
#include <vector>

#include "consensus/bignat.hpp"
#include "consensus/errors.hpp"
#include "consensus/preference.hpp"

namespace consensus {

/// Default cap for full Mahonian tables. The counts sum to K!, so tables stay
/// exact (BigNat) but memory is guarded.
inline constexpr int kMahonianTableCapK = 20;

/// T(K, j): number of permutations of K elements with exactly j inversions,
/// for j = 0 .. C(K,2).
struct MahonianTable {
  int k = 0;
  std::vector<BigNat> counts;

  const BigNat& at(int inversions) const {
    return counts[static_cast<std::size_t>(inversions)];
  }
};

/// k! for k <= 20 (the largest factorial fitting in 64 bits).
inline std::uint64_t factorial_u64(int k) {
  if (k < 0 || k > 20) throw CapacityError("factorial_u64: overflows 64 bits");
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

namespace detail {

/// Extends a table of Mahonian rows (rows[m][j] = T(m+1, j)) so every row has
/// at least `columns` entries. Rows are built with the recurrence
/// T(m, j) = sum of T(m-1, j-i) for i = 0 .. min(m-1, j).
inline void extend_mahonian_rows(std::vector<std::vector<BigNat>>& rows, int k, int columns) {
  if (rows.empty()) rows.emplace_back();  // row for m = 1
  std::vector<BigNat>& first = rows.front();
  while (static_cast<int>(first.size()) < columns)
    first.push_back(first.empty() ? BigNat{1} : BigNat{0});
  for (int m = 2; m <= k; ++m) {
    if (static_cast<int>(rows.size()) < m) rows.emplace_back();
    std::vector<BigNat>& prev = rows[static_cast<std::size_t>(m - 2)];
    std::vector<BigNat>& cur = rows[static_cast<std::size_t>(m - 1)];
    for (int j = static_cast<int>(cur.size()); j < columns; ++j) {
      BigNat v;
      const int imax = std::min(m - 1, j);
      for (int i = 0; i <= imax; ++i) v += prev[static_cast<std::size_t>(j - i)];
      cur.push_back(std::move(v));
    }
  }
}

}  // namespace detail

/// Full table of T(K, j) for j = 0 .. C(K,2).
inline MahonianTable mahonian_table(int k, int cap = kMahonianTableCapK) {
  if (k < 3) throw ArgumentError("mahonian_table: K must be at least 3");
  if (k > cap) throw CapacityError("mahonian_table: K exceeds table cap");
  const int columns = max_inversion_distance(k) + 1;
  std::vector<std::vector<BigNat>> rows;
  detail::extend_mahonian_rows(rows, k, columns);
  MahonianTable t;
  t.k = k;
  t.counts = std::move(rows.back());
  return t;
}

/// True iff sum of T(K, j) for j = 0 .. d equals `target`. Rows are grown one
/// column at a time and the scan aborts as soon as the partial sum passes the
/// target, so this stays cheap for any K (no table cap applies).
inline bool mahonian_prefix_equals(int k, int d, std::uint64_t target) {
  if (k < 3) throw ArgumentError("mahonian_prefix_equals: K must be at least 3");
  if (d < 0) return target == 0;
  d = std::min(d, max_inversion_distance(k));
  std::vector<std::vector<BigNat>> rows;
  const BigNat want{target};
  BigNat sum;
  for (int j = 0; j <= d; ++j) {
    detail::extend_mahonian_rows(rows, k, j + 1);
    sum += rows.back()[static_cast<std::size_t>(j)];
    if (sum > want) return false;
  }
  return sum == want;
}

}  // namespace consensus
