#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "consensus/errors.hpp"

namespace consensus {

/// Full enumeration (K! objects) is refused above this many alternatives.
inline constexpr int kEnumerationCapK = 8;

/// A strict total order over K alternatives, stored as a permutation of
/// 0..K-1 with position 0 holding the most preferred alternative.
class Preference {
 public:
  explicit Preference(std::vector<int> ranking) : ranking_(std::move(ranking)) {
    const int k = static_cast<int>(ranking_.size());
    if (k < 3) throw ArgumentError("Preference: need at least 3 alternatives");
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int alt : ranking_) {
      if (alt < 0 || alt >= k || seen[static_cast<std::size_t>(alt)])
        throw ArgumentError("Preference: ranking is not a permutation of 0..K-1");
      seen[static_cast<std::size_t>(alt)] = 1;
    }
  }

  /// The order 0 > 1 > ... > K-1.
  static Preference identity(int k) {
    std::vector<int> r(static_cast<std::size_t>(k));
    std::iota(r.begin(), r.end(), 0);
    return Preference(std::move(r));
  }

  /// The order K-1 > ... > 1 > 0.
  static Preference reversed_identity(int k) {
    std::vector<int> r(static_cast<std::size_t>(k));
    std::iota(r.rbegin(), r.rend(), 0);
    return Preference(std::move(r));
  }

  int size() const { return static_cast<int>(ranking_.size()); }

  const std::vector<int>& ranking() const { return ranking_; }

  /// Alternative at the given rank position (0 = most preferred).
  int at(int position) const { return ranking_[static_cast<std::size_t>(position)]; }

  /// Most preferred alternative.
  int best() const { return ranking_.front(); }

  /// positions()[alt] is the rank position of `alt` in this order.
  std::vector<int> positions() const {
    std::vector<int> pos(ranking_.size());
    for (std::size_t i = 0; i < ranking_.size(); ++i)
      pos[static_cast<std::size_t>(ranking_[i])] = static_cast<int>(i);
    return pos;
  }

  friend bool operator==(const Preference&, const Preference&) = default;
  friend std::strong_ordering operator<=>(const Preference& a, const Preference& b) {
    return a.ranking_ <=> b.ranking_;
  }

 private:
  std::vector<int> ranking_;
};

/// Maximum inversion distance between two orders on k alternatives: C(k,2).
inline int max_inversion_distance(int k) { return k * (k - 1) / 2; }

namespace detail {

/// Counts inversions of `seq` in place, merge-sort style. `buf` is scratch
/// space of the same size.
inline std::int64_t merge_count(std::vector<int>& seq, std::vector<int>& buf,
                                std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t count = merge_count(seq, buf, lo, mid) + merge_count(seq, buf, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (seq[i] <= seq[j]) {
      buf[out++] = seq[i++];
    } else {
      count += static_cast<std::int64_t>(mid - i);
      buf[out++] = seq[j++];
    }
  }
  while (i < mid) buf[out++] = seq[i++];
  while (j < hi) buf[out++] = seq[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
            buf.begin() + static_cast<std::ptrdiff_t>(hi),
            seq.begin() + static_cast<std::ptrdiff_t>(lo));
  return count;
}

}  // namespace detail

/// Kendall-tau (inversion) distance: the number of alternative pairs the two
/// orders rank oppositely. Symmetric metric with range [0, C(K,2)].
inline int inversion_distance(const Preference& p, const Preference& q) {
  if (p.size() != q.size())
    throw DimensionError("inversion_distance: preferences over different K");
  const std::vector<int> pos_q = q.positions();
  std::vector<int> seq(static_cast<std::size_t>(p.size()));
  for (std::size_t i = 0; i < seq.size(); ++i)
    seq[i] = pos_q[static_cast<std::size_t>(p.ranking()[i])];
  std::vector<int> buf(seq.size());
  return static_cast<int>(detail::merge_count(seq, buf, 0, seq.size()));
}

/// Exchanges the rank positions of alternatives `a` and `b`.
inline Preference apply_switch(const Preference& p, int a, int b) {
  if (a == b) throw ArgumentError("apply_switch: alternatives must differ");
  if (a < 0 || b < 0 || a >= p.size() || b >= p.size())
    throw ArgumentError("apply_switch: alternative index out of range");
  std::vector<int> r = p.ranking();
  for (int& alt : r) {
    if (alt == a)
      alt = b;
    else if (alt == b)
      alt = a;
  }
  return Preference(std::move(r));
}

/// All K! preferences in lexicographic order of their rankings.
inline std::vector<Preference> enumerate_preferences(int k) {
  if (k < 3) throw ArgumentError("enumerate_preferences: K must be at least 3");
  if (k > kEnumerationCapK)
    throw CapacityError("enumerate_preferences: K exceeds enumeration cap");
  std::vector<int> r(static_cast<std::size_t>(k));
  std::iota(r.begin(), r.end(), 0);
  std::vector<Preference> out;
  do {
    out.emplace_back(r);
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

}  // namespace consensus
