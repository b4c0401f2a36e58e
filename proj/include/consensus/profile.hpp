#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "consensus/errors.hpp"
#include "consensus/preference.hpp"

namespace consensus {

/// A multiset of preferences: distinct orders with positive frequencies.
/// Entries iterate in lexicographic ranking order, so everything derived
/// from a Profile is reproducible.
class Profile {
 public:
  /// Aggregates a non-empty ballot list. All ballots must share K.
  static Profile from_ballots(const std::vector<Preference>& ballots) {
    if (ballots.empty()) throw ArgumentError("Profile: ballot list is empty");
    Profile p;
    p.k_ = ballots.front().size();
    for (const Preference& b : ballots) {
      if (b.size() != p.k_) throw ArgumentError("Profile: ballots mix different K");
      ++p.entries_[b];
      ++p.n_;
    }
    return p;
  }

  /// Builds from (preference, frequency) pairs; duplicates aggregate.
  /// May be empty (n = 0), which random generators can legitimately produce.
  static Profile from_counts(int k,
                             const std::vector<std::pair<Preference, std::uint64_t>>& counts) {
    if (k < 3) throw ArgumentError("Profile: K must be at least 3");
    Profile p;
    p.k_ = k;
    for (const auto& [pref, f] : counts) {
      if (pref.size() != k) throw ArgumentError("Profile: entry K mismatch");
      if (f == 0) throw ArgumentError("Profile: zero frequencies are implicit, not stored");
      p.entries_[pref] += f;
      p.n_ += f;
    }
    return p;
  }

  int alternative_count() const { return k_; }
  std::uint64_t voter_count() const { return n_; }
  std::size_t distinct_count() const { return entries_.size(); }

  const std::map<Preference, std::uint64_t>& entries() const { return entries_; }

  /// Frequency of a preference; zero when not stored.
  std::uint64_t frequency(const Preference& pref) const {
    if (pref.size() != k_) throw DimensionError("Profile::frequency: K mismatch");
    auto it = entries_.find(pref);
    return it == entries_.end() ? 0 : it->second;
  }

  std::uint64_t max_frequency() const {
    std::uint64_t m = 0;
    for (const auto& [pref, f] : entries_) m = std::max(m, f);
    return m;
  }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  Profile() = default;

  int k_ = 0;
  std::map<Preference, std::uint64_t> entries_;
  std::uint64_t n_ = 0;
};

/// Free-function alias used throughout: build a Profile from raw ballots.
inline Profile profile_from_ballots(const std::vector<Preference>& ballots) {
  return Profile::from_ballots(ballots);
}

}  // namespace consensus
