#pragma once

// Shared helpers for the test suites: independent reference implementations
// (pair-scan distance, exhaustive-axis single-peakedness), random profile
// generators, and exhaustive small-profile enumeration.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "consensus/preference.hpp"
#include "consensus/profile.hpp"
#include "consensus/rng.hpp"
#include "consensus/single_peaked.hpp"

namespace testsupport {

inline consensus::Preference pref(std::vector<int> ranking) {
  return consensus::Preference(std::move(ranking));
}

/// O(K^2) pair-scan inversion distance; the reference the production
/// merge-sort counter is checked against.
inline int pair_scan_distance(const consensus::Preference& p, const consensus::Preference& q) {
  const std::vector<int> pp = p.positions();
  const std::vector<int> qp = q.positions();
  const int k = p.size();
  int d = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const bool p_ab = pp[static_cast<std::size_t>(a)] < pp[static_cast<std::size_t>(b)];
      const bool q_ab = qp[static_cast<std::size_t>(a)] < qp[static_cast<std::size_t>(b)];
      if (p_ab != q_ab) ++d;
    }
  return d;
}

/// Uniform random permutation of 0..k-1.
inline consensus::Preference random_preference(consensus::SplitMix64& rng, int k) {
  std::vector<int> r(static_cast<std::size_t>(k));
  std::iota(r.begin(), r.end(), 0);
  for (std::size_t i = r.size(); i > 1; --i)
    std::swap(r[i - 1], r[static_cast<std::size_t>(rng.next_below(i))]);
  return consensus::Preference(std::move(r));
}

/// Random profile of 1..max_n uniform ballots.
inline consensus::Profile random_profile(consensus::SplitMix64& rng, int k,
                                         std::uint64_t max_n) {
  const std::uint64_t n = 1 + rng.next_below(max_n);
  std::vector<consensus::Preference> ballots;
  ballots.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) ballots.push_back(random_preference(rng, k));
  return consensus::Profile::from_ballots(ballots);
}

/// Random profile biased toward consensus: ballots cluster around a random
/// center, with per-ballot distance decaying geometrically.
inline consensus::Profile clustered_profile(consensus::SplitMix64& rng, int k, std::uint64_t n,
                                            double spread) {
  const consensus::Preference center = random_preference(rng, k);
  std::vector<consensus::Preference> ballots;
  ballots.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<int> r = center.ranking();
    while (rng.next_double() < spread) {
      const std::size_t a = static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(k - 1)));
      std::swap(r[a], r[a + 1]);
    }
    ballots.emplace_back(r);
  }
  return consensus::Profile::from_ballots(ballots);
}

/// Calls fn(profile) for every K=3 profile with voter count in 1..max_n
/// (every frequency assignment over the 6 rankings).
template <typename Fn>
inline void for_each_small_k3_profile(int max_n, Fn&& fn) {
  const std::vector<consensus::Preference> all = consensus::enumerate_preferences(3);
  std::vector<std::uint64_t> counts(all.size(), 0);
  auto recurse = [&](auto&& self, std::size_t idx, int remaining_max) -> void {
    if (idx == all.size()) {
      std::vector<std::pair<consensus::Preference, std::uint64_t>> entries;
      std::uint64_t n = 0;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (counts[i] > 0) entries.emplace_back(all[i], counts[i]);
        n += counts[i];
      }
      if (n >= 1) fn(consensus::Profile::from_counts(3, entries));
      return;
    }
    for (int c = 0; c <= remaining_max; ++c) {
      counts[idx] = static_cast<std::uint64_t>(c);
      self(self, idx + 1, remaining_max - c);
    }
    counts[idx] = 0;
  };
  recurse(recurse, 0, max_n);
}

/// Exhaustive single-peakedness oracle: tries every axis.
inline bool single_peaked_oracle(const consensus::Profile& profile) {
  const int k = profile.alternative_count();
  std::vector<int> axis(static_cast<std::size_t>(k));
  std::iota(axis.begin(), axis.end(), 0);
  do {
    bool all_ok = true;
    for (const auto& [ballot, f] : profile.entries())
      if (!consensus::ballot_single_peaked_on_axis(ballot, axis)) {
        all_ok = false;
        break;
      }
    if (all_ok) return true;
  } while (std::next_permutation(axis.begin(), axis.end()));
  return false;
}

inline std::string fixtures_dir() {
  if (const char* env = std::getenv("CONSENSUS_FIXTURES")) return env;
  namespace fs = std::filesystem;
  for (const char* candidate :
       {"tests/fixtures", "../tests/fixtures", "../../tests/fixtures", "fixtures"}) {
    if (fs::is_directory(candidate)) return candidate;
  }
  return "tests/fixtures";
}

}  // namespace testsupport
