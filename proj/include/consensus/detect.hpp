#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "consensus/errors.hpp"
#include "consensus/mahonian.hpp"
#include "consensus/preference.hpp"
#include "consensus/profile.hpp"

namespace consensus {

enum class ConsensusKind { level1, flexible };

enum class DetectOutcome { found, not_found };

enum class FailureReason {
  none,
  condition2_violated,
  condition1_violated_all_candidates,
  flexible_condition1_violated_all_candidates,
};

/// Result of a consensus detection run. When consensus is found, `pivots`
/// holds every maximal-frequency preference the profile is in consensus
/// around, in lexicographic order; the first entry is the canonical pivot.
struct ConsensusReport {
  ConsensusKind kind = ConsensusKind::level1;
  DetectOutcome outcome = DetectOutcome::not_found;
  std::vector<Preference> pivots;
  FailureReason failure_reason = FailureReason::none;
  std::uint64_t max_frequency = 0;
  std::optional<int> d_hat;  // largest distance from a stored preference to pivots[0]

  bool found() const { return outcome == DetectOutcome::found; }
};

namespace detail {

struct RankedEntry {
  std::uint64_t freq;
  int dist;
  const Preference* pref;
};

/// Stored preferences ordered by descending frequency, then ascending
/// distance from the candidate, then lexicographically.
inline std::vector<RankedEntry> ranked_entries(const Profile& profile,
                                               const Preference& candidate) {
  std::vector<RankedEntry> rows;
  rows.reserve(profile.distinct_count());
  for (const auto& [pref, f] : profile.entries())
    rows.push_back({f, inversion_distance(pref, candidate), &pref});
  std::sort(rows.begin(), rows.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.freq != b.freq) return a.freq > b.freq;
    if (a.dist != b.dist) return a.dist < b.dist;
    return *a.pref < *b.pref;
  });
  return rows;
}

/// Adjacent-pair scan over the ranked list. A frequency drop combined with a
/// distance that fails to improve rejects the candidate; the strict variant
/// (level-1) rejects when the distance does not strictly increase, the
/// flexible variant only when it strictly decreases.
inline bool scan_passes(const std::vector<RankedEntry>& rows, bool flexible) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].freq > rows[i + 1].freq) {
      if (flexible ? rows[i].dist > rows[i + 1].dist : rows[i].dist >= rows[i + 1].dist)
        return false;
    }
  }
  return true;
}

inline void require_same_k(const Profile& profile, const Preference& candidate) {
  if (candidate.size() != profile.alternative_count())
    throw DimensionError("consensus check: candidate K does not match profile");
}

/// True when the profile stores every one of the K! possible preferences.
inline bool all_rankings_stored(const Profile& profile) {
  const int k = profile.alternative_count();
  if (k > 20) return false;  // K! > 2^62, no stored map can reach it
  return profile.distinct_count() == factorial_u64(k);
}

}  // namespace detail

/// Condition 1 check: strictly more frequent preferences must be strictly
/// closer to the candidate, over all K! preferences including the unstored
/// ones. Returns false (not an error) when the candidate does not have
/// maximal frequency, since the condition cannot hold then.
inline bool check_condition1(const Profile& profile, const Preference& candidate) {
  detail::require_same_k(profile, candidate);
  if (profile.voter_count() == 0) return false;
  if (profile.frequency(candidate) != profile.max_frequency()) return false;
  const auto rows = detail::ranked_entries(profile, candidate);
  if (!detail::scan_passes(rows, /*flexible=*/false)) return false;
  const int d_hat = rows.back().dist;
  // Zero-frequency closure: every preference within distance d_hat must be
  // stored, i.e. the ball of radius d_hat has exactly n' elements.
  return mahonian_prefix_equals(profile.alternative_count(), d_hat,
                                profile.distinct_count());
}

/// Flexible Condition 1 check: strictly more frequent preferences must be
/// weakly closer to the candidate. Same defensive behavior as
/// check_condition1.
inline bool check_flexible_condition1(const Profile& profile, const Preference& candidate) {
  detail::require_same_k(profile, candidate);
  if (profile.voter_count() == 0) return false;
  if (profile.frequency(candidate) != profile.max_frequency()) return false;
  const auto rows = detail::ranked_entries(profile, candidate);
  if (!detail::scan_passes(rows, /*flexible=*/true)) return false;
  const int d_hat = rows.back().dist;
  // Zero-frequency closure: every preference strictly inside radius d_hat
  // must be stored. With d_hat = 0 the ball is empty and the check is vacuous.
  std::uint64_t inside = 0;
  for (const auto& row : rows)
    if (row.dist <= d_hat - 1) ++inside;
  return mahonian_prefix_equals(profile.alternative_count(), d_hat - 1, inside);
}

namespace detail {

inline ConsensusReport detect_impl(const Profile& profile, ConsensusKind kind) {
  ConsensusReport report;
  report.kind = kind;
  report.max_frequency = profile.max_frequency();

  const bool flexible = kind == ConsensusKind::flexible;
  if (profile.voter_count() == 0) {
    report.failure_reason = flexible
                                ? FailureReason::flexible_condition1_violated_all_candidates
                                : FailureReason::condition2_violated;
    return report;
  }

  if (!flexible) {
    // Condition 2 fails exactly when every possible preference occurs
    // equally often: all stored frequencies equal and n' = K!.
    bool all_equal = true;
    for (const auto& [pref, f] : profile.entries())
      if (f != report.max_frequency) {
        all_equal = false;
        break;
      }
    if (all_equal && all_rankings_stored(profile)) {
      report.failure_reason = FailureReason::condition2_violated;
      return report;
    }
  }

  for (const auto& [pref, f] : profile.entries()) {
    if (f != report.max_frequency) continue;
    const bool passes = flexible ? check_flexible_condition1(profile, pref)
                                 : check_condition1(profile, pref);
    if (passes) report.pivots.push_back(pref);
  }

  if (report.pivots.empty()) {
    report.failure_reason = flexible
                                ? FailureReason::flexible_condition1_violated_all_candidates
                                : FailureReason::condition1_violated_all_candidates;
    return report;
  }

  report.outcome = DetectOutcome::found;
  int d_hat = 0;
  for (const auto& [pref, f] : profile.entries())
    d_hat = std::max(d_hat, inversion_distance(pref, report.pivots.front()));
  report.d_hat = d_hat;
  return report;
}

}  // namespace detail

/// Detects level-1 consensus: frequencies strictly decrease with distance
/// from some pivot, and at least one strict frequency difference exists.
inline ConsensusReport detect_level1(const Profile& profile) {
  return detail::detect_impl(profile, ConsensusKind::level1);
}

/// Detects Flexible Consensus: strictly more frequent preferences are weakly
/// closer to some pivot. All passing maximal-frequency pivots are reported.
inline ConsensusReport detect_flexible(const Profile& profile) {
  return detail::detect_impl(profile, ConsensusKind::flexible);
}

}  // namespace consensus
