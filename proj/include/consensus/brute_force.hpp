#pragma once

#include <cstdint>
#include <vector>

#include "consensus/detect.hpp"
#include "consensus/preference.hpp"
#include "consensus/profile.hpp"

namespace consensus {

/// Literal quantifier evaluation of the consensus definitions over all K!
/// candidates and all K! x K! preference pairs. Exponential in K; intended
/// as the authoritative reference for equivalence testing.
inline ConsensusReport brute_force_detect(const Profile& profile, ConsensusKind kind) {
  const int k = profile.alternative_count();
  if (k > kEnumerationCapK)
    throw CapacityError("brute_force_detect: K exceeds enumeration cap");
  if (profile.voter_count() == 0)
    throw ArgumentError("brute_force_detect: profile has no voters");

  const std::vector<Preference> all = enumerate_preferences(k);
  const std::size_t total = all.size();
  std::vector<std::uint64_t> freq(total);
  for (std::size_t i = 0; i < total; ++i) freq[i] = profile.frequency(all[i]);

  std::vector<std::vector<int>> dist(total, std::vector<int>(total));
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) dist[i][j] = inversion_distance(all[i], all[j]);

  const bool flexible = kind == ConsensusKind::flexible;
  ConsensusReport report;
  report.kind = kind;
  report.max_frequency = profile.max_frequency();

  // Exists a pair with mu' > mu (over all K! preferences); drives the
  // failure taxonomy for level-1.
  bool any_freq_pair = false;
  for (std::size_t i = 1; i < total && !any_freq_pair; ++i)
    any_freq_pair = freq[i] != freq[0];

  for (std::size_t c = 0; c < total; ++c) {
    bool condition1 = true;
    bool condition2 = false;
    for (std::size_t i = 0; i < total && condition1; ++i) {
      for (std::size_t j = 0; j < total; ++j) {
        if (freq[i] <= freq[j]) continue;
        const int di = dist[i][c];
        const int dj = dist[j][c];
        if (flexible ? di > dj : di >= dj) {
          condition1 = false;
          break;
        }
        if (di < dj) condition2 = true;
      }
    }
    if (condition1 && (flexible || condition2)) report.pivots.push_back(all[c]);
  }

  if (report.pivots.empty()) {
    if (flexible)
      report.failure_reason = FailureReason::flexible_condition1_violated_all_candidates;
    else if (!any_freq_pair)
      report.failure_reason = FailureReason::condition2_violated;
    else
      report.failure_reason = FailureReason::condition1_violated_all_candidates;
    return report;
  }

  report.outcome = DetectOutcome::found;
  int d_hat = 0;
  for (const auto& [pref, f] : profile.entries())
    d_hat = std::max(d_hat, inversion_distance(pref, report.pivots.front()));
  report.d_hat = d_hat;
  return report;
}

}  // namespace consensus
