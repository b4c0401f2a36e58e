#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "consensus/detect.hpp"
#include "consensus/errors.hpp"
#include "consensus/preference.hpp"
#include "consensus/profile.hpp"
#include "consensus/rng.hpp"

namespace consensus {

/// Pairwise weak-majority relation: beats(a, b) holds when at least as many
/// voters rank a above b as the reverse. On an exact tie both directions
/// hold, so the relation is deliberately not antisymmetric.
class MajorityRelation {
 public:
  MajorityRelation(int k, std::vector<std::uint8_t> beats)
      : k_(k), beats_(std::move(beats)) {}

  int alternative_count() const { return k_; }

  bool beats(int a, int b) const {
    return beats_[static_cast<std::size_t>(a) * static_cast<std::size_t>(k_) +
                  static_cast<std::size_t>(b)] != 0;
  }

 private:
  int k_;
  std::vector<std::uint8_t> beats_;  // row-major k x k, diagonal false
};

inline MajorityRelation majority_relation(const Profile& profile) {
  const int k = profile.alternative_count();
  std::vector<std::uint64_t> wins(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (const auto& [pref, f] : profile.entries()) {
    const auto& r = pref.ranking();
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        wins[static_cast<std::size_t>(r[static_cast<std::size_t>(i)]) *
                 static_cast<std::size_t>(k) +
             static_cast<std::size_t>(r[static_cast<std::size_t>(j)])] += f;
  }
  std::vector<std::uint8_t> beats(wins.size(), 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      const std::size_t ab = static_cast<std::size_t>(a) * static_cast<std::size_t>(k) +
                             static_cast<std::size_t>(b);
      const std::size_t ba = static_cast<std::size_t>(b) * static_cast<std::size_t>(k) +
                             static_cast<std::size_t>(a);
      beats[ab] = wins[ab] >= wins[ba] ? 1 : 0;
    }
  return MajorityRelation(k, std::move(beats));
}

/// Alternatives that beat every other alternative by a weak majority.
/// May be empty (majority cycles) or hold several alternatives (ties).
inline std::vector<int> weak_condorcet_winners(const Profile& profile) {
  const MajorityRelation rel = majority_relation(profile);
  const int k = profile.alternative_count();
  std::vector<int> winners;
  for (int a = 0; a < k; ++a) {
    bool wins_all = true;
    for (int b = 0; b < k && wins_all; ++b)
      if (b != a && !rel.beats(a, b)) wins_all = false;
    if (wins_all) winners.push_back(a);
  }
  return winners;
}

/// A positional scoring rule: a nonincreasing score vector indexed by rank.
class ScoringRule {
 public:
  explicit ScoringRule(std::vector<double> scores) : scores_(std::move(scores)) {
    for (std::size_t i = 0; i + 1 < scores_.size(); ++i)
      if (scores_[i] < scores_[i + 1])
        throw ArgumentError("ScoringRule: scores must be nonincreasing");
  }

  static ScoringRule plurality(int k) { return step(k, 1); }

  static ScoringRule borda(int k) {
    std::vector<double> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = static_cast<double>(k - 1 - i);
    return ScoringRule(std::move(s));
  }

  static ScoringRule veto(int k) { return step(k, k - 1); }

  /// (1,...,1,0,...,0) with `cut` leading ones. These span every
  /// nonincreasing vector as nonnegative combinations (plus a constant).
  static ScoringRule step(int k, int cut) {
    std::vector<double> s(static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < cut && i < k; ++i) s[static_cast<std::size_t>(i)] = 1.0;
    return ScoringRule(std::move(s));
  }

  const std::vector<double>& scores() const { return scores_; }
  int size() const { return static_cast<int>(scores_.size()); }

 private:
  std::vector<double> scores_;
};

/// Per-alternative score totals, weighted by ballot frequencies.
inline std::vector<double> scoring_totals(const Profile& profile, const ScoringRule& rule) {
  const int k = profile.alternative_count();
  if (rule.size() != k) throw DimensionError("scoring_totals: rule length != K");
  std::vector<double> totals(static_cast<std::size_t>(k), 0.0);
  for (const auto& [pref, f] : profile.entries()) {
    const auto& r = pref.ranking();
    for (int pos = 0; pos < k; ++pos)
      totals[static_cast<std::size_t>(r[static_cast<std::size_t>(pos)])] +=
          static_cast<double>(f) * rule.scores()[static_cast<std::size_t>(pos)];
  }
  return totals;
}

/// Plurality, Borda, veto, every step vector, and seeded random nonincreasing
/// integer vectors.
inline std::vector<ScoringRule> standard_scoring_battery(int k,
                                                         std::uint64_t seed = 0x5c0515ull,
                                                         int random_rules = 5) {
  std::vector<ScoringRule> battery;
  battery.push_back(ScoringRule::plurality(k));
  battery.push_back(ScoringRule::borda(k));
  battery.push_back(ScoringRule::veto(k));
  for (int cut = 1; cut < k; ++cut) battery.push_back(ScoringRule::step(k, cut));
  SplitMix64 rng(seed);
  for (int r = 0; r < random_rules; ++r) {
    std::vector<double> s(static_cast<std::size_t>(k));
    for (double& v : s) v = static_cast<double>(rng.next_below(1000));
    std::sort(s.rbegin(), s.rend());
    battery.emplace_back(std::move(s));
  }
  return battery;
}

/// Outcome of checking the stability guarantees a flexible pivot implies.
struct StabilityRecord {
  bool pivot_pairs_majority_ok = true;   // a over b in pivot => a weakly beats b
  bool condorcet_winner_ok = true;       // Best(pivot) is a weak Condorcet winner
  bool odd_case_applicable = false;      // n odd
  bool odd_majority_matches_pivot = true;
  bool odd_pivot_unique = true;
  bool odd_uniqueness_checked = false;   // requires K within the enumeration cap
  bool even_case_applicable = false;     // n even
  bool even_ties_witnessed = true;       // reversed majority pairs have a pivot witness
  bool scoring_ok = true;                // no pivot pair is score-inverted by any rule
  int rules_tested = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Verifies every stability guarantee for a profile/pivot pair: weak-majority
/// agreement with the pivot order, Condorcet winnership of Best(pivot), the
/// odd-n transitive-majority and uniqueness properties, even-n tie witnesses,
/// and score monotonicity along the pivot order for a scoring-rule battery.
/// The pivot must satisfy Flexible Condition 1.
inline StabilityRecord verify_stability(const Profile& profile, const Preference& pivot,
                                        std::uint64_t battery_seed = 0x5c0515ull) {
  if (!check_flexible_condition1(profile, pivot))
    throw ArgumentError("verify_stability: pivot does not satisfy Flexible Condition 1");

  const int k = profile.alternative_count();
  StabilityRecord rec;
  const MajorityRelation rel = majority_relation(profile);
  const auto& order = pivot.ranking();

  auto note = [&rec](std::string msg) { rec.violations.push_back(std::move(msg)); };

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int a = order[static_cast<std::size_t>(i)];
      const int b = order[static_cast<std::size_t>(j)];
      if (!rel.beats(a, b)) {
        rec.pivot_pairs_majority_ok = false;
        note("pivot ranks " + std::to_string(a) + " over " + std::to_string(b) +
             " but it loses the pairwise majority");
      }
    }

  const std::vector<int> winners = weak_condorcet_winners(profile);
  if (std::find(winners.begin(), winners.end(), pivot.best()) == winners.end()) {
    rec.condorcet_winner_ok = false;
    note("Best(pivot) is not a weak Condorcet winner");
  }

  if (profile.voter_count() % 2 == 1) {
    rec.odd_case_applicable = true;
    // With an odd voter count there are no ties, so the majority relation is
    // a tournament; it must equal the pivot order exactly (hence transitive).
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const int a = order[static_cast<std::size_t>(i)];
        const int b = order[static_cast<std::size_t>(j)];
        if (!rel.beats(a, b) || rel.beats(b, a)) {
          rec.odd_majority_matches_pivot = false;
          note("odd n: majority relation disagrees with pivot on pair (" +
               std::to_string(a) + "," + std::to_string(b) + ")");
        }
      }
    if (k <= kEnumerationCapK) {
      rec.odd_uniqueness_checked = true;
      int passing = 0;
      for (const Preference& q : enumerate_preferences(k))
        if (check_flexible_condition1(profile, q)) ++passing;
      if (passing != 1) {
        rec.odd_pivot_unique = false;
        note("odd n: expected a unique flexible pivot, found " + std::to_string(passing));
      }
    }
  } else {
    rec.even_case_applicable = true;
    // A majority pair running against the pivot order must be witnessed by
    // another flexible pivot obtained by switching the two alternatives.
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const int a = order[static_cast<std::size_t>(i)];
        const int b = order[static_cast<std::size_t>(j)];
        if (!rel.beats(b, a)) continue;  // pivot ranks a over b; offender is b M a
        if (!check_flexible_condition1(profile, apply_switch(pivot, a, b))) {
          rec.even_ties_witnessed = false;
          note("even n: majority pair (" + std::to_string(b) + "," + std::to_string(a) +
               ") has no switched pivot witness");
        }
      }
  }

  const auto battery = standard_scoring_battery(k, battery_seed);
  rec.rules_tested = static_cast<int>(battery.size());
  for (std::size_t ri = 0; ri < battery.size(); ++ri) {
    const std::vector<double> totals = scoring_totals(profile, battery[ri]);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const int a = order[static_cast<std::size_t>(i)];
        const int b = order[static_cast<std::size_t>(j)];
        if (totals[static_cast<std::size_t>(a)] < totals[static_cast<std::size_t>(b)]) {
          rec.scoring_ok = false;
          note("rule #" + std::to_string(ri) + " scores " + std::to_string(b) + " above " +
               std::to_string(a) + " against the pivot order");
        }
      }
  }

  return rec;
}

}  // namespace consensus
