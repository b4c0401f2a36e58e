#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "consensus/detect.hpp"
#include "consensus/sweep.hpp"

namespace consensus {

inline const char* to_string(ConsensusKind kind) {
  return kind == ConsensusKind::level1 ? "level1" : "flexible";
}

inline const char* to_string(DetectOutcome outcome) {
  return outcome == DetectOutcome::found ? "found" : "not_found";
}

inline const char* to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::condition2_violated:
      return "condition2_violated";
    case FailureReason::condition1_violated_all_candidates:
      return "condition1_violated_all_candidates";
    case FailureReason::flexible_condition1_violated_all_candidates:
      return "flexible_condition1_violated_all_candidates";
    case FailureReason::none:
      break;
  }
  return "none";
}

inline nlohmann::json report_to_json(const ConsensusReport& report) {
  nlohmann::json pivots = nlohmann::json::array();
  for (const Preference& p : report.pivots) pivots.push_back(p.ranking());
  nlohmann::json j{
      {"kind", to_string(report.kind)},
      {"outcome", to_string(report.outcome)},
      {"pivots", std::move(pivots)},
      {"failure_reason", to_string(report.failure_reason)},
      {"max_frequency", report.max_frequency},
  };
  if (report.d_hat)
    j["d_hat"] = *report.d_hat;
  else
    j["d_hat"] = nullptr;
  return j;
}

inline nlohmann::json stats_to_json(const SweepPoint& point, const TrialStats& stats) {
  nlohmann::json j{
      {"model", point.model == SweepPoint::Model::mallows ? "mallows" : "impartial"},
      {"k", point.k},
      {"trials", stats.trials},
      {"seed", stats.seed},
      {"level1",
       {{"count", stats.level1_found},
        {"fraction", stats.level1.value},
        {"ci", {stats.level1.ci_low, stats.level1.ci_high}}}},
      {"flexible",
       {{"count", stats.flexible_found},
        {"fraction", stats.flexible.value},
        {"ci", {stats.flexible.ci_low, stats.flexible.ci_high}}}},
      {"single_peaked",
       {{"count", stats.single_peaked_found},
        {"fraction", stats.single_peaked.value},
        {"ci", {stats.single_peaked.ci_low, stats.single_peaked.ci_high}}}},
      {"stability",
       {{"checked", stats.stability_checked}, {"violations", stats.stability_violations}}},
  };
  if (point.model == SweepPoint::Model::mallows) {
    j["n"] = point.n;
    j["phi"] = point.phi;
  } else {
    j["m"] = point.m;
  }
  return j;
}

/// Stable column set for sweep CSV output.
inline std::string sweep_csv_header() {
  return "k,n_or_m,phi,trials,level1_count,flexible_count,single_peaked_count,"
         "level1_frac,flexible_frac,sp_frac,level1_ci_low,level1_ci_high,"
         "flexible_ci_low,flexible_ci_high,sp_ci_low,sp_ci_high,seed";
}

inline std::string sweep_csv_row(const SweepPoint& point, const TrialStats& stats) {
  const std::uint64_t n_or_m = point.model == SweepPoint::Model::mallows ? point.n : point.m;
  const double phi = point.model == SweepPoint::Model::mallows ? point.phi : 1.0;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%d,%llu,%g,%llu,%llu,%llu,%llu,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%llu",
                point.k, static_cast<unsigned long long>(n_or_m), phi,
                static_cast<unsigned long long>(stats.trials),
                static_cast<unsigned long long>(stats.level1_found),
                static_cast<unsigned long long>(stats.flexible_found),
                static_cast<unsigned long long>(stats.single_peaked_found), stats.level1.value,
                stats.flexible.value, stats.single_peaked.value, stats.level1.ci_low,
                stats.level1.ci_high, stats.flexible.ci_low, stats.flexible.ci_high,
                stats.single_peaked.ci_low, stats.single_peaked.ci_high,
                static_cast<unsigned long long>(stats.seed));
  return buf;
}

}  // namespace consensus
