#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <string>
#include <vector>

#include "consensus/detect.hpp"
#include "consensus/impartial.hpp"
#include "consensus/mallows.hpp"
#include "consensus/profile.hpp"
#include "consensus/rng.hpp"
#include "consensus/single_peaked.hpp"
#include "consensus/stability.hpp"

namespace consensus {

struct FractionEstimate {
  double value = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;

  friend bool operator==(const FractionEstimate&, const FractionEstimate&) = default;
};

/// Aggregated results for one sweep point.
struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t level1_found = 0;
  std::uint64_t flexible_found = 0;
  std::uint64_t single_peaked_found = 0;
  std::uint64_t stability_checked = 0;
  std::uint64_t stability_violations = 0;
  std::uint64_t seed = 0;
  FractionEstimate level1;
  FractionEstimate flexible;
  FractionEstimate single_peaked;

  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

/// One point of a simulation grid.
struct SweepPoint {
  enum class Model { mallows, impartial };

  Model model = Model::impartial;
  int k = 3;
  std::uint64_t n = 0;  // voters per trial (mallows)
  double phi = 1.0;     // dispersion (mallows)
  std::uint64_t m = 0;  // expected voters (impartial)

  static SweepPoint mallows(int k, std::uint64_t n, double phi) {
    SweepPoint p;
    p.model = Model::mallows;
    p.k = k;
    p.n = n;
    p.phi = phi;
    return p;
  }

  static SweepPoint impartial(int k, std::uint64_t m) {
    SweepPoint p;
    p.model = Model::impartial;
    p.k = k;
    p.m = m;
    return p;
  }
};

struct SweepOptions {
  bool check_single_peaked = true;
  bool check_stability = true;
  int threads = 1;
  double ci_z = 3.0;  // normal-approximation binomial CI half-width in sigmas
};

namespace detail {

struct SweepCounts {
  std::uint64_t level1 = 0;
  std::uint64_t flexible = 0;
  std::uint64_t single_peaked = 0;
  std::uint64_t stability_checked = 0;
  std::uint64_t stability_violations = 0;

  SweepCounts& operator+=(const SweepCounts& o) {
    level1 += o.level1;
    flexible += o.flexible;
    single_peaked += o.single_peaked;
    stability_checked += o.stability_checked;
    stability_violations += o.stability_violations;
    return *this;
  }
};

inline SweepCounts run_trial_range(const SweepPoint& point, std::uint64_t begin,
                                   std::uint64_t end, std::uint64_t master_seed,
                                   const SweepOptions& opts) {
  SweepCounts counts;
  for (std::uint64_t t = begin; t < end; ++t) {
    const std::uint64_t trial_seed = derive_stream_seed(master_seed, t);
    Profile profile =
        point.model == SweepPoint::Model::mallows
            ? mallows_profile(MallowsParams(point.k, point.phi, Preference::identity(point.k)),
                              point.n, trial_seed)
            : impartial_profile(ImpartialParams(point.k, point.m), trial_seed);

    const ConsensusReport level1 = detect_level1(profile);
    const ConsensusReport flexible = detect_flexible(profile);
    if (level1.found()) ++counts.level1;
    if (flexible.found()) ++counts.flexible;
    if (opts.check_single_peaked && is_single_peaked(profile)) ++counts.single_peaked;
    if (opts.check_stability && flexible.found()) {
      ++counts.stability_checked;
      if (!verify_stability(profile, flexible.pivots.front()).ok())
        ++counts.stability_violations;
    }
  }
  return counts;
}

inline FractionEstimate fraction_estimate(std::uint64_t count, std::uint64_t trials, double z) {
  FractionEstimate est;
  if (trials == 0) return est;
  const double p = static_cast<double>(count) / static_cast<double>(trials);
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  est.value = p;
  est.ci_low = std::max(0.0, p - z * sigma);
  est.ci_high = std::min(1.0, p + z * sigma);
  return est;
}

}  // namespace detail

/// Runs `trials` independent experiments at a sweep point. Trial seeds derive
/// from (master_seed, trial index), so results are reproducible and
/// independent of execution order or thread count.
inline TrialStats run_sweep(const SweepPoint& point, std::uint64_t trials,
                            std::uint64_t master_seed, const SweepOptions& opts = {}) {
  if (trials < 1) throw ArgumentError("run_sweep: need at least one trial");

  detail::SweepCounts counts;
  const int threads = std::max(1, opts.threads);
  if (threads == 1 || trials < 64) {
    counts = detail::run_trial_range(point, 0, trials, master_seed, opts);
  } else {
    const std::uint64_t chunk = (trials + threads - 1) / static_cast<std::uint64_t>(threads);
    std::vector<std::future<detail::SweepCounts>> parts;
    for (std::uint64_t begin = 0; begin < trials; begin += chunk) {
      const std::uint64_t end = std::min(trials, begin + chunk);
      parts.push_back(std::async(std::launch::async, detail::run_trial_range, point, begin,
                                 end, master_seed, opts));
    }
    for (auto& part : parts) counts += part.get();
  }

  TrialStats stats;
  stats.trials = trials;
  stats.level1_found = counts.level1;
  stats.flexible_found = counts.flexible;
  stats.single_peaked_found = counts.single_peaked;
  stats.stability_checked = counts.stability_checked;
  stats.stability_violations = counts.stability_violations;
  stats.seed = master_seed;
  stats.level1 = detail::fraction_estimate(counts.level1, trials, opts.ci_z);
  stats.flexible = detail::fraction_estimate(counts.flexible, trials, opts.ci_z);
  stats.single_peaked = detail::fraction_estimate(counts.single_peaked, trials, opts.ci_z);
  return stats;
}

}  // namespace consensus
