#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "consensus/errors.hpp"
#include "consensus/mahonian.hpp"
#include "consensus/preference.hpp"
#include "consensus/profile.hpp"
#include "consensus/rng.hpp"

namespace consensus {

/// Impartial-culture random process: each of the K! preferences receives an
/// independent Binomial(m, 1/K!) number of voters, so the expected total
/// voter count is m.
struct ImpartialParams {
  int k;
  std::uint64_t m;

  ImpartialParams(int k_, std::uint64_t m_) : k(k_), m(m_) {
    if (k < 3) throw ArgumentError("ImpartialParams: K must be at least 3");
    if (m < 1) throw ArgumentError("ImpartialParams: m must be at least 1");
  }
};

/// One draw of the process. Preferences that draw zero voters are omitted;
/// the result can be empty when m is very small.
inline Profile impartial_profile(const ImpartialParams& params, std::uint64_t seed) {
  const std::vector<Preference> all = enumerate_preferences(params.k);
  const double p = 1.0 / static_cast<double>(factorial_u64(params.k));
  SplitMix64 rng(seed);
  std::vector<std::pair<Preference, std::uint64_t>> counts;
  for (const Preference& pref : all) {
    const std::uint64_t b = binomial_draw(rng, params.m, p);
    if (b > 0) counts.emplace_back(pref, b);
  }
  return Profile::from_counts(params.k, counts);
}

}  // namespace consensus
