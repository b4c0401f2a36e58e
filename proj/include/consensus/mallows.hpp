#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "consensus/errors.hpp"
#include "consensus/preference.hpp"
#include "consensus/profile.hpp"
#include "consensus/rng.hpp"

namespace consensus {

/// Mallows phi model: a ranking's probability is proportional to
/// phi^(distance from the reference order). phi = 1 is the uniform
/// (impartial culture) limit; phi -> 0 concentrates on the reference.
struct MallowsParams {
  int k;
  double phi;          // in (0, 1]
  Preference reference;

  MallowsParams(int k_, double phi_, Preference reference_)
      : k(k_), phi(phi_), reference(std::move(reference_)) {
    if (!(phi > 0.0 && phi <= 1.0))
      throw ArgumentError("MallowsParams: phi must be in (0, 1]");
    if (reference.size() != k) throw DimensionError("MallowsParams: reference K mismatch");
  }
};

/// One exact Mallows draw by repeated insertion: the i-th reference item is
/// inserted at position j (from the top) with weight phi^(i-j), which makes
/// the total insertion displacement distribute exactly like the inversion
/// distance from the reference.
inline Preference mallows_draw(const MallowsParams& params, SplitMix64& rng) {
  const auto& ref = params.reference.ranking();
  std::vector<int> order;
  order.reserve(ref.size());
  order.push_back(ref[0]);
  for (std::size_t i = 2; i <= ref.size(); ++i) {
    double total = 0.0;
    double w = 1.0;
    for (std::size_t e = 0; e < i; ++e) {
      total += w;
      w *= params.phi;
    }
    const double u = rng.next_double() * total;
    double acc = 0.0;
    w = 1.0;
    std::size_t insert_at = 0;  // weight phi^e belongs to position i-1-e
    for (std::size_t e = 0; e < i; ++e) {
      acc += w;
      if (u < acc || e + 1 == i) {
        insert_at = i - 1 - e;
        break;
      }
      w *= params.phi;
    }
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(insert_at), ref[i - 1]);
  }
  return Preference(std::move(order));
}

/// n independent Mallows draws aggregated into a Profile; deterministic for
/// a given seed.
inline Profile mallows_profile(const MallowsParams& params, std::uint64_t n,
                               std::uint64_t seed) {
  if (n == 0) throw ArgumentError("mallows_profile: need at least one voter");
  SplitMix64 rng(seed);
  std::vector<std::pair<Preference, std::uint64_t>> counts;
  counts.reserve(64);
  for (std::uint64_t i = 0; i < n; ++i) counts.emplace_back(mallows_draw(params, rng), 1);
  return Profile::from_counts(params.k, counts);
}

}  // namespace consensus
