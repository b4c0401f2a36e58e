#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "consensus/bignat.hpp"
#include "consensus/errors.hpp"
#include "consensus/mahonian.hpp"

namespace consensus {

/// Exact rationals for the flexible lower bound are built up to this K;
/// beyond it the value comes from log-gamma evaluation.
inline constexpr int kFlexibleBoundExactCapK = 8;

/// Asymptotic probability that t i.i.d. Binomial(m, p) variables are all
/// equal: (2*pi*p*(1-p)*m)^((1-t)/2) / sqrt(t). The ratio to the true
/// probability tends to 1 as m grows; exact 1 at t = 1.
inline double p_equal_approx(std::uint64_t m, double p, int t) {
  if (m < 1) throw ArgumentError("p_equal_approx: m must be at least 1");
  if (!(p > 0.0 && p < 0.5)) throw ArgumentError("p_equal_approx: p must be in (0, 1/2)");
  if (t < 1) throw ArgumentError("p_equal_approx: t must be at least 1");
  const double base = 2.0 * std::numbers::pi * p * (1.0 - p) * static_cast<double>(m);
  return std::pow(base, (1.0 - static_cast<double>(t)) / 2.0) / std::sqrt(static_cast<double>(t));
}

/// K! - C(K,2) - 1: the exponent under the square root in the level-1
/// upper bound (2 for K = 3, 17 for K = 4).
inline std::uint64_t level1_upper_bound_exponent(int k) {
  if (k < 3) throw ArgumentError("level1_upper_bound_exponent: K must be at least 3");
  return factorial_u64(k) - static_cast<std::uint64_t>(max_inversion_distance(k)) - 1;
}

struct Level1Bound {
  double raw;              // K! / sqrt((2*pi*m/K!)^exponent); may exceed 1 for small m
  double clamped;          // min(raw, 1)
  std::uint64_t exponent;  // K! - C(K,2) - 1
};

/// Closed-form upper bound on the probability of level-1 consensus under the
/// impartial-culture process with parameter m. Decays like m^(-exponent/2).
inline Level1Bound level1_upper_bound(std::uint64_t m, int k) {
  if (m < 1) throw ArgumentError("level1_upper_bound: m must be at least 1");
  const std::uint64_t e = level1_upper_bound_exponent(k);
  const double kfact = static_cast<double>(factorial_u64(k));
  const double base = 2.0 * std::numbers::pi * static_cast<double>(m) / kfact;
  const double raw = kfact / std::pow(base, static_cast<double>(e) / 2.0);
  return {raw, std::min(raw, 1.0), e};
}

struct FlexibleBound {
  double value;        // numerator / denominator (0.0 when it underflows double)
  double log10_value;  // always meaningful, even when value underflows
  bool exact;          // numerator/denominator populated (K within the exact cap)
  BigNat numerator;    // product of T(K,d)! over d = 1..C(K,2)
  BigNat denominator;  // (K! - 1)!
};

/// Lower bound on the asymptotic probability of Flexible Consensus under
/// impartial culture: the fraction of frequency orderings compatible with
/// the distance classes around the most frequent preference.
inline FlexibleBound flexible_lower_bound(int k, int exact_cap = kFlexibleBoundExactCapK,
                                          int table_cap = kMahonianTableCapK) {
  const MahonianTable table = mahonian_table(k, table_cap);
  FlexibleBound bound;
  bound.exact = k <= exact_cap;
  if (bound.exact) {
    BigNat num{1};
    for (int d = 1; d <= max_inversion_distance(k); ++d) {
      const std::uint64_t c = *table.at(d).to_u64();
      for (std::uint64_t i = 2; i <= c; ++i) num *= i;
    }
    bound.numerator = std::move(num);
    bound.denominator = factorial_big(factorial_u64(k) - 1);
    bound.value = BigNat::ratio(bound.numerator, bound.denominator);
    bound.log10_value = (bound.numerator.ln() - bound.denominator.ln()) / std::numbers::ln10;
  } else {
    double ln_num = 0.0;
    for (int d = 1; d <= max_inversion_distance(k); ++d)
      ln_num += std::lgamma(table.at(d).to_double() + 1.0);
    const double ln_den = std::lgamma(static_cast<double>(factorial_u64(k)));
    bound.value = std::exp(ln_num - ln_den);
    bound.log10_value = (ln_num - ln_den) / std::numbers::ln10;
  }
  return bound;
}

}  // namespace consensus
