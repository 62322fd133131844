#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "davenport/series.hpp"

namespace davenport {

// Empirical probes for the coefficient-sum criteria
//
//   (head)  sum_{j<=m} j|c_j|       = O(m v(1/m))
//   (tail)  sum_{j>=m} |c_j|        = O(v(1/m))
//
// and for increment growth |f(x+h) - f(x)| against v(|h|). Everything here is
// evidence at a fixed table limit, never a membership proof.

enum class ModulusKind {
  log_m,             // v(1/m) = log m
  power_alpha,       // v(h) = h^alpha, alpha > 0
  increasing_weight  // v(1/m) = m * w(m) for an increasing weight function w
};

struct ModulusSpec {
  ModulusKind kind = ModulusKind::log_m;
  double alpha = 1.0;                                     // power_alpha only
  ArithmeticFunctionId weight = ArithmeticFunctionId::log();  // increasing_weight only

  /// v(1/m); requires m >= 2 so every kind is positive.
  double at_inverse(std::size_t m) const;
  /// v(|h|) for 0 < |h| < 1.
  double at(double h) const;
};

struct GrowthReport {
  std::vector<std::size_t> m_grid;
  std::vector<double> s1;      // sum_{j<=m} j c_j
  std::vector<double> s2;      // sum_{j=m}^{J} c_j, J = coefficient table limit
  std::vector<double> ratio1;  // s1 / (m v(1/m))
  std::vector<double> ratio2;  // s2 / v(1/m)
  std::vector<double> mass;    // sum_{j<=m} c_j, input to the divergence screen
  std::string verdict_head;    // "bounded" / "unbounded" / "indeterminate"
  std::string verdict_tail;
};

/// Growth report for c_j = |a_j| + |b_j|. The grid must be ascending, with
/// every m in [2, table limit].
///
/// Verdicts: a criterion is "bounded" when the largest ratio over the top two
/// decades of m stays below 1.25x the largest ratio over the preceding
/// decades. The tail verdict additionally screens for divergence of the
/// coefficient mass itself: when the per-decade increments of sum_{j<=m} c_j
/// keep growing (last increment > 1.5x the first), no table limit can bound
/// the tail sums and the verdict is "unbounded". Grids spanning fewer than
/// three decades give "indeterminate".
GrowthReport coefficient_growth(const FourierCoefficients& coeffs,
                                const std::vector<std::size_t>& m_grid, const ModulusSpec& spec);

struct IncrementSample {
  double x = 0.0;
  double h = 0.0;
  double delta = 0.0;  // |f(x+h) - f(x)|
  double bound = 0.0;  // v(|h|)
};

struct IncrementReport {
  std::vector<IncrementSample> samples;
  double max_ratio = 0.0;  // max delta/bound over samples with bound > 0
  std::uint64_t seed = 0;
  double truncation_tail_spread = 0.0;  // noise scale of the underlying partial sums
};

/// Samples an arbitrary f over explicit (x, h) pairs.
std::vector<IncrementSample> increment_samples(const std::function<double(double)>& f,
                                               const ModulusSpec& spec,
                                               const std::vector<std::pair<double, double>>& xs);

/// Increment probe of the fractional-part side at the params' truncation.
/// Sample i uses x = frac(k sqrt 2) (odd i) or frac(k golden-ratio) (even i)
/// with k = seed + i, and h = sqrt(2) 2^{-j} with j cycling over [4, 16];
/// irrationals are represented by their nearest doubles, so the probe is a
/// high-denominator rational approximation by construction.
IncrementReport increment_probe(const ExpansionParams& params, const ModulusSpec& spec,
                                std::size_t sample_count, std::uint64_t seed,
                                const FactorSieve& sieve);

/// Least-squares slope of log(delta) against log(|h|) over the samples:
/// the fitted Lipschitz exponent. Needs >= 8 samples spanning at least three
/// dyadic decades of h. All-zero deltas yield +infinity.
double lipschitz_exponent_fit(const std::vector<IncrementSample>& samples);

}  // namespace davenport
