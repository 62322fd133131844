#pragma once

#include <cstdint>

#include "davenport/rational.hpp"

namespace davenport {

/// Euler-Mascheroni constant, 30 digits. Validated against the harmonic
/// partial sum at n = 1e8 in the test suite.
inline constexpr double euler_gamma = 0.577215664901532860606512090082;

/// Exact Bernoulli numbers B_0..B_max (convention B_1 = -1/2), built once by
/// the defining recurrence sum_{j<=m} C(m+1, j) B_j = 0. Immutable after
/// construction; concurrent reads are safe.
class BernoulliTable {
 public:
  explicit BernoulliTable(int max_index);

  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& at(int m) const;

 private:
  std::vector<Rational> values_;
};

/// Exact B_m.
Rational bernoulli(int m);

/// Exact zeta(-k) = (-1)^k B_{k+1} / (k+1) for integer k >= 0.
Rational zeta_nonpositive(int k);

/// zeta(s) for real s > 1 to absolute accuracy 1e-12, by direct summation to
/// a fixed truncation with a four-term Euler-Maclaurin tail correction.
double zeta_real(double s);

/// The exact constant block of the degree-N expansion:
///   C_N = N! * sum_{k=0}^{N-1} (-1)^k zeta(-k) / ((N-k)! k!).
/// C_1 = -1/2 recovers the classical {nx} - 1/2 series.
Rational pn_constant(int N);

struct HarmonicEstimate {
  double h_n;       // exact partial sum H_n
  double estimate;  // log n + gamma + 1/(2n)
};

HarmonicEstimate harmonic_estimate(std::uint64_t n);

}  // namespace davenport
