#pragma once

#include <cstdint>
#include <vector>

#include "davenport/arith.hpp"

namespace davenport {

// Both sides of the degree-N fractional-part expansion
//
//   sum_n (a(n)/n) ({nx}^N + C_N)  =  sum_n a_n sin(2 pi n x) + b_n cos(2 pi n x)
//
// evaluated at finite truncations, with residual and tail-variation reporting.
// The N = 1 specialization is the classical sine expansion of the weighted
// fractional-part series.

struct ExpansionParams {
  ArithmeticFunctionId id;
  int degree = 1;  // N >= 1
  double x = 0.25;
  std::size_t terms_lhs = 100000;
  std::size_t terms_rhs = 100000;
  bool cesaro = false;  // (C,1) smoothing of the trigonometric side

  void validate() const;
};

/// Coefficient arrays of the trigonometric side, indexed by n (entry 0 unused).
/// For N = 1 every b_n is exactly zero.
struct FourierCoefficients {
  std::vector<double> a;
  std::vector<double> b;

  std::size_t terms() const { return a.empty() ? 0 : a.size() - 1; }

  /// CSV export, header `n,a,b`.
  void write_csv(std::ostream& os) const;
};

struct SideEvaluation {
  double value = 0.0;
  /// max - min of the running partial sums over the last decade of terms
  /// [terms/10, terms]; a cheap stand-in for truncation uncertainty.
  double tail_spread = 0.0;
  /// Set when some sampled nx lies within 1e-12 of an integer (the
  /// discontinuity set of the fractional-part side).
  bool discontinuity_flag = false;
};

struct EvalReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs|
  double lhs_tail_spread = 0.0;
  double rhs_tail_spread = 0.0;
  bool discontinuity_flag = false;
};

/// Fractional-part side: sum_{n<=terms_lhs} (a(n)/n) ({nx}^N + C_N),
/// ascending n with compensated summation. x is reduced mod 1 first, so the
/// value is exactly 1-periodic whenever x+1 is representable.
SideEvaluation lhs_evaluate(const ExpansionParams& params, const FactorSieve& sieve);
double lhs_partial(const ExpansionParams& params, const FactorSieve& sieve);

/// Coefficients of the trigonometric side:
///   a_n = -(N!/(pi n)) sum_k F_k(n) cos(pi k/2) / ((N-k)! (2 pi)^k)
///   b_n = +(N!/(pi n)) sum_k F_k(n) sin(pi k/2) / ((N-k)! (2 pi)^k)
/// with cos/sin(pi k/2) taken from the exact period-4 integer pattern. These
/// are the harmonics obtained by expanding {nx}^N termwise with the exact
/// monomial moments and collecting frequencies; for N = 1 they reduce to
/// a_n = -F_0(n)/(pi n), for N = 2 to a_n = -F_0(n)/(pi n) and
/// b_n = F_1(n)/(pi^2 n).
FourierCoefficients fourier_coefficients(const ArithmeticFunctionId& id, int degree,
                                         std::size_t terms, const FactorSieve& sieve,
                                         int workers = 1);

/// Trigonometric side at x, ascending n; with cesaro the (C,1) average of the
/// partial sums is returned instead.
SideEvaluation rhs_evaluate(const FourierCoefficients& coeffs, double x, bool cesaro = false);
double rhs_partial(const FourierCoefficients& coeffs, double x, bool cesaro = false);

/// Evaluates both sides and the residual at the params' truncations.
EvalReport verify_identity(const ExpansionParams& params, const FactorSieve& sieve,
                           int workers = 1);

struct ClassicReport {
  double lhs;  // (1/pi) sum_{n<=terms} A(n)/n sin(2 pi n x), A = a*1
  double rhs;  // -sum_{n<=terms} a(n)/n ({nx} - 1/2)
};

/// Both sides of the classical (N = 1) expansion; the identity makes the two
/// reported values agree in the limit.
ClassicReport classic_davenport(const ArithmeticFunctionId& id, double x, std::size_t terms,
                                const FactorSieve& sieve);

}  // namespace davenport
