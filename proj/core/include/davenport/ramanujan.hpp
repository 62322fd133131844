#pragma once

#include <cstdint>
#include <vector>

#include "davenport/arith.hpp"

namespace davenport {

// Ramanujan sums c_q(n) and the classical identities they satisfy:
//
//   (A)  (1/zeta(s)) sum_n c_k(n) n^{-s}  =  sum_{d|k} mu(k/d) d^{1-s},  s > 1
//   (B)  sum_m c_m(n) m^{-r}  =  sigma_{r-1}(n) / (n^{r-1} zeta(r)),     r > 1
//   (C)  sum_m c_m(n) / m  =  0   (conditionally convergent; trend only)
//
// plus the uniform bound |c_q(n)| <= sigma_1(n). The primary evaluation is
// the exact divisor/Mobius sum; the defining exponential sum is kept as an
// independent test oracle.

/// c_q(n) = sum_{d | gcd(q,n)} d mu(q/d), exact in 64-bit integers.
/// The sieve must cover q.
std::int64_t ramanujan_c(std::uint64_t q, std::uint64_t n, const FactorSieve& sieve);

/// Dense table of c_q(n) for q <= q_max, n <= n_max. Cells are independent;
/// construction may parallelize over q rows with bit-identical results.
class RamanujanTable {
 public:
  RamanujanTable(std::size_t q_max, std::size_t n_max, const FactorSieve& sieve, int workers = 1);

  std::size_t q_max() const { return q_max_; }
  std::size_t n_max() const { return n_max_; }
  std::int64_t at(std::size_t q, std::size_t n) const;

 private:
  std::size_t q_max_, n_max_;
  std::vector<std::int64_t> data_;
};

struct ResidualReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;    // |lhs - rhs|
  double tail_bound = 0.0;  // analytic bound on the truncation error
};

/// Identity (A) truncated at M terms; tail bound 2 sigma_1(k) M^{1-s}/(s-1).
ResidualReport verify_eq_zeta_normalized(std::uint64_t k, double s, std::size_t M,
                                         const FactorSieve& sieve);

/// Identity (B) truncated at M terms; tail bound 2 sigma_1(n) / ((r-1) M^{r-1}).
ResidualReport verify_eq_sigma_ratio(std::uint64_t n, double r, std::size_t M,
                                     const FactorSieve& sieve);

struct PartialSumTrace {
  double partial = 0.0;  // value at the full truncation M
  std::vector<std::pair<std::size_t, double>> trace;  // partial sums at decade checkpoints
};

/// Identity (C): partial sums of sum_m c_m(n)/m at decade checkpoints
/// 100, 1000, ... up to M. Acceptance is trend-based.
PartialSumTrace verify_eq_mean_zero(std::uint64_t n, std::size_t M, const FactorSieve& sieve);

/// Exhaustively checks |c_q(n)| <= sigma_1(n) over the full table.
bool check_bound(std::size_t q_max, std::size_t n_max, const FactorSieve& sieve, int workers = 1);

}  // namespace davenport
