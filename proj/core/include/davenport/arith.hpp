#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace davenport {

// ---------------------------------------------------------------------------
// Catalog of arithmetic functions
// ---------------------------------------------------------------------------

enum class FunctionKind {
  mobius,        // +/-1 on squarefree n, 0 otherwise
  liouville,     // (-1)^Omega(n)
  von_mangoldt,  // log p on prime powers p^j, 0 otherwise
  log,           // log n
  power,         // n^r for a fixed real exponent r
  unit,          // convolution identity: 1 at n = 1, 0 elsewhere
  one,           // constantly 1
};

struct ArithmeticFunctionId {
  FunctionKind kind = FunctionKind::one;
  double exponent = 0.0;  // only meaningful for FunctionKind::power

  static ArithmeticFunctionId mobius() { return {FunctionKind::mobius}; }
  static ArithmeticFunctionId liouville() { return {FunctionKind::liouville}; }
  static ArithmeticFunctionId von_mangoldt() { return {FunctionKind::von_mangoldt}; }
  static ArithmeticFunctionId log() { return {FunctionKind::log}; }
  static ArithmeticFunctionId power(double r) { return {FunctionKind::power, r}; }
  static ArithmeticFunctionId unit() { return {FunctionKind::unit}; }
  static ArithmeticFunctionId one() { return {FunctionKind::one}; }

  /// True for functions whose evaluation requires prime factorization.
  bool needs_factorization() const {
    return kind == FunctionKind::mobius || kind == FunctionKind::liouville ||
           kind == FunctionKind::von_mangoldt;
  }

  /// Smallest s for which sum a(n) n^{-s} converges absolutely; the
  /// partial-series evaluator rejects s at or below this line. `unit`
  /// terminates after one term and accepts any s.
  double dirichlet_abscissa() const;

  /// Stable display name, e.g. "mobius" or "power(-2)".
  std::string name() const;

  /// Inverse of name(); also accepts "power:r". Returns nullopt on
  /// unknown names.
  static std::optional<ArithmeticFunctionId> parse(const std::string& text);

  friend bool operator==(const ArithmeticFunctionId&, const ArithmeticFunctionId&) = default;
};

// ---------------------------------------------------------------------------
// Smallest-prime-factor sieve
// ---------------------------------------------------------------------------

/// Smallest-prime-factor table for 2..limit. Factorization of any n <= limit
/// is recovered in O(log n). Index 1 has no prime factor and is special-cased
/// by every consumer. Immutable after construction and safe to share across
/// threads.
class FactorSieve {
 public:
  /// Builds the table. limit == 0 is rejected.
  explicit FactorSieve(std::size_t limit);

  std::size_t limit() const { return limit_; }

  /// n must lie in [2, limit].
  std::uint32_t smallest_prime_factor(std::uint64_t n) const;

  bool is_prime(std::uint64_t n) const;

  /// (prime, multiplicity) pairs in ascending prime order; empty for n = 1.
  std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) const;

  /// All divisors of n in ascending order.
  std::vector<std::uint64_t> divisors(std::uint64_t n) const;

  /// Reuses `out` to avoid churn in table-building loops.
  void divisors_into(std::uint64_t n, std::vector<std::uint64_t>& out) const;

 private:
  void check_range(std::uint64_t n) const;

  std::size_t limit_;
  std::vector<std::uint32_t> spf_;  // spf_[n] valid for 2 <= n <= limit
};

/// Mobius function as an exact integer in {-1, 0, 1}.
int mobius_sign(std::uint64_t n, const FactorSieve& sieve);

/// a(n) for any catalog entry; n must be within the sieve range.
double evaluate(const ArithmeticFunctionId& id, std::uint64_t n, const FactorSieve& sieve);

/// Same, for entries that do not need factorization (log, power, unit, one).
double evaluate(const ArithmeticFunctionId& id, std::uint64_t n);

// ---------------------------------------------------------------------------
// Tabulated values
// ---------------------------------------------------------------------------

/// a(1..limit) tabulated as doubles. Integer-valued catalog entries are exact.
class SequenceTable {
 public:
  SequenceTable(ArithmeticFunctionId id, std::size_t limit, const FactorSieve& sieve);

  /// Wraps externally supplied values (1-based; values[0] is ignored space).
  static SequenceTable from_values(ArithmeticFunctionId id, std::vector<double> values);

  const ArithmeticFunctionId& id() const { return id_; }
  std::size_t limit() const { return limit_; }
  double operator[](std::size_t n) const { return values_[n]; }
  double at(std::size_t n) const;

  /// CSV export, header `n,value`.
  void write_csv(std::ostream& os) const;

 private:
  SequenceTable(ArithmeticFunctionId id, std::size_t limit);

  ArithmeticFunctionId id_;
  std::size_t limit_;
  std::vector<double> values_;  // index n, [0] unused
};

/// Dirichlet convolution (f*g)(n) = sum_{d|n} f(d) g(n/d) for n <= limit.
/// Terms are paired as (d, n/d) and accumulated in ascending d <= sqrt(n), so
/// the result is bit-identical under argument swap. Limits must match.
SequenceTable dirichlet_convolve(const SequenceTable& f, const SequenceTable& g,
                                 const FactorSieve& sieve);

/// Kernel table F_k(n) = sum_{d|n} d^{-k} a(n/d) for k in [0, rows) and
/// n in [1, limit]. Row 0 is the plain convolution a*1. Construction may
/// parallelize over n; each entry is summed over the ascending divisor list
/// of n, so tables are bit-identical for any worker count.
class FkTable {
 public:
  FkTable(ArithmeticFunctionId id, int rows, std::size_t limit, const FactorSieve& sieve,
          int workers = 1);

  const ArithmeticFunctionId& id() const { return id_; }
  int rows() const { return rows_; }
  std::size_t limit() const { return limit_; }

  double at(int k, std::size_t n) const;

  /// CSV export, header `n,k,value`, rows ordered by n then k.
  void write_csv(std::ostream& os) const;

 private:
  ArithmeticFunctionId id_;
  int rows_;
  std::size_t limit_;
  std::vector<double> data_;  // row-major, rows_ x (limit_ + 1)
};

// ---------------------------------------------------------------------------
// Scalar operations
// ---------------------------------------------------------------------------

/// Divisor power sum sigma_r(n) = sum_{d|n} d^r, divisors ascending.
double sigma(double r, std::uint64_t n);

/// sigma_1(n) as an exact integer.
std::uint64_t sigma1_exact(std::uint64_t n);

/// Truncated Dirichlet series sum_{n<=terms} a(n) n^{-s}, ascending n with
/// compensated summation. s must exceed the entry's abscissa.
double dirichlet_series_partial(const ArithmeticFunctionId& id, double s, std::size_t terms,
                                const FactorSieve& sieve);

struct SegalReport {
  double partial_sum;  // sum_{n<=terms} (1/n) sum_{d|n} a(d) (n/d)^{-k}
  double S;            // truncated sum_{n<=terms} |F_0(n)/n|
  double L;            // lim n^{-k}: 1 for k = 0, else 0
};

/// Truncated data for the convolution-limit identity: when S converges
/// absolutely the full sum equals S*L. Report-only; no convergence check.
SegalReport segal_limit(const ArithmeticFunctionId& a, int k, std::size_t terms,
                        const FactorSieve& sieve);

}  // namespace davenport
