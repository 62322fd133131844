#include "davenport/series.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "davenport/special_values.hpp"
#include "davenport/summation.hpp"

namespace davenport {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double integer_proximity = 1e-12;

inline double frac(double y) { return y - std::floor(y); }

inline bool near_integer(double y) { return std::abs(y - std::nearbyint(y)) < integer_proximity; }

inline double int_pow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Running max-min tracker for the last decade of partial sums.
class TailSpread {
 public:
  explicit TailSpread(std::size_t terms) : start_(std::max<std::size_t>(1, terms / 10)) {}

  void observe(std::size_t n, double partial) {
    if (n < start_) return;
    lo_ = std::min(lo_, partial);
    hi_ = std::max(hi_, partial);
  }

  double spread() const { return hi_ >= lo_ ? hi_ - lo_ : 0.0; }

 private:
  std::size_t start_;
  double lo_ = std::numeric_limits<double>::infinity();
  double hi_ = -std::numeric_limits<double>::infinity();
};

// cos(pi k / 2) and sin(pi k / 2) as exact integers, period 4.
constexpr int cos_quarter[4] = {1, 0, -1, 0};
constexpr int sin_quarter[4] = {0, 1, 0, -1};

}  // namespace

void ExpansionParams::validate() const {
  if (degree < 1) throw std::invalid_argument("ExpansionParams: degree N must be >= 1");
  if (!(x > 0.0)) throw std::invalid_argument("ExpansionParams: x must be > 0");
  if (terms_lhs < 1 || terms_rhs < 1)
    throw std::invalid_argument("ExpansionParams: truncations must be >= 1");
}

void FourierCoefficients::write_csv(std::ostream& os) const {
  char abuf[32], bbuf[32];
  os << "n,a,b\n";
  for (std::size_t n = 1; n <= terms(); ++n) {
    std::snprintf(abuf, sizeof abuf, "%.17g", a[n]);
    std::snprintf(bbuf, sizeof bbuf, "%.17g", b[n]);
    os << n << ',' << abuf << ',' << bbuf << '\n';
  }
}

SideEvaluation lhs_evaluate(const ExpansionParams& params, const FactorSieve& sieve) {
  params.validate();
  const std::size_t M = params.terms_lhs;
  const SequenceTable a(params.id, M, sieve);
  const double cn = pn_constant(params.degree).to_double();
  const double x0 = frac(params.x);

  SideEvaluation out;
  CompensatedSum acc;
  TailSpread spread(M);
  for (std::size_t n = 1; n <= M; ++n) {
    const double y = static_cast<double>(n) * x0;
    if (near_integer(y)) out.discontinuity_flag = true;
    const double an = a[n];
    if (an != 0.0) {
      acc.add(an / static_cast<double>(n) * (int_pow(frac(y), params.degree) + cn));
    }
    spread.observe(n, acc.value());
  }
  out.value = acc.value();
  out.tail_spread = spread.spread();
  return out;
}

double lhs_partial(const ExpansionParams& params, const FactorSieve& sieve) {
  return lhs_evaluate(params, sieve).value;
}

FourierCoefficients fourier_coefficients(const ArithmeticFunctionId& id, int degree,
                                         std::size_t terms, const FactorSieve& sieve,
                                         int workers) {
  if (degree < 1) throw std::invalid_argument("fourier_coefficients: degree N must be >= 1");
  const FkTable fk(id, degree, terms, sieve, workers);

  // Per-k weight N!/((N-k)! (2 pi)^k) = N (N-1) ... (N-k+1) / (2 pi)^k.
  std::vector<double> weight(degree);
  weight[0] = 1.0;
  for (int k = 1; k < degree; ++k) {
    weight[k] = weight[k - 1] * static_cast<double>(degree - k + 1) / two_pi;
  }

  FourierCoefficients out;
  out.a.assign(terms + 1, 0.0);
  out.b.assign(terms + 1, 0.0);
  for (std::size_t n = 1; n <= terms; ++n) {
    CompensatedSum sa, sb;
    for (int k = 0; k < degree; ++k) {
      const int cq = cos_quarter[k % 4];
      const int sq = sin_quarter[k % 4];
      const double common = fk.at(k, n) * weight[k];
      if (cq != 0) sa.add(common * cq);
      if (sq != 0) sb.add(common * sq);
    }
    const double scale = 1.0 / (std::numbers::pi * static_cast<double>(n));
    out.a[n] = -scale * sa.value();
    out.b[n] = scale * sb.value();
  }
  return out;
}

SideEvaluation rhs_evaluate(const FourierCoefficients& coeffs, double x, bool cesaro) {
  const std::size_t M = coeffs.terms();
  if (M == 0) throw std::invalid_argument("rhs_evaluate: empty coefficient table");
  const double x0 = frac(x);

  SideEvaluation out;
  CompensatedSum acc;
  CompensatedSum partial_cum;  // sum of partial sums, for the (C,1) average
  TailSpread spread(M);
  for (std::size_t n = 1; n <= M; ++n) {
    const double angle = two_pi * frac(static_cast<double>(n) * x0);
    const double term = coeffs.a[n] * std::sin(angle) + coeffs.b[n] * std::cos(angle);
    acc.add(term);
    double tracked = acc.value();
    if (cesaro) {
      partial_cum.add(tracked);
      tracked = partial_cum.value() / static_cast<double>(n);
    }
    spread.observe(n, tracked);
    if (n == M) out.value = tracked;
  }
  out.tail_spread = spread.spread();
  return out;
}

double rhs_partial(const FourierCoefficients& coeffs, double x, bool cesaro) {
  return rhs_evaluate(coeffs, x, cesaro).value;
}

EvalReport verify_identity(const ExpansionParams& params, const FactorSieve& sieve, int workers) {
  params.validate();
  const SideEvaluation lhs = lhs_evaluate(params, sieve);
  const FourierCoefficients coeffs =
      fourier_coefficients(params.id, params.degree, params.terms_rhs, sieve, workers);
  const SideEvaluation rhs = rhs_evaluate(coeffs, params.x, params.cesaro);

  EvalReport report;
  report.lhs = lhs.value;
  report.rhs = rhs.value;
  report.residual = std::abs(lhs.value - rhs.value);
  report.lhs_tail_spread = lhs.tail_spread;
  report.rhs_tail_spread = rhs.tail_spread;
  report.discontinuity_flag = lhs.discontinuity_flag;
  return report;
}

ClassicReport classic_davenport(const ArithmeticFunctionId& id, double x, std::size_t terms,
                                const FactorSieve& sieve) {
  if (!(x > 0.0)) throw std::invalid_argument("classic_davenport: x must be > 0");
  if (terms < 1) throw std::invalid_argument("classic_davenport: terms must be >= 1");
  const double x0 = frac(x);

  const FkTable fk(id, 1, terms, sieve);  // row 0 is A = a*1
  CompensatedSum lhs;
  for (std::size_t n = 1; n <= terms; ++n) {
    const double A = fk.at(0, n);
    if (A != 0.0) {
      lhs.add(A / static_cast<double>(n) *
              std::sin(two_pi * frac(static_cast<double>(n) * x0)));
    }
  }

  const SequenceTable a(id, terms, sieve);
  CompensatedSum rhs;
  for (std::size_t n = 1; n <= terms; ++n) {
    if (a[n] != 0.0) {
      rhs.add(a[n] / static_cast<double>(n) * (frac(static_cast<double>(n) * x0) - 0.5));
    }
  }
  return {lhs.value() / std::numbers::pi, -rhs.value()};
}

}  // namespace davenport
