#include "davenport/special_values.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "davenport/summation.hpp"

namespace davenport {

BernoulliTable::BernoulliTable(int max_index) {
  if (max_index < 0) throw std::invalid_argument("BernoulliTable: negative index");
  values_.reserve(max_index + 1);
  values_.emplace_back(1);  // B_0
  for (int m = 1; m <= max_index; ++m) {
    // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
    Rational acc;
    mpz_class binom;
    for (int j = 0; j < m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      acc += Rational(binom, 1) * values_[j];
    }
    values_.push_back(acc / Rational(-(m + 1)));
  }
}

const Rational& BernoulliTable::at(int m) const {
  if (m < 0 || m > max_index()) throw std::out_of_range("BernoulliTable: index out of range");
  return values_[m];
}

Rational bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli: m must be >= 0");
  return BernoulliTable(m).at(m);
}

Rational zeta_nonpositive(int k) {
  if (k < 0) throw std::invalid_argument("zeta_nonpositive: k must be >= 0");
  const Rational b = bernoulli(k + 1);
  const Rational v = b / Rational(k + 1);
  return (k % 2 == 0) ? v : -v;
}

double zeta_real(double s) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta_real: requires s > 1");
  // Direct sum to a fixed truncation plus Euler-Maclaurin tail:
  //   zeta(s) = sum_{n<M} n^-s + M^{1-s}/(s-1) + M^-s/2
  //           + sum_j B_{2j}/(2j)! (s)_{2j-1} M^{-s-2j+1},  four terms.
  constexpr double M = 10000.0;
  CompensatedSum acc;
  for (std::size_t n = 1; n < static_cast<std::size_t>(M); ++n) {
    acc.add(std::pow(static_cast<double>(n), -s));
  }
  acc.add(std::pow(M, 1.0 - s) / (s - 1.0));
  acc.add(0.5 * std::pow(M, -s));
  constexpr double em_coeff[4] = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600};
  double rising = s;                           // (s)_1
  double power = std::pow(M, -s - 1.0);        // M^{-s-1}
  for (int j = 1; j <= 4; ++j) {
    acc.add(em_coeff[j - 1] * rising * power);
    rising *= (s + 2 * j - 1) * (s + 2 * j);   // -> (s)_{2j+1}
    power /= M * M;
  }
  return acc.value();
}

Rational pn_constant(int N) {
  if (N < 1) throw std::invalid_argument("pn_constant: requires N >= 1");
  const BernoulliTable bern(N);
  mpz_class n_fact, k_fact, nk_fact;
  mpz_fac_ui(n_fact.get_mpz_t(), N);
  Rational acc;
  for (int k = 0; k < N; ++k) {
    mpz_fac_ui(k_fact.get_mpz_t(), k);
    mpz_fac_ui(nk_fact.get_mpz_t(), N - k);
    // (-1)^k zeta(-k) = B_{k+1}/(k+1)
    const Rational term =
        Rational(bern.at(k + 1)) / Rational(mpz_class(k + 1) * k_fact * nk_fact, 1);
    acc += term;
  }
  return Rational(n_fact, 1) * acc;
}

HarmonicEstimate harmonic_estimate(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("harmonic_estimate: n must be >= 1");
  CompensatedSum acc;
  for (std::uint64_t i = 1; i <= n; ++i) acc.add(1.0 / static_cast<double>(i));
  const double nn = static_cast<double>(n);
  return {acc.value(), std::log(nn) + euler_gamma + 0.5 / nn};
}

}  // namespace davenport
