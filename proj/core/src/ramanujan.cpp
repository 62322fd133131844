#include "davenport/ramanujan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "davenport/special_values.hpp"
#include "davenport/summation.hpp"

namespace davenport {

namespace {

// c_q(n) with the divisors of q precomputed (ascending) and mu(q/d) attached.
struct QKernel {
  std::uint64_t q;
  std::vector<std::uint64_t> divisors;  // ascending
  std::vector<int> mu_cofactor;         // mu(q / divisors[i])

  QKernel(std::uint64_t q_in, const FactorSieve& sieve) : q(q_in) {
    divisors = sieve.divisors(q);
    mu_cofactor.resize(divisors.size());
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      mu_cofactor[i] = mobius_sign(q / divisors[i], sieve);
    }
  }

  std::int64_t at(std::uint64_t n) const {
    const std::uint64_t g = std::gcd(q, n);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < divisors.size() && divisors[i] <= g; ++i) {
      if (g % divisors[i] == 0) {
        acc += static_cast<std::int64_t>(divisors[i]) * mu_cofactor[i];
      }
    }
    return acc;
  }
};

}  // namespace

std::int64_t ramanujan_c(std::uint64_t q, std::uint64_t n, const FactorSieve& sieve) {
  if (q < 1 || n < 1) throw std::invalid_argument("ramanujan_c: q and n must be >= 1");
  return QKernel(q, sieve).at(n);
}

RamanujanTable::RamanujanTable(std::size_t q_max, std::size_t n_max, const FactorSieve& sieve,
                               int workers)
    : q_max_(q_max), n_max_(n_max) {
  if (q_max < 1 || n_max < 1) throw std::invalid_argument("RamanujanTable: limits must be >= 1");
  if (sieve.limit() < q_max) throw std::invalid_argument("RamanujanTable: sieve too small");
  data_.assign(q_max * n_max, 0);

  auto fill_rows = [&](std::size_t q_lo, std::size_t q_hi) {
    for (std::size_t q = q_lo; q <= q_hi; ++q) {
      const QKernel kernel(q, sieve);
      std::int64_t* row = data_.data() + (q - 1) * n_max_;
      for (std::size_t n = 1; n <= n_max_; ++n) row[n - 1] = kernel.at(n);
    }
  };

  const int nworkers = std::max(1, workers);
  if (nworkers == 1 || q_max < 64) {
    fill_rows(1, q_max);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (q_max + nworkers - 1) / nworkers;
    for (int w = 0; w < nworkers; ++w) {
      const std::size_t lo = 1 + static_cast<std::size_t>(w) * chunk;
      if (lo > q_max) break;
      pool.emplace_back(fill_rows, lo, std::min(q_max, lo + chunk - 1));
    }
    for (auto& t : pool) t.join();
  }
}

std::int64_t RamanujanTable::at(std::size_t q, std::size_t n) const {
  if (q < 1 || q > q_max_ || n < 1 || n > n_max_)
    throw std::out_of_range("RamanujanTable: index outside table");
  return data_[(q - 1) * n_max_ + (n - 1)];
}

ResidualReport verify_eq_zeta_normalized(std::uint64_t k, double s, std::size_t M,
                                         const FactorSieve& sieve) {
  if (k < 1) throw std::invalid_argument("verify_eq_zeta_normalized: k must be >= 1");
  if (!(s > 1.0)) throw std::invalid_argument("verify_eq_zeta_normalized: requires s > 1");
  if (M < 1) throw std::invalid_argument("verify_eq_zeta_normalized: M must be >= 1");

  const QKernel kernel(k, sieve);
  CompensatedSum series;
  for (std::size_t n = 1; n <= M; ++n) {
    const std::int64_t c = kernel.at(n);
    if (c != 0) series.add(static_cast<double>(c) * std::pow(static_cast<double>(n), -s));
  }
  const double lhs = series.value() / zeta_real(s);

  CompensatedSum rhs;
  for (std::size_t i = 0; i < kernel.divisors.size(); ++i) {
    if (kernel.mu_cofactor[i] != 0) {
      rhs.add(static_cast<double>(kernel.mu_cofactor[i]) *
              std::pow(static_cast<double>(kernel.divisors[i]), 1.0 - s));
    }
  }

  ResidualReport report;
  report.lhs = lhs;
  report.rhs = rhs.value();
  report.residual = std::abs(report.lhs - report.rhs);
  report.tail_bound = 2.0 * static_cast<double>(sigma1_exact(k)) *
                      std::pow(static_cast<double>(M), 1.0 - s) / (s - 1.0);
  return report;
}

namespace {

// Dense mu table; factorization per call is too slow for 1e6-term loops.
std::vector<std::int8_t> mobius_table(std::size_t limit, const FactorSieve& sieve) {
  std::vector<std::int8_t> mu(limit + 1, 0);
  for (std::size_t n = 1; n <= limit; ++n) {
    mu[n] = static_cast<std::int8_t>(mobius_sign(n, sieve));
  }
  return mu;
}

// c_m(n) for fixed n across ascending m: iterate over the divisors of n only.
// c_m(n) = sum_{d | gcd(m,n)} d mu(m/d).
class NKernel {
 public:
  NKernel(std::uint64_t n, std::size_t m_max, const FactorSieve& sieve)
      : divisors_(sieve.divisors(n)), mu_(mobius_table(m_max, sieve)) {}

  std::int64_t at(std::uint64_t m) const {
    std::int64_t acc = 0;
    for (const std::uint64_t d : divisors_) {
      if (m % d == 0) {
        acc += static_cast<std::int64_t>(d) * mu_[m / d];
      }
    }
    return acc;
  }

 private:
  std::vector<std::uint64_t> divisors_;
  std::vector<std::int8_t> mu_;
};

}  // namespace

ResidualReport verify_eq_sigma_ratio(std::uint64_t n, double r, std::size_t M,
                                     const FactorSieve& sieve) {
  if (n < 1) throw std::invalid_argument("verify_eq_sigma_ratio: n must be >= 1");
  if (!(r > 1.0)) throw std::invalid_argument("verify_eq_sigma_ratio: requires r > 1");
  if (M < 1) throw std::invalid_argument("verify_eq_sigma_ratio: M must be >= 1");

  const NKernel kernel(n, sieve);
  CompensatedSum lhs;
  for (std::size_t m = 1; m <= M; ++m) {
    const std::int64_t c = kernel.at(m);
    if (c != 0) lhs.add(static_cast<double>(c) * std::pow(static_cast<double>(m), -r));
  }

  ResidualReport report;
  report.lhs = lhs.value();
  report.rhs =
      sigma(r - 1.0, n) / (std::pow(static_cast<double>(n), r - 1.0) * zeta_real(r));
  report.residual = std::abs(report.lhs - report.rhs);
  report.tail_bound = 2.0 * static_cast<double>(sigma1_exact(n)) /
                      ((r - 1.0) * std::pow(static_cast<double>(M), r - 1.0));
  return report;
}

PartialSumTrace verify_eq_mean_zero(std::uint64_t n, std::size_t M, const FactorSieve& sieve) {
  if (n < 1) throw std::invalid_argument("verify_eq_mean_zero: n must be >= 1");
  if (M < 1) throw std::invalid_argument("verify_eq_mean_zero: M must be >= 1");

  const NKernel kernel(n, sieve);
  PartialSumTrace out;
  CompensatedSum acc;
  std::size_t next_checkpoint = 100;
  for (std::size_t m = 1; m <= M; ++m) {
    const std::int64_t c = kernel.at(m);
    if (c != 0) acc.add(static_cast<double>(c) / static_cast<double>(m));
    if (m == next_checkpoint) {
      out.trace.emplace_back(m, acc.value());
      next_checkpoint *= 10;
    }
  }
  out.partial = acc.value();
  if (out.trace.empty() || out.trace.back().first != M) out.trace.emplace_back(M, out.partial);
  return out;
}

bool check_bound(std::size_t q_max, std::size_t n_max, const FactorSieve& sieve, int workers) {
  const RamanujanTable table(q_max, n_max, sieve, workers);
  std::vector<std::uint64_t> sigma1(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) sigma1[n] = sigma1_exact(n);
  for (std::size_t q = 1; q <= q_max; ++q) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const std::int64_t c = table.at(q, n);
      if (static_cast<std::uint64_t>(c < 0 ? -c : c) > sigma1[n]) return false;
    }
  }
  return true;
}

}  // namespace davenport
