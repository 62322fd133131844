#include "davenport/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "davenport/summation.hpp"

namespace davenport {

namespace {

constexpr const char* kind_names[] = {"mobius",  "liouville", "von_mangoldt", "log",
                                      "power",   "unit",      "one"};

void format_value(char* buf, std::size_t len, double v) { std::snprintf(buf, len, "%.17g", v); }

}  // namespace

double ArithmeticFunctionId::dirichlet_abscissa() const {
  switch (kind) {
    case FunctionKind::unit:
      return -std::numeric_limits<double>::infinity();
    case FunctionKind::power:
      return std::max(1.0, exponent + 1.0);
    default:
      return 1.0;
  }
}

std::string ArithmeticFunctionId::name() const {
  if (kind == FunctionKind::power) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "power(%.17g)", exponent);
    return buf;
  }
  return kind_names[static_cast<int>(kind)];
}

std::optional<ArithmeticFunctionId> ArithmeticFunctionId::parse(const std::string& text) {
  for (int i = 0; i < 7; ++i) {
    if (text == kind_names[i] && static_cast<FunctionKind>(i) != FunctionKind::power) {
      return ArithmeticFunctionId{static_cast<FunctionKind>(i)};
    }
  }
  // power:r or power(r)
  for (const char* prefix : {"power:", "power("}) {
    if (text.rfind(prefix, 0) == 0) {
      const std::string arg = text.substr(std::string(prefix).size());
      char* end = nullptr;
      const double r = std::strtod(arg.c_str(), &end);
      if (end != arg.c_str()) return ArithmeticFunctionId::power(r);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// FactorSieve
// ---------------------------------------------------------------------------

FactorSieve::FactorSieve(std::size_t limit) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("FactorSieve: limit must be >= 1");
  spf_.assign(limit_ + 1, 0);
  for (std::size_t i = 2; i <= limit_; ++i) {
    if (spf_[i] == 0) {
      for (std::size_t j = i; j <= limit_; j += i) {
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
  }
}

void FactorSieve::check_range(std::uint64_t n) const {
  if (n < 1 || n > limit_) throw std::out_of_range("FactorSieve: n outside sieve range");
}

std::uint32_t FactorSieve::smallest_prime_factor(std::uint64_t n) const {
  check_range(n);
  if (n < 2) throw std::out_of_range("FactorSieve: 1 has no prime factor");
  return spf_[n];
}

bool FactorSieve::is_prime(std::uint64_t n) const {
  check_range(n);
  return n >= 2 && spf_[n] == n;
}

std::vector<std::pair<std::uint64_t, int>> FactorSieve::factorize(std::uint64_t n) const {
  check_range(n);
  std::vector<std::pair<std::uint64_t, int>> out;
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::uint64_t> FactorSieve::divisors(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  divisors_into(n, out);
  return out;
}

void FactorSieve::divisors_into(std::uint64_t n, std::vector<std::uint64_t>& out) const {
  check_range(n);
  out.clear();
  out.push_back(1);
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    const std::size_t base = out.size();
    std::uint64_t pe = 1;
    for (int j = 1; j <= e; ++j) {
      pe *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pe);
    }
  }
  std::sort(out.begin(), out.end());
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

int mobius_sign(std::uint64_t n, const FactorSieve& sieve) {
  if (n == 1) return 1;
  int sign = 1;
  for (const auto& [p, e] : sieve.factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

double evaluate(const ArithmeticFunctionId& id, std::uint64_t n) {
  if (n < 1) throw std::out_of_range("evaluate: n must be >= 1");
  switch (id.kind) {
    case FunctionKind::log:
      return std::log(static_cast<double>(n));
    case FunctionKind::power:
      return std::pow(static_cast<double>(n), id.exponent);
    case FunctionKind::unit:
      return n == 1 ? 1.0 : 0.0;
    case FunctionKind::one:
      return 1.0;
    default:
      throw std::invalid_argument("evaluate: " + id.name() + " needs a factor sieve");
  }
}

double evaluate(const ArithmeticFunctionId& id, std::uint64_t n, const FactorSieve& sieve) {
  if (!id.needs_factorization()) {
    if (n < 1 || n > sieve.limit()) throw std::out_of_range("evaluate: n outside sieve range");
    return evaluate(id, n);
  }
  if (n == 1) return id.kind == FunctionKind::von_mangoldt ? 0.0 : 1.0;
  switch (id.kind) {
    case FunctionKind::mobius:
      return static_cast<double>(mobius_sign(n, sieve));
    case FunctionKind::liouville: {
      int omega = 0;
      for (const auto& [p, e] : sieve.factorize(n)) {
        (void)p;
        omega += e;
      }
      return (omega % 2 == 0) ? 1.0 : -1.0;
    }
    case FunctionKind::von_mangoldt: {
      const auto factors = sieve.factorize(n);
      return factors.size() == 1 ? std::log(static_cast<double>(factors.front().first)) : 0.0;
    }
    default:
      return 0.0;  // unreachable
  }
}

// ---------------------------------------------------------------------------
// SequenceTable
// ---------------------------------------------------------------------------

SequenceTable::SequenceTable(ArithmeticFunctionId id, std::size_t limit)
    : id_(id), limit_(limit), values_(limit + 1, 0.0) {
  if (limit == 0) throw std::invalid_argument("SequenceTable: limit must be >= 1");
}

SequenceTable::SequenceTable(ArithmeticFunctionId id, std::size_t limit, const FactorSieve& sieve)
    : SequenceTable(id, limit) {
  if (sieve.limit() < limit) throw std::invalid_argument("SequenceTable: sieve too small");
  for (std::size_t n = 1; n <= limit; ++n) values_[n] = evaluate(id, n, sieve);
}

SequenceTable SequenceTable::from_values(ArithmeticFunctionId id, std::vector<double> values) {
  if (values.size() < 2) throw std::invalid_argument("SequenceTable: need values for n >= 1");
  SequenceTable t(id, values.size() - 1);
  t.values_ = std::move(values);
  t.values_[0] = 0.0;
  return t;
}

double SequenceTable::at(std::size_t n) const {
  if (n < 1 || n > limit_) throw std::out_of_range("SequenceTable: index outside table");
  return values_[n];
}

void SequenceTable::write_csv(std::ostream& os) const {
  char buf[32];
  os << "n,value\n";
  for (std::size_t n = 1; n <= limit_; ++n) {
    format_value(buf, sizeof buf, values_[n]);
    os << n << ',' << buf << '\n';
  }
}

SequenceTable dirichlet_convolve(const SequenceTable& f, const SequenceTable& g,
                                 const FactorSieve& sieve) {
  if (f.limit() != g.limit()) throw std::invalid_argument("dirichlet_convolve: limits differ");
  const std::size_t M = f.limit();
  if (sieve.limit() < M) throw std::invalid_argument("dirichlet_convolve: sieve too small");

  std::vector<double> out(M + 1, 0.0);
  std::vector<std::uint64_t> divs;
  for (std::size_t n = 1; n <= M; ++n) {
    sieve.divisors_into(n, divs);
    CompensatedSum acc;
    // Pair (d, n/d); the inner two-term addition is commutative in IEEE
    // arithmetic, so swapping f and g reproduces identical bits.
    for (std::size_t i = 0; i < divs.size() && divs[i] * divs[i] <= n; ++i) {
      const std::uint64_t d = divs[i];
      const std::uint64_t q = n / d;
      if (d == q) {
        acc.add(f[d] * g[q]);
      } else {
        acc.add(f[d] * g[q] + f[q] * g[d]);
      }
    }
    out[n] = acc.value();
  }
  auto id = f.id();
  return SequenceTable::from_values(id, std::move(out));
}

// ---------------------------------------------------------------------------
// FkTable
// ---------------------------------------------------------------------------

FkTable::FkTable(ArithmeticFunctionId id, int rows, std::size_t limit, const FactorSieve& sieve,
                 int workers)
    : id_(id), rows_(rows), limit_(limit) {
  if (rows < 1) throw std::invalid_argument("FkTable: need at least one row (N >= 1)");
  if (limit < 1) throw std::invalid_argument("FkTable: limit must be >= 1");
  if (sieve.limit() < limit) throw std::invalid_argument("FkTable: sieve too small");

  const SequenceTable a(id, limit, sieve);
  data_.assign(static_cast<std::size_t>(rows) * (limit + 1), 0.0);

  auto fill_range = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::uint64_t> divs;
    std::vector<double> weight, inv_d, av;
    for (std::size_t n = lo; n <= hi; ++n) {
      sieve.divisors_into(n, divs);
      const std::size_t m = divs.size();
      weight.assign(m, 1.0);
      inv_d.resize(m);
      av.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        inv_d[i] = 1.0 / static_cast<double>(divs[i]);
        av[i] = a[n / divs[i]];
      }
      for (int k = 0; k < rows_; ++k) {
        CompensatedSum acc;
        for (std::size_t i = 0; i < m; ++i) acc.add(weight[i] * av[i]);
        data_[static_cast<std::size_t>(k) * (limit_ + 1) + n] = acc.value();
        if (k + 1 < rows_) {
          for (std::size_t i = 0; i < m; ++i) weight[i] *= inv_d[i];
        }
      }
    }
  };

  const int nworkers = std::max(1, workers);
  if (nworkers == 1 || limit < 1024) {
    fill_range(1, limit);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (limit + nworkers - 1) / nworkers;
    for (int w = 0; w < nworkers; ++w) {
      const std::size_t lo = 1 + static_cast<std::size_t>(w) * chunk;
      if (lo > limit) break;
      const std::size_t hi = std::min(limit, lo + chunk - 1);
      pool.emplace_back(fill_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
}

double FkTable::at(int k, std::size_t n) const {
  if (k < 0 || k >= rows_) throw std::out_of_range("FkTable: row outside table");
  if (n < 1 || n > limit_) throw std::out_of_range("FkTable: n outside table");
  return data_[static_cast<std::size_t>(k) * (limit_ + 1) + n];
}

void FkTable::write_csv(std::ostream& os) const {
  char buf[32];
  os << "n,k,value\n";
  for (std::size_t n = 1; n <= limit_; ++n) {
    for (int k = 0; k < rows_; ++k) {
      format_value(buf, sizeof buf, data_[static_cast<std::size_t>(k) * (limit_ + 1) + n]);
      os << n << ',' << k << ',' << buf << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Scalar operations
// ---------------------------------------------------------------------------

double sigma(double r, std::uint64_t n) {
  if (n < 1) throw std::out_of_range("sigma: n must be >= 1");
  CompensatedSum acc;
  // Ascending divisors d <= sqrt(n), each paired with n/d; the pair terms are
  // added small-to-large in d, mirror order for the cofactor.
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  for (const std::uint64_t d : small) acc.add(std::pow(static_cast<double>(d), r));
  for (auto it = large.rbegin(); it != large.rend(); ++it)
    acc.add(std::pow(static_cast<double>(*it), r));
  return acc.value();
}

std::uint64_t sigma1_exact(std::uint64_t n) {
  if (n < 1) throw std::out_of_range("sigma1_exact: n must be >= 1");
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += d;
    if (d != n / d) s += n / d;
  }
  return s;
}

double dirichlet_series_partial(const ArithmeticFunctionId& id, double s, std::size_t terms,
                                const FactorSieve& sieve) {
  if (terms < 1) throw std::invalid_argument("dirichlet_series_partial: terms must be >= 1");
  if (s <= id.dirichlet_abscissa()) {
    throw std::invalid_argument("dirichlet_series_partial: s <= abscissa of " + id.name());
  }
  const SequenceTable a(id, terms, sieve);
  CompensatedSum acc;
  for (std::size_t n = 1; n <= terms; ++n) {
    if (a[n] != 0.0) acc.add(a[n] * std::pow(static_cast<double>(n), -s));
  }
  return acc.value();
}

SegalReport segal_limit(const ArithmeticFunctionId& a, int k, std::size_t terms,
                        const FactorSieve& sieve) {
  if (k < 0) throw std::invalid_argument("segal_limit: k must be >= 0");
  if (terms < 1) throw std::invalid_argument("segal_limit: terms must be >= 1");
  const SequenceTable at(a, terms, sieve);

  CompensatedSum partial, abs_f0;
  std::vector<std::uint64_t> divs;
  for (std::size_t n = 1; n <= terms; ++n) {
    sieve.divisors_into(n, divs);
    CompensatedSum inner;   // sum_{d|n} a(d) (n/d)^{-k}
    CompensatedSum f0_acc;  // sum_{d|n} a(d)
    for (const std::uint64_t d : divs) {
      const double ad = at[d];
      if (ad == 0.0) continue;
      f0_acc.add(ad);
      if (k == 0) {
        inner.add(ad);
      } else {
        inner.add(ad * std::pow(static_cast<double>(n / d), -static_cast<double>(k)));
      }
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    partial.add(inner.value() * inv_n);
    abs_f0.add(std::abs(f0_acc.value()) * inv_n);
  }
  return {partial.value(), abs_f0.value(), k == 0 ? 1.0 : 0.0};
}

}  // namespace davenport
