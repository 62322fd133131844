#include "davenport/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "davenport/summation.hpp"

namespace davenport {

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;
constexpr double golden = std::numbers::phi;

inline double frac(double y) { return y - std::floor(y); }

}  // namespace

double ModulusSpec::at_inverse(std::size_t m) const {
  if (m < 2) throw std::invalid_argument("ModulusSpec: m must be >= 2");
  switch (kind) {
    case ModulusKind::log_m:
      return std::log(static_cast<double>(m));
    case ModulusKind::power_alpha:
      if (!(alpha > 0.0)) throw std::invalid_argument("ModulusSpec: alpha must be > 0");
      return std::pow(static_cast<double>(m), -alpha);
    case ModulusKind::increasing_weight:
      // v(1/m) = m * w(m); only sieve-free weights (log, power, one) make
      // sense here, matching the increasing-function hypothesis.
      return static_cast<double>(m) * evaluate(weight, m);
  }
  return 0.0;
}

double ModulusSpec::at(double h) const {
  const double ah = std::abs(h);
  if (!(ah > 0.0) || ah >= 1.0) throw std::invalid_argument("ModulusSpec: need 0 < |h| < 1");
  switch (kind) {
    case ModulusKind::log_m:
      return std::log(1.0 / ah);
    case ModulusKind::power_alpha:
      if (!(alpha > 0.0)) throw std::invalid_argument("ModulusSpec: alpha must be > 0");
      return std::pow(ah, alpha);
    case ModulusKind::increasing_weight:
      return (1.0 / ah) * evaluate(weight, std::max<std::uint64_t>(
                                               2, static_cast<std::uint64_t>(1.0 / ah)));
  }
  return 0.0;
}

GrowthReport coefficient_growth(const FourierCoefficients& coeffs,
                                const std::vector<std::size_t>& m_grid,
                                const ModulusSpec& spec) {
  const std::size_t J = coeffs.terms();
  if (m_grid.empty()) throw std::invalid_argument("coefficient_growth: empty grid");
  if (!std::is_sorted(m_grid.begin(), m_grid.end()))
    throw std::invalid_argument("coefficient_growth: grid must be ascending");
  if (m_grid.front() < 2 || m_grid.back() > J)
    throw std::invalid_argument("coefficient_growth: grid outside [2, table limit]");

  GrowthReport report;
  report.m_grid = m_grid;
  const std::size_t G = m_grid.size();
  report.s1.resize(G);
  report.s2.resize(G);
  report.ratio1.resize(G);
  report.ratio2.resize(G);
  report.mass.resize(G);

  const auto cj = [&](std::size_t j) { return std::abs(coeffs.a[j]) + std::abs(coeffs.b[j]); };

  // Head sums ascending j, snapshotting at grid points.
  {
    CompensatedSum s1, mass;
    std::size_t gi = 0;
    for (std::size_t j = 1; j <= J && gi < G; ++j) {
      const double c = cj(j);
      if (c != 0.0) {
        s1.add(static_cast<double>(j) * c);
        mass.add(c);
      }
      while (gi < G && m_grid[gi] == j) {
        report.s1[gi] = s1.value();
        report.mass[gi] = mass.value();
        ++gi;
      }
    }
  }
  // Tail sums descending j, so each s2 is a genuine partial sum.
  {
    CompensatedSum s2;
    std::size_t gi = G;
    std::size_t j = J;
    while (gi > 0) {
      const std::size_t m = m_grid[gi - 1];
      for (; j >= m; --j) {
        const double c = cj(j);
        if (c != 0.0) s2.add(c);
      }
      report.s2[gi - 1] = s2.value();
      --gi;
    }
  }
  for (std::size_t i = 0; i < G; ++i) {
    const double v = spec.at_inverse(m_grid[i]);
    report.ratio1[i] = report.s1[i] / (static_cast<double>(m_grid[i]) * v);
    report.ratio2[i] = report.s2[i] / v;
  }

  // Decade split: top two decades of m against everything before them.
  const double top_cut = static_cast<double>(m_grid.back()) / 100.0;
  std::vector<std::size_t> top, preceding;
  for (std::size_t i = 0; i < G; ++i) {
    (static_cast<double>(m_grid[i]) > top_cut ? top : preceding).push_back(i);
  }
  const auto max_over = [&](const std::vector<double>& r, const std::vector<std::size_t>& idx) {
    double m = 0.0;
    for (const std::size_t i : idx) m = std::max(m, r[i]);
    return m;
  };
  const auto decade_verdict = [&](const std::vector<double>& r) -> std::string {
    if (top.empty() || preceding.empty()) return "indeterminate";
    const double before = max_over(r, preceding);
    const double after = max_over(r, top);
    if (before == 0.0) return after == 0.0 ? "bounded" : "unbounded";
    return after < 1.25 * before ? "bounded" : "unbounded";
  };
  report.verdict_head = decade_verdict(report.ratio1);
  report.verdict_tail = decade_verdict(report.ratio2);

  // Divergence screen: growing per-decade mass increments mean the tail sums
  // cannot be bounded by any v at the true (infinite) limit.
  if (G >= 3 && report.verdict_tail == "bounded") {
    const double first = report.mass[1] - report.mass[0];
    const double last = report.mass[G - 1] - report.mass[G - 2];
    if (first > 0.0 ? last > 1.5 * first : last > 0.0) report.verdict_tail = "unbounded";
  }
  return report;
}

std::vector<IncrementSample> increment_samples(const std::function<double(double)>& f,
                                               const ModulusSpec& spec,
                                               const std::vector<std::pair<double, double>>& xs) {
  std::vector<IncrementSample> out;
  out.reserve(xs.size());
  for (const auto& [x, h] : xs) {
    IncrementSample s;
    s.x = x;
    s.h = h;
    s.delta = h == 0.0 ? 0.0 : std::abs(f(x + h) - f(x));
    s.bound = h == 0.0 ? 0.0 : spec.at(h);
    out.push_back(s);
  }
  return out;
}

IncrementReport increment_probe(const ExpansionParams& params, const ModulusSpec& spec,
                                std::size_t sample_count, std::uint64_t seed,
                                const FactorSieve& sieve) {
  if (sample_count < 1) throw std::invalid_argument("increment_probe: need >= 1 sample");
  params.validate();

  std::vector<std::pair<double, double>> xs;
  xs.reserve(sample_count);
  for (std::size_t i = 1; i <= sample_count; ++i) {
    const double k = static_cast<double>(seed + i);
    const double x = (i % 2 == 1) ? frac(k * sqrt2) : frac(k * golden);
    const int j = 4 + static_cast<int>((i - 1) % 13);  // j in [4, 16]
    const double h = sqrt2 * std::ldexp(1.0, -j);
    xs.emplace_back(x == 0.0 ? frac(x + 0.5) : x, h);
  }

  double tail_spread = 0.0;
  const auto f = [&](double x) {
    ExpansionParams p = params;
    p.x = x;
    const SideEvaluation e = lhs_evaluate(p, sieve);
    tail_spread = std::max(tail_spread, e.tail_spread);
    return e.value;
  };

  IncrementReport report;
  report.samples = increment_samples(f, spec, xs);
  report.seed = seed;
  report.truncation_tail_spread = tail_spread;
  for (const auto& s : report.samples) {
    if (s.bound > 0.0) report.max_ratio = std::max(report.max_ratio, s.delta / s.bound);
  }
  return report;
}

double lipschitz_exponent_fit(const std::vector<IncrementSample>& samples) {
  if (samples.size() < 8)
    throw std::invalid_argument("lipschitz_exponent_fit: need >= 8 samples");
  double hmin = std::numeric_limits<double>::infinity(), hmax = 0.0;
  for (const auto& s : samples) {
    const double ah = std::abs(s.h);
    if (ah == 0.0) continue;
    hmin = std::min(hmin, ah);
    hmax = std::max(hmax, ah);
  }
  if (!(hmax / hmin >= 8.0))
    throw std::invalid_argument("lipschitz_exponent_fit: h must span >= 3 dyadic decades");

  // Ordinary least squares on (log h, log delta), zero deltas dropped.
  std::size_t n = 0;
  double sx = 0.0, sy = 0.0;
  for (const auto& s : samples) {
    if (s.delta > 0.0 && std::abs(s.h) > 0.0) {
      sx += std::log(std::abs(s.h));
      sy += std::log(s.delta);
      ++n;
    }
  }
  if (n < 2) return std::numeric_limits<double>::infinity();
  const double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (const auto& s : samples) {
    if (s.delta > 0.0 && std::abs(s.h) > 0.0) {
      const double dx = std::log(std::abs(s.h)) - mx;
      sxx += dx * dx;
      sxy += dx * (std::log(s.delta) - my);
    }
  }
  if (sxx == 0.0) return std::numeric_limits<double>::infinity();
  return sxy / sxx;
}

}  // namespace davenport
