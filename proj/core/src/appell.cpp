#include "davenport/appell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "davenport/summation.hpp"

namespace davenport {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

inline double frac(double y) { return y - std::floor(y); }

// i^m for sign = +1, (-i)^m for sign = -1; m may be negative. Exact.
std::complex<double> imaginary_unit_power(long m, int sign) {
  static constexpr double re[4] = {1.0, 0.0, -1.0, 0.0};
  static constexpr double im[4] = {0.0, 1.0, 0.0, -1.0};
  const long r = ((m % 4) + 4) % 4;
  return {re[r], sign > 0 ? im[r] : -im[r]};
}

// (2 pi i k)^m for integer m (typically negative) as magnitude times an exact
// imaginary-unit power; keeps conjugate symmetry across +-k bitwise.
std::complex<double> imaginary_base_power(int k, long m) {
  const double theta = two_pi * std::abs(static_cast<double>(k));
  double mag = 1.0;
  if (m >= 0) {
    for (long i = 0; i < m; ++i) mag *= theta;
  } else {
    const double inv = 1.0 / theta;
    for (long i = 0; i < -m; ++i) mag *= inv;
  }
  return mag * imaginary_unit_power(m, k > 0 ? 1 : -1);
}

// z / (i b) for real b: multiply by -i, scale by 1/b. Componentwise, so the
// conjugate symmetry b -> -b, z -> conj(z) is exact.
std::complex<double> divide_by_imaginary(std::complex<double> z, double b) {
  return {z.imag() / b, -z.real() / b};
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

GSeries g_coefficients(const ArithmeticFunctionId& id, double x, int count,
                       std::size_t inner_terms, const FactorSieve& sieve, int workers) {
  if (count < 1) throw std::invalid_argument("g_coefficients: need count >= 1");
  if (inner_terms < 1) throw std::invalid_argument("g_coefficients: need inner_terms >= 1");
  const FkTable fk(id, count, inner_terms, sieve, workers);
  const double x0 = frac(x);

  GSeries out;
  out.id = id;
  out.x = x;
  out.inner_terms = inner_terms;
  out.g.resize(count);
  double scale_2pi = 1.0;  // (2 pi)^{-k}
  for (int k = 0; k < count; ++k) {
    const bool even = (k % 2 == 0);
    // cos(pi k/2) = +-1 on even k, sin(pi k/2) = +-1 on odd k; the other
    // series vanishes exactly. The bracket collapses to +-S_k/pi with the
    // sign taken from the period-4 pattern.
    const int pattern = (k % 4 == 0 || k % 4 == 1) ? 1 : -1;
    CompensatedSum acc;
    for (std::size_t n = 1; n <= inner_terms; ++n) {
      const double fkn = fk.at(k, n);
      if (fkn == 0.0) continue;
      const double angle = two_pi * frac(static_cast<double>(n) * x0);
      const double trig = even ? std::sin(angle) : std::cos(angle);
      acc.add(fkn * trig / static_cast<double>(n));
    }
    out.g[k] = -pattern * scale_2pi * acc.value() / std::numbers::pi;
    scale_2pi /= two_pi;
  }
  return out;
}

GSeries g_from_values(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("g_from_values: need at least g_0");
  GSeries out;
  out.id = ArithmeticFunctionId::unit();
  out.x = 0.0;
  out.inner_terms = 0;
  out.g = std::move(values);
  return out;
}

double AppellPolynomial::eval(double z) const {
  double acc = 0.0;
  for (std::size_t i = z_coeffs.size(); i-- > 0;) acc = acc * z + z_coeffs[i];
  return acc;
}

double AppellPolynomial::mean() const {
  CompensatedSum acc;
  for (std::size_t i = 0; i < z_coeffs.size(); ++i) {
    acc.add(z_coeffs[i] / static_cast<double>(i + 1));
  }
  return acc.value();
}

AppellPolynomial appell_from_g(const GSeries& g, int degree) {
  if (degree < 0) throw std::invalid_argument("appell_from_g: degree must be >= 0");
  if (degree >= g.count())
    throw std::invalid_argument("appell_from_g: not enough g coefficients for this degree");
  const double n_fact = factorial(degree);

  AppellPolynomial p;
  p.degree = degree;
  // Scalar part: n! sum_{j=0}^{n-1} g_j / (n-j)!.
  {
    CompensatedSum acc;
    for (int j = 0; j < degree; ++j) acc.add(g.g[j] / factorial(degree - j));
    p.scalar = n_fact * acc.value();
  }
  // z-polynomial: coefficient of z^i is n! g_{n-i} / i!.
  p.z_coeffs.resize(degree + 1);
  for (int i = 0; i <= degree; ++i) {
    p.z_coeffs[i] = n_fact * g.g[degree - i] / factorial(i);
  }
  return p;
}

SpectralCoefficients spectral_coefficients(const std::vector<AppellPolynomial>& polys, int k,
                                           int degree) {
  if (k == 0) throw std::invalid_argument("spectral_coefficients: k must be nonzero");
  if (degree < 0) throw std::invalid_argument("spectral_coefficients: degree must be >= 0");
  if (polys.size() < static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("spectral_coefficients: polys must cover degrees 0..n");
  for (int j = 0; j <= degree; ++j) {
    if (polys[j].degree != j)
      throw std::invalid_argument("spectral_coefficients: polys must be ordered by degree");
  }

  CompensatedSum re, im;
  for (int j = 0; j <= degree; ++j) {
    if (polys[j].scalar == 0.0) continue;
    const std::complex<double> w =
        imaginary_base_power(k, j - degree - 1) * (polys[j].scalar / factorial(j));
    re.add(w.real());
    im.add(w.imag());
  }

  SpectralCoefficients out;
  out.k = k;
  out.degree = degree;
  out.s = {re.value(), im.value()};
  out.d = -factorial(degree) * out.s;
  return out;
}

std::complex<double> fourier_moment(int mdeg, int k) {
  if (k == 0) throw std::invalid_argument("fourier_moment: k must be nonzero");
  if (mdeg < 0) throw std::invalid_argument("fourier_moment: mdeg must be >= 0");
  const double b = -two_pi * static_cast<double>(k);  // a = -2 pi i k = i b
  std::complex<double> m{0.0, 0.0};
  for (int j = 1; j <= mdeg; ++j) {
    const std::complex<double> numer{1.0 - static_cast<double>(j) * m.real(),
                                     -static_cast<double>(j) * m.imag()};
    m = divide_by_imaginary(numer, b);
  }
  return m;
}

TheoremReport verify_spectral_identity(const GSeries& g, int degree, int k) {
  if (degree < 0) throw std::invalid_argument("verify_spectral_identity: degree must be >= 0");
  if (degree >= g.count())
    throw std::invalid_argument("verify_spectral_identity: not enough g coefficients");
  if (k == 0) throw std::invalid_argument("verify_spectral_identity: k must be nonzero");

  std::vector<AppellPolynomial> polys;
  polys.reserve(degree + 1);
  for (int j = 0; j <= degree; ++j) polys.push_back(appell_from_g(g, j));
  const AppellPolynomial& pn = polys[degree];

  TheoremReport report;
  report.d_formula = spectral_coefficients(polys, k, degree).d;

  // Moment route: integrate the z-polynomial termwise with exact moments.
  {
    CompensatedSum re, im;
    for (int i = 0; i <= degree; ++i) {
      if (pn.z_coeffs[i] == 0.0) continue;
      const std::complex<double> w = pn.z_coeffs[i] * fourier_moment(i, k);
      re.add(w.real());
      im.add(w.imag());
    }
    report.d_moment = {re.value(), im.value()};
  }

  // Quadrature route: composite Simpson with 2^14 panels on [0, 1].
  {
    constexpr int panels = 1 << 14;
    const double h = 1.0 / panels;
    CompensatedSum re, im;
    const auto node = [&](int i) -> std::complex<double> {
      const double z = static_cast<double>(i) * h;
      const double angle = two_pi * static_cast<double>(k) * z;
      const std::complex<double> kernel{std::cos(angle), -std::sin(angle)};
      return pn.eval(z) * kernel;
    };
    const std::complex<double> ends = node(0) + node(panels);
    re.add(ends.real());
    im.add(ends.imag());
    for (int i = 1; i < panels; i += 2) {
      const std::complex<double> w = 4.0 * node(i);
      re.add(w.real());
      im.add(w.imag());
    }
    for (int i = 2; i < panels; i += 2) {
      const std::complex<double> w = 2.0 * node(i);
      re.add(w.real());
      im.add(w.imag());
    }
    report.d_quadrature = std::complex<double>{re.value(), im.value()} * (h / 3.0);
  }

  report.formula_vs_moment = std::abs(report.d_formula - report.d_moment);
  report.moment_vs_quadrature = std::abs(report.d_moment - report.d_quadrature);
  return report;
}

SynthesisReport synthesize(const GSeries& g, int degree, int modes,
                           const std::vector<double>& z_grid) {
  if (modes < 1) throw std::invalid_argument("synthesize: need modes >= 1");
  if (z_grid.empty()) throw std::invalid_argument("synthesize: empty grid");
  for (const double z : z_grid) {
    if (!(z > 0.0 && z < 1.0))
      throw std::invalid_argument("synthesize: grid points must lie strictly inside (0, 1)");
  }

  std::vector<AppellPolynomial> polys;
  polys.reserve(degree + 1);
  for (int j = 0; j <= degree; ++j) polys.push_back(appell_from_g(g, j));
  const AppellPolynomial& pn = polys[degree];

  std::vector<std::complex<double>> d(modes + 1);
  for (int k = 1; k <= modes; ++k) d[k] = spectral_coefficients(polys, k, degree).d;
  const double mean = pn.mean();

  SynthesisReport report;
  report.z_grid = z_grid;
  report.reconstruction.resize(z_grid.size());
  report.reference.resize(z_grid.size());
  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    const double z = z_grid[i];
    CompensatedSum acc;
    acc.add(mean);
    // d_{-k} is the conjugate of d_k, so each +-k pair contributes
    // 2 Re(d_k e^{2 pi i k z}).
    for (int k = 1; k <= modes; ++k) {
      const double angle = two_pi * frac(static_cast<double>(k) * z);
      acc.add(2.0 * (d[k].real() * std::cos(angle) - d[k].imag() * std::sin(angle)));
    }
    report.reconstruction[i] = acc.value();
    report.reference[i] = pn.eval(z);
    report.interior_sup_error =
        std::max(report.interior_sup_error, std::abs(report.reconstruction[i] - report.reference[i]));
  }
  return report;
}

}  // namespace davenport
