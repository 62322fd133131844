#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "davenport/arith.hpp"

namespace davenport {

// Generating-function coefficients g_k(x), the polynomial family they induce,
// and its exponential-Fourier coefficients, verified through three
// independent routes: the spectral partial-fraction formula, exact monomial
// moments, and numerical quadrature.
//
// The g array is a finite, self-consistent model: every identity below is
// exact for a fixed g truncation, so agreement is a matter of floating-point
// accuracy, not series convergence.

/// g_k(x) = -(2 pi)^{-k} [ cos(pi k/2)/pi * sum_n F_k(n) sin(2 pi n x)/n
///                       - sin(pi k/2)/pi * sum_n F_k(n) cos(2 pi n x)/n ],
/// truncated at inner_terms. Even k carries only the sine series, odd k only
/// the cosine series. The sign and scale normalize the generating function so
/// the degree-N member of the family reproduces the fractional-part side of
/// the expansion; for the Mobius function g_0(x) is the truncation of
/// -sin(2 pi x)/pi.
struct GSeries {
  ArithmeticFunctionId id;
  double x = 0.0;
  std::size_t inner_terms = 0;
  std::vector<double> g;  // g[k] for k = 0..count-1

  int count() const { return static_cast<int>(g.size()); }
};

GSeries g_coefficients(const ArithmeticFunctionId& id, double x, int count,
                       std::size_t inner_terms, const FactorSieve& sieve, int workers = 1);

/// Synthetic coefficient array for tests and experiments.
GSeries g_from_values(std::vector<double> values);

/// Degree-n member of the family:
///   scalar part  P_n = n! sum_{j=0}^{n-1} g_j / (n-j)!      (P_0 = 0)
///   z-polynomial P_n(z) = n! sum_{j=0}^{n} g_j z^{n-j}/(n-j)!
/// so that P_n(1) - P_n(0) = P_n.
struct AppellPolynomial {
  int degree = 0;
  double scalar = 0.0;
  std::vector<double> z_coeffs;  // z_coeffs[i] multiplies z^i

  double eval(double z) const;
  /// Integral over [0, 1]: sum_i z_coeffs[i] / (i+1).
  double mean() const;
};

AppellPolynomial appell_from_g(const GSeries& g, int degree);

/// s_{k,n} = sum_{j=0}^{n} (2 pi i k)^{j-n-1} P_j / j!   and   d_{k,n} = -n! s_{k,n}.
/// Purely imaginary bases are handled through an exact period-4 unit pattern,
/// so d at -k is the bitwise conjugate of d at k.
struct SpectralCoefficients {
  int k = 0;
  int degree = 0;
  std::complex<double> s;
  std::complex<double> d;
};

SpectralCoefficients spectral_coefficients(const std::vector<AppellPolynomial>& polys, int k,
                                           int degree);

/// Exact monomial moment integral of z^mdeg against e^{-2 pi i k z} over
/// [0, 1], by the recurrence M_0 = 0, M_m = (1 - m M_{m-1}) / (-2 pi i k).
std::complex<double> fourier_moment(int mdeg, int k);

struct TheoremReport {
  std::complex<double> d_formula;     // spectral partial-fraction route
  std::complex<double> d_moment;      // exact moment route
  std::complex<double> d_quadrature;  // composite Simpson, 2^14 panels
  double formula_vs_moment = 0.0;
  double moment_vs_quadrature = 0.0;
};

/// Computes the degree-n coefficient at frequency k by all three routes.
TheoremReport verify_spectral_identity(const GSeries& g, int degree, int k);

struct SynthesisReport {
  std::vector<double> z_grid;
  std::vector<double> reconstruction;
  std::vector<double> reference;
  double interior_sup_error = 0.0;
};

/// Truncated exponential-Fourier synthesis of the degree-n polynomial on an
/// interior grid (grid points must lie strictly inside (0, 1)): the mean is
/// added explicitly as the k = 0 term, the nonzero frequencies come from the
/// spectral coefficients. Converges in the interior despite the wrap-around
/// jump at the period boundary.
SynthesisReport synthesize(const GSeries& g, int degree, int modes,
                           const std::vector<double>& z_grid);

}  // namespace davenport
