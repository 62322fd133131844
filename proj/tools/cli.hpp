#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace davenport::cli {

// Fully resolved run configuration. One dispatch produces exactly one report
// on the output stream; diagnostics go to the error stream. Identical configs
// produce byte-identical reports for any worker count.
struct RunConfig {
  std::string subcommand;

  std::string function = "mobius";
  int degree = 1;       // --N
  double x = 0.25;      // --x
  std::size_t terms = 0;      // generic truncation; 0 means table_limit
  std::size_t terms_lhs = 0;  // verify only; 0 means table_limit
  std::size_t terms_rhs = 0;
  bool cesaro = false;

  std::string format = "json";  // json | csv
  std::string out_path;         // empty = stdout
  std::uint64_t seed = 0;
  int workers = 1;
  std::size_t table_limit = 100000;  // default sieve/table size; capped at 1e7

  // continuity
  std::string modulus = "log";  // log | power | weight
  double alpha = 1.0;
  std::string weight_function = "log";
  std::vector<std::size_t> m_grid;  // empty = decades 100..terms
  bool probe = false;
  std::size_t samples = 26;

  // ramanujan
  std::string check = "bound";  // 26 | 27 | 28 | bound (aliases zeta|sigma|mean)
  std::uint64_t q = 1;
  std::uint64_t n = 1;
  double s = 2.0;

  // zeta (exactly one of these modes is set)
  int zeta_negative = -1;   // --negative k
  double zeta_real_s = 0.0; // --real s (0 = unset)
  int bernoulli_m = -1;     // --bernoulli m
  int pn_degree = 0;        // --constant N
  std::uint64_t harmonic_n = 0;  // --harmonic n

  // appell
  int spectral_k = 1;  // --k
  int g_count = 8;     // --K
  int modes = 0;       // --modes (nonzero selects synthesis)
  std::size_t grid_points = 801;
};

/// Reads the default table limit from DAVENPORT_TABLE_LIMIT, if set.
std::size_t default_table_limit();

/// Runs one subcommand. Returns the process exit status: 0 on success,
/// 2 on validation errors, 1 on internal failure.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace davenport::cli
