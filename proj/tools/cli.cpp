#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "davenport/appell.hpp"
#include "davenport/arith.hpp"
#include "davenport/continuity.hpp"
#include "davenport/ramanujan.hpp"
#include "davenport/series.hpp"
#include "davenport/special_values.hpp"

namespace davenport::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t max_table_limit = 10000000;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt15(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

ArithmeticFunctionId parse_function_or_throw(const std::string& name) {
  const auto id = ArithmeticFunctionId::parse(name);
  if (!id) throw std::invalid_argument("unknown function name: " + name);
  return *id;
}

struct Resolved {
  ArithmeticFunctionId id;
  std::size_t terms;
  std::size_t terms_lhs;
  std::size_t terms_rhs;
};

Resolved resolve(const RunConfig& c) {
  if (c.table_limit < 1 || c.table_limit > max_table_limit)
    throw std::invalid_argument("table limit must be in [1, 1e7]");
  if (c.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (c.format != "json" && c.format != "csv")
    throw std::invalid_argument("format must be json or csv");
  Resolved r{parse_function_or_throw(c.function),
             c.terms ? c.terms : c.table_limit,
             c.terms_lhs ? c.terms_lhs : c.table_limit,
             c.terms_rhs ? c.terms_rhs : c.table_limit};
  if (r.terms > max_table_limit || r.terms_lhs > max_table_limit || r.terms_rhs > max_table_limit)
    throw std::invalid_argument("truncation exceeds the 1e7 table cap");
  return r;
}

ordered_json base_config(const RunConfig& c, const Resolved& r) {
  ordered_json j;
  j["subcommand"] = c.subcommand;
  j["function"] = r.id.name();
  j["format"] = c.format;
  j["seed"] = c.seed;
  j["workers"] = c.workers;
  j["table_limit"] = c.table_limit;
  return j;
}

std::string config_comment(const ordered_json& config) {
  return "# config " + config.dump() + "\n";
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path: " + c.out_path);
  f << text;
}

ordered_json complex_json(const std::complex<double>& z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

// --------------------------------------------------------------------------
// Subcommands
// --------------------------------------------------------------------------

std::string run_coeffs(const RunConfig& c, const Resolved& r, const FactorSieve& sieve) {
  if (c.degree < 1) throw std::invalid_argument("N must be >= 1");
  const FourierCoefficients coeffs =
      fourier_coefficients(r.id, c.degree, r.terms, sieve, c.workers);
  ordered_json config = base_config(c, r);
  config["N"] = c.degree;
  config["terms"] = r.terms;
  if (c.format == "csv") {
    std::ostringstream os;
    os << config_comment(config);
    coeffs.write_csv(os);
    return os.str();
  }
  ordered_json j;
  j["config"] = config;
  ordered_json a = ordered_json::array(), b = ordered_json::array();
  for (std::size_t n = 1; n <= coeffs.terms(); ++n) {
    a.push_back(coeffs.a[n]);
    b.push_back(coeffs.b[n]);
  }
  j["a"] = std::move(a);
  j["b"] = std::move(b);
  return j.dump(2) + "\n";
}

std::string run_verify(const RunConfig& c, const Resolved& r, const FactorSieve& sieve) {
  ExpansionParams params{r.id, c.degree, c.x, r.terms_lhs, r.terms_rhs, c.cesaro};
  const EvalReport report = verify_identity(params, sieve, c.workers);

  ordered_json config = base_config(c, r);
  config["N"] = c.degree;
  config["x"] = c.x;
  config["terms_lhs"] = r.terms_lhs;
  config["terms_rhs"] = r.terms_rhs;
  config["cesaro"] = c.cesaro;

  if (c.format == "csv") {
    std::ostringstream os;
    os << config_comment(config)
       << "lhs,rhs,residual,lhs_tail_spread,rhs_tail_spread,discontinuity_flag\n"
       << fmt(report.lhs) << ',' << fmt(report.rhs) << ',' << fmt(report.residual) << ','
       << fmt(report.lhs_tail_spread) << ',' << fmt(report.rhs_tail_spread) << ','
       << (report.discontinuity_flag ? "true" : "false") << '\n';
    return os.str();
  }
  ordered_json j;
  j["config"] = config;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["residual"] = report.residual;
  j["lhs_tail_spread"] = report.lhs_tail_spread;
  j["rhs_tail_spread"] = report.rhs_tail_spread;
  j["discontinuity_flag"] = report.discontinuity_flag;
  return j.dump(2) + "\n";
}

std::string run_classic(const RunConfig& c, const Resolved& r, const FactorSieve& sieve) {
  const ClassicReport report = classic_davenport(r.id, c.x, r.terms, sieve);
  ordered_json config = base_config(c, r);
  config["x"] = c.x;
  config["terms"] = r.terms;
  if (c.format == "csv") {
    std::ostringstream os;
    os << config_comment(config) << "lhs,rhs\n" << fmt(report.lhs) << ',' << fmt(report.rhs)
       << '\n';
    return os.str();
  }
  ordered_json j;
  j["config"] = config;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  return j.dump(2) + "\n";
}

ModulusSpec modulus_from_config(const RunConfig& c) {
  ModulusSpec spec;
  if (c.modulus == "log") {
    spec.kind = ModulusKind::log_m;
  } else if (c.modulus == "power") {
    spec.kind = ModulusKind::power_alpha;
    spec.alpha = c.alpha;
  } else if (c.modulus == "weight") {
    spec.kind = ModulusKind::increasing_weight;
    spec.weight = parse_function_or_throw(c.weight_function);
  } else {
    throw std::invalid_argument("modulus must be log, power or weight");
  }
  return spec;
}

std::string run_continuity(const RunConfig& c, const Resolved& r, const FactorSieve& sieve) {
  const ModulusSpec spec = modulus_from_config(c);
  ordered_json config = base_config(c, r);
  config["N"] = c.degree;
  config["modulus"] = c.modulus;
  config["alpha"] = c.alpha;
  config["weight_function"] = c.weight_function;
  config["terms"] = r.terms;

  if (c.probe) {
    config["samples"] = c.samples;
    ExpansionParams params{r.id, c.degree, c.x, r.terms, r.terms, c.cesaro};
    const IncrementReport report = increment_probe(params, spec, c.samples, c.seed, sieve);
    if (c.format == "csv") {
      std::ostringstream os;
      os << config_comment(config) << "x,h,delta,bound\n";
      for (const auto& sample : report.samples) {
        os << fmt(sample.x) << ',' << fmt(sample.h) << ',' << fmt(sample.delta) << ','
           << fmt(sample.bound) << '\n';
      }
      return os.str();
    }
    ordered_json j;
    j["config"] = config;
    ordered_json samples = ordered_json::array();
    for (const auto& sample : report.samples) {
      samples.push_back(ordered_json{{"x", sample.x},
                                     {"h", sample.h},
                                     {"delta", sample.delta},
                                     {"bound", sample.bound}});
    }
    j["samples"] = std::move(samples);
    j["max_ratio"] = report.max_ratio;
    j["truncation_tail_spread"] = report.truncation_tail_spread;
    return j.dump(2) + "\n";
  }

  std::vector<std::size_t> grid = c.m_grid;
  if (grid.empty()) {
    for (std::size_t m = 100; m <= r.terms; m *= 10) grid.push_back(m);
    if (grid.empty()) grid.push_back(std::max<std::size_t>(2, r.terms));
  }
  const FourierCoefficients coeffs =
      fourier_coefficients(r.id, c.degree, r.terms, sieve, c.workers);
  const GrowthReport report = coefficient_growth(coeffs, grid, spec);

  if (c.format == "csv") {
    std::ostringstream os;
    os << config_comment(config) << "m,S1,S2,ratio1,ratio2\n";
    for (std::size_t i = 0; i < report.m_grid.size(); ++i) {
      os << report.m_grid[i] << ',' << fmt(report.s1[i]) << ',' << fmt(report.s2[i]) << ','
         << fmt(report.ratio1[i]) << ',' << fmt(report.ratio2[i]) << '\n';
    }
    os << "# verdict_head=" << report.verdict_head << " verdict_tail=" << report.verdict_tail
       << '\n';
    return os.str();
  }
  ordered_json j;
  j["config"] = config;
  j["m_grid"] = report.m_grid;
  j["s1"] = report.s1;
  j["s2"] = report.s2;
  j["ratio1"] = report.ratio1;
  j["ratio2"] = report.ratio2;
  j["verdict_head"] = report.verdict_head;
  j["verdict_tail"] = report.verdict_tail;
  return j.dump(2) + "\n";
}

std::string run_ramanujan(const RunConfig& c, const Resolved& r, const FactorSieve& sieve) {
  ordered_json config = base_config(c, r);
  config["check"] = c.check;
  config["q"] = c.q;
  config["n"] = c.n;
  config["s"] = c.s;
  config["terms"] = r.terms;

  const auto residual_json = [&](const ResidualReport& report) {
    ordered_json j;
    j["config"] = config;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["residual"] = report.residual;
    j["tail_bound"] = report.tail_bound;
    return j.dump(2) + "\n";
  };

  if (c.check == "26" || c.check == "zeta") {
    return residual_json(verify_eq_zeta_normalized(c.q, c.s, r.terms, sieve));
  }
  if (c.check == "27" || c.check == "sigma") {
    return residual_json(verify_eq_sigma_ratio(c.n, c.s, r.terms, sieve));
  }
  if (c.check == "28" || c.check == "mean") {
    const PartialSumTrace trace = verify_eq_mean_zero(c.n, r.terms, sieve);
    ordered_json j;
    j["config"] = config;
    j["partial"] = trace.partial;
    ordered_json t = ordered_json::array();
    for (const auto& [m, v] : trace.trace) t.push_back(ordered_json{{"m", m}, {"partial", v}});
    j["trace"] = std::move(t);
    return j.dump(2) + "\n";
  }
  if (c.check == "bound") {
    // Boolean predicate; the report is the bare value.
    return check_bound(c.q, c.n, sieve, c.workers) ? "true\n" : "false\n";
  }
  throw std::invalid_argument("check must be one of 26, 27, 28, bound");
}

std::string run_zeta(const RunConfig& c) {
  // Textual contract: exact rationals as p/q, reals with 15 significant
  // digits. Exactly one mode per invocation.
  int modes = 0;
  modes += c.zeta_negative >= 0;
  modes += c.zeta_real_s != 0.0;
  modes += c.bernoulli_m >= 0;
  modes += c.pn_degree > 0;
  modes += c.harmonic_n > 0;
  if (modes != 1)
    throw std::invalid_argument(
        "zeta needs exactly one of --negative, --real, --bernoulli, --constant, --harmonic");
  if (c.zeta_negative >= 0) return zeta_nonpositive(c.zeta_negative).str() + "\n";
  if (c.bernoulli_m >= 0) return bernoulli(c.bernoulli_m).str() + "\n";
  if (c.pn_degree > 0) return pn_constant(c.pn_degree).str() + "\n";
  if (c.harmonic_n > 0) {
    const HarmonicEstimate h = harmonic_estimate(c.harmonic_n);
    return fmt15(h.h_n) + " " + fmt15(h.estimate) + "\n";
  }
  return fmt15(zeta_real(c.zeta_real_s)) + "\n";
}

std::string run_appell(const RunConfig& c, const Resolved& r, const FactorSieve& sieve) {
  if (c.g_count < 1) throw std::invalid_argument("K must be >= 1");
  if (c.degree < 0 || c.degree >= c.g_count)
    throw std::invalid_argument("appell needs 0 <= n < K");
  const GSeries g = g_coefficients(r.id, c.x, c.g_count, r.terms, sieve, c.workers);

  ordered_json config = base_config(c, r);
  config["x"] = c.x;
  config["K"] = c.g_count;
  config["terms"] = r.terms;
  config["n"] = c.degree;

  if (c.modes > 0) {
    config["modes"] = c.modes;
    config["grid_points"] = c.grid_points;
    if (c.grid_points < 2) throw std::invalid_argument("grid needs >= 2 points");
    std::vector<double> grid(c.grid_points);
    for (std::size_t i = 0; i < c.grid_points; ++i) {
      grid[i] = 0.1 + 0.8 * static_cast<double>(i) / static_cast<double>(c.grid_points - 1);
    }
    const SynthesisReport report = synthesize(g, c.degree, c.modes, grid);
    if (c.format == "csv") {
      std::ostringstream os;
      os << config_comment(config) << "z,reconstruction,reference\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        os << fmt(report.z_grid[i]) << ',' << fmt(report.reconstruction[i]) << ','
           << fmt(report.reference[i]) << '\n';
      }
      os << "# interior_sup_error=" << fmt(report.interior_sup_error) << '\n';
      return os.str();
    }
    ordered_json j;
    j["config"] = config;
    j["z_grid"] = report.z_grid;
    j["reconstruction"] = report.reconstruction;
    j["reference"] = report.reference;
    j["interior_sup_error"] = report.interior_sup_error;
    return j.dump(2) + "\n";
  }

  config["k"] = c.spectral_k;
  const TheoremReport report = verify_spectral_identity(g, c.degree, c.spectral_k);
  ordered_json j;
  j["config"] = config;
  j["g"] = g.g;
  j["d_formula"] = complex_json(report.d_formula);
  j["d_moment"] = complex_json(report.d_moment);
  j["d_quadrature"] = complex_json(report.d_quadrature);
  j["formula_vs_moment"] = report.formula_vs_moment;
  j["moment_vs_quadrature"] = report.moment_vs_quadrature;
  return j.dump(2) + "\n";
}

std::string run_segal(const RunConfig& c, const Resolved& r, const FactorSieve& sieve) {
  if (c.spectral_k < 0) throw std::invalid_argument("k must be >= 0");
  const SegalReport report = segal_limit(r.id, c.spectral_k, r.terms, sieve);
  ordered_json config = base_config(c, r);
  config["k"] = c.spectral_k;
  config["terms"] = r.terms;
  ordered_json j;
  j["config"] = config;
  j["partial_sum"] = report.partial_sum;
  j["S"] = report.S;
  j["L"] = report.L;
  return j.dump(2) + "\n";
}

}  // namespace

std::size_t default_table_limit() {
  if (const char* env = std::getenv("DAVENPORT_TABLE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v >= 1 && v <= max_table_limit) return static_cast<std::size_t>(v);
  }
  return 100000;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::string report;
    if (config.subcommand == "zeta") {
      report = run_zeta(config);
    } else {
      const Resolved r = resolve(config);
      // Sieve must cover every truncation the subcommand touches.
      const std::size_t need =
          std::max({r.terms, r.terms_lhs, r.terms_rhs, static_cast<std::size_t>(config.q),
                    static_cast<std::size_t>(config.n), config.table_limit});
      const FactorSieve sieve(need);
      if (config.subcommand == "coeffs") {
        report = run_coeffs(config, r, sieve);
      } else if (config.subcommand == "verify") {
        report = run_verify(config, r, sieve);
      } else if (config.subcommand == "classic") {
        report = run_classic(config, r, sieve);
      } else if (config.subcommand == "continuity") {
        report = run_continuity(config, r, sieve);
      } else if (config.subcommand == "ramanujan") {
        report = run_ramanujan(config, r, sieve);
      } else if (config.subcommand == "appell") {
        report = run_appell(config, r, sieve);
      } else if (config.subcommand == "segal") {
        report = run_segal(config, r, sieve);
      } else {
        throw std::invalid_argument("unknown subcommand: " + config.subcommand);
      }
    }
    emit(config, out, report);
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace davenport::cli
