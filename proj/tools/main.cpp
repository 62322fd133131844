#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using davenport::cli::RunConfig;

  CLI::App app{"Davenport expansion toolkit: arithmetic-function Fourier series, "
               "Ramanujan-sum identities, exact zeta constants, coefficient-growth "
               "probes and the spectral polynomial family"};
  app.require_subcommand(1);

  RunConfig config;
  config.table_limit = davenport::cli::default_table_limit();

  std::string grid_spec;
  const auto add_common = [&](CLI::App* cmd, bool with_function = true) {
    if (with_function) {
      cmd->add_option("--func", config.function,
                      "catalog function: mobius, liouville, von_mangoldt, log, unit, one, power:r");
    }
    cmd->add_option("--format", config.format, "output format: json or csv");
    cmd->add_option("--out", config.out_path, "write the report to this path instead of stdout");
    cmd->add_option("--seed", config.seed, "sampling seed, recorded in every report");
    cmd->add_option("--workers", config.workers, "worker threads for table construction");
    cmd->add_option("--limit", config.table_limit,
                    "default table limit (env DAVENPORT_TABLE_LIMIT), capped at 1e7");
  };

  auto* coeffs = app.add_subcommand("coeffs", "trigonometric-side coefficient table");
  add_common(coeffs);
  coeffs->add_option("--N", config.degree, "expansion degree N >= 1");
  coeffs->add_option("--terms", config.terms, "coefficient count");

  auto* verify = app.add_subcommand("verify", "evaluate both sides of the expansion");
  add_common(verify);
  verify->add_option("--N", config.degree, "expansion degree N >= 1");
  verify->add_option("--x", config.x, "evaluation point x > 0");
  verify->add_option("--terms-lhs", config.terms_lhs, "fractional-part side truncation");
  verify->add_option("--terms-rhs", config.terms_rhs, "trigonometric side truncation");
  verify->add_flag("--cesaro", config.cesaro, "(C,1) average the trigonometric side");

  auto* classic = app.add_subcommand("classic", "both sides of the classical sine expansion");
  add_common(classic);
  classic->add_option("--x", config.x, "evaluation point x > 0");
  classic->add_option("--terms", config.terms, "truncation");

  auto* continuity = app.add_subcommand("continuity", "coefficient-growth and increment probes");
  add_common(continuity);
  continuity->add_option("--N", config.degree, "expansion degree N >= 1");
  continuity->add_option("--x", config.x, "probe base point");
  continuity->add_option("--terms", config.terms, "coefficient table limit");
  continuity->add_option("--modulus", config.modulus, "log, power or weight");
  continuity->add_option("--alpha", config.alpha, "exponent for the power modulus");
  continuity->add_option("--weight-func", config.weight_function,
                         "weight function for the weight modulus");
  continuity->add_option("--m-grid", grid_spec, "comma-separated grid, e.g. 100,1000,10000");
  continuity->add_flag("--probe", config.probe, "sample increments instead of growth sums");
  continuity->add_option("--samples", config.samples, "increment sample count");

  auto* ramanujan = app.add_subcommand("ramanujan", "Ramanujan-sum identities and bounds");
  add_common(ramanujan, false);
  ramanujan->add_option("--check", config.check, "26, 27, 28 or bound");
  ramanujan->add_option("--q", config.q, "modulus q");
  ramanujan->add_option("--n", config.n, "argument n");
  ramanujan->add_option("--s", config.s, "exponent (s or r, depending on the check)");
  ramanujan->add_option("--terms", config.terms, "series truncation");

  auto* zeta = app.add_subcommand("zeta", "exact constants and zeta evaluations");
  add_common(zeta, false);
  zeta->add_option("--negative", config.zeta_negative, "print zeta(-k) exactly");
  zeta->add_option("--real", config.zeta_real_s, "print zeta(s) for s > 1");
  zeta->add_option("--bernoulli", config.bernoulli_m, "print B_m exactly");
  zeta->add_option("--constant", config.pn_degree, "print the degree-N constant block exactly");
  zeta->add_option("--harmonic", config.harmonic_n, "print H_n and its asymptotic estimate");

  auto* appell = app.add_subcommand("appell", "spectral coefficients and synthesis");
  add_common(appell);
  appell->add_option("--x", config.x, "evaluation point");
  appell->add_option("--K", config.g_count, "number of generating coefficients");
  appell->add_option("--terms", config.terms, "inner series truncation");
  appell->add_option("--n", config.degree, "polynomial degree");
  appell->add_option("--k", config.spectral_k, "nonzero frequency");
  appell->add_option("--modes", config.modes, "synthesis mode count (selects synthesis)");
  appell->add_option("--grid", config.grid_points, "synthesis grid points on [0.1, 0.9]");

  auto* segal = app.add_subcommand("segal", "truncated convolution-limit data");
  add_common(segal);
  segal->add_option("--k", config.spectral_k, "exponent k >= 0 of the co-factor n^-k");
  segal->add_option("--terms", config.terms, "truncation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // flag/subcommand validation failures
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  if (!grid_spec.empty()) {
    std::size_t pos = 0;
    while (pos < grid_spec.size()) {
      std::size_t next = grid_spec.find(',', pos);
      if (next == std::string::npos) next = grid_spec.size();
      config.m_grid.push_back(std::stoull(grid_spec.substr(pos, next - pos)));
      pos = next + 1;
    }
  }
  return davenport::cli::dispatch(config, std::cout, std::cerr);
}
