#include <CLI11.hpp>
#include <iostream>

#include "s3nk/errors.hpp"
#include "s3nk/suites.hpp"

using namespace s3nk;

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for the nearly Kaehler S3xS3 and its CR submanifolds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, seed, samples, tol_alg, tol_der, charts, grid, format, out, profile;
  bool timing = false;
  app.add_option("--config", config_path, "flat key = value config file; flags win over it");
  auto* o_seed = app.add_option("--seed", seed, "RNG seed");
  auto* o_samples = app.add_option("--samples", samples, "random samples for the identity suite");
  auto* o_ta = app.add_option("--tol-algebraic", tol_alg, "tolerance for checks without differentiation");
  auto* o_td = app.add_option("--tol-derivative", tol_der, "tolerance for first-derivative identity checks");
  auto* o_chart = app.add_option("--chart", charts, "comma-separated chart ids for `all`");
  auto* o_grid = app.add_option("--grid", grid, "grid points per axis in chart sweeps");
  auto* o_format = app.add_option("--format", format, "json or text");
  auto* o_out = app.add_option("--out", out, "report path (stdout when omitted)");
  auto* o_profile = app.add_option("--profile", profile, "custom phase profile, e.g. sine:1,2,0");
  auto* o_timing = app.add_flag("--timing", timing, "record wall-clock duration (reports are then not reproducible)");

  auto* identities = app.add_subcommand("identities", "algebraic and first-derivative identities of the structure");
  auto* chart = app.add_subcommand("chart", "CR analysis of one registered chart");
  std::string chart_id;
  chart->add_option("id", chart_id, "chart id (see `nkcheck charts`)")->required();
  auto* ode = app.add_subcommand("ode", "the A(t) system");
  auto* all = app.add_subcommand("all", "every suite and every chart");
  auto* list = app.add_subcommand("charts", "list registered chart ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    for (const auto& id : chart_ids()) std::cout << id << "\n";
    return 0;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
    const std::pair<CLI::Option*, std::pair<const char*, std::string*>> flags[] = {
        {o_seed, {"seed", &seed}},         {o_samples, {"samples", &samples}}, {o_ta, {"tol_algebraic", &tol_alg}},
        {o_td, {"tol_derivative", &tol_der}}, {o_chart, {"chart", &charts}},     {o_grid, {"grid", &grid}},
        {o_format, {"format", &format}},   {o_out, {"out", &out}},             {o_profile, {"profile", &profile}},
    };
    for (const auto& [opt, kv] : flags)
      if (opt->count() > 0) set_config_value(cfg, kv.first, *kv.second);
    if (o_timing->count() > 0) cfg.timing = timing;
    cfg.validate();
  } catch (const Error& e) {
    std::cerr << "nkcheck: " << e.what() << "\n";
    return 2;
  }

  try {
    CheckReport rep;
    if (identities->parsed())
      rep = run_identity_suite(cfg);
    else if (chart->parsed())
      rep = run_chart_suite(cfg, chart_id);
    else if (ode->parsed())
      rep = run_ode_suite(cfg);
    else if (all->parsed())
      rep = run_all(cfg);
    emit_report(rep, cfg.format, cfg.out);
    return rep.all_pass() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "nkcheck: " << e.what() << "\n";
    return 2;
  }
}
