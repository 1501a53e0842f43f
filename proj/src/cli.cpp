#include "psystem/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "psystem/error.hpp"
#include "psystem/io.hpp"
#include "psystem/tables.hpp"

namespace psystem {

namespace {

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto log = std::make_shared<spdlog::logger>("psystem", sink);
  log->set_pattern("[%l] %v");
  const char* env = std::getenv("PSYSTEM_LOG");
  const std::string level = env ? env : "warn";
  log->set_level(spdlog::level::from_str(level));
  return log;
}

// Writes to the --out file when given, otherwise to `out`.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  write(file);
}

struct Options {
  std::string model;
  std::string out;
  std::string format;
  std::string config;
  std::optional<int> digits;
  std::optional<double> v0;
  std::optional<double> v0_tilde;
  std::optional<double> gamma_l;
  std::vector<double> range{kDefaultScanLo, kDefaultScanHi};
  TableSpec tables;
};

void cmd_tables(const Options& o, std::ostream& out, spdlog::logger& log) {
  const auto rows = compute_tables(o.tables);
  const auto cols = table_columns(o.tables);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      if (!row.cells[i].gamma_l) {
        log.warn("beta={} v0_tilde={} {}: {}", row.beta, row.v0_tilde, cols[i], row.cells[i].error);
      }
    }
  }
  emit(o.out, out, [&](std::ostream& os) {
    if (o.format == "csv") {
      write_tables_csv(os, o.tables, rows, o.digits);
      return;
    }
    Json j = Json::array();
    for (const auto& row : rows) {
      Json r = {{"beta", row.beta}, {"v0_tilde", row.v0_tilde}};
      for (std::size_t i = 0; i < row.cells.size(); ++i) {
        r[cols[i]] = row.cells[i].gamma_l ? Json(*row.cells[i].gamma_l) : Json(nullptr);
      }
      j.push_back(r);
    }
    os << j.dump(2) << '\n';
  });
}

void cmd_analyze(const Options& o, std::ostream& out, spdlog::logger& log) {
  const auto model = model_from_json(load_json_argument(o.model));
  if (o.range.size() != 2) throw UsageError("--range: expected two values");
  log.info("scanning {} on ({}, {})", to_string(model.kind), o.range[0], o.range[1]);
  const auto report = scan_regions(model, o.range[0], o.range[1]);
  emit(o.out, out, [&](std::ostream& os) { os << to_json(report).dump(2) << '\n'; });
}

void cmd_shock(const Options& o, std::ostream& out, spdlog::logger& log) {
  const auto model = model_from_json(load_json_argument(o.model));
  if (o.v0.has_value() == o.v0_tilde.has_value()) {
    throw UsageError("shock: give exactly one of --v0 and --v0-tilde");
  }
  if (o.v0_tilde && *o.v0_tilde < 0.0) throw UsageError("--v0-tilde: must be >= 0");
  const double v0 = o.v0 ? *o.v0 : std::sqrt(*o.v0_tilde * model.mu / model.rho0);
  const auto sol = solve_rankine_hugoniot(model, v0);
  for (const auto& w : sol.warnings) log.warn("{}", w);
  log.debug("root finder iterations: {}", sol.iterations);
  emit(o.out, out, [&](std::ostream& os) {
    if (o.format == "csv") {
      os << "v0,gamma_l,sigma,residual\n"
         << fmt::format("{:.10g},{:.10g},{:.10g},{:.3e}\n", sol.v0, sol.gamma_l, sol.sigma,
                        sol.rh_residual);
    } else {
      os << to_json(sol).dump(2) << '\n';
    }
  });
}

void cmd_entropy(const Options& o, std::ostream& out, spdlog::logger&) {
  const auto model = model_from_json(load_json_argument(o.model));
  if (!o.gamma_l) throw UsageError("entropy: --gamma-l is required");
  const auto verdict = check_condition(model, *o.gamma_l);
  emit(o.out, out, [&](std::ostream& os) { os << to_json(verdict).dump(2) << '\n'; });
}

void cmd_simulate(const Options& o, std::ostream& out, spdlog::logger& log) {
  if (o.config.empty()) throw UsageError("simulate: --config is required");
  const auto cfg = sim_config_from_json(load_json_argument(o.config));
  log.info("simulating {} cells up to t = {}", cfg.cells, cfg.t_end);
  const auto field = simulate(cfg);
  if (!o.out.empty()) emit(o.out, out, [&](std::ostream& os) { write_field_csv(os, field); });

  Json j = {{"t", field.t}, {"cells", cfg.cells}};
  if (cfg.v0 > 0.0) {
    const auto sol = solve_rankine_hugoniot(cfg.model, cfg.v0);
    const auto est = extract_shock(field, sol);
    j["sigma_rh"] = sol.sigma;
    j["gamma_l_rh"] = sol.gamma_l;
    j.update(to_json(est));
  } else {
    j["trivial"] = true;
  }
  out << j.dump(2) << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);
  Options o;

  CLI::App app{"Rankine-Hugoniot shocks, entropy checks and simulations for the elasticity p-system",
               "psystem"};
  app.require_subcommand(1);

  auto* tables = app.add_subcommand("tables", "Impact tables: gamma_l per beta and v0_tilde");
  tables->add_option("--betas", o.tables.betas)->delimiter(',');
  tables->add_option("--v0-tildes", o.tables.v0_tildes)->delimiter(',');
  tables->add_option("--fs", o.tables.fs, "Blatz-Ko mixing fractions")->delimiter(',');
  tables->add_option("--digits", o.digits, "Decimal places for every column")->check(CLI::Range(0, 17));

  auto* analyze = app.add_subcommand("analyze", "Hyperbolic and genuinely nonlinear strain regions");
  analyze->add_option("--range", o.range, "Strain scan range lo hi")->expected(2);

  auto* shock = app.add_subcommand("shock", "Solve the Rankine-Hugoniot conditions");
  shock->add_option("--v0", o.v0, "Impact speed");
  shock->add_option("--v0-tilde", o.v0_tilde, "Dimensionless impact rho0 v0^2 / mu");

  auto* entropy = app.add_subcommand("entropy", "Standard entropy condition at gamma_l");
  entropy->add_option("--gamma-l", o.gamma_l)->required();

  auto* simulate_cmd = app.add_subcommand("simulate", "Finite-volume run; extraction JSON on stdout");
  simulate_cmd->add_option("--config", o.config, "Run file path or inline JSON")->required();

  for (auto* sub : {analyze, shock, entropy}) {
    sub->add_option("--model", o.model, "Model JSON file or inline JSON")->required();
  }
  for (auto* sub : {tables, analyze, shock, entropy, simulate_cmd}) {
    sub->add_option("--out", o.out, "Output path");
  }
  for (auto* sub : {tables, shock}) {
    sub->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (o.format.empty()) o.format = tables->parsed() ? "csv" : "json";

  try {
    if (tables->parsed()) cmd_tables(o, out, *log);
    else if (analyze->parsed()) cmd_analyze(o, out, *log);
    else if (shock->parsed()) cmd_shock(o, out, *log);
    else if (entropy->parsed()) cmd_entropy(o, out, *log);
    else cmd_simulate(o, out, *log);
  } catch (const UsageError& e) {
    log->error("{}", e.what());
    return kExitUsage;
  } catch (const NumericalError& e) {
    log->error("{}", e.what());
    return kExitNumerical;
  }
  log->flush();
  return kExitOk;
}

} // namespace psystem
