// lfsim: batch front end over the simulation, polytope, schedule, and
// resource-estimation libraries.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfsim/estimator/estimator.hpp"
#include "lfsim/ewfs/monte_carlo.hpp"
#include "lfsim/ewfs/scenario.hpp"
#include "lfsim/io/io.hpp"
#include "lfsim/lfpoly/lf.hpp"
#include "lfsim/spacetime/schedule.hpp"

namespace {

using lfsim::io::json;

// Anything wrong with flags, config files, or their contents → exit 2;
// failures while computing → exit 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Fn>
auto config_phase(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

struct CommonOpts {
  std::string config;
  std::string out;
  std::string format = "text";
  std::string preset;
  std::uint64_t seed = 1;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config, "input config/data file");
  cmd->add_option("--out", opts.out, "output file (default: stdout)");
  cmd->add_option("--format", opts.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--preset", opts.preset, "named preset, e.g. paper-defaults");
  cmd->add_option("--seed", opts.seed, "RNG seed");
  cmd->add_option("--override", opts.overrides, "key=value, repeatable");
}

std::string preset_dir() {
  if (const char* env = std::getenv("LFSIM_PRESET_DIR")) return env;
#ifdef LFSIM_PRESET_DIR_DEFAULT
  return LFSIM_PRESET_DIR_DEFAULT;
#else
  return "presets";
#endif
}

// Loads the preset (if named) and merges the config file on top.
json load_config(const CommonOpts& opts, const std::string& section) {
  json merged = json::object();
  if (!opts.preset.empty()) {
    std::string name = opts.preset;
    for (char& c : name)
      if (c == '-') c = '_';
    const json preset =
        json::parse(lfsim::io::read_text_file(preset_dir() + "/" + name + ".json"));
    if (preset.contains(section)) merged = preset.at(section);
  }
  if (!opts.config.empty()) {
    const json file = json::parse(lfsim::io::read_text_file(opts.config));
    const json& sec = file.contains(section) ? file.at(section) : file;
    for (auto it = sec.begin(); it != sec.end(); ++it) merged[it.key()] = it.value();
  }
  return merged;
}

std::pair<std::string, std::string> split_override(const std::string& kv) {
  const std::size_t eq = kv.find('=');
  if (eq == std::string::npos)
    throw CLI::ValidationError("--override expects key=value, got: " + kv);
  return {kv.substr(0, eq), kv.substr(eq + 1)};
}

void apply_scenario_override(lfsim::ewfs::ScenarioConfig& cfg,
                             const std::string& key, const std::string& value) {
  if (key == "noise_point") {
    json j{{"noise_point", value}};
    cfg.noise_point = lfsim::io::scenario_config_from_json(j).noise_point;
    return;
  }
  const double v = std::stod(value);
  if (key == "n_friend_qubits")
    cfg.n_friend_qubits = int(v);
  else if (key == "scramble_seed")
    cfg.scramble_seed = std::uint64_t(v);
  else if (key == "alice_x2_angle")
    cfg.alice_x2_angle = v;
  else if (key == "bob_angle_1")
    cfg.bob_angles[0] = v;
  else if (key == "bob_angle_2")
    cfg.bob_angles[1] = v;
  else if (key == "depolarizing_p")
    cfg.depolarizing_p = v;
  else if (key == "pullout_fraction")
    cfg.pullout_fraction = v;
  else
    throw CLI::ValidationError("unknown scenario key: " + key);
}

void emit(const CommonOpts& opts, const std::string& content) {
  if (opts.out.empty())
    std::cout << content;
  else
    lfsim::io::write_text_file(opts.out, content);
}

lfsim::ewfs::ScenarioConfig scenario_from(const CommonOpts& opts) {
  return config_phase([&] {
    lfsim::ewfs::ScenarioConfig cfg =
        lfsim::io::scenario_config_from_json(load_config(opts, "ewfs"));
    for (const std::string& kv : opts.overrides) {
      auto [k, v] = split_override(kv);
      apply_scenario_override(cfg, k, v);
    }
    return cfg;
  });
}

int cmd_ewfs_run(const CommonOpts& opts) {
  const lfsim::ewfs::ScenarioConfig cfg = scenario_from(opts);
  const lfsim::ewfs::Behavior bh = lfsim::ewfs::behavior(cfg);
  if (opts.format == "csv") {
    emit(opts, lfsim::io::behavior_to_csv(bh));
  } else if (opts.format == "json") {
    json j = lfsim::io::behavior_to_json(bh);
    j["chsh"] = lfsim::ewfs::chsh_max(bh);
    emit(opts, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out.precision(12);
    out << "CHSH max over variants: " << lfsim::ewfs::chsh_max(bh) << "\n";
    for (int x = 1; x <= 2; ++x)
      for (int y = 1; y <= 2; ++y)
        out << "E(" << x << "," << y << ") = " << bh.correlator(x - 1, y - 1)
            << "\n";
    emit(opts, out.str());
  }
  return 0;
}

int cmd_ewfs_sweep(const CommonOpts& opts, double start, double stop,
                   double step) {
  const lfsim::ewfs::ScenarioConfig cfg = scenario_from(opts);
  std::vector<double> grid;
  for (double p = start; p <= stop + 1e-12; p += step) grid.push_back(p);
  const auto rows = lfsim::ewfs::noise_sweep(cfg, grid);
  if (opts.format == "json")
    emit(opts, lfsim::io::noise_sweep_to_json(rows).dump(2) + "\n");
  else
    emit(opts, lfsim::io::noise_sweep_to_csv(rows));
  return 0;
}

int cmd_ewfs_montecarlo(const CommonOpts& opts, std::uint64_t trials) {
  const lfsim::ewfs::ScenarioConfig cfg = scenario_from(opts);
  const lfsim::ewfs::MonteCarloResult mc =
      lfsim::ewfs::monte_carlo(cfg, trials, opts.seed);
  if (opts.format == "json") {
    emit(opts, lfsim::io::monte_carlo_to_json(mc).dump(2) + "\n");
  } else if (opts.format == "csv") {
    emit(opts, lfsim::io::behavior_to_csv(mc.empirical));
  } else {
    std::ostringstream out;
    out.precision(12);
    out << "trials kept: " << mc.trials_kept
        << ", discarded: " << mc.trials_discarded << "\n"
        << "empirical CHSH: " << mc.chsh << " +/- " << mc.chsh_standard_error
        << "\n";
    emit(opts, out.str());
  }
  return 0;
}

lfsim::ewfs::Behavior behavior_from_file(const std::string& path) {
  return config_phase([&] {
    const std::string text = lfsim::io::read_text_file(path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
      return lfsim::io::behavior_from_csv(text);
    return lfsim::io::behavior_from_json(json::parse(text));
  });
}

int cmd_lf_check(const CommonOpts& opts) {
  if (opts.config.empty())
    throw CLI::ValidationError("lf check needs --config <behavior file>");
  const lfsim::ewfs::Behavior bh = behavior_from_file(opts.config);
  const lfsim::lfpoly::LFCertificate cert = lfsim::lfpoly::lf_feasible(bh);
  if (opts.format == "json") {
    emit(opts, lfsim::io::certificate_to_json(cert).dump(2) + "\n");
  } else {
    std::ostringstream out;
    out.precision(12);
    if (cert.feasible)
      out << "feasible: decomposition found\n";
    else
      out << "infeasible, CHSH=" << cert.violated_value << " > 2 (variant "
          << cert.violated_variant << ")\n";
    emit(opts, out.str());
  }
  return 0;
}

int cmd_lf_vertices(const CommonOpts& opts) {
  const auto vertices = lfsim::lfpoly::enumerate_lf_vertices();
  if (opts.format == "csv") {
    std::ostringstream out;
    for (const auto& v : vertices) out << lfsim::io::behavior_to_csv(v) << "\n";
    emit(opts, out.str());
  } else {
    json arr = json::array();
    for (const auto& v : vertices)
      arr.push_back(lfsim::io::behavior_to_json(v)["behavior"]);
    emit(opts, json{{"vertices", arr}}.dump(2) + "\n");
  }
  return 0;
}

int cmd_spacetime_validate(const CommonOpts& opts) {
  const lfsim::spacetime::ProtocolSchedule sched = config_phase([&] {
    if (!opts.config.empty())
      return lfsim::io::schedule_from_json(
          json::parse(lfsim::io::read_text_file(opts.config)));
    const json cfg = load_config(opts, "spacetime");
    return lfsim::spacetime::canonical_schedule(
        cfg.value("segment_duration", 1.0), cfg.value("bob_offset", 2.0));
  });
  const lfsim::spacetime::ScheduleReport report =
      lfsim::spacetime::validate_schedule(sched);
  if (opts.format == "json") {
    emit(opts, lfsim::io::schedule_report_to_json(report).dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& c : report.conditions)
      out << (c.passed ? "PASS" : "FAIL") << "  " << c.description << "\n";
    out << (report.all_passed ? "schedule valid\n" : "schedule INVALID\n");
    emit(opts, out.str());
  }
  return report.all_passed ? 0 : 1;
}

int cmd_spacetime_minsep(const CommonOpts& opts, double T) {
  const lfsim::spacetime::MinSeparationResult r =
      lfsim::spacetime::min_bob_separation(T);
  if (opts.format == "json") {
    emit(opts, json{{"segment_duration", T},
                    {"overall_light_seconds", r.overall},
                    {"x1_branch_light_seconds", r.x1_branch},
                    {"x2_branch_light_seconds", r.x2_branch}}
                       .dump(2) +
                   "\n");
  } else {
    std::ostringstream out;
    out.precision(12);
    out << "minimum Bob separation at T=" << T << " s: " << r.overall
        << " light-seconds (x=1 branch " << r.x1_branch << ", x=2 branch "
        << r.x2_branch << ")\n";
    emit(opts, out.str());
  }
  return 0;
}

lfsim::estimator::EstimatorInputs estimator_from(const CommonOpts& opts) {
  return config_phase([&] {
    lfsim::estimator::EstimatorInputs in =
        lfsim::io::estimator_inputs_from_json(load_config(opts, "estimator"));
    for (const std::string& kv : opts.overrides) {
      auto [k, v] = split_override(kv);
      lfsim::estimator::set_parameter(in, k, std::stod(v));
    }
    return in;
  });
}

int cmd_estimate_report(const CommonOpts& opts) {
  const lfsim::estimator::EstimatorReport rep =
      lfsim::estimator::full_report(estimator_from(opts));
  if (opts.format == "json") {
    emit(opts, lfsim::io::estimator_report_to_json(rep).dump(2) + "\n");
  } else {
    std::ostringstream out;
    out.precision(6);
    out << "gamma = " << rep.gamma_per_second << " bool-ops/s, delta = "
        << rep.delta_per_second << " depth/s\n"
        << "t_L = " << rep.t_l << ", s_L = " << rep.s_l << "\n"
        << "code distance d = " << rep.code_distance
        << ", tau_LTof = " << rep.tau_ltof_seconds << " s\n"
        << "T_Q = " << rep.t_q_seconds << " s (T_Q/T = " << rep.time_ratio
        << ")\n"
        << "factory qubits: " << rep.factory_qubits_each << " each, "
        << rep.factory_qubits_total << " total\n";
    for (const std::string& w : rep.warnings) out << "warning: " << w << "\n";
    emit(opts, out.str());
  }
  return 0;
}

int cmd_estimate_sweep(const CommonOpts& opts, const std::string& parameter,
                       const std::vector<double>& grid) {
  const auto rows = lfsim::estimator::sweep(estimator_from(opts), parameter, grid);
  if (opts.format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      json r = lfsim::io::estimator_report_to_json(rows[i]);
      r[parameter] = grid[i];
      arr.push_back(std::move(r));
    }
    emit(opts, json{{"rows", arr}}.dump(2) + "\n");
  } else {
    emit(opts, lfsim::io::estimator_sweep_to_csv(parameter, grid, rows));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Friend-scenario simulation, polytope checks, protocol "
               "scheduling, and quantum resource estimation"};
  app.require_subcommand(1);

  CommonOpts opts;
  double sweep_start = 0.0, sweep_stop = 0.4, sweep_step = 0.05;
  std::uint64_t mc_trials = 100000;
  double minsep_T = 1.0;
  std::string sweep_param = "flops";
  std::vector<double> sweep_grid;

  CLI::App* ewfs = app.add_subcommand("ewfs", "friend-scenario runs");
  CLI::App* ewfs_run = ewfs->add_subcommand("run", "exact behavior + CHSH");
  add_common(ewfs_run, opts);
  CLI::App* ewfs_sweep =
      ewfs->add_subcommand("sweep-noise", "CHSH/feasibility over noise grid");
  add_common(ewfs_sweep, opts);
  ewfs_sweep->add_option("--start", sweep_start, "first noise value");
  ewfs_sweep->add_option("--stop", sweep_stop, "last noise value");
  ewfs_sweep->add_option("--step", sweep_step, "grid step");
  CLI::App* ewfs_mc =
      ewfs->add_subcommand("montecarlo", "finite-statistics sampling");
  add_common(ewfs_mc, opts);
  ewfs_mc->add_option("--trials", mc_trials, "number of trials");

  CLI::App* lf = app.add_subcommand("lf", "polytope membership");
  CLI::App* lf_check = lf->add_subcommand("check", "feasibility certificate");
  add_common(lf_check, opts);
  CLI::App* lf_vertices =
      lf->add_subcommand("vertices", "deterministic vertices");
  add_common(lf_vertices, opts);

  CLI::App* st = app.add_subcommand("spacetime", "light-cone checks");
  CLI::App* st_validate = st->add_subcommand("validate", "check a schedule");
  add_common(st_validate, opts);
  CLI::App* st_minsep =
      st->add_subcommand("minsep", "minimum Bob separation");
  add_common(st_minsep, opts);
  st_minsep->add_option("--segment-duration", minsep_T, "T in seconds");

  CLI::App* est = app.add_subcommand("estimate", "resource estimation");
  CLI::App* est_report = est->add_subcommand("report", "full chain");
  add_common(est_report, opts);
  CLI::App* est_sweep = est->add_subcommand("sweep", "grid of reports");
  add_common(est_sweep, opts);
  est_sweep->add_option("--parameter", sweep_param, "input field to vary");
  est_sweep->add_option("--grid", sweep_grid, "values to sweep")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ewfs_run->parsed()) return cmd_ewfs_run(opts);
    if (ewfs_sweep->parsed())
      return cmd_ewfs_sweep(opts, sweep_start, sweep_stop, sweep_step);
    if (ewfs_mc->parsed()) return cmd_ewfs_montecarlo(opts, mc_trials);
    if (lf_check->parsed()) return cmd_lf_check(opts);
    if (lf_vertices->parsed()) return cmd_lf_vertices(opts);
    if (st_validate->parsed()) return cmd_spacetime_validate(opts);
    if (st_minsep->parsed()) return cmd_spacetime_minsep(opts, minsep_T);
    if (est_report->parsed()) return cmd_estimate_report(opts);
    if (est_sweep->parsed())
      return cmd_estimate_sweep(opts, sweep_param, sweep_grid);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
