#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "mecsim/config_io.hpp"
#include "mecsim/engine.hpp"
#include "mecsim/params.hpp"
#include "mecsim/report.hpp"
#include "mecsim/sweep.hpp"
#include "mecsim/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 1;
constexpr int kExitSolverFailure = 2;

struct CommonOptions {
  std::string config_path;
  std::string out_dir = "out";
  std::int64_t slots_override = -1;
  std::int64_t seed_override = -1;
  std::int64_t decimate = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_out) {
  cmd->add_option("--config", opt.config_path, "config file (JSON)")->required();
  cmd->add_option("--slots", opt.slots_override, "override global.num_slots");
  cmd->add_option("--seed", opt.seed_override, "override global.rng_seed");
  if (with_out) {
    cmd->add_option("--out", opt.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--decimate", opt.decimate,
                    "write every K-th slot to the slot CSVs (0 = no slot stream)")
        ->capture_default_str();
  }
}

// Loads, applies overrides, validates. Returns false (after printing every
// violation) when the config is rejected.
bool load_and_validate(const CommonOptions& opt, mecsim::SimConfig& config) {
  config = mecsim::load_config(opt.config_path);
  if (opt.slots_override >= 0) config.num_slots = opt.slots_override;
  if (opt.seed_override >= 0) config.rng_seed = static_cast<std::uint64_t>(opt.seed_override);
  const auto violations = mecsim::validate_config(config);
  for (const auto& v : violations) std::cerr << "config violation: " << v << "\n";
  return violations.empty();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slot-based multi-user MEC offloading simulator"};
  app.require_subcommand(1);

  CommonOptions run_opt, sweep_opt, tail_opt, validate_opt;
  std::string sweep_text;
  int sweep_reps = 1;
  int sweep_threads = static_cast<int>(std::thread::hardware_concurrency());

  CLI::App* run_cmd = app.add_subcommand("run", "single simulation; writes summary.json + CSVs");
  add_common(run_cmd, run_opt, true);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "parameter sweep; writes an aggregated CSV per axis value");
  add_common(sweep_cmd, sweep_opt, true);
  sweep_cmd->add_option("--sweep", sweep_text, "axis=v1,v2,... with axis in {V, arrival_rate, "
                                               "processing_density, servers_per_ue}")
      ->required();
  sweep_cmd->add_option("--reps", sweep_reps, "replications per sweep point")
      ->capture_default_str();
  sweep_cmd->add_option("--threads", sweep_threads, "worker threads (default: hardware)");

  CLI::App* tail_cmd = app.add_subcommand(
      "tail", "single simulation plus exceedance/CCDF/GPD-trace/interference exports");
  add_common(tail_cmd, tail_opt, true);

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a config and exit");
  add_common(validate_cmd, validate_opt, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      mecsim::SimConfig config;
      if (!load_and_validate(validate_opt, config)) return kExitBadConfig;
      std::cout << "config ok (hash " << mecsim::config_hash(config) << ")\n";
      return kExitOk;
    }

    if (run_cmd->parsed()) {
      mecsim::SimConfig config;
      if (!load_and_validate(run_opt, config)) return kExitBadConfig;
      const auto result = mecsim::run_and_write(config, run_opt.out_dir, run_opt.decimate);
      std::cout << "run complete: " << result.summary.measured_slots << " measured slots, "
                << "mean power " << result.summary.network_mean_power_w << " W, mean delay "
                << result.summary.network_mean_delay_s << " s\n"
                << "outputs in " << run_opt.out_dir << "\n";
      return kExitOk;
    }

    if (tail_cmd->parsed()) {
      mecsim::SimConfig config;
      if (!load_and_validate(tail_opt, config)) return kExitBadConfig;
      const mecsim::Topology topology = mecsim::build_topology(config);
      const auto result = mecsim::run_and_write(config, tail_opt.out_dir, tail_opt.decimate);
      mecsim::write_tail_exports(config, topology, result, tail_opt.out_dir);
      std::cout << "tail exports in " << tail_opt.out_dir << "\n";
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      mecsim::SimConfig config;
      if (!load_and_validate(sweep_opt, config)) return kExitBadConfig;
      const mecsim::SweepSpec spec = mecsim::parse_sweep_spec(sweep_text, sweep_reps);
      const auto points = mecsim::run_sweep(config, spec, sweep_threads);
      std::filesystem::create_directories(sweep_opt.out_dir);
      const std::string csv = sweep_opt.out_dir + "/sweep_" +
                              mecsim::sweep_axis_name(spec.axis) + ".csv";
      mecsim::write_sweep_csv(config, spec, points, csv);
      std::cout << "sweep complete: " << points.size() << " points -> " << csv << "\n";
      return kExitOk;
    }
  } catch (const mecsim::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  return kExitOk;
}
