#include "mecsim/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mecsim/config_io.hpp"

namespace mecsim {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::string provenance_line(const SimConfig& config) {
  return "# config_hash=" + config_hash(config) + " seed=" + std::to_string(config.rng_seed) +
         " version=" + kCodeVersion + "\n";
}

// Streams decimated slot records into the two CSV files.
class CsvSlotSink : public SlotSink {
 public:
  CsvSlotSink(const SimConfig& config, const Topology& topology,
              const std::filesystem::path& out_dir, std::int64_t stride)
      : topology_(topology),
        stride_(stride),
        ue_out_(open_out(out_dir / "slots_ue.csv")),
        pair_out_(open_out(out_dir / "slots_server.csv")) {
    const std::string head = provenance_line(config);
    ue_out_ << head << "slot,ue,arrival_bits,queue_bits,cpu_freq_hz,tx_power_w,vq_x,vq_y,vq_q\n";
    pair_out_ << head
              << "slot,server,ue,tx_power_w,rate_bps,interference_w,offload_bits,queue_bits,"
                 "core_freq_hz,vq_x,vq_y,vq_z\n";
  }

  void on_slot(const SlotRecord& r) override {
    if (stride_ <= 0 || r.slot % stride_ != 0) return;
    for (std::size_t i = 0; i < r.queue_bits.size(); ++i) {
      ue_out_ << r.slot << ',' << i << ',' << fmt(r.arrival_bits[i]) << ','
              << fmt(r.queue_bits[i]) << ',' << fmt(r.cpu_freq_hz[i]) << ','
              << fmt(r.total_tx_power_w[i]) << ',' << fmt(r.ue_virtual[i].x) << ','
              << fmt(r.ue_virtual[i].y) << ',' << fmt(r.ue_virtual[i].q) << '\n';
    }
    for (std::size_t pid = 0; pid < r.server_queue_bits.size(); ++pid) {
      const auto& pair = topology_.pairs[pid];
      pair_out_ << r.slot << ',' << pair.server << ',' << pair.ue << ','
                << fmt(r.tx_power_w[pid]) << ',' << fmt(r.rate_bps[pid]) << ','
                << fmt(r.interference_w[pid]) << ',' << fmt(r.offload_bits[pid]) << ','
                << fmt(r.server_queue_bits[pid]) << ',' << fmt(r.core_freq_hz[pid]) << ','
                << fmt(r.server_virtual[pid].x) << ',' << fmt(r.server_virtual[pid].y) << ','
                << fmt(r.server_virtual[pid].z) << '\n';
    }
  }

 private:
  const Topology& topology_;
  std::int64_t stride_;
  std::ofstream ue_out_;
  std::ofstream pair_out_;
};

ordered_json gpd_to_json(const std::optional<GpdFit>& fit) {
  if (!fit) return nullptr;
  ordered_json j;
  j["sigma_bits"] = fit->sigma;
  j["xi"] = fit->xi;
  j["count"] = fit->count;
  j["shape_clamped"] = fit->shape_clamped;
  return j;
}

ordered_json flag_to_json(const std::optional<bool>& flag) {
  if (!flag) return nullptr;
  return *flag;
}

} // namespace

std::string summary_to_json(const SimConfig& config, const Topology& topology,
                            const RunResult& result) {
  const RunSummary& s = result.summary;
  ordered_json root;
  root["provenance"]["version"] = kCodeVersion;
  root["provenance"]["config_hash"] = config_hash(config);
  root["provenance"]["seed"] = config.rng_seed;
  root["config"] = nlohmann::ordered_json::parse(dump_config(config));

  ordered_json& run = root["run"];
  run["total_slots"] = s.total_slots;
  run["warmup_slots"] = s.warmup_slots;
  run["measured_slots"] = s.measured_slots;
  run["undefined_averages"] = s.undefined_averages;

  ordered_json& net = root["network"];
  net["mean_power_w"] = s.network_mean_power_w;
  net["mean_delay_s"] = s.network_mean_delay_s;
  net["delay_defined_ues"] = s.delay_defined_ues;
  net["pooled_queue_violation_prob"] = s.pooled_violation_prob;

  ordered_json ue_positions = ordered_json::array();
  for (const auto& [x, y] : topology.ue_positions) ue_positions.push_back({x, y});
  root["topology"]["ue_positions"] = ue_positions;
  ordered_json server_positions = ordered_json::array();
  for (const auto& [x, y] : topology.server_positions) server_positions.push_back({x, y});
  root["topology"]["server_positions"] = server_positions;

  ordered_json ues = ordered_json::array();
  for (std::size_t i = 0; i < s.ues.size(); ++i) {
    const UeSummary& u = s.ues[i];
    ordered_json j;
    j["ue"] = i;
    j["avg_power_w"] = u.avg_power_w;
    j["avg_queue_bits"] = u.avg_queue_bits;
    j["avg_arrival_bits"] = u.avg_arrival_bits;
    j["delay_s"] = u.delay_s ? ordered_json(*u.delay_s) : ordered_json(nullptr);
    j["queue_violation_prob"] = u.violation_prob;
    j["exceedance_count"] = u.exceedance_count;
    j["gpd"] = gpd_to_json(u.gpd);
    j["virtual_queues"] = {{"x", u.final_virtual.x}, {"y", u.final_virtual.y},
                           {"q", u.final_virtual.q}};
    j["constraints"]["violation_prob_ok"] = u.violation_prob_ok;
    j["constraints"]["excess_mean_ok"] = flag_to_json(u.excess_mean_ok);
    j["constraints"]["excess_second_moment_ok"] = flag_to_json(u.excess_second_moment_ok);
    j["constraints"]["sigma_ok"] = flag_to_json(u.sigma_ok);
    j["constraints"]["xi_ok"] = flag_to_json(u.xi_ok);
    ues.push_back(j);
  }
  root["ues"] = ues;

  ordered_json pairs = ordered_json::array();
  for (const PairSummary& p : s.pairs) {
    ordered_json j;
    j["server"] = p.server;
    j["ue"] = p.ue;
    j["avg_rate_bps"] = p.avg_rate_bps;
    j["avg_queue_bits"] = p.avg_queue_bits;
    j["avg_tx_power_w"] = p.avg_tx_power_w;
    j["violation_prob"] = p.violation_prob;
    j["exceedance_count"] = p.exceedance_count;
    j["gpd"] = gpd_to_json(p.gpd);
    j["virtual_queues"] = {{"x", p.final_virtual.x}, {"y", p.final_virtual.y},
                           {"z", p.final_virtual.z}};
    j["violation_prob_ok"] = p.violation_prob_ok;
    pairs.push_back(j);
  }
  root["server_queues"] = pairs;

  return root.dump(2) + "\n";
}

RunResult run_and_write(const SimConfig& config, const std::string& out_dir,
                        std::int64_t decimate_stride) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const Topology topology = build_topology(config);

  RunResult result;
  if (decimate_stride > 0) {
    CsvSlotSink sink(config, topology, out_dir, decimate_stride);
    result = run_simulation(config, topology, &sink);
  } else {
    result = run_simulation(config, topology, nullptr);
  }

  auto summary = open_out(fs::path(out_dir) / "summary.json");
  summary << summary_to_json(config, topology, result);
  return result;
}

namespace {

void write_exceedance_files(const SimConfig& config, const ExceedanceLog& log,
                            const std::filesystem::path& out_dir, const std::string& stem) {
  if (log.count() == 0) return;
  const std::string head = provenance_line(config);

  auto samples_out = open_out(out_dir / (stem + "_exceedances.csv"));
  samples_out << head << "index,excess_bits\n";
  for (std::size_t k = 0; k < log.samples().size(); ++k)
    samples_out << k << ',' << fmt(log.samples()[k]) << '\n';

  const auto fit = fit_gpd_mom(log);
  if (!fit) return;

  auto ccdf_out = open_out(out_dir / (stem + "_ccdf.csv"));
  ccdf_out << head << "excess_bits,empirical_ccdf,gpd_ccdf\n";
  const EmpiricalCcdf empirical(log.samples());
  for (double x : empirical.sorted_samples())
    ccdf_out << fmt(x) << ',' << fmt(empirical(x)) << ',' << fmt(gpd_ccdf(x, fit->sigma, fit->xi))
             << '\n';

  auto trace_out = open_out(out_dir / (stem + "_trace.csv"));
  trace_out << head << "count,sigma_bits,xi\n";
  const std::int64_t stride = std::max<std::int64_t>(1, log.count() / 64);
  for (const TracePoint& p : parameter_trace(log, stride))
    trace_out << p.count << ',' << fmt(p.sigma) << ',' << fmt(p.xi) << '\n';
}

} // namespace

void write_tail_exports(const SimConfig& config, const Topology& topology,
                        const RunResult& result, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  for (std::size_t i = 0; i < result.ue_exceedances.size(); ++i)
    write_exceedance_files(config, result.ue_exceedances[i], out_dir,
                           "tail_ue_" + std::to_string(i));

  for (std::size_t pid = 0; pid < result.pair_exceedances.size(); ++pid) {
    const auto& pair = topology.pairs[pid];
    write_exceedance_files(config, result.pair_exceedances[pid], out_dir,
                           "tail_server_" + std::to_string(pair.server) + "_ue_" +
                               std::to_string(pair.ue));
  }

  const std::string head = provenance_line(config);
  for (std::size_t pid = 0; pid < result.interference.size(); ++pid) {
    const auto& dist = result.interference[pid];
    const auto& pair = topology.pairs[pid];
    auto out = open_out(fs::path(out_dir) / ("interference_ue_" + std::to_string(pair.ue) +
                                             "_server_" + std::to_string(pair.server) + ".csv"));
    out << head << "bin_low_w,bin_high_w,probability\n";
    for (int b = 0; b < dist.num_bins(); ++b) {
      if (dist.probability(b) == 0.0) continue;
      out << fmt(b == 0 ? 0.0 : dist.bin_low_edge(b)) << ',' << fmt(dist.bin_high_edge(b)) << ','
          << fmt(dist.probability(b)) << '\n';
    }
  }
}

} // namespace mecsim
