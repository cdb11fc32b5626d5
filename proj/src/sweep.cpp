#include "mecsim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "mecsim/config_io.hpp"
#include "mecsim/engine.hpp"
#include "mecsim/report.hpp"
#include "mecsim/rng.hpp"
#include "mecsim/topology.hpp"

namespace mecsim {

SweepSpec parse_sweep_spec(const std::string& text, int replications) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("sweep spec must look like axis=v1,v2,... (got \"" + text + "\")");
  const std::string axis = text.substr(0, eq);

  SweepSpec spec;
  spec.replications = replications;
  if (axis == "V")
    spec.axis = SweepAxis::kLyapunovV;
  else if (axis == "arrival_rate")
    spec.axis = SweepAxis::kArrivalRate;
  else if (axis == "processing_density")
    spec.axis = SweepAxis::kProcessingDensity;
  else if (axis == "servers_per_ue")
    spec.axis = SweepAxis::kServersPerUe;
  else
    throw std::runtime_error(
        "unknown sweep axis \"" + axis +
        "\" (expected V, arrival_rate, processing_density, or servers_per_ue)");

  std::string values = text.substr(eq + 1);
  std::size_t start = 0;
  while (start <= values.size()) {
    const auto comma = values.find(',', start);
    const std::string token = values.substr(start, comma == std::string::npos ? std::string::npos
                                                                              : comma - start);
    if (token.empty()) throw std::runtime_error("empty value in sweep spec");
    try {
      spec.values.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw std::runtime_error("sweep value \"" + token + "\" is not a number");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (spec.values.empty()) throw std::runtime_error("sweep spec has no values");
  if (spec.replications < 1) throw std::runtime_error("replications must be >= 1");
  return spec;
}

const char* sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kLyapunovV: return "V";
    case SweepAxis::kArrivalRate: return "arrival_rate";
    case SweepAxis::kProcessingDensity: return "processing_density";
    case SweepAxis::kServersPerUe: return "servers_per_ue";
  }
  return "?";
}

SimConfig apply_axis_value(const SimConfig& base, SweepAxis axis, double value) {
  SimConfig config = base;
  switch (axis) {
    case SweepAxis::kLyapunovV:
      config.lyapunov_v = value;
      break;
    case SweepAxis::kArrivalRate: {
      const double old_lambda = config.ue.arrival_rate_bits_per_slot;
      const double new_lambda = value * 1e6 * config.slot_duration_s;
      config.ue.arrival_rate_bits_per_slot = new_lambda;
      // Bounds tied to the arrival rate by the default rule follow it.
      if (old_lambda > 0.0 && config.ue.queue_bound_bits == 4.0 * old_lambda)
        config.ue.queue_bound_bits = 4.0 * new_lambda;
      if (old_lambda > 0.0 && config.ue.gpd_scale_threshold_bits == 4.0 * old_lambda)
        config.ue.gpd_scale_threshold_bits = 4.0 * new_lambda;
      if (old_lambda > 0.0 && config.server.gpd_scale_threshold_bits == 4.0 * old_lambda)
        config.server.gpd_scale_threshold_bits = 4.0 * new_lambda;
      break;
    }
    case SweepAxis::kProcessingDensity:
      config.ue.processing_density = value;
      break;
    case SweepAxis::kServersPerUe:
      config.association_policy = AssociationPolicy::kNearest;
      config.servers_per_ue = static_cast<int>(value);
      break;
  }
  return config;
}

namespace {

struct RepOutcome {
  double power = 0.0;
  double delay = 0.0;
  double violation = 0.0;
};

void aggregate(const std::vector<RepOutcome>& reps, double value, SweepPoint& point) {
  point.value = value;
  point.replications = static_cast<int>(reps.size());
  auto mean_std = [&](auto getter, double& mean, double& std_out) {
    double acc = 0.0;
    for (const auto& r : reps) acc += getter(r);
    mean = acc / reps.size();
    double sq = 0.0;
    for (const auto& r : reps) sq += (getter(r) - mean) * (getter(r) - mean);
    std_out = reps.size() > 1 ? std::sqrt(sq / (reps.size() - 1)) : 0.0;
  };
  mean_std([](const RepOutcome& r) { return r.power; }, point.power_mean_w, point.power_std_w);
  mean_std([](const RepOutcome& r) { return r.delay; }, point.delay_mean_s, point.delay_std_s);
  mean_std([](const RepOutcome& r) { return r.violation; }, point.violation_mean,
           point.violation_std);
}

} // namespace

std::vector<SweepPoint> run_sweep(const SimConfig& base, const SweepSpec& spec, int num_threads) {
  const int num_points = static_cast<int>(spec.values.size());
  const int num_jobs = num_points * spec.replications;
  std::vector<RepOutcome> outcomes(num_jobs);

  std::atomic<int> next_job{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const int job = next_job.fetch_add(1);
      if (job >= num_jobs) return;
      try {
        const int point = job / spec.replications;
        const int rep = job % spec.replications;
        SimConfig config = apply_axis_value(base, spec.axis, spec.values[point]);
        // Replications are independent; the same replication shares its seed
        // across axis values so that points are compared under common
        // random numbers.
        config.rng_seed = mix64(base.rng_seed, static_cast<std::uint64_t>(rep) + 1);
        const Topology topology = build_topology(config);
        const RunResult result = run_simulation(config, topology);
        outcomes[job].power = result.summary.network_mean_power_w;
        outcomes[job].delay = result.summary.network_mean_delay_s;
        outcomes[job].violation = result.summary.pooled_violation_prob;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int threads = std::max(1, std::min(num_threads, num_jobs));
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  std::vector<SweepPoint> points(num_points);
  for (int p = 0; p < num_points; ++p) {
    std::vector<RepOutcome> reps(outcomes.begin() + p * spec.replications,
                                 outcomes.begin() + (p + 1) * spec.replications);
    aggregate(reps, spec.values[p], points[p]);
  }
  return points;
}

void write_sweep_csv(const SimConfig& base, const SweepSpec& spec,
                     const std::vector<SweepPoint>& points, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  out << "# config_hash=" << config_hash(base) << " seed=" << base.rng_seed
      << " version=" << kCodeVersion << "\n";
  out << "axis,value,replications,power_mean_w,power_std_w,delay_mean_s,delay_std_s,"
         "violation_mean,violation_std\n";
  for (const SweepPoint& p : points) {
    out << sweep_axis_name(spec.axis) << ',' << fmt(p.value) << ',' << p.replications << ','
        << fmt(p.power_mean_w) << ',' << fmt(p.power_std_w) << ',' << fmt(p.delay_mean_s) << ','
        << fmt(p.delay_std_s) << ',' << fmt(p.violation_mean) << ',' << fmt(p.violation_std)
        << '\n';
  }
}

} // namespace mecsim
