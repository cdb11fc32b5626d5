#ifndef MECSIM_SWEEP_HPP_
#define MECSIM_SWEEP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mecsim/params.hpp"

namespace mecsim {

enum class SweepAxis {
  kLyapunovV,
  kArrivalRate,       // Mbps
  kProcessingDensity, // cycles/bit
  kServersPerUe,      // k of the nearest-server policy
};

struct SweepSpec {
  SweepAxis axis = SweepAxis::kLyapunovV;
  std::vector<double> values;
  int replications = 1;
};

// Parses "axis=v1,v2,..." with axis in {V, arrival_rate,
// processing_density, servers_per_ue}. Throws std::runtime_error on errors.
SweepSpec parse_sweep_spec(const std::string& text, int replications);

const char* sweep_axis_name(SweepAxis axis);

// Applies one axis value to a copy of the base config.
SimConfig apply_axis_value(const SimConfig& base, SweepAxis axis, double value);

struct SweepPoint {
  double value = 0.0;
  int replications = 0;
  double power_mean_w = 0.0;
  double power_std_w = 0.0;
  double delay_mean_s = 0.0; // over UEs with defined delay, then over reps
  double delay_std_s = 0.0;
  double violation_mean = 0.0;
  double violation_std = 0.0;
};

// Runs |values| x replications simulations on a worker pool. Replication r
// of every point uses the same derived seed, pairing the points through
// common random numbers; points are aggregated in value order.
std::vector<SweepPoint> run_sweep(const SimConfig& base, const SweepSpec& spec, int num_threads);

// Aggregated CSV, one row per axis value.
void write_sweep_csv(const SimConfig& base, const SweepSpec& spec,
                     const std::vector<SweepPoint>& points, const std::string& path);

} // namespace mecsim

#endif // MECSIM_SWEEP_HPP_
