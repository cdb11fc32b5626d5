#ifndef MECSIM_PARAMS_HPP_
#define MECSIM_PARAMS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace mecsim {

// Per-UE traffic, compute, and tail-constraint parameters.
struct UeParams {
  double arrival_rate_bits_per_slot = 0.0; // mean task arrival per slot (bits)
  double processing_density = 737.5;       // CPU cycles per bit
  double max_cpu_freq_hz = 1e9;            // cycles/s
  double max_tx_power_w = 0.1;             // watts (20 dBm)
  double queue_bound_bits = 0.0;           // queue length bound
  double violation_tolerance = 0.01;       // tolerable violation probability
  double gpd_scale_threshold_bits = 0.0;   // scale threshold on the excess tail
  double gpd_shape_threshold = 0.3;        // shape threshold, < 1/2
  double access_gain_threshold = 0.0;      // linear expected-gain cutoff for association
};

// Per-server compute capability and per-UE queueing bounds at the server.
struct ServerParams {
  int num_cores = 9;                       // CPU cores, each dedicated to at most one UE
  double core_freq_hz = 1e10;              // cycles/s of one core
  double delay_bound_s = 0.2;              // latency bound on the offloaded-task queue
  double violation_tolerance = 0.01;
  double gpd_scale_threshold_bits = 0.0;
  double gpd_shape_threshold = 0.3;
};

enum class AssociationPolicy {
  kNearest,   // each UE accesses its k nearest servers
  kThreshold, // each UE accesses servers whose expected gain clears its threshold
};

// Global physics, horizon, and placement configuration for one run.
struct SimConfig {
  double bandwidth_hz = 10e6;       // total system bandwidth W
  double noise_psd_w_per_hz = 0.0;  // noise power spectral density N0
  double cpu_power_coeff = 1e-27;   // watt s^3 / cycle^3
  double lyapunov_v = 0.0;          // power-vs-delay tradeoff weight, >= 0
  double slot_duration_s = 0.05;    // coherence slot length
  std::int64_t num_slots = 0;
  std::uint64_t rng_seed = 1;
  double area_side_m = 100.0;       // square deployment area
  int num_ues = 0;
  int num_servers = 0;
  AssociationPolicy association_policy = AssociationPolicy::kNearest;
  int servers_per_ue = 1;           // k for the nearest-server policy
  double arrival_unit_bits = 8192.0; // task granularity of Poisson arrivals
  double warmup_fraction = 0.1;     // leading fraction of slots excluded from averages

  // Optional explicit placement; empty means place by policy (servers on a
  // uniform grid, UEs uniform-random from the placement stream).
  std::vector<std::pair<double, double>> ue_positions;
  std::vector<std::pair<double, double>> server_positions;

  UeParams ue;
  ServerParams server;
};

// Checks every parameter invariant and returns all violations (empty = ok).
std::vector<std::string> validate_config(const SimConfig& config);

} // namespace mecsim

#endif // MECSIM_PARAMS_HPP_
