#ifndef MECSIM_QUEUEING_HPP_
#define MECSIM_QUEUEING_HPP_

#include <cstdint>

namespace mecsim {

// Task queue at the UE, in bits.
struct UeQueue {
  double length_bits = 0.0;
  double last_arrival_bits = 0.0;
  double last_completion_bits = 0.0;
};

// Offloaded-task queue for one (server, UE) pair, plus the running mean of
// the offloading rate used as the delay-to-bits threshold.
struct ServerQueue {
  double length_bits = 0.0;
  double avg_rate_bps = 0.0;   // mean of all recorded per-slot rates
  std::int64_t rate_samples = 0;
};

// Virtual queues enforcing the UE-side tail constraints: excess mean (x),
// excess second moment (y), and violation frequency (q).
struct UeVirtualQueues {
  double x = 0.0; // bits
  double y = 0.0; // bits^2
  double q = 0.0; // dimensionless
};

// Server-side counterparts; z tracks the violation-frequency constraint.
struct ServerVirtualQueues {
  double x = 0.0; // bits
  double y = 0.0; // bits^2
  double z = 0.0; // dimensionless
};

// Constants subtracted from the excess and squared excess whenever the
// threshold indicator fires: scale/(1-shape) and 2 scale^2/((1-shape)(1-2 shape)).
struct GpdBudget {
  double mean_bits = 0.0;
  double second_moment_bits2 = 0.0;
};

GpdBudget gpd_budget(double scale_threshold_bits, double shape_threshold);

// q(t+1) = max{q(t) + a(t) - b(t), 0}
UeQueue update_ue_queue(const UeQueue& state, double arrival_bits, double completion_bits);

// z(t+1) = max{z(t) + offload - service, 0}; the rate average advances with
// the realized per-slot rate independently of the queue truncation.
ServerQueue update_server_queue(const ServerQueue& state, double offload_bits, double service_bits,
                                double realized_rate_bps);

// Applies the indicator-gated updates given the already-updated queue length.
// Returns the excess (queue - bound) when the indicator fired, else a
// negative value; callers use it to log exceedance samples.
double update_ue_virtual_queues(UeVirtualQueues& vq, double queue_bits, double bound_bits,
                                const GpdBudget& budget, double tolerance);

double update_server_virtual_queues(ServerVirtualQueues& vq, double queue_bits,
                                    double threshold_bits, const GpdBudget& budget,
                                    double tolerance);

} // namespace mecsim

#endif // MECSIM_QUEUEING_HPP_
