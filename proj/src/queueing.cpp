#include "mecsim/queueing.hpp"

#include <algorithm>

namespace mecsim {

GpdBudget gpd_budget(double scale_threshold_bits, double shape_threshold) {
  GpdBudget budget;
  budget.mean_bits = scale_threshold_bits / (1.0 - shape_threshold);
  budget.second_moment_bits2 = 2.0 * scale_threshold_bits * scale_threshold_bits /
                               ((1.0 - shape_threshold) * (1.0 - 2.0 * shape_threshold));
  return budget;
}

UeQueue update_ue_queue(const UeQueue& state, double arrival_bits, double completion_bits) {
  UeQueue next;
  next.length_bits = std::max(state.length_bits + arrival_bits - completion_bits, 0.0);
  next.last_arrival_bits = arrival_bits;
  next.last_completion_bits = completion_bits;
  return next;
}

ServerQueue update_server_queue(const ServerQueue& state, double offload_bits, double service_bits,
                                double realized_rate_bps) {
  ServerQueue next;
  next.length_bits = std::max(state.length_bits + offload_bits - service_bits, 0.0);
  next.rate_samples = state.rate_samples + 1;
  next.avg_rate_bps =
      state.avg_rate_bps + (realized_rate_bps - state.avg_rate_bps) / next.rate_samples;
  return next;
}

double update_ue_virtual_queues(UeVirtualQueues& vq, double queue_bits, double bound_bits,
                                const GpdBudget& budget, double tolerance) {
  const bool fired = queue_bits > bound_bits;
  const double excess = queue_bits - bound_bits;
  if (fired) {
    vq.x = std::max(vq.x + excess - budget.mean_bits, 0.0);
    vq.y = std::max(vq.y + excess * excess - budget.second_moment_bits2, 0.0);
  }
  vq.q = std::max(vq.q + (fired ? 1.0 : 0.0) - tolerance, 0.0);
  return excess;
}

double update_server_virtual_queues(ServerVirtualQueues& vq, double queue_bits,
                                    double threshold_bits, const GpdBudget& budget,
                                    double tolerance) {
  const bool fired = queue_bits > threshold_bits;
  const double excess = queue_bits - threshold_bits;
  if (fired) {
    vq.x = std::max(vq.x + excess - budget.mean_bits, 0.0);
    vq.y = std::max(vq.y + excess * excess - budget.second_moment_bits2, 0.0);
  }
  vq.z = std::max(vq.z + (fired ? 1.0 : 0.0) - tolerance, 0.0);
  return excess;
}

} // namespace mecsim
