#include <cmath>
#include <string>
#include <vector>

#include "mecsim/params.hpp"

namespace mecsim {

namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

} // namespace

std::vector<std::string> validate_config(const SimConfig& c) {
  std::vector<std::string> violations;
  auto fail = [&violations](const std::string& msg) { violations.push_back(msg); };

  if (!finite_positive(c.bandwidth_hz)) fail("bandwidth_hz must be positive");
  if (!finite_positive(c.noise_psd_w_per_hz)) fail("noise_psd must be positive");
  if (!finite_positive(c.cpu_power_coeff)) fail("cpu_power_coeff must be positive");
  if (!(std::isfinite(c.lyapunov_v) && c.lyapunov_v >= 0.0)) fail("lyapunov_v must be >= 0");
  if (!finite_positive(c.slot_duration_s)) fail("slot_duration_s must be positive");
  if (c.num_slots <= 0) fail("num_slots must be positive");
  if (!finite_positive(c.area_side_m)) fail("area_side_m must be positive");
  if (c.num_ues < 0) fail("num_ues must be >= 0");
  if (c.num_servers < 0) fail("num_servers must be >= 0");
  if (!finite_positive(c.arrival_unit_bits)) fail("arrival_unit_bits must be positive");
  if (!(c.warmup_fraction >= 0.0 && c.warmup_fraction < 1.0))
    fail("warmup_fraction must be in [0, 1)");

  if (c.association_policy == AssociationPolicy::kNearest) {
    if (c.servers_per_ue < 0) fail("servers_per_ue must be >= 0");
    if (c.servers_per_ue > c.num_servers)
      fail("servers_per_ue exceeds the number of servers");
  }

  const UeParams& u = c.ue;
  // Zero arrivals are a legitimate no-load case; everything else on the UE
  // side must be strictly positive.
  if (!(std::isfinite(u.arrival_rate_bits_per_slot) && u.arrival_rate_bits_per_slot >= 0.0))
    fail("ue.arrival_rate must be >= 0");
  if (!finite_positive(u.processing_density)) fail("ue.processing_density must be positive");
  if (!finite_positive(u.max_cpu_freq_hz)) fail("ue.max_cpu_freq must be positive");
  if (!finite_positive(u.max_tx_power_w)) fail("ue.max_tx_power must be positive");
  if (!finite_positive(u.queue_bound_bits)) fail("ue.queue_bound must be positive");
  if (!(u.violation_tolerance > 0.0 && u.violation_tolerance < 1.0))
    fail("ue.violation_tolerance must be in (0, 1)");
  if (!finite_positive(u.gpd_scale_threshold_bits)) fail("ue.gpd_scale_threshold must be positive");
  if (!(u.gpd_shape_threshold < 0.5)) fail("ue.gpd_shape_threshold must be < 1/2");
  // +inf is allowed: it makes every UE local-only under the threshold policy.
  if (std::isnan(u.access_gain_threshold) || u.access_gain_threshold < 0.0)
    fail("ue.access_gain_threshold must be >= 0");

  const ServerParams& s = c.server;
  if (s.num_cores < 1) fail("server.num_cores must be >= 1");
  if (!finite_positive(s.core_freq_hz)) fail("server.core_freq must be positive");
  if (!finite_positive(s.delay_bound_s)) fail("server.delay_bound must be positive");
  if (!(s.violation_tolerance > 0.0 && s.violation_tolerance < 1.0))
    fail("server.violation_tolerance must be in (0, 1)");
  if (!finite_positive(s.gpd_scale_threshold_bits))
    fail("server.gpd_scale_threshold must be positive");
  if (!(s.gpd_shape_threshold < 0.5)) fail("server.gpd_shape_threshold must be < 1/2");

  auto check_positions = [&](const std::vector<std::pair<double, double>>& pos, int expected,
                             const std::string& kind) {
    if (pos.empty()) return;
    if (static_cast<int>(pos.size()) != expected)
      fail(kind + "_positions size does not match num_" + kind + "s");
    for (const auto& [x, y] : pos) {
      if (!(x >= 0.0 && x <= c.area_side_m && y >= 0.0 && y <= c.area_side_m)) {
        fail(kind + " position outside the deployment area");
        break;
      }
    }
  };
  check_positions(c.ue_positions, c.num_ues, "ue");
  check_positions(c.server_positions, c.num_servers, "server");

  return violations;
}

} // namespace mecsim
