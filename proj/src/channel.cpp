#include "mecsim/channel.hpp"

#include <algorithm>
#include <cmath>

namespace mecsim {

double path_loss_db(double distance_m) {
  const double x = std::max(distance_m, 1.0);
  return 24.0 * std::log10(x) + 20.0 * std::log10(5.8) + 60.0;
}

double path_loss_gain(double distance_m) { return std::pow(10.0, -path_loss_db(distance_m) / 10.0); }

ChannelState sample_gains(const Topology& topology, std::mt19937_64& rng) {
  ChannelState state;
  state.gain.resize(topology.pairs.size());
  std::exponential_distribution<double> fading(1.0); // unit-mean power gain
  for (std::size_t pid = 0; pid < topology.pairs.size(); ++pid) {
    const auto& pair = topology.pairs[pid];
    const double pl = path_loss_gain(topology.distance(pair.ue, pair.server));
    state.gain[pid] = pl * fading(rng);
  }
  return state;
}

double offloading_rate(double tx_power_w, double gain, double interference_w, int num_servers,
                       double bandwidth_hz, double noise_psd_w_per_hz) {
  if (tx_power_w <= 0.0) return 0.0;
  const double subband_hz = bandwidth_hz / num_servers;
  const double noise_w = noise_psd_w_per_hz * subband_hz;
  const double sinr = tx_power_w * gain / (noise_w + interference_w);
  return subband_hz * std::log2(1.0 + sinr);
}

RateReport realize_rates(const Topology& topology, const ChannelState& channel,
                         const std::vector<double>& tx_power_w, int num_servers,
                         double bandwidth_hz, double noise_psd_w_per_hz) {
  RateReport report;
  report.rate_bps.assign(topology.pairs.size(), 0.0);
  report.interference_w.assign(topology.pairs.size(), 0.0);

  for (const auto& pids : topology.pair_ids_of_server) {
    double total_rx_w = 0.0;
    for (int pid : pids) total_rx_w += tx_power_w[pid] * channel.gain[pid];
    for (int pid : pids) {
      const double own_rx_w = tx_power_w[pid] * channel.gain[pid];
      const double interference_w = std::max(total_rx_w - own_rx_w, 0.0);
      report.interference_w[pid] = interference_w;
      report.rate_bps[pid] = offloading_rate(tx_power_w[pid], channel.gain[pid], interference_w,
                                             num_servers, bandwidth_hz, noise_psd_w_per_hz);
    }
  }
  return report;
}

} // namespace mecsim
