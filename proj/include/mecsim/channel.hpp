#ifndef MECSIM_CHANNEL_HPP_
#define MECSIM_CHANNEL_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "mecsim/topology.hpp"

namespace mecsim {

// Indoor path loss at 5.8 GHz: 24 log10(x) + 20 log10(5.8) + 60 dB.
// Distances below 1 m are clamped to 1 m.
double path_loss_db(double distance_m);

// Linear power gain corresponding to path_loss_db.
double path_loss_gain(double distance_m);

// Per-slot channel gains for every association pair, indexed by pair id.
struct ChannelState {
  std::vector<double> gain; // linear power gain h, path loss x unit-mean fading
};

// Draws block-fading gains for one slot. Fading is exponential with unit
// mean (Rayleigh amplitude), so E[gain] equals the linear path loss.
ChannelState sample_gains(const Topology& topology, std::mt19937_64& rng);

// Realized transmission rate for one (UE, server) pair on a W/|S| sub-band.
// interference_w is the aggregate received power of the co-served UEs.
double offloading_rate(double tx_power_w, double gain, double interference_w, int num_servers,
                       double bandwidth_hz, double noise_psd_w_per_hz);

// Realized rates and aggregate interference per pair for one slot.
struct RateReport {
  std::vector<double> rate_bps;       // by pair id
  std::vector<double> interference_w; // by pair id
};

// Evaluates the rate of every pair given the slot's powers (by pair id).
RateReport realize_rates(const Topology& topology, const ChannelState& channel,
                         const std::vector<double>& tx_power_w, int num_servers,
                         double bandwidth_hz, double noise_psd_w_per_hz);

} // namespace mecsim

#endif // MECSIM_CHANNEL_HPP_
