#include "mecsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mecsim/rng.hpp"

namespace mecsim {

SolverError::SolverError(std::int64_t slot, int ue, const std::string& what)
    : std::runtime_error("slot " + std::to_string(slot) + ", ue " + std::to_string(ue) + ": " +
                         what),
      slot_(slot),
      ue_(ue) {}

double sample_arrivals(double mean_bits, double unit_bits, std::mt19937_64& rng) {
  if (mean_bits <= 0.0) return 0.0;
  std::poisson_distribution<std::int64_t> units(mean_bits / unit_bits);
  return static_cast<double>(units(rng)) * unit_bits;
}

std::optional<double> end_to_end_delay(double avg_queue_bits, double avg_arrival_bits,
                                       double slot_duration_s,
                                       const std::vector<double>& avg_server_queue_bits,
                                       const std::vector<double>& avg_rate_bps) {
  if (avg_arrival_bits <= 0.0) return std::nullopt;
  double delay = slot_duration_s * avg_queue_bits / avg_arrival_bits;
  double total_rate = 0.0;
  for (double r : avg_rate_bps) total_rate += r;
  if (total_rate > 0.0) {
    for (std::size_t k = 0; k < avg_rate_bps.size(); ++k) {
      if (avg_rate_bps[k] <= 0.0) continue;
      const double share = avg_rate_bps[k] / total_rate;
      delay += share * avg_server_queue_bits[k] / avg_rate_bps[k];
    }
  }
  return delay;
}

double average_power(const std::vector<double>& cpu_freq_hz,
                     const std::vector<double>& total_tx_power_w, double cpu_power_coeff) {
  if (cpu_freq_hz.empty()) return 0.0;
  double acc = 0.0;
  for (std::size_t t = 0; t < cpu_freq_hz.size(); ++t) {
    const double f = cpu_freq_hz[t];
    acc += cpu_power_coeff * f * f * f + total_tx_power_w[t];
  }
  return acc / static_cast<double>(cpu_freq_hz.size());
}

RunResult run_simulation(const SimConfig& config, const Topology& topology, SlotSink* sink) {
  const int num_ues = static_cast<int>(topology.ue_positions.size());
  const int num_servers = static_cast<int>(topology.server_positions.size());
  const int num_pairs = static_cast<int>(topology.pairs.size());
  const double tau = config.slot_duration_s;
  const double density = config.ue.processing_density;

  RunResult result;
  result.ue_exceedances.resize(num_ues);
  result.pair_exceedances.resize(num_pairs);
  result.interference.resize(num_pairs);

  std::vector<UeQueue> ue_queues(num_ues);
  std::vector<UeVirtualQueues> ue_vq(num_ues);
  std::vector<ServerQueue> server_queues(num_pairs);
  std::vector<ServerVirtualQueues> server_vq(num_pairs);

  const GpdBudget ue_budget =
      gpd_budget(config.ue.gpd_scale_threshold_bits, config.ue.gpd_shape_threshold);
  const GpdBudget server_budget =
      gpd_budget(config.server.gpd_scale_threshold_bits, config.server.gpd_shape_threshold);

  const std::int64_t total_slots = config.num_slots;
  const std::int64_t warmup_slots =
      std::min<std::int64_t>(total_slots,
                             static_cast<std::int64_t>(config.warmup_fraction *
                                                       static_cast<double>(total_slots)));

  // Post-warm-up accumulators.
  std::vector<double> sum_arrival(num_ues, 0.0), sum_queue(num_ues, 0.0), sum_power(num_ues, 0.0);
  std::vector<std::int64_t> ue_violations(num_ues, 0);
  std::vector<double> sum_rate(num_pairs, 0.0), sum_z(num_pairs, 0.0),
      sum_pair_power(num_pairs, 0.0);
  std::vector<std::int64_t> pair_violations(num_pairs, 0);
  std::int64_t measured_slots = 0;

  SlotProblem problem;
  problem.lyapunov_v = config.lyapunov_v;
  problem.cpu_power_coeff = config.cpu_power_coeff;
  problem.bandwidth_hz = config.bandwidth_hz;
  problem.noise_psd_w_per_hz = config.noise_psd_w_per_hz;
  problem.num_servers = num_servers;
  problem.ues.resize(num_ues);
  for (int i = 0; i < num_ues; ++i) {
    auto& ue = problem.ues[i];
    ue.processing_density = density;
    ue.max_freq_hz = config.ue.max_cpu_freq_hz;
    ue.max_power_w = config.ue.max_tx_power_w;
    ue.pair_ids = topology.pair_ids_of_ue[i];
  }
  problem.pairs.resize(num_pairs);
  for (int pid = 0; pid < num_pairs; ++pid) {
    problem.pairs[pid].ue = topology.pairs[pid].ue;
    problem.pairs[pid].server = topology.pairs[pid].server;
    problem.pairs[pid].interference = &result.interference[pid];
  }
  problem.servers.resize(num_servers);
  for (int j = 0; j < num_servers; ++j) {
    problem.servers[j].num_cores = config.server.num_cores;
    problem.servers[j].core_freq_hz = config.server.core_freq_hz;
    problem.servers[j].pair_ids = topology.pair_ids_of_server[j];
  }

  std::vector<double> arrivals(num_ues, 0.0);

  for (std::int64_t slot = 0; slot < total_slots; ++slot) {
    // (1) arrivals, known to the controller before any decision
    auto arrival_rng = make_engine(config.rng_seed, RngStream::kArrivals, slot);
    for (int i = 0; i < num_ues; ++i)
      arrivals[i] =
          sample_arrivals(config.ue.arrival_rate_bits_per_slot, config.arrival_unit_bits,
                          arrival_rng);

    // (2) block-fading gains for this slot
    auto channel_rng = make_engine(config.rng_seed, RngStream::kChannel, slot);
    const ChannelState channel = sample_gains(topology, channel_rng);

    // (3) drift weights from start-of-slot state plus current arrivals
    for (int i = 0; i < num_ues; ++i)
      problem.ues[i].weight = ue_weight(ue_queues[i].length_bits, arrivals[i], ue_vq[i],
                                        config.ue.queue_bound_bits);
    for (int pid = 0; pid < num_pairs; ++pid) {
      const double threshold_bits =
          server_queues[pid].avg_rate_bps * config.server.delay_bound_s;
      const double max_offload_bits =
          offloading_rate(config.ue.max_tx_power_w, channel.gain[pid], 0.0, num_servers,
                          config.bandwidth_hz, config.noise_psd_w_per_hz) *
          tau;
      problem.pairs[pid].gain = channel.gain[pid];
      problem.pairs[pid].weight = server_weight(server_queues[pid].length_bits, server_vq[pid],
                                                threshold_bits, max_offload_bits);
    }

    // (4) frequency, power, and core decisions
    int failed_ue = -1;
    const SlotDecisions decisions = solve_slot(problem, &failed_ue);
    if (failed_ue >= 0)
      throw SolverError(slot, failed_ue, "power allocation bisection failed to converge");

    // (5) realized rates under the actual interference
    const RateReport rates = realize_rates(topology, channel, decisions.tx_power_w, num_servers,
                                           config.bandwidth_hz, config.noise_psd_w_per_hz);

    const bool record_metrics = slot >= warmup_slots;

    SlotRecord record;
    if (sink) {
      record.slot = slot;
      record.arrival_bits = arrivals;
      record.cpu_freq_hz = decisions.cpu_freq_hz;
      record.tx_power_w = decisions.tx_power_w;
      record.rate_bps = rates.rate_bps;
      record.interference_w = rates.interference_w;
      record.core_freq_hz = decisions.core_freq_hz;
      record.total_tx_power_w.assign(num_ues, 0.0);
      record.offload_bits.assign(num_pairs, 0.0);
      record.queue_bits.resize(num_ues);
      record.server_queue_bits.resize(num_pairs);
    }

    // (6) physical queues; offloaded bits are capped so the server queues
    // never receive more than the UE queue actually drained
    for (int i = 0; i < num_ues; ++i) {
      const double local_capacity = decisions.cpu_freq_hz[i] * tau / density;
      double offload_capacity = 0.0;
      for (int pid : topology.pair_ids_of_ue[i]) offload_capacity += rates.rate_bps[pid] * tau;
      const double completion = local_capacity + offload_capacity;
      const double available = ue_queues[i].length_bits + arrivals[i];
      const double factor = completion > available && completion > 0.0
                                ? available / completion
                                : 1.0;
      ue_queues[i] = update_ue_queue(ue_queues[i], arrivals[i], completion);

      double total_power = 0.0;
      for (int pid : topology.pair_ids_of_ue[i]) {
        const double offload_bits = rates.rate_bps[pid] * tau * factor;
        // (7) server queue and moving rate average advance together
        server_queues[pid] = update_server_queue(server_queues[pid], offload_bits,
                                                 decisions.core_freq_hz[pid] * tau / density,
                                                 rates.rate_bps[pid]);
        total_power += decisions.tx_power_w[pid];
        if (sink) record.offload_bits[pid] = offload_bits;
      }

      const double f = decisions.cpu_freq_hz[i];
      const double slot_power = config.cpu_power_coeff * f * f * f + total_power;
      if (record_metrics) {
        sum_arrival[i] += arrivals[i];
        sum_queue[i] += ue_queues[i].length_bits;
        sum_power[i] += slot_power;
      }
      if (sink) {
        record.total_tx_power_w[i] = total_power;
        record.queue_bits[i] = ue_queues[i].length_bits;
      }
    }

    // (8) virtual queues, indexed by the already-updated physical queues
    for (int i = 0; i < num_ues; ++i) {
      const double excess = update_ue_virtual_queues(ue_vq[i], ue_queues[i].length_bits,
                                                     config.ue.queue_bound_bits, ue_budget,
                                                     config.ue.violation_tolerance);
      if (record_metrics && excess > 0.0) {
        result.ue_exceedances[i].record(excess);
        ++ue_violations[i];
      }
    }
    for (int pid = 0; pid < num_pairs; ++pid) {
      const double threshold_bits =
          server_queues[pid].avg_rate_bps * config.server.delay_bound_s;
      const double excess = update_server_virtual_queues(server_vq[pid],
                                                         server_queues[pid].length_bits,
                                                         threshold_bits, server_budget,
                                                         config.server.violation_tolerance);
      if (record_metrics && excess > 0.0) {
        result.pair_exceedances[pid].record(excess);
        ++pair_violations[pid];
      }
      // (9) estimator update with this slot's realized interference
      result.interference[pid].observe(rates.interference_w[pid]);
      if (record_metrics) {
        sum_rate[pid] += rates.rate_bps[pid];
        sum_z[pid] += server_queues[pid].length_bits;
        sum_pair_power[pid] += decisions.tx_power_w[pid];
      }
    }
    if (record_metrics) ++measured_slots;

    // (10) hand the finished slot to the sink
    if (sink) {
      record.ue_virtual = ue_vq;
      record.server_virtual = server_vq;
      for (int pid = 0; pid < num_pairs; ++pid)
        record.server_queue_bits[pid] = server_queues[pid].length_bits;
      sink->on_slot(record);
    }
  }

  // Run-level summary.
  RunSummary& summary = result.summary;
  summary.total_slots = total_slots;
  summary.warmup_slots = warmup_slots;
  summary.measured_slots = measured_slots;
  summary.undefined_averages = measured_slots == 0;
  summary.ues.resize(num_ues);
  summary.pairs.resize(num_pairs);

  const double n = std::max<double>(1.0, static_cast<double>(measured_slots));
  std::int64_t pooled_violations = 0;

  for (int pid = 0; pid < num_pairs; ++pid) {
    PairSummary& ps = summary.pairs[pid];
    ps.ue = topology.pairs[pid].ue;
    ps.server = topology.pairs[pid].server;
    ps.avg_rate_bps = sum_rate[pid] / n;
    ps.avg_queue_bits = sum_z[pid] / n;
    ps.avg_tx_power_w = sum_pair_power[pid] / n;
    ps.violation_prob = static_cast<double>(pair_violations[pid]) / n;
    ps.exceedance_count = result.pair_exceedances[pid].count();
    ps.gpd = fit_gpd_mom(result.pair_exceedances[pid]);
    ps.final_virtual = server_vq[pid];
    ps.violation_prob_ok = ps.violation_prob <= config.server.violation_tolerance;
  }

  double power_acc = 0.0;
  double delay_acc = 0.0;
  for (int i = 0; i < num_ues; ++i) {
    UeSummary& us = summary.ues[i];
    us.avg_power_w = sum_power[i] / n;
    us.avg_queue_bits = sum_queue[i] / n;
    us.avg_arrival_bits = sum_arrival[i] / n;
    us.violation_prob = static_cast<double>(ue_violations[i]) / n;
    us.exceedance_count = result.ue_exceedances[i].count();
    us.gpd = fit_gpd_mom(result.ue_exceedances[i]);
    us.final_virtual = ue_vq[i];
    pooled_violations += ue_violations[i];

    std::vector<double> avg_z, avg_r;
    for (int pid : topology.pair_ids_of_ue[i]) {
      avg_z.push_back(summary.pairs[pid].avg_queue_bits);
      avg_r.push_back(summary.pairs[pid].avg_rate_bps);
    }
    if (measured_slots > 0)
      us.delay_s = end_to_end_delay(us.avg_queue_bits, us.avg_arrival_bits,
                                    config.slot_duration_s, avg_z, avg_r);

    us.violation_prob_ok = us.violation_prob <= config.ue.violation_tolerance;
    if (us.exceedance_count > 0) {
      us.excess_mean_ok = result.ue_exceedances[i].mean() <= ue_budget.mean_bits;
      us.excess_second_moment_ok =
          result.ue_exceedances[i].second_moment() <= ue_budget.second_moment_bits2;
    }
    if (us.gpd) {
      us.sigma_ok = us.gpd->sigma <= config.ue.gpd_scale_threshold_bits;
      us.xi_ok = us.gpd->xi <= config.ue.gpd_shape_threshold;
    }

    power_acc += us.avg_power_w;
    if (us.delay_s) {
      delay_acc += *us.delay_s;
      ++summary.delay_defined_ues;
    }
  }
  summary.network_mean_power_w = num_ues > 0 ? power_acc / num_ues : 0.0;
  summary.network_mean_delay_s =
      summary.delay_defined_ues > 0 ? delay_acc / summary.delay_defined_ues : 0.0;
  summary.pooled_violation_prob =
      num_ues > 0 ? static_cast<double>(pooled_violations) / (n * num_ues) : 0.0;

  return result;
}

} // namespace mecsim
