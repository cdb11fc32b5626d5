#include "mecsim/control.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mecsim {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Relative tolerances of the two nested bisections and the budget residual.
constexpr double kInnerTolRel = 1e-12;
constexpr double kBudgetTolRel = 1e-9;
constexpr int kMaxOuterIters = 200;

} // namespace

double ue_weight(double queue_bits, double arrival_bits, const UeVirtualQueues& vq,
                 double bound_bits) {
  const double backlog = queue_bits + arrival_bits;
  double weight = vq.q + backlog;
  if (backlog > bound_bits) {
    weight += vq.x + backlog + 2.0 * vq.y * backlog + 2.0 * backlog * backlog * backlog;
  }
  return weight;
}

double server_weight(double queue_bits, const ServerVirtualQueues& vq, double threshold_bits,
                     double max_offload_bits) {
  double weight = vq.z + queue_bits;
  if (queue_bits + max_offload_bits > threshold_bits) {
    weight += vq.x + queue_bits + 2.0 * vq.y * queue_bits +
              2.0 * queue_bits * queue_bits * queue_bits;
  }
  return weight;
}

double local_cpu_frequency(double weight, double lyapunov_v, double cpu_power_coeff,
                           double processing_density, double max_freq_hz) {
  if (lyapunov_v <= 0.0) {
    // Limit of the closed form: any positive weight pins the frequency at
    // the cap, zero weight leaves the CPU idle.
    return weight > 0.0 ? max_freq_hz : 0.0;
  }
  const double unconstrained =
      std::sqrt(weight / (3.0 * lyapunov_v * cpu_power_coeff * processing_density));
  return std::min(unconstrained, max_freq_hz);
}

double expected_rate(double tx_power_w, double gain, const EmpiricalDistribution& interference,
                     int num_servers, double bandwidth_hz, double noise_psd_w_per_hz) {
  if (tx_power_w <= 0.0) return 0.0;
  const double subband_hz = bandwidth_hz / num_servers;
  const double noise_w = noise_psd_w_per_hz * bandwidth_hz;
  const double s = static_cast<double>(num_servers);
  const double sph = s * tx_power_w * gain;
  return interference.expect([&](double i_w) {
    return subband_hz * std::log2(1.0 + sph / (noise_w + s * i_w));
  });
}

namespace {

struct ActiveTerm {
  int index = 0;
  double coef = 0.0;       // (a - b) W h / ln2
  double power_scale = 0.0; // S h
};

// Marginal utility E[(a-b) W h / ((N0 W + S I + S P h) ln 2)], decreasing in P.
double marginal_utility(const ActiveTerm& term, const EmpiricalDistribution& dist,
                        double noise_total_w, double num_servers, double tx_power_w) {
  return term.coef *
         dist.expect_inv_affine(noise_total_w + term.power_scale * tx_power_w, num_servers);
}

} // namespace

PowerDecision ue_power_allocation(double ue_weight_a, const std::vector<PowerTerm>& terms,
                                  double lyapunov_v, double max_power_w, int num_servers,
                                  double bandwidth_hz, double noise_psd_w_per_hz) {
  PowerDecision decision;
  decision.power_w.assign(terms.size(), 0.0);
  if (terms.empty() || max_power_w <= 0.0) return decision;

  const double noise_total_w = noise_psd_w_per_hz * bandwidth_hz;
  const double s = static_cast<double>(num_servers);

  std::vector<ActiveTerm> active;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const PowerTerm& t = terms[k];
    if (ue_weight_a <= t.server_weight || t.gain <= 0.0) continue; // zero marginal utility
    ActiveTerm a;
    a.index = static_cast<int>(k);
    a.coef = (ue_weight_a - t.server_weight) * bandwidth_hz * t.gain / kLn2;
    a.power_scale = s * t.gain;
    active.push_back(a);
  }
  if (active.empty()) return decision;

  // Power of one term at a given multiplier: 0 below the zero-power utility,
  // the stationarity root inside (0, P_max), the cap when the root is beyond.
  auto term_power = [&](const ActiveTerm& a, double target) {
    const auto& dist = *terms[a.index].interference;
    if (marginal_utility(a, dist, noise_total_w, s, 0.0) <= target) return 0.0;
    if (marginal_utility(a, dist, noise_total_w, s, max_power_w) >= target) return max_power_w;
    double lo = 0.0;
    double hi = max_power_w;
    while (hi - lo > kInnerTolRel * max_power_w) {
      const double mid = 0.5 * (lo + hi);
      if (marginal_utility(a, dist, noise_total_w, s, mid) > target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  auto fill_powers = [&](double gamma) {
    double sum = 0.0;
    for (const ActiveTerm& a : active) {
      const double p = term_power(a, lyapunov_v + gamma);
      decision.power_w[a.index] = p;
      sum += p;
    }
    return sum;
  };

  double sum = fill_powers(0.0);
  double gamma = 0.0;
  if (sum > max_power_w * (1.0 + kBudgetTolRel)) {
    // Budget infeasible at gamma = 0: grow an upper bracket geometrically,
    // then bisect until the budget residual closes.
    double hi = 1.0;
    int growth = 0;
    while (fill_powers(hi) > max_power_w && growth < kMaxOuterIters) {
      hi *= 4.0;
      ++growth;
    }
    if (growth >= kMaxOuterIters) {
      decision.converged = false;
      return decision;
    }
    double lo = 0.0;
    for (int iter = 0; iter < kMaxOuterIters; ++iter) {
      const double mid = 0.5 * (lo + hi);
      sum = fill_powers(mid);
      if (std::abs(sum - max_power_w) < kBudgetTolRel * max_power_w) {
        hi = mid;
        break;
      }
      if (sum > max_power_w) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    gamma = hi;
    sum = fill_powers(gamma); // the feasible side of the bracket
  }

  if (sum > max_power_w) {
    const double scale = max_power_w / sum;
    for (double& p : decision.power_w) p *= scale;
    sum = max_power_w;
  }

  // Report the KKT multiplier: with the budget slack it is 0; with a term
  // pinned at the cap the stationarity gap at the cap is the multiplier.
  double multiplier = gamma;
  if (sum >= max_power_w * (1.0 - kBudgetTolRel)) {
    for (const ActiveTerm& a : active) {
      if (decision.power_w[a.index] >= max_power_w * (1.0 - kBudgetTolRel)) {
        const auto& dist = *terms[a.index].interference;
        multiplier = std::max(
            multiplier,
            marginal_utility(a, dist, noise_total_w, s, decision.power_w[a.index]) - lyapunov_v);
      }
    }
  }
  decision.multiplier = std::max(multiplier, 0.0);
  return decision;
}

std::vector<int> server_core_allocation(const std::vector<double>& weight_over_density,
                                        int num_cores) {
  const int n = static_cast<int>(weight_over_density.size());
  std::vector<bool> taken(n, false);
  std::vector<int> selected;
  const int grants = std::min(num_cores, n);
  for (int g = 0; g < grants; ++g) {
    int best = -1;
    for (int k = 0; k < n; ++k) {
      if (taken[k]) continue;
      if (best < 0 || weight_over_density[k] > weight_over_density[best]) best = k;
    }
    taken[best] = true;
    selected.push_back(best);
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

double drift_penalty_objective(const SlotProblem& problem, const SlotDecisions& decisions) {
  double objective = 0.0;
  for (std::size_t i = 0; i < problem.ues.size(); ++i) {
    const auto& ue = problem.ues[i];
    const double f = decisions.cpu_freq_hz[i];
    objective += problem.lyapunov_v * problem.cpu_power_coeff * f * f * f -
                 ue.weight * f / ue.processing_density;
  }
  for (std::size_t pid = 0; pid < problem.pairs.size(); ++pid) {
    const auto& pair = problem.pairs[pid];
    const auto& ue = problem.ues[pair.ue];
    const double p = decisions.tx_power_w[pid];
    objective += problem.lyapunov_v * p;
    if (p > 0.0) {
      objective += (pair.weight - ue.weight) *
                   expected_rate(p, pair.gain, *pair.interference, problem.num_servers,
                                 problem.bandwidth_hz, problem.noise_psd_w_per_hz);
    }
    objective -= pair.weight * decisions.core_freq_hz[pid] / ue.processing_density;
  }
  return objective;
}

SlotDecisions solve_slot(const SlotProblem& problem, int* failed_ue) {
  SlotDecisions decisions;
  decisions.cpu_freq_hz.resize(problem.ues.size());
  decisions.tx_power_w.assign(problem.pairs.size(), 0.0);
  decisions.core_freq_hz.assign(problem.pairs.size(), 0.0);
  if (failed_ue) *failed_ue = -1;

  for (std::size_t i = 0; i < problem.ues.size(); ++i) {
    const auto& ue = problem.ues[i];
    decisions.cpu_freq_hz[i] = local_cpu_frequency(ue.weight, problem.lyapunov_v,
                                                   problem.cpu_power_coeff,
                                                   ue.processing_density, ue.max_freq_hz);
    if (ue.pair_ids.empty()) continue;
    std::vector<PowerTerm> terms;
    terms.reserve(ue.pair_ids.size());
    for (int pid : ue.pair_ids) {
      const auto& pair = problem.pairs[pid];
      terms.push_back({pair.weight, pair.gain, pair.interference});
    }
    const PowerDecision power =
        ue_power_allocation(ue.weight, terms, problem.lyapunov_v, ue.max_power_w,
                            problem.num_servers, problem.bandwidth_hz, problem.noise_psd_w_per_hz);
    if (!power.converged && failed_ue && *failed_ue < 0) *failed_ue = static_cast<int>(i);
    for (std::size_t k = 0; k < ue.pair_ids.size(); ++k)
      decisions.tx_power_w[ue.pair_ids[k]] = power.power_w[k];
  }

  for (const auto& server : problem.servers) {
    if (server.pair_ids.empty()) continue;
    std::vector<double> weight_over_density;
    weight_over_density.reserve(server.pair_ids.size());
    for (int pid : server.pair_ids) {
      const auto& pair = problem.pairs[pid];
      weight_over_density.push_back(pair.weight / problem.ues[pair.ue].processing_density);
    }
    for (int pos : server_core_allocation(weight_over_density, server.num_cores))
      decisions.core_freq_hz[server.pair_ids[pos]] = server.core_freq_hz;
  }
  return decisions;
}

} // namespace mecsim
