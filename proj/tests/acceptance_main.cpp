// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria 6, 7, 9, and 10 share one large reference run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mecsim/config_io.hpp"
#include "mecsim/control.hpp"
#include "mecsim/engine.hpp"
#include "mecsim/evt.hpp"
#include "mecsim/report.hpp"
#include "mecsim/sweep.hpp"
#include "mecsim/topology.hpp"
#include "mecsim/units.hpp"
#include "test_util.hpp"

using namespace mecsim;
namespace fs = std::filesystem;

namespace {

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------- criterion 1

CriterionResult check_frequency_oracle() {
  std::mt19937_64 rng(202401);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const int grid_points = 1'000'000;
  double worst_rel = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double f_max = std::pow(10.0, 8.0 + 2.0 * uniform(rng));
    const double kappa = std::pow(10.0, -28.0 + 2.0 * uniform(rng));
    const double density = 500.0 + 8000.0 * uniform(rng);
    const double v = uniform(rng) < 0.1 ? 0.0 : std::pow(10.0, 8.0 + 4.0 * uniform(rng));
    const double a = uniform(rng) < 0.05 ? 0.0 : std::pow(10.0, 15.0 * uniform(rng));

    const double closed = local_cpu_frequency(a, v, kappa, density, f_max);

    const double step = f_max / static_cast<double>(grid_points - 1);
    double best_f = 0.0;
    double best_obj = 0.0;
    for (int k = 1; k < grid_points; ++k) {
      const double f = step * static_cast<double>(k);
      const double obj = v * kappa * f * f * f - a * f / density;
      if (obj < best_obj) {
        best_obj = obj;
        best_f = f;
      }
    }
    const double diff = std::abs(closed - best_f);
    if (diff > step * (1.0 + 1e-9)) {
      return {false, "tuple " + std::to_string(trial) + ": |closed - grid| = " +
                         std::to_string(diff) + " > step " + std::to_string(step)};
    }
    worst_rel = std::max(worst_rel, diff / f_max);
  }
  return {true, "1000 tuples within one grid step (worst |diff|/f_max = " +
                    std::to_string(worst_rel) + ")"};
}

// ---------------------------------------------------------------- criterion 2

// Projection onto {P >= 0, sum P <= budget}.
std::vector<double> project_feasible(std::vector<double> p, double budget) {
  for (double& x : p) x = std::max(x, 0.0);
  double sum = 0.0;
  for (double x : p) sum += x;
  if (sum <= budget) return p;
  // Euclidean projection onto the simplex {sum = budget, P >= 0}.
  std::vector<double> sorted = p;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - budget) / static_cast<double>(k + 1);
    if (k + 1 == sorted.size() || sorted[k + 1] <= candidate) {
      theta = candidate;
      if (k + 1 < sorted.size()) {
        // verify the support: all kept entries must stay positive
        bool valid = sorted[k] > candidate;
        if (valid) break;
      } else {
        break;
      }
    }
  }
  for (double& x : p) x = std::max(x - theta, 0.0);
  return p;
}

struct PowerInstance {
  double a = 0.0;
  std::vector<PowerTerm> terms;
  double v = 0.0;
  double p_max = 0.1;
  int num_servers = 1;
};

double power_objective(const PowerInstance& inst, const std::vector<double>& p) {
  double obj = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    obj += inst.v * p[j];
    if (p[j] > 0.0)
      obj += (inst.terms[j].server_weight - inst.a) *
             expected_rate(p[j], inst.terms[j].gain, *inst.terms[j].interference,
                           inst.num_servers, 10e6, 3.98e-21);
  }
  return obj;
}

std::vector<double> power_gradient(const PowerInstance& inst, const std::vector<double>& p) {
  std::vector<double> grad(p.size());
  const double noise = 3.98e-21 * 10e6;
  const double s = static_cast<double>(inst.num_servers);
  for (std::size_t j = 0; j < p.size(); ++j) {
    const auto& term = inst.terms[j];
    const double coef = (term.server_weight - inst.a) * 10e6 * term.gain / std::numbers::ln2;
    grad[j] = inst.v + coef * term.interference->expect_inv_affine(
                                  noise + s * term.gain * p[j], s);
  }
  return grad;
}

double projected_gradient_best(const PowerInstance& inst, int max_iters) {
  std::vector<double> p(inst.terms.size(), 0.0);
  double best = power_objective(inst, p);

  // normalized initial step from the gradient scale at zero
  const std::vector<double> g0 = power_gradient(inst, p);
  double g_norm = 0.0;
  for (double g : g0) g_norm = std::max(g_norm, std::abs(g));
  double step = g_norm > 0.0 ? 0.1 * inst.p_max / g_norm : inst.p_max;

  double current = best;
  for (int iter = 0; iter < max_iters; ++iter) {
    const std::vector<double> grad = power_gradient(inst, p);
    std::vector<double> candidate(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) candidate[j] = p[j] - step * grad[j];
    candidate = project_feasible(std::move(candidate), inst.p_max);
    const double value = power_objective(inst, candidate);
    if (value < current) {
      p = std::move(candidate);
      current = value;
      best = std::min(best, value);
      step *= 1.2;
    } else {
      step *= 0.5;
      if (step < 1e-30) break;
    }
  }
  return best;
}

CriterionResult check_kkt_oracle() {
  std::mt19937_64 rng(202402);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    PowerInstance inst;
    inst.num_servers = 1 + static_cast<int>(uniform(rng) * 3.0);
    const int accessible = 1 + static_cast<int>(uniform(rng) * std::min(inst.num_servers, 3));
    inst.a = uniform(rng) < 0.1 ? 0.0 : std::pow(10.0, 3.0 + 4.0 * uniform(rng));
    inst.v = uniform(rng) < 0.25 ? 0.0 : std::pow(10.0, 9.0 + 4.0 * uniform(rng));
    inst.p_max = 0.1;

    std::vector<std::unique_ptr<EmpiricalDistribution>> dists;
    for (int j = 0; j < accessible; ++j) {
      auto dist = std::make_unique<EmpiricalDistribution>();
      if (uniform(rng) < 0.5) {
        // 8-bin distribution: eight distinct interference levels
        for (int bin = 0; bin < 8; ++bin) {
          const double level = std::pow(10.0, -14.0 + 0.8 * bin);
          const int reps = 1 + static_cast<int>(uniform(rng) * 16.0);
          for (int r = 0; r < reps; ++r) dist->observe(level);
        }
      } // else: keep the zero-interference point mass
      PowerTerm term;
      term.server_weight = uniform(rng) < 0.3 ? 0.0 : std::pow(10.0, 3.0 + 4.0 * uniform(rng));
      term.gain = std::pow(10.0, -13.0 + 5.0 * uniform(rng));
      term.interference = dist.get();
      inst.terms.push_back(term);
      dists.push_back(std::move(dist));
    }

    const PowerDecision kkt = ue_power_allocation(inst.a, inst.terms, inst.v, inst.p_max,
                                                  inst.num_servers, 10e6, 3.98e-21);
    if (!kkt.converged)
      return {false, "instance " + std::to_string(trial) + ": KKT solver did not converge"};
    const double j_kkt = power_objective(inst, kkt.power_w);
    const double j_pg = projected_gradient_best(inst, 100'000);

    const double scale = std::max({std::abs(j_pg), std::abs(j_kkt), 1e-6});
    const double rel = std::abs(j_kkt - j_pg) / scale;
    worst = std::max(worst, rel);
    if (rel > 1e-4) {
      return {false, "instance " + std::to_string(trial) + ": relative gap " +
                         std::to_string(rel) + " (kkt " + std::to_string(j_kkt) + ", pg " +
                         std::to_string(j_pg) + ")"};
    }
  }
  return {true, "200 instances within 1e-4 of the projected-gradient oracle (worst " +
                    std::to_string(worst) + ")"};
}

// ---------------------------------------------------------------- criterion 3

CriterionResult check_core_allocation_exact() {
  std::mt19937_64 rng(202403);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(uniform(rng) * 12.0);
    const int cores = 1 + static_cast<int>(uniform(rng) * 4.0);
    std::vector<double> w(n);
    for (double& x : w) x = uniform(rng) < 0.1 ? 0.0 : uniform(rng) * 1e6;

    const std::vector<int> greedy = server_core_allocation(w, cores);
    double greedy_value = 0.0;
    for (int k : greedy) greedy_value += w[k];

    double best_value = 0.0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) > cores) continue;
      double value = 0.0;
      for (int k = 0; k < n; ++k)
        if (mask & (1 << k)) value += w[k];
      best_value = std::max(best_value, value);
    }
    if (greedy_value != best_value) {
      return {false, "instance " + std::to_string(trial) + ": greedy " +
                         std::to_string(greedy_value) + " != exhaustive " +
                         std::to_string(best_value)};
    }
  }
  return {true, "500 instances, greedy equals exhaustive best subset exactly"};
}

// ---------------------------------------------------------------- criterion 4

CriterionResult check_randomized_dominance() {
  std::mt19937_64 rng(202404);
  int comparisons = 0;
  for (int state = 0; state < 100; ++state) {
    const testutil::ProblemFixture fx = testutil::random_problem(rng);
    int failed = -1;
    const SlotDecisions solved = solve_slot(fx.problem, &failed);
    if (failed >= 0) return {false, "state " + std::to_string(state) + ": solver failure"};
    const double solved_obj = drift_penalty_objective(fx.problem, solved);
    const double scale = std::max(1.0, std::abs(solved_obj));
    for (int k = 0; k < 10'000; ++k) {
      const SlotDecisions candidate = testutil::random_decisions(fx.problem, rng);
      const double obj = drift_penalty_objective(fx.problem, candidate);
      ++comparisons;
      if (solved_obj > obj + 1e-9 * scale) {
        return {false, "state " + std::to_string(state) + ": random decision beats solver by " +
                           std::to_string(solved_obj - obj)};
      }
    }
  }
  return {true, std::to_string(comparisons) + " random feasible decision tuples never beat the "
                                              "solved decisions"};
}

// ---------------------------------------------------------------- criterion 5

CriterionResult check_gpd_estimator() {
  std::mt19937_64 rng(202405);
  ExceedanceLog log;
  for (int k = 0; k < 10'000; ++k) log.record(testutil::gpd_sample(1.0, 0.3, rng));
  const auto fit = fit_gpd_mom(log);
  if (!fit) return {false, "fit failed on 1e4 synthetic samples"};
  if (!(fit->sigma >= 0.9 && fit->sigma <= 1.1 && fit->xi >= 0.2 && fit->xi <= 0.4)) {
    return {false, "synthetic GPD(1, 0.3) fit out of range: sigma " + std::to_string(fit->sigma) +
                       ", xi " + std::to_string(fit->xi)};
  }

  std::uniform_real_distribution<double> scale(0.05, 50.0);
  std::uniform_real_distribution<double> shape(-3.0, 0.4999);
  for (int k = 0; k < 100; ++k) {
    const double sigma = scale(rng);
    const double xi = shape(rng);
    const double mean = sigma / (1.0 - xi);
    const double var = sigma * sigma / ((1.0 - xi) * (1.0 - xi) * (1.0 - 2.0 * xi));
    const auto round_trip = fit_gpd_mom(mean, var, 1000);
    if (!round_trip) return {false, "round trip fit failed"};
    if (std::abs(round_trip->sigma - sigma) > 1e-10 * std::max(1.0, sigma) ||
        std::abs(round_trip->xi - xi) > 1e-10 * std::max(1.0, std::abs(xi))) {
      return {false, "round trip off at sigma " + std::to_string(sigma) + ", xi " +
                         std::to_string(xi)};
    }
  }
  return {true, "fit in range (sigma " + std::to_string(fit->sigma) + ", xi " +
                    std::to_string(fit->xi) + "), 100 moment round trips exact to 1e-10"};
}

// ----------------------------------------------------- criteria 6, 7, 9, 10

SimConfig scenario_config() {
  SimConfig config;
  config.bandwidth_hz = 10e6;
  config.noise_psd_w_per_hz = dbm_to_watt(-174.0);
  config.cpu_power_coeff = 1e-27;
  config.lyapunov_v = 0.0;
  config.slot_duration_s = 0.05;
  config.num_slots = 100'000;
  config.rng_seed = 61;
  config.area_side_m = 100.0;
  config.num_ues = 36;
  config.num_servers = 4;
  config.association_policy = AssociationPolicy::kNearest;
  config.servers_per_ue = 1;
  config.arrival_unit_bits = 8192.0; // 1 kB tasks
  config.ue.arrival_rate_bits_per_slot = 65000.0; // 1.3 Mbps at 50 ms slots
  config.ue.processing_density = 737.5;
  config.ue.max_cpu_freq_hz = 1e9;
  config.ue.max_tx_power_w = 0.1; // 20 dBm
  config.ue.queue_bound_bits = 2.6e5;
  config.ue.violation_tolerance = 0.01;
  config.ue.gpd_scale_threshold_bits = 2.6e5;
  config.ue.gpd_shape_threshold = 0.3;
  config.server.num_cores = 9;
  config.server.core_freq_hz = 1e10;
  config.server.delay_bound_s = 0.2;
  config.server.violation_tolerance = 0.01;
  config.server.gpd_scale_threshold_bits = 2.6e5;
  config.server.gpd_shape_threshold = 0.3;
  return config;
}

CriterionResult check_constraints_at_scale(const SimConfig& config, const RunResult& result) {
  const RunSummary& s = result.summary;
  int compliant = 0;
  const double allowance = config.ue.violation_tolerance + 0.005;
  for (const auto& ue : s.ues)
    if (ue.violation_prob <= allowance) ++compliant;
  const double fraction = static_cast<double>(compliant) / static_cast<double>(s.ues.size());

  const GpdBudget ue_budget =
      gpd_budget(config.ue.gpd_scale_threshold_bits, config.ue.gpd_shape_threshold);
  const GpdBudget server_budget =
      gpd_budget(config.server.gpd_scale_threshold_bits, config.server.gpd_shape_threshold);
  const double t = static_cast<double>(s.total_slots);
  double worst_ratio = 0.0;
  for (const auto& ue : s.ues) {
    worst_ratio = std::max({worst_ratio, ue.final_virtual.q / t,
                            ue.final_virtual.x / (t * ue_budget.mean_bits),
                            ue.final_virtual.y / (t * ue_budget.second_moment_bits2)});
  }
  for (const auto& pair : s.pairs) {
    worst_ratio = std::max({worst_ratio, pair.final_virtual.z / t,
                            pair.final_virtual.x / (t * server_budget.mean_bits),
                            pair.final_virtual.y / (t * server_budget.second_moment_bits2)});
  }

  std::ostringstream detail;
  detail << compliant << "/36 UEs within eps+0.005, worst virtual-queue ratio "
         << worst_ratio << ", pooled Pr(Q > 2.6e5) = " << s.pooled_violation_prob;
  const bool pass =
      fraction >= 0.9 && worst_ratio <= 1e-2 && s.pooled_violation_prob <= 1e-2;
  return {pass, detail.str()};
}

CriterionResult check_tail_fit(const RunResult& result) {
  int checked = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < result.ue_exceedances.size(); ++i) {
    const ExceedanceLog& log = result.ue_exceedances[i];
    if (log.count() < 100) continue;
    const auto fit = fit_gpd_mom(log);
    if (!fit) return {false, "fit failed for a queue with >= 100 exceedances"};
    const double d = ks_distance(log.samples(), *fit);
    worst = std::max(worst, d);
    ++checked;
    if (d > 0.1) {
      return {false, "ue " + std::to_string(i) + ": KS distance " + std::to_string(d) +
                         " > 0.1 over " + std::to_string(log.count()) + " exceedances"};
    }
  }
  return {true, std::to_string(checked) + " UE queues with >= 100 exceedances, worst KS " +
                    std::to_string(worst)};
}

CriterionResult check_trace_convergence(const RunResult& result) {
  // Fig. 7-style convergence on the best-sampled UE queue.
  int best_ue = -1;
  std::int64_t best_count = 0;
  for (std::size_t i = 0; i < result.ue_exceedances.size(); ++i) {
    if (result.ue_exceedances[i].count() > best_count) {
      best_count = result.ue_exceedances[i].count();
      best_ue = static_cast<int>(i);
    }
  }
  if (best_ue < 0 || best_count < 2 * kMinExceedancesForFit)
    return {false, "no UE queue collected enough exceedances for a trace"};

  const ExceedanceLog& log = result.ue_exceedances[best_ue];
  const std::int64_t stride = std::max<std::int64_t>(1, log.count() / 64);
  const auto trace = parameter_trace(log, stride);
  if (trace.size() < 8) return {false, "trace too short"};

  const std::size_t start = trace.size() - trace.size() / 4;
  auto quartile_stats = [&](auto getter) {
    double mean = 0.0;
    for (std::size_t k = start; k < trace.size(); ++k) mean += getter(trace[k]);
    mean /= static_cast<double>(trace.size() - start);
    double sq = 0.0;
    for (std::size_t k = start; k < trace.size(); ++k)
      sq += (getter(trace[k]) - mean) * (getter(trace[k]) - mean);
    const double sd = std::sqrt(sq / static_cast<double>(trace.size() - start));
    return std::pair{mean, sd};
  };
  const auto [sigma_mean, sigma_sd] = quartile_stats([](const TracePoint& p) { return p.sigma; });
  const auto [xi_mean, xi_sd] = quartile_stats([](const TracePoint& p) { return p.xi; });

  std::ostringstream detail;
  detail << "ue " << best_ue << " (" << best_count << " exceedances): sigma " << sigma_mean
         << " +- " << sigma_sd << ", xi " << xi_mean << " +- " << xi_sd;
  const bool pass = sigma_sd <= 0.1 * std::abs(sigma_mean) && xi_sd <= 0.1 * std::abs(xi_mean);
  return {pass, detail.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<missing " + path.string() + ">";
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CriterionResult check_determinism(const SimConfig& config, const fs::path& dir_a) {
  const fs::path dir_b = dir_a.parent_path() / "run_b";
  run_and_write(config, dir_b.string(), 100);
  for (const char* name : {"summary.json", "slots_ue.csv", "slots_server.csv"}) {
    if (slurp(dir_a / name) != slurp(dir_b / name))
      return {false, std::string(name) + " differs between identically seeded executions"};
  }
  return {true, "summary.json and both slot CSVs are byte-identical across executions"};
}

// ---------------------------------------------------------------- criterion 8

double spearman_rho(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      double less = 0.0;
      double equal = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] < v[i]) ++less;
        if (v[j] == v[i]) ++equal;
      }
      r[i] = less + 0.5 * (equal + 1.0);
    }
    return r;
  };
  const std::vector<double> rx = ranks(xs);
  const std::vector<double> ry = ranks(ys);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double num = 0.0, dx = 0.0, dy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (rx[i] - mx) * (ry[i] - my);
    dx += (rx[i] - mx) * (rx[i] - mx);
    dy += (ry[i] - my) * (ry[i] - my);
  }
  if (dx == 0.0 || dy == 0.0) return 0.0;
  return num / std::sqrt(dx * dy);
}

int adjacent_inversions(const std::vector<double>& v, bool expect_nonincreasing) {
  int count = 0;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (expect_nonincreasing ? v[k + 1] > v[k] : v[k + 1] < v[k]) ++count;
  }
  return count;
}

CriterionResult check_power_delay_tradeoff() {
  SimConfig base = scenario_config();
  base.num_slots = 20'000;
  base.rng_seed = 77;

  SweepSpec spec;
  spec.axis = SweepAxis::kLyapunovV;
  spec.values = {1.25e10, 2.5e10, 5e10, 1e11, 2e11}; // ratio-2 geometric grid
  spec.replications = 3;

  const std::vector<SweepPoint> points = run_sweep(base, spec, 1);
  std::vector<double> v_index, power, delay;
  for (std::size_t k = 0; k < points.size(); ++k) {
    v_index.push_back(static_cast<double>(k));
    power.push_back(points[k].power_mean_w);
    delay.push_back(points[k].delay_mean_s);
  }

  const double rho_power = spearman_rho(v_index, power);
  const double rho_delay = spearman_rho(v_index, delay);
  const int inv_power = adjacent_inversions(power, true);
  const int inv_delay = adjacent_inversions(delay, false);

  std::ostringstream detail;
  detail << "power means:";
  for (double p : power) detail << ' ' << p;
  detail << " W; delay means:";
  for (double d : delay) detail << ' ' << d;
  detail << " s; rho_power " << rho_power << ", rho_delay " << rho_delay << ", inversions "
         << inv_power << "/" << inv_delay;
  const bool pass =
      rho_power <= -0.8 && rho_delay >= 0.8 && inv_power <= 1 && inv_delay <= 1;
  return {pass, detail.str()};
}

void report(int index, const std::string& name, const CriterionResult& result, int& failures,
            Clock::time_point start) {
  if (!result.pass) ++failures;
  std::printf("[%s] criterion %2d: %s (%.1fs) - %s\n", result.pass ? "PASS" : "FAIL", index,
              name.c_str(), seconds_since(start), result.detail.c_str());
  std::fflush(stdout);
}

} // namespace

int main() {
  int failures = 0;

  auto t = Clock::now();
  report(1, "closed-form frequency vs 1e6-point grid search", check_frequency_oracle(), failures,
         t);

  t = Clock::now();
  report(2, "KKT power allocation vs projected-gradient oracle", check_kkt_oracle(), failures, t);

  t = Clock::now();
  report(3, "greedy core allocation vs exhaustive subsets", check_core_allocation_exact(),
         failures, t);

  t = Clock::now();
  report(4, "randomized dominance of the per-slot decisions", check_randomized_dominance(),
         failures, t);

  t = Clock::now();
  report(5, "GPD moment estimator consistency and round trip", check_gpd_estimator(), failures, t);

  // Shared large run for criteria 6, 7, 9, 10.
  const SimConfig config = scenario_config();
  const fs::path work = fs::temp_directory_path() / "mecsim_acceptance";
  fs::remove_all(work);
  t = Clock::now();
  const RunResult big = run_and_write(config, (work / "run_a").string(), 100);
  std::printf("       reference run: %lld slots in %.1fs\n",
              static_cast<long long>(big.summary.total_slots), seconds_since(t));
  std::fflush(stdout);

  t = Clock::now();
  report(6, "constraint satisfaction on the 36-UE scenario",
         check_constraints_at_scale(config, big), failures, t);

  t = Clock::now();
  report(7, "GPD tail fit quality (KS distance)", check_tail_fit(big), failures, t);

  t = Clock::now();
  report(8, "power-delay tradeoff across the V grid", check_power_delay_tradeoff(), failures, t);

  t = Clock::now();
  report(9, "byte-identical reruns", check_determinism(config, work / "run_a"), failures, t);

  t = Clock::now();
  report(10, "GPD parameter trace convergence", check_trace_convergence(big), failures, t);

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
