#ifndef MECSIM_CONTROL_HPP_
#define MECSIM_CONTROL_HPP_

#include <cstdint>
#include <vector>

#include "mecsim/interference.hpp"
#include "mecsim/queueing.hpp"

namespace mecsim {

// Drift weight of a UE's task queue; scales the value of one served bit.
double ue_weight(double queue_bits, double arrival_bits, const UeVirtualQueues& vq,
                 double bound_bits);

// Drift weight of one (server, UE) offloaded-task queue. max_offload_bits is
// the UE's per-slot offloading capability used inside the indicator, and
// threshold_bits is avg rate x delay bound from the previous slot.
double server_weight(double queue_bits, const ServerVirtualQueues& vq, double threshold_bits,
                     double max_offload_bits);

// min over [0, f_max] of V k f^3 - a f / L. V = 0 degenerates to a bang-bang
// rule: f_max when the weight is positive, else 0.
double local_cpu_frequency(double weight, double lyapunov_v, double cpu_power_coeff,
                           double processing_density, double max_freq_hz);

// One candidate server in a UE's power problem.
struct PowerTerm {
  double server_weight = 0.0;                  // b
  double gain = 0.0;                           // h
  const EmpiricalDistribution* interference = nullptr;
};

struct PowerDecision {
  std::vector<double> power_w; // aligned with the PowerTerm list
  double multiplier = 0.0;     // budget multiplier, >= 0
  bool converged = true;
};

// Expected rate (W/S) E[log2(1 + S P h / (N0 W + S I))] under the pair's
// empirical interference distribution.
double expected_rate(double tx_power_w, double gain, const EmpiricalDistribution& interference,
                     int num_servers, double bandwidth_hz, double noise_psd_w_per_hz);

// Decentralized per-UE transmit power allocation: minimizes
//   sum_j V P_j + (b_j - a) E[R_j(P_j)]  s.t.  P >= 0, sum P <= P_max
// via the stationarity condition per server and bisection on the budget
// multiplier. Non-convergence of the bracket growth marks the decision
// !converged (a sign of a mis-scaled configuration).
PowerDecision ue_power_allocation(double ue_weight_a, const std::vector<PowerTerm>& terms,
                                  double lyapunov_v, double max_power_w, int num_servers,
                                  double bandwidth_hz, double noise_psd_w_per_hz);

// Greedy core assignment: the top-N UEs by b/L each get one full-rate core,
// ties broken toward the lowest UE index. Returns the selected positions in
// the candidate list.
std::vector<int> server_core_allocation(const std::vector<double>& weight_over_density,
                                        int num_cores);

// Everything the three per-slot solvers read, frozen at decision time.
struct SlotProblem {
  double lyapunov_v = 0.0;
  double cpu_power_coeff = 0.0;
  double bandwidth_hz = 0.0;
  double noise_psd_w_per_hz = 0.0;
  int num_servers = 0;

  struct UeSide {
    double weight = 0.0; // a
    double processing_density = 0.0;
    double max_freq_hz = 0.0;
    double max_power_w = 0.0;
    std::vector<int> pair_ids; // this UE's accessible pairs
  };
  struct PairSide {
    int ue = 0;
    int server = 0;
    double weight = 0.0; // b
    double gain = 0.0;
    const EmpiricalDistribution* interference = nullptr;
  };
  struct ServerSide {
    int num_cores = 0;
    double core_freq_hz = 0.0;
    std::vector<int> pair_ids; // pairs served by this server
  };

  std::vector<UeSide> ues;
  std::vector<PairSide> pairs;
  std::vector<ServerSide> servers;
};

struct SlotDecisions {
  std::vector<double> cpu_freq_hz;    // per UE
  std::vector<double> tx_power_w;     // per pair id
  std::vector<double> core_freq_hz;   // per pair id, 0 or the server core rate
};

// The decision-dependent drift-plus-penalty surrogate the three solvers
// jointly minimize:
//   sum_i [V k f_i^3 - a_i f_i/L_i]
// + sum_ij [V P_ij + (b_ij - a_i) E[R_ij(P_ij)]]
// - sum_ij b_ij f_ij / L_i.
double drift_penalty_objective(const SlotProblem& problem, const SlotDecisions& decisions);

// Runs the three sub-solvers on a frozen slot problem. failed_ue, when
// given, receives the first UE whose power solver did not converge (-1 when
// all converged).
SlotDecisions solve_slot(const SlotProblem& problem, int* failed_ue = nullptr);

} // namespace mecsim

#endif // MECSIM_CONTROL_HPP_
