#ifndef MECSIM_TOPOLOGY_HPP_
#define MECSIM_TOPOLOGY_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "mecsim/params.hpp"

namespace mecsim {

// One (UE, server) association pair. Pairs are stored sorted by (ue, server)
// so that anything indexed by pair id is deterministic.
struct AccessPair {
  int ue = 0;
  int server = 0;
};

struct Topology {
  std::vector<std::pair<double, double>> ue_positions;     // meters
  std::vector<std::pair<double, double>> server_positions; // meters

  std::vector<std::vector<int>> servers_of_ue; // S_i as server indices, sorted
  std::vector<std::vector<int>> ues_of_server; // U_j as UE indices, sorted

  std::vector<AccessPair> pairs;               // flat pair list, sorted by (ue, server)
  std::vector<std::vector<int>> pair_ids_of_ue;     // pair ids per UE, aligned with servers_of_ue
  std::vector<std::vector<int>> pair_ids_of_server; // pair ids per server, aligned with ues_of_server

  double distance(int ue, int server) const;
  int pair_id(int ue, int server) const; // -1 if not associated
};

// Places UEs/servers (unless given explicitly) and builds the association
// sets from the configured policy. Placement draws come from the run seed's
// placement substream, so the result is a pure function of the config.
Topology build_topology(const SimConfig& config);

} // namespace mecsim

#endif // MECSIM_TOPOLOGY_HPP_
