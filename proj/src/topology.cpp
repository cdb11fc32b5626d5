#include "mecsim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mecsim/channel.hpp"
#include "mecsim/rng.hpp"

namespace mecsim {

double Topology::distance(int ue, int server) const {
  const auto& [ux, uy] = ue_positions[ue];
  const auto& [sx, sy] = server_positions[server];
  return std::hypot(ux - sx, uy - sy);
}

int Topology::pair_id(int ue, int server) const {
  const auto& ids = pair_ids_of_ue[ue];
  const auto& servers = servers_of_ue[ue];
  for (std::size_t k = 0; k < servers.size(); ++k)
    if (servers[k] == server) return ids[k];
  return -1;
}

namespace {

std::vector<std::pair<double, double>> place_servers_on_grid(int count, double side) {
  std::vector<std::pair<double, double>> pos;
  if (count <= 0) return pos;
  const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count))));
  const int rows = (count + cols - 1) / cols;
  pos.reserve(count);
  for (int k = 0; k < count; ++k) {
    const int r = k / cols;
    const int c = k % cols;
    pos.emplace_back((c + 0.5) * side / cols, (r + 0.5) * side / rows);
  }
  return pos;
}

std::vector<std::pair<double, double>> place_ues_uniform(int count, double side,
                                                         std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(0.0, side);
  std::vector<std::pair<double, double>> pos;
  pos.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double x = coord(rng);
    const double y = coord(rng);
    pos.emplace_back(x, y);
  }
  return pos;
}

} // namespace

Topology build_topology(const SimConfig& config) {
  if (config.association_policy == AssociationPolicy::kNearest &&
      config.servers_per_ue > config.num_servers) {
    throw std::invalid_argument("servers_per_ue exceeds the number of servers");
  }

  Topology topo;
  topo.server_positions = config.server_positions.empty()
                              ? place_servers_on_grid(config.num_servers, config.area_side_m)
                              : config.server_positions;
  if (config.ue_positions.empty()) {
    auto rng = make_engine(config.rng_seed, RngStream::kPlacement, 0);
    topo.ue_positions = place_ues_uniform(config.num_ues, config.area_side_m, rng);
  } else {
    topo.ue_positions = config.ue_positions;
  }

  const int num_ues = static_cast<int>(topo.ue_positions.size());
  const int num_servers = static_cast<int>(topo.server_positions.size());
  topo.servers_of_ue.resize(num_ues);
  topo.ues_of_server.resize(num_servers);

  for (int i = 0; i < num_ues; ++i) {
    std::vector<int>& accessed = topo.servers_of_ue[i];
    if (config.association_policy == AssociationPolicy::kThreshold) {
      // Expected gain is the linear path loss (fading has unit mean).
      for (int j = 0; j < num_servers; ++j)
        if (path_loss_gain(topo.distance(i, j)) >= config.ue.access_gain_threshold)
          accessed.push_back(j);
    } else {
      std::vector<int> order(num_servers);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return topo.distance(i, a) < topo.distance(i, b);
      });
      order.resize(std::min<std::size_t>(order.size(), config.servers_per_ue));
      accessed = order;
      std::sort(accessed.begin(), accessed.end());
    }
    for (int j : accessed) topo.ues_of_server[j].push_back(i);
  }

  topo.pair_ids_of_ue.resize(num_ues);
  topo.pair_ids_of_server.resize(num_servers);
  for (int i = 0; i < num_ues; ++i) {
    for (int j : topo.servers_of_ue[i]) {
      const int pid = static_cast<int>(topo.pairs.size());
      topo.pairs.push_back({i, j});
      topo.pair_ids_of_ue[i].push_back(pid);
    }
  }
  for (int pid = 0; pid < static_cast<int>(topo.pairs.size()); ++pid)
    topo.pair_ids_of_server[topo.pairs[pid].server].push_back(pid);

  return topo;
}

} // namespace mecsim
