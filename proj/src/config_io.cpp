#include "mecsim/config_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mecsim/units.hpp"

namespace mecsim {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& where, const std::string& why) {
  throw std::runtime_error("config error at " + where + ": " + why);
}

void check_keys(const json& section, const std::string& name,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : section.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (key == k) known = true;
    if (!known) bad_field(name + "." + key, "unknown field");
  }
}

double number_or(const json& section, const std::string& key, double fallback) {
  if (!section.contains(key)) return fallback;
  return section[key].get<double>();
}

std::vector<std::pair<double, double>> read_positions(const json& section,
                                                      const std::string& name,
                                                      const std::string& key) {
  std::vector<std::pair<double, double>> out;
  if (!section.contains(key)) return out;
  for (const auto& entry : section[key]) {
    if (!entry.is_array() || entry.size() != 2) bad_field(name + "." + key, "expected [x, y] pairs");
    out.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return out;
}

} // namespace

SimConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
  }

  SimConfig config;

  const json global = root.value("global", json::object());
  check_keys(global, "global",
             {"bandwidth_hz", "bandwidth_mhz", "noise_psd_w_per_hz", "noise_psd_dbm_per_hz",
              "cpu_power_coeff", "lyapunov_v", "slot_duration_s", "num_slots", "rng_seed",
              "area_side_m", "num_ues", "num_servers", "association", "arrival_unit_bits",
              "warmup_fraction", "ue_positions", "server_positions"});

  if (global.contains("bandwidth_hz"))
    config.bandwidth_hz = global["bandwidth_hz"].get<double>();
  else if (global.contains("bandwidth_mhz"))
    config.bandwidth_hz = global["bandwidth_mhz"].get<double>() * 1e6;

  if (global.contains("noise_psd_w_per_hz"))
    config.noise_psd_w_per_hz = global["noise_psd_w_per_hz"].get<double>();
  else
    config.noise_psd_w_per_hz = dbm_to_watt(number_or(global, "noise_psd_dbm_per_hz", -174.0));

  config.cpu_power_coeff = number_or(global, "cpu_power_coeff", config.cpu_power_coeff);
  config.lyapunov_v = number_or(global, "lyapunov_v", config.lyapunov_v);
  config.slot_duration_s = number_or(global, "slot_duration_s", config.slot_duration_s);
  config.num_slots = static_cast<std::int64_t>(number_or(global, "num_slots", 0.0));
  config.rng_seed = static_cast<std::uint64_t>(number_or(global, "rng_seed", 1.0));
  config.area_side_m = number_or(global, "area_side_m", config.area_side_m);
  config.num_ues = static_cast<int>(number_or(global, "num_ues", 0.0));
  config.num_servers = static_cast<int>(number_or(global, "num_servers", 0.0));
  config.arrival_unit_bits = number_or(global, "arrival_unit_bits", config.arrival_unit_bits);
  config.warmup_fraction = number_or(global, "warmup_fraction", config.warmup_fraction);
  config.ue_positions = read_positions(global, "global", "ue_positions");
  config.server_positions = read_positions(global, "global", "server_positions");

  if (global.contains("association")) {
    const json& assoc = global["association"];
    check_keys(assoc, "global.association", {"policy", "servers_per_ue"});
    const std::string policy = assoc.value("policy", "nearest");
    if (policy == "nearest")
      config.association_policy = AssociationPolicy::kNearest;
    else if (policy == "threshold")
      config.association_policy = AssociationPolicy::kThreshold;
    else
      bad_field("global.association.policy", "expected \"nearest\" or \"threshold\"");
    config.servers_per_ue = static_cast<int>(number_or(assoc, "servers_per_ue", 1.0));
  }

  const json ue = root.value("ue", json::object());
  check_keys(ue, "ue",
             {"arrival_rate_mbps", "arrival_rate_bits_per_slot", "processing_density",
              "max_cpu_freq_hz", "max_tx_power_dbm", "max_tx_power_w", "queue_bound_bits",
              "violation_tolerance", "gpd_scale_threshold_bits", "gpd_shape_threshold",
              "access_gain_threshold"});

  if (ue.contains("arrival_rate_bits_per_slot")) {
    config.ue.arrival_rate_bits_per_slot = ue["arrival_rate_bits_per_slot"].get<double>();
  } else if (ue.contains("arrival_rate_mbps")) {
    config.ue.arrival_rate_bits_per_slot =
        mbps_to_bits_per_slot(ue["arrival_rate_mbps"].get<double>(), config.slot_duration_s);
  }
  config.ue.processing_density = number_or(ue, "processing_density", config.ue.processing_density);
  config.ue.max_cpu_freq_hz = number_or(ue, "max_cpu_freq_hz", config.ue.max_cpu_freq_hz);
  if (ue.contains("max_tx_power_w"))
    config.ue.max_tx_power_w = ue["max_tx_power_w"].get<double>();
  else if (ue.contains("max_tx_power_dbm"))
    config.ue.max_tx_power_w = dbm_to_watt(ue["max_tx_power_dbm"].get<double>());

  // Queue bound and scale threshold default to four mean arrivals.
  const double four_lambda = 4.0 * config.ue.arrival_rate_bits_per_slot;
  config.ue.queue_bound_bits = number_or(ue, "queue_bound_bits", four_lambda);
  config.ue.violation_tolerance =
      number_or(ue, "violation_tolerance", config.ue.violation_tolerance);
  config.ue.gpd_scale_threshold_bits = number_or(ue, "gpd_scale_threshold_bits", four_lambda);
  config.ue.gpd_shape_threshold =
      number_or(ue, "gpd_shape_threshold", config.ue.gpd_shape_threshold);
  if (ue.contains("access_gain_threshold")) {
    const json& v = ue["access_gain_threshold"];
    if (v.is_string() && v.get<std::string>() == "inf")
      config.ue.access_gain_threshold = std::numeric_limits<double>::infinity();
    else if (v.is_number())
      config.ue.access_gain_threshold = v.get<double>();
    else
      bad_field("ue.access_gain_threshold", "expected a number or \"inf\"");
  }

  const json server = root.value("server", json::object());
  check_keys(server, "server",
             {"num_cores", "core_freq_hz", "delay_bound_s", "violation_tolerance",
              "gpd_scale_threshold_bits", "gpd_shape_threshold"});
  config.server.num_cores = static_cast<int>(number_or(server, "num_cores", 9.0));
  config.server.core_freq_hz = number_or(server, "core_freq_hz", config.server.core_freq_hz);
  config.server.delay_bound_s = number_or(server, "delay_bound_s", config.server.delay_bound_s);
  config.server.violation_tolerance =
      number_or(server, "violation_tolerance", config.server.violation_tolerance);
  config.server.gpd_scale_threshold_bits =
      number_or(server, "gpd_scale_threshold_bits", four_lambda);
  config.server.gpd_shape_threshold =
      number_or(server, "gpd_shape_threshold", config.server.gpd_shape_threshold);

  return config;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string dump_config(const SimConfig& c) {
  json root;
  json& global = root["global"];
  global["bandwidth_hz"] = c.bandwidth_hz;
  global["noise_psd_w_per_hz"] = c.noise_psd_w_per_hz;
  global["cpu_power_coeff"] = c.cpu_power_coeff;
  global["lyapunov_v"] = c.lyapunov_v;
  global["slot_duration_s"] = c.slot_duration_s;
  global["num_slots"] = c.num_slots;
  global["rng_seed"] = c.rng_seed;
  global["area_side_m"] = c.area_side_m;
  global["num_ues"] = c.num_ues;
  global["num_servers"] = c.num_servers;
  global["association"]["policy"] =
      c.association_policy == AssociationPolicy::kNearest ? "nearest" : "threshold";
  global["association"]["servers_per_ue"] = c.servers_per_ue;
  global["arrival_unit_bits"] = c.arrival_unit_bits;
  global["warmup_fraction"] = c.warmup_fraction;
  if (!c.ue_positions.empty()) {
    json positions = json::array();
    for (const auto& [x, y] : c.ue_positions) positions.push_back({x, y});
    global["ue_positions"] = positions;
  }
  if (!c.server_positions.empty()) {
    json positions = json::array();
    for (const auto& [x, y] : c.server_positions) positions.push_back({x, y});
    global["server_positions"] = positions;
  }

  json& ue = root["ue"];
  ue["arrival_rate_bits_per_slot"] = c.ue.arrival_rate_bits_per_slot;
  ue["processing_density"] = c.ue.processing_density;
  ue["max_cpu_freq_hz"] = c.ue.max_cpu_freq_hz;
  ue["max_tx_power_w"] = c.ue.max_tx_power_w;
  ue["queue_bound_bits"] = c.ue.queue_bound_bits;
  ue["violation_tolerance"] = c.ue.violation_tolerance;
  ue["gpd_scale_threshold_bits"] = c.ue.gpd_scale_threshold_bits;
  ue["gpd_shape_threshold"] = c.ue.gpd_shape_threshold;
  ue["access_gain_threshold"] = std::isinf(c.ue.access_gain_threshold)
                                    ? json("inf")
                                    : json(c.ue.access_gain_threshold);

  json& server = root["server"];
  server["num_cores"] = c.server.num_cores;
  server["core_freq_hz"] = c.server.core_freq_hz;
  server["delay_bound_s"] = c.server.delay_bound_s;
  server["violation_tolerance"] = c.server.violation_tolerance;
  server["gpd_scale_threshold_bits"] = c.server.gpd_scale_threshold_bits;
  server["gpd_shape_threshold"] = c.server.gpd_shape_threshold;

  return root.dump(2);
}

std::string config_hash(const SimConfig& config) {
  const std::string text = dump_config(config);
  std::uint64_t hash = 0xcbf29ce484222325ULL; // FNV-1a 64
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

} // namespace mecsim
