#ifndef MECSIM_CONFIG_IO_HPP_
#define MECSIM_CONFIG_IO_HPP_

#include <cstdint>
#include <string>

#include "mecsim/params.hpp"

namespace mecsim {

// Loads a config from its JSON file form (sections: global, ue, server).
// Power-style fields accept either linear units or the dB forms used in the
// literature (see README for the schema). Throws std::runtime_error with a
// field-level message on malformed input.
SimConfig load_config(const std::string& path);
SimConfig parse_config(const std::string& json_text);

// Serializes the fully resolved config (all defaults applied, SI units).
std::string dump_config(const SimConfig& config);

// FNV-1a over the canonical dump; embedded in every output file.
std::string config_hash(const SimConfig& config);

} // namespace mecsim

#endif // MECSIM_CONFIG_IO_HPP_
