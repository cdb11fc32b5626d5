#ifndef MECSIM_REPORT_HPP_
#define MECSIM_REPORT_HPP_

#include <cstdint>
#include <string>

#include "mecsim/engine.hpp"
#include "mecsim/params.hpp"
#include "mecsim/topology.hpp"

namespace mecsim {

inline constexpr const char* kCodeVersion = "mecsim 0.1.0";

// Executes one run and writes summary.json (+ optional decimated slot CSVs)
// into out_dir. decimate_stride == 0 disables the slot stream. All outputs
// are deterministic functions of (config, seed).
RunResult run_and_write(const SimConfig& config, const std::string& out_dir,
                        std::int64_t decimate_stride);

// Writes exceedance, CCDF-vs-fit, parameter-trace, and interference
// snapshot CSVs for every monitored queue with enough exceedances.
void write_tail_exports(const SimConfig& config, const Topology& topology,
                        const RunResult& result, const std::string& out_dir);

std::string summary_to_json(const SimConfig& config, const Topology& topology,
                            const RunResult& result);

} // namespace mecsim

#endif // MECSIM_REPORT_HPP_
