#ifndef MECSIM_UNITS_HPP_
#define MECSIM_UNITS_HPP_

#include <cmath>

namespace mecsim {

inline double dbm_to_watt(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

inline double watt_to_dbm(double watt) { return 10.0 * std::log10(watt / 1e-3); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double mbps_to_bits_per_slot(double mbps, double slot_s) { return mbps * 1e6 * slot_s; }

} // namespace mecsim

#endif // MECSIM_UNITS_HPP_
