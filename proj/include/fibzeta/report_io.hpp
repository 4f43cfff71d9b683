#pragma once

#include <string>

#include "fibzeta/density.hpp"

namespace fibzeta {

// Machine renderings of an annotated report. Hand-written emitters so the
// bytes depend only on the counters: decimals come from exact-rational
// half-even rendering (9 places), never from printf of a double. Identical
// inputs give identical bytes regardless of thread count.
std::string report_to_json(const DensityReport& report);
std::string report_to_csv(const DensityReport& report);

// Human table, 6 decimal places.
std::string report_to_table(const DensityReport& report);

}  // namespace fibzeta
