#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace euler_padic::detail {

// Shortest round-trip decimal for a double. "%.17g" is exact for IEEE
// doubles; trying shorter forms first keeps CSVs readable and stable.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace euler_padic::detail
