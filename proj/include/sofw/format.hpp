#pragma once

#include <cstdio>
#include <string>

namespace sofw {

/// Shortest decimal form with 17 significant digits; round-trips any double.
inline std::string to_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace sofw
