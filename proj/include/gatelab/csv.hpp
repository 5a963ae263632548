#pragma once

#include <cstdio>
#include <string>

namespace gatelab {

// All CSV numbers use 12 significant digits, '.' decimal point, no locale.
inline std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline const char* csv_bool(bool b) { return b ? "1" : "0"; }

}  // namespace gatelab
