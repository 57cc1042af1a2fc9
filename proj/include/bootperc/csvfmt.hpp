#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace bootperc {

// Numeric formatting for all machine-readable output: shortest %g form with
// 10 significant digits, identical bytes on every run. Fields never contain
// separators, so CSV rows are plain joins with LF line ends.
inline std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline std::string fmt_num(std::uint64_t v) { return std::to_string(v); }

}  // namespace bootperc
