#pragma once

#include <cstdio>
#include <string>

namespace ecodrive::detail {

// Locale-independent, round-trippable text for CSV output.
inline std::string format_number(double v, int precision = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

}  // namespace ecodrive::detail
