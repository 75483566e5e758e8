#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <string>

namespace gsteer {

/// Shortest decimal form that reads back to the same double.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// Empty string for a missing value (CSV convention).
inline std::string format_optional(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string();
}

}  // namespace gsteer
