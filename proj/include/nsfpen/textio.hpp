#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace nsfpen {

/// Shortest round-trip decimal form used for every number the artifact
/// writes: 17 significant digits reproduce the double bit-for-bit on parse.
inline std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

inline std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return std::string();
  const std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Strict scalar parses: the whole token must be consumed.
inline double parse_double_token(const std::string& token, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": not a number: '" + token + "'");
  }
}

inline long long parse_int_token(const std::string& token, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": not an integer: '" + token + "'");
  }
}

} // namespace nsfpen
