#include "rmspace/exponent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace rmspace {

Exponent Exponent::parse(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "inf" || t == "infinity") return infinity();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("exponent: expected a number >= 1 or \"inf\"");
  }
  if (pos != t.size()) throw std::invalid_argument("exponent: trailing characters in \"" + s + "\"");
  return Exponent(v);
}

std::string Exponent::format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace rmspace
