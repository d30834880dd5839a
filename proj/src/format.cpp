#include "tropopt/format.hpp"

#include <charconv>
#include <cmath>

namespace tropopt {

std::string format_number(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "+inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v + 0.0);
  return std::string(buf, end);
}

}  // namespace tropopt
