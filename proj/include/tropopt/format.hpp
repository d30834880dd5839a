#pragma once

#include <string>

namespace tropopt {

/// Shortest decimal text that reads back to the same double. Integral values
/// print without a decimal point, -0 prints as 0, infinities as "-inf"/"+inf".
std::string format_number(double v);

}  // namespace tropopt
