#pragma once

#include <string>

namespace divorient {

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

}  // namespace divorient
