#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace divorient::cli {

/// Comma-separated items, each either a value or `start..stop[:step]`.
/// "256..1024:256,2048" -> {256, 512, 768, 1024, 2048}.
std::vector<std::uint32_t> parse_uint_grid(const std::string& text);

/// Same syntax for reals; ranges are generated as start + i * step.
std::vector<double> parse_real_grid(const std::string& text);

}  // namespace divorient::cli
