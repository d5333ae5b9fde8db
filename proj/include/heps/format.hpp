#pragma once

#include <string>
#include <string_view>

namespace heps {

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// Parses a complete decimal token; throws InvalidArgument on trailing garbage.
double parse_double(std::string_view text);

}  // namespace heps
