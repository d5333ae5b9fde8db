#include "heps/format.hpp"

#include <charconv>
#include <string>

#include "heps/errors.hpp"

namespace heps {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  // from_chars rejects a leading '+', which hand-written files sometimes carry.
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("not a decimal number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace heps
