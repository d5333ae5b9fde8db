#pragma once

#include <iosfwd>
#include <vector>

#include "heps/extremum.hpp"

namespace heps {

struct CurveRow {
  double tau = 0.0;
  double c = 0.0;
  double lower_opt = 0.0;
  double lower_interp = 0.0;
  double upper = 0.0;
  double ratio = 0.0;

  friend bool operator==(const CurveRow&, const CurveRow&) = default;
};

/// Bound sweep over tau, strictly increasing.
struct CurveTable {
  std::vector<CurveRow> rows;
};

inline constexpr const char* kCurveHeader = "tau,c,lower_opt,lower_interp,upper,ratio";

/// bound_report at steps equally spaced tau in [tau_min, tau_max] (both included).
/// Throws InvalidArgument unless 0 < tau_min < tau_max <= 1 and steps >= 2.
CurveTable build_curve(double tau_min, double tau_max, int steps);

void write_curve_csv(std::ostream& out, const CurveTable& table);

/// Parses the CSV written by write_curve_csv; throws InvalidArgument with the
/// 1-based line number on malformed input.
CurveTable read_curve_csv(std::istream& in);

/// 800x600 chart of lower_opt, lower_interp and upper against tau, one polyline each.
void write_curve_svg(std::ostream& out, const CurveTable& table);

}  // namespace heps
