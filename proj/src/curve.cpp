#include "heps/curve.hpp"

#include <array>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "heps/errors.hpp"
#include "heps/format.hpp"
#include "heps/parallel.hpp"

namespace heps {

CurveTable build_curve(double tau_min, double tau_max, int steps) {
  if (!(tau_min > 0.0) || !(tau_max > tau_min) || !(tau_max <= 1.0)) {
    throw InvalidArgument("curve needs 0 < tau_min < tau_max <= 1");
  }
  if (steps < 2) throw InvalidArgument("curve needs at least 2 steps");
  CurveTable t;
  t.rows.resize(static_cast<std::size_t>(steps));
  const double span = tau_max - tau_min;
  parallel_for(t.rows.size(), [&](std::size_t k) {
    const double tau = k + 1 == t.rows.size()
                           ? tau_max
                           : tau_min + span * static_cast<double>(k) / (steps - 1);
    const BoundReport r = bound_report(Ellipticity::from_ratio(tau));
    t.rows[k] = {r.tau, r.c, r.eps_lower_opt, r.eps_lower_interp, r.eps_upper, r.ratio};
  });
  return t;
}

void write_curve_csv(std::ostream& out, const CurveTable& table) {
  out << kCurveHeader << '\n';
  for (const CurveRow& r : table.rows) {
    out << format_double(r.tau) << ',' << format_double(r.c) << ',' << format_double(r.lower_opt)
        << ',' << format_double(r.lower_interp) << ',' << format_double(r.upper) << ','
        << format_double(r.ratio) << '\n';
  }
}

CurveTable read_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCurveHeader) {
    throw InvalidArgument("line 1: expected header '" + std::string(kCurveHeader) + "'");
  }
  CurveTable t;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::array<double, 6> f{};
    std::size_t pos = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const std::size_t end = k + 1 < f.size() ? line.find(',', pos) : line.size();
      if (end == std::string::npos) {
        throw InvalidArgument("line " + std::to_string(lineno) + ": expected 6 fields");
      }
      try {
        f[k] = parse_double(std::string_view(line).substr(pos, end - pos));
      } catch (const InvalidArgument& e) {
        throw InvalidArgument("line " + std::to_string(lineno) + ": " + e.what());
      }
      pos = end + 1;
    }
    if (!t.rows.empty() && !(f[0] > t.rows.back().tau)) {
      throw InvalidArgument("line " + std::to_string(lineno) + ": tau must increase");
    }
    t.rows.push_back({f[0], f[1], f[2], f[3], f[4], f[5]});
  }
  return t;
}

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_curve_svg(std::ostream& out, const CurveTable& table) {
  constexpr double left = 80, right = 760, top = 40, bottom = 540;
  auto px = [&](double tau) { return left + (right - left) * tau; };
  auto py = [&](double eps) { return bottom - (bottom - top) * eps; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" "
         "height=\"600\" font-family=\"sans-serif\" font-size=\"14\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\""
      << bottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << left << "\" y2=\"" << top
      << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 10; ++k) {
    const double v = k / 10.0;
    const std::string label = fixed(v).substr(0, 3);
    out << "<line x1=\"" << fixed(px(v)) << "\" y1=\"" << bottom << "\" x2=\"" << fixed(px(v))
        << "\" y2=\"" << bottom + 6 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fixed(px(v)) << "\" y=\"" << bottom + 22
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
    out << "<line x1=\"" << left - 6 << "\" y1=\"" << fixed(py(v)) << "\" x2=\"" << left
        << "\" y2=\"" << fixed(py(v)) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left - 10 << "\" y=\"" << fixed(py(v) + 5)
        << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"585\" text-anchor=\"middle\">τ</text>\n";
  out << "<text x=\"20\" y=\"" << (top + bottom) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << (top + bottom) / 2 << ")\">exponent bound</text>\n";

  struct Series {
    const char* name;
    const char* color;
    double CurveRow::*field;
  };
  const Series series[3] = {{"optimized lower bound", "#1f77b4", &CurveRow::lower_opt},
                            {"interpolated lower bound", "#2ca02c", &CurveRow::lower_interp},
                            {"upper bound", "#d62728", &CurveRow::upper}};
  for (const Series& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const CurveRow& r : table.rows) {
      out << (first ? "" : " ") << fixed(px(r.tau)) << ',' << fixed(py(r.*s.field));
      first = false;
    }
    out << "\"/>\n";
  }
  for (int k = 0; k < 3; ++k) {
    const double y = top + 20 + 22 * k;
    out << "<line x1=\"100\" y1=\"" << y << "\" x2=\"130\" y2=\"" << y << "\" stroke=\""
        << series[k].color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"138\" y=\"" << y + 5 << "\">" << series[k].name << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace heps
