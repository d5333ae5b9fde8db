#include "heps/grid.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "heps/errors.hpp"
#include "heps/format.hpp"

namespace heps {

GridFunction::GridFunction(int nx, int ny, double xmin, double ymin, double h,
                           std::vector<double> values)
    : nx_(nx), ny_(ny), xmin_(xmin), ymin_(ymin), h_(h), values_(std::move(values)) {
  if (nx < 3 || ny < 3) throw InvalidArgument("grid needs at least 3 nodes per axis");
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("grid spacing must be positive");
  if (!std::isfinite(xmin) || !std::isfinite(ymin)) throw InvalidArgument("grid origin must be finite");
  if (values_.size() != static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny)) {
    throw InvalidArgument("grid value count does not match nx * ny");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("grid values must be finite");
  }
}

GridFunction GridFunction::with_values(std::vector<double> values) const {
  return GridFunction(nx_, ny_, xmin_, ymin_, h_, std::move(values));
}

int GridFunction::boundary_distance(int i, int j) const noexcept {
  return std::min({i, j, nx_ - 1 - i, ny_ - 1 - j});
}

GridIndex GridFunction::nearest(double x, double y) const {
  const double fi = (x - xmin_) / h_;
  const double fj = (y - ymin_) / h_;
  const long i = std::lround(fi);
  const long j = std::lround(fj);
  if (!(fi > -0.5 && fj > -0.5) || i < 0 || j < 0 || i >= nx_ || j >= ny_) {
    throw InvalidArgument("point lies outside the grid domain");
  }
  return {static_cast<int>(i), static_cast<int>(j)};
}

double GridFunction::min_value() const noexcept {
  return *std::min_element(values_.begin(), values_.end());
}

double GridFunction::max_value() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

void write_grid(std::ostream& out, const GridFunction& g) {
  out << "# heps-grid v1 nx=" << g.nx() << " ny=" << g.ny() << " xmin=" << format_double(g.xmin())
      << " ymin=" << format_double(g.ymin()) << " h=" << format_double(g.h()) << '\n';
  std::string line;
  for (int j = 0; j < g.ny(); ++j) {
    line.clear();
    for (int i = 0; i < g.nx(); ++i) {
      if (i) line.push_back(' ');
      line += format_double(g(i, j));
    }
    line.push_back('\n');
    out << line;
  }
}

namespace {

std::string_view field_value(std::string_view token, std::string_view key, std::size_t line) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    throw GridParseError("expected '" + std::string(key) + "=<value>' in header", line);
  }
  return token.substr(key.size() + 1);
}

}  // namespace

GridFunction read_grid(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw GridParseError("missing header", 1);
  std::istringstream hs(header);
  std::string hash, magic, version;
  hs >> hash >> magic >> version;
  if (hash != "#" || magic != "heps-grid" || version != "v1") {
    throw GridParseError("header must start with '# heps-grid v1'", 1);
  }
  std::string tok[5];
  for (auto& t : tok) {
    if (!(hs >> t)) throw GridParseError("truncated header", 1);
  }
  std::string extra;
  if (hs >> extra) throw GridParseError("unexpected header field '" + extra + "'", 1);

  int nx = 0;
  int ny = 0;
  double xmin = 0.0;
  double ymin = 0.0;
  double h = 0.0;
  try {
    nx = std::stoi(std::string(field_value(tok[0], "nx", 1)));
    ny = std::stoi(std::string(field_value(tok[1], "ny", 1)));
    xmin = parse_double(field_value(tok[2], "xmin", 1));
    ymin = parse_double(field_value(tok[3], "ymin", 1));
    h = parse_double(field_value(tok[4], "h", 1));
  } catch (const GridParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw GridParseError(std::string("bad header value: ") + e.what(), 1);
  }
  if (nx < 3 || ny < 3 || nx > 1 << 15 || ny > 1 << 15) {
    throw GridParseError("nx and ny must lie in [3, 32768]", 1);
  }
  if (!(h > 0.0)) throw GridParseError("h must be positive", 1);

  const std::size_t total = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  std::vector<double> values;
  values.reserve(total);
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const std::size_t start = line.find_first_not_of(" \t\r", pos);
      if (start == std::string::npos) break;
      std::size_t end = line.find_first_of(" \t\r", start);
      if (end == std::string::npos) end = line.size();
      if (values.size() == total) throw GridParseError("more than nx*ny values", lineno);
      double v = 0.0;
      try {
        v = parse_double(std::string_view(line).substr(start, end - start));
      } catch (const InvalidArgument& e) {
        throw GridParseError(e.what(), lineno);
      }
      if (!std::isfinite(v)) throw GridParseError("non-finite value", lineno);
      values.push_back(v);
      pos = end;
    }
  }
  if (values.size() != total) {
    throw GridParseError("expected " + std::to_string(total) + " values, found " +
                             std::to_string(values.size()),
                         lineno);
  }
  return GridFunction(nx, ny, xmin, ymin, h, std::move(values));
}

}  // namespace heps
