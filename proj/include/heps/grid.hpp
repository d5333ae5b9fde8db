#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace heps {

struct GridIndex {
  int i = 0;  ///< column, along x
  int j = 0;  ///< row, along y

  friend bool operator==(const GridIndex&, const GridIndex&) = default;
};

/// Scalar field sampled on a uniform grid over the box
/// [xmin, xmin + (nx-1)h] x [ymin, ymin + (ny-1)h]. Values are row-major with
/// x varying fastest: value(i, j) = values[j * nx + i].
class GridFunction {
 public:
  /// Throws InvalidArgument if nx or ny < 3, h <= 0, the size mismatches or a value is not finite.
  GridFunction(int nx, int ny, double xmin, double ymin, double h, std::vector<double> values);

  /// Samples f(x, y) at every node.
  template <class F>
  static GridFunction sample(int nx, int ny, double xmin, double ymin, double h, F&& f) {
    std::vector<double> v(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        v[static_cast<std::size_t>(j) * nx + i] = f(xmin + i * h, ymin + j * h);
      }
    }
    return GridFunction(nx, ny, xmin, ymin, h, std::move(v));
  }

  /// Same geometry, new values.
  GridFunction with_values(std::vector<double> values) const;

  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  double xmin() const noexcept { return xmin_; }
  double ymin() const noexcept { return ymin_; }
  double xmax() const noexcept { return xmin_ + (nx_ - 1) * h_; }
  double ymax() const noexcept { return ymin_ + (ny_ - 1) * h_; }
  double h() const noexcept { return h_; }
  double cell_area() const noexcept { return h_ * h_; }
  std::size_t size() const noexcept { return values_.size(); }

  double x(int i) const noexcept { return xmin_ + i * h_; }
  double y(int j) const noexcept { return ymin_ + j * h_; }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(j) * nx_ + i;
  }
  std::size_t index(GridIndex g) const noexcept { return index(g.i, g.j); }
  GridIndex node(std::size_t k) const noexcept {
    return {static_cast<int>(k % nx_), static_cast<int>(k / nx_)};
  }

  double operator()(int i, int j) const noexcept { return values_[index(i, j)]; }
  double operator[](std::size_t k) const noexcept { return values_[k]; }
  std::span<const double> values() const noexcept { return values_; }

  bool on_boundary(int i, int j) const noexcept {
    return i == 0 || j == 0 || i == nx_ - 1 || j == ny_ - 1;
  }
  /// Number of grid steps from the node to the nearest side of the box.
  int boundary_distance(int i, int j) const noexcept;

  /// Nearest node to (x, y); throws InvalidArgument if the point is outside the box.
  GridIndex nearest(double x, double y) const;

  double min_value() const noexcept;
  double max_value() const noexcept;

 private:
  int nx_;
  int ny_;
  double xmin_;
  double ymin_;
  double h_;
  std::vector<double> values_;
};

/// Writes the heps-grid v1 format: a header line
/// `# heps-grid v1 nx=.. ny=.. xmin=.. ymin=.. h=..` then one grid row per line.
void write_grid(std::ostream& out, const GridFunction& g);

/// Reads the heps-grid v1 format; throws GridParseError carrying the offending line.
GridFunction read_grid(std::istream& in);

}  // namespace heps
