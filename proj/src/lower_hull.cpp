#include "lower_hull.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>

namespace heps::detail {

namespace {

// Exact sign of sum_k z_k * a_k for doubles z_k and integers a_k (|a_k| < 2^53).
// Products split exactly with fma; the eight parts are accumulated into a
// nonoverlapping expansion whose most significant component carries the sign.
int exact_sign(const double (&z)[4], const double (&a)[4]) {
  double terms[8];
  for (int k = 0; k < 4; ++k) {
    const double p = z[k] * a[k];
    terms[2 * k] = p;
    terms[2 * k + 1] = std::fma(z[k], a[k], -p);
  }
  double e[9];
  int m = 0;
  for (double t : terms) {
    double q = t;
    int len = 0;
    for (int i = 0; i < m; ++i) {
      const double s = q + e[i];
      const double bv = s - q;
      const double err = (q - (s - bv)) + (e[i] - bv);
      if (err != 0.0) e[len++] = err;
      q = s;
    }
    if (q != 0.0) e[len++] = q;
    m = len;
  }
  if (m == 0) return 0;
  return e[m - 1] > 0.0 ? 1 : -1;
}

struct Orientation {
  int sign;
  double approx;
};

Orientation orient(const long long (&x)[4], const long long (&y)[4], const double (&z)[4]) {
  const long long r1x = x[1] - x[0], r1y = y[1] - y[0];
  const long long r2x = x[2] - x[0], r2y = y[2] - y[0];
  const long long r3x = x[3] - x[0], r3y = y[3] - y[0];
  const long long ab = r2x * r3y - r2y * r3x;
  const long long ac = -(r1x * r3y - r1y * r3x);
  const long long ad = r1x * r2y - r1y * r2x;
  const double a[4] = {static_cast<double>(-(ab + ac + ad)), static_cast<double>(ab),
                       static_cast<double>(ac), static_cast<double>(ad)};
  double sum = 0.0;
  double mag = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double p = z[k] * a[k];
    sum += p;
    mag += std::abs(p);
  }
  // Four rounded products and three rounded additions.
  const double bound = 8.0 * std::numeric_limits<double>::epsilon() * mag;
  if (sum > bound) return {1, sum};
  if (sum < -bound) return {-1, sum};
  return {exact_sign(z, a), sum};
}

struct Facet {
  int v[3];
  int nb[3];  // neighbour across edge (v[e], v[e+1])
  int head = -1;
  int far = -1;
  double far_dist = 0.0;
  unsigned stamp = 0;
  bool visible = false;
  bool alive = true;
};

class Hull {
 public:
  Hull(int nx, int ny, std::span<const double> z) : nx_(nx), ny_(ny), n_(nx * ny), z_(z) {
    double zmin = z[0];
    double zmax = z[0];
    for (double v : z) {
      zmin = std::min(zmin, v);
      zmax = std::max(zmax, v);
    }
    // Every lower-hull plane stays below zmax on the box, so this apex sits above
    // all of them and the upper hull collapses onto a cone over the silhouette.
    top_z_ = zmax + (zmax - zmin) + 1.0;
    next_.assign(n_ + 1, -1);
    start_of_.assign(n_ + 1, -1);
    end_of_.assign(n_ + 1, -1);
  }

  std::vector<double> run();

 private:
  long long px(int p) const { return p == n_ ? nx_ - 1 : 2LL * (p % nx_); }
  long long py(int p) const { return p == n_ ? ny_ - 1 : 2LL * (p / nx_); }
  double pz(int p) const { return p == n_ ? top_z_ : z_[p]; }

  Orientation orient_facet(const Facet& f, int p) const {
    const long long x[4] = {px(f.v[0]), px(f.v[1]), px(f.v[2]), px(p)};
    const long long y[4] = {py(f.v[0]), py(f.v[1]), py(f.v[2]), py(p)};
    const double z[4] = {pz(f.v[0]), pz(f.v[1]), pz(f.v[2]), pz(p)};
    return orient(x, y, z);
  }

  int new_facet(int a, int b, int c) {
    int id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
      facets_[id] = Facet{};
    } else {
      id = static_cast<int>(facets_.size());
      facets_.emplace_back();
    }
    Facet& f = facets_[id];
    f.v[0] = a;
    f.v[1] = b;
    f.v[2] = c;
    return id;
  }

  void add_conflict(int f, int p, double dist) {
    Facet& fc = facets_[f];
    next_[p] = fc.head;
    fc.head = p;
    if (fc.far < 0 || dist > fc.far_dist) {
      fc.far = p;
      fc.far_dist = dist;
    }
  }

  void build_initial();
  void add_point(int f_id);
  std::vector<double> rasterize() const;

  int nx_;
  int ny_;
  int n_;
  std::span<const double> z_;
  double top_z_ = 0.0;
  std::vector<Facet> facets_;
  std::vector<int> free_;
  std::vector<int> next_;
  std::vector<int> start_of_;
  std::vector<int> end_of_;
  std::vector<int> work_;
  std::vector<int> visible_;
  std::vector<std::pair<int, int>> horizon_;
  std::vector<int> created_;
  unsigned stamp_ = 0;
};

void Hull::build_initial() {
  const int top = n_;
  const int c0 = 0;
  const int c1 = nx_ - 1;
  const int c2 = (ny_ - 1) * nx_;
  const int tet[4] = {top, c0, c1, c2};
  int ids[4];
  for (int skip = 0; skip < 4; ++skip) {
    int v[3];
    int k = 0;
    for (int t = 0; t < 4; ++t) {
      if (t != skip) v[k++] = tet[t];
    }
    int id = new_facet(v[0], v[1], v[2]);
    if (orient_facet(facets_[id], tet[skip]).sign > 0) std::swap(facets_[id].v[1], facets_[id].v[2]);
    ids[skip] = id;
  }
  for (int a = 0; a < 4; ++a) {
    Facet& fa = facets_[ids[a]];
    for (int e = 0; e < 3; ++e) {
      const int u = fa.v[e];
      const int w = fa.v[(e + 1) % 3];
      for (int b = 0; b < 4; ++b) {
        if (b == a) continue;
        const Facet& fb = facets_[ids[b]];
        for (int k = 0; k < 3; ++k) {
          if (fb.v[k] == w && fb.v[(k + 1) % 3] == u) fa.nb[e] = ids[b];
        }
      }
    }
  }
  for (int p = 0; p < n_; ++p) {
    if (p == c0 || p == c1 || p == c2) continue;
    for (int id : ids) {
      const Orientation o = orient_facet(facets_[id], p);
      if (o.sign > 0) {
        add_conflict(id, p, o.approx);
        break;
      }
    }
  }
  for (int id : ids) {
    if (facets_[id].head >= 0) work_.push_back(id);
  }
}

void Hull::add_point(int f_id) {
  const int eye = facets_[f_id].far;
  ++stamp_;
  visible_.clear();
  horizon_.clear();
  created_.clear();

  facets_[f_id].stamp = stamp_;
  facets_[f_id].visible = true;
  visible_.push_back(f_id);
  for (std::size_t q = 0; q < visible_.size(); ++q) {
    const int g = visible_[q];
    for (int e = 0; e < 3; ++e) {
      const int h = facets_[g].nb[e];
      Facet& fh = facets_[h];
      if (fh.stamp != stamp_) {
        fh.stamp = stamp_;
        fh.visible = orient_facet(fh, eye).sign > 0;
        if (fh.visible) visible_.push_back(h);
      }
      if (!fh.visible) horizon_.emplace_back(g, e);
    }
  }

  for (const auto& [g, e] : horizon_) {
    const int a = facets_[g].v[e];
    const int b = facets_[g].v[(e + 1) % 3];
    const int outside = facets_[g].nb[e];
    const int nf = new_facet(a, b, eye);
    facets_[nf].nb[0] = outside;
    Facet& fo = facets_[outside];
    for (int k = 0; k < 3; ++k) {
      if (fo.v[k] == b && fo.v[(k + 1) % 3] == a) fo.nb[k] = nf;
    }
    start_of_[a] = nf;
    end_of_[b] = nf;
    created_.push_back(nf);
  }
  for (int nf : created_) {
    Facet& f = facets_[nf];
    f.nb[1] = start_of_[f.v[1]];
    f.nb[2] = end_of_[f.v[0]];
  }

  std::size_t hint = 0;
  for (int g : visible_) {
    for (int p = facets_[g].head; p >= 0;) {
      const int nxt = next_[p];
      if (p != eye) {
        for (std::size_t t = 0; t < created_.size(); ++t) {
          const std::size_t k = (hint + t) % created_.size();
          const Orientation o = orient_facet(facets_[created_[k]], p);
          if (o.sign > 0) {
            add_conflict(created_[k], p, o.approx);
            hint = k;
            break;
          }
        }
      }
      p = nxt;
    }
  }
  for (int g : visible_) {
    facets_[g].alive = false;
    facets_[g].head = -1;
    free_.push_back(g);
  }
  for (int nf : created_) {
    if (facets_[nf].head >= 0) work_.push_back(nf);
  }
}

std::vector<double> Hull::rasterize() const {
  std::vector<double> env(static_cast<std::size_t>(n_), -std::numeric_limits<double>::infinity());
  for (const Facet& f : facets_) {
    if (!f.alive || f.v[0] == n_ || f.v[1] == n_ || f.v[2] == n_) continue;
    long long fi[3], fj[3];
    double fz[3];
    for (int k = 0; k < 3; ++k) {
      fi[k] = f.v[k] % nx_;
      fj[k] = f.v[k] / nx_;
      fz[k] = z_[f.v[k]];
    }
    const long long area = (fi[1] - fi[0]) * (fj[2] - fj[0]) - (fj[1] - fj[0]) * (fi[2] - fi[0]);
    if (area >= 0) continue;  // upward or vertical facet
    const long long jlo = std::min({fj[0], fj[1], fj[2]});
    const long long jhi = std::max({fj[0], fj[1], fj[2]});
    for (long long j = jlo; j <= jhi; ++j) {
      double xlo = std::numeric_limits<double>::infinity();
      double xhi = -xlo;
      for (int e = 0; e < 3; ++e) {
        const int s = (e + 1) % 3;
        const long long ja = fj[e], jb = fj[s];
        if ((j < std::min(ja, jb)) || (j > std::max(ja, jb))) continue;
        if (ja == jb) {
          xlo = std::min({xlo, double(fi[e]), double(fi[s])});
          xhi = std::max({xhi, double(fi[e]), double(fi[s])});
        } else {
          const double xc = fi[e] + double(j - ja) * double(fi[s] - fi[e]) / double(jb - ja);
          xlo = std::min(xlo, xc);
          xhi = std::max(xhi, xc);
        }
      }
      const long long ilo = std::max(0LL, static_cast<long long>(std::floor(xlo)) - 1);
      const long long ihi = std::min<long long>(nx_ - 1, static_cast<long long>(std::ceil(xhi)) + 1);
      for (long long i = ilo; i <= ihi; ++i) {
        const long long w0 = (fi[1] - i) * (fj[2] - j) - (fj[1] - j) * (fi[2] - i);
        const long long w1 = (fi[2] - i) * (fj[0] - j) - (fj[2] - j) * (fi[0] - i);
        const long long w2 = (fi[0] - i) * (fj[1] - j) - (fj[0] - j) * (fi[1] - i);
        if (w0 > 0 || w1 > 0 || w2 > 0) continue;
        const std::size_t q = static_cast<std::size_t>(j) * nx_ + static_cast<std::size_t>(i);
        double value;
        if (w1 == 0 && w2 == 0) {
          value = fz[0];
        } else if (w0 == 0 && w2 == 0) {
          value = fz[1];
        } else if (w0 == 0 && w1 == 0) {
          value = fz[2];
        } else {
          value = (double(w0) * fz[0] + double(w1) * fz[1] + double(w2) * fz[2]) / double(area);
        }
        env[q] = std::max(env[q], value);
      }
    }
  }
  for (std::size_t q = 0; q < env.size(); ++q) {
    assert(std::isfinite(env[q]));
    env[q] = std::isfinite(env[q]) ? std::min(env[q], z_[q]) : z_[q];
  }
  return env;
}

std::vector<double> Hull::run() {
  build_initial();
  while (!work_.empty()) {
    const int f = work_.back();
    work_.pop_back();
    if (!facets_[f].alive || facets_[f].head < 0) continue;
    add_point(f);
  }
  return rasterize();
}

}  // namespace

int orient_lifted(const long long (&x)[4], const long long (&y)[4], const double (&z)[4]) {
  return orient(x, y, z).sign;
}

std::vector<double> lattice_lower_hull(int nx, int ny, std::span<const double> z) {
  Hull hull(nx, ny, z);
  return hull.run();
}

}  // namespace heps::detail
