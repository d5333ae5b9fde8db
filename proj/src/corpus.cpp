#include "heps/corpus.hpp"

#include <cmath>
#include <optional>
#include <random>

#include "heps/errors.hpp"
#include "heps/format.hpp"

namespace heps {

namespace {

struct ParsedName {
  std::string_view base;
  std::optional<double> param;
};

ParsedName parse_name(std::string_view name) {
  const auto open = name.find('(');
  if (open == std::string_view::npos) return {name, std::nullopt};
  if (name.back() != ')') throw InvalidArgument("malformed corpus name '" + std::string(name) + "'");
  return {name.substr(0, open), parse_double(name.substr(open + 1, name.size() - open - 2))};
}

std::string valid_list() {
  std::string out;
  for (const auto& n : corpus_names()) out += (out.empty() ? "" : ", ") + n;
  return out;
}

[[noreturn]] void unknown(std::string_view name) {
  throw InvalidArgument("unknown corpus name '" + std::string(name) + "'; valid names: " +
                        valid_list());
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"quadratic(1)",          "affine",      "cone",
          "radial_power(1.5)",     "radial_power_sub(0.5)", "double_well",
          "perturbed_concave(1)"};
}

std::vector<std::array<double, 2>> corpus_kinks(std::string_view name) {
  const auto base = parse_name(name).base;
  if (base == "cone" || base == "radial_power" || base == "radial_power_sub") return {{0.0, 0.0}};
  return {};
}

GridFunction corpus(std::string_view name, int n, Box domain) {
  if (n < 3) throw InvalidArgument("corpus grids need n >= 3");
  if (!(domain.hi > domain.lo)) throw InvalidArgument("corpus domain needs lo < hi");
  const auto [base, param] = parse_name(name);
  const double h = (domain.hi - domain.lo) / (n - 1);
  auto make = [&](auto f) { return GridFunction::sample(n, n, domain.lo, domain.lo, h, f); };

  if (base == "quadratic") {
    const double a = param.value_or(1.0);
    if (!(a >= 0.0)) throw InvalidArgument("quadratic opening must be >= 0");
    return make([a](double x, double y) { return -0.5 * a * (x * x + y * y); });
  }
  if (base == "affine") {
    if (param) unknown(name);
    return make([](double x, double y) { return 0.3 * x - 0.2 * y + 0.1; });
  }
  if (base == "cone") {
    if (param) unknown(name);
    return make([](double x, double y) { return -std::hypot(x, y); });
  }
  if (base == "radial_power") {
    const double beta = param.value_or(1.5);
    if (!(beta > 1.0 && beta < 2.0)) throw InvalidArgument("radial_power needs beta in (1, 2)");
    return make([beta](double x, double y) { return -std::pow(std::hypot(x, y), beta); });
  }
  if (base == "radial_power_sub") {
    const double sigma = param.value_or(0.5);
    if (!(sigma > 0.0 && sigma < 1.0)) {
      throw InvalidArgument("radial_power_sub needs sigma in (0, 1)");
    }
    return make([sigma](double x, double y) { return -std::pow(std::hypot(x, y), sigma); });
  }
  if (base == "double_well") {
    if (param) unknown(name);
    return make([](double x, double y) {
      const double l = (x - 0.3) * (x - 0.3) + y * y;
      const double r = (x + 0.3) * (x + 0.3) + y * y;
      return std::min(l, r);
    });
  }
  if (base == "perturbed_concave") {
    const double seed = param.value_or(1.0);
    if (!(seed >= 0.0) || seed != std::floor(seed)) {
      throw InvalidArgument("perturbed_concave seed must be a nonnegative integer");
    }
    struct Wave {
      double amp, kx, ky, phase;
    };
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    std::uniform_real_distribution<double> freq(-3.0, 3.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
    std::vector<Wave> waves(4);
    for (auto& w : waves) {
      w.kx = freq(rng);
      w.ky = freq(rng);
      w.phase = phase(rng);
      // Four waves with |Hessian| <= 1/16 each keep the sum within 1/4 of -Id.
      w.amp = 1.0 / (16.0 * (w.kx * w.kx + w.ky * w.ky + 1.0));
    }
    return make([waves](double x, double y) {
      double v = -0.5 * (x * x + y * y);
      for (const auto& w : waves) v += w.amp * std::sin(w.kx * x + w.ky * y + w.phase);
      return v;
    });
  }
  unknown(name);
}

}  // namespace heps
