#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "heps/corpus.hpp"
#include "heps/curvature.hpp"
#include "heps/curve.hpp"
#include "heps/ellipticity.hpp"
#include "heps/envelope.hpp"
#include "heps/errors.hpp"
#include "heps/extremum.hpp"
#include "heps/format.hpp"
#include "heps/grid.hpp"
#include "heps/lemma.hpp"

namespace heps::cli {

namespace {

using nlohmann::ordered_json;

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values have no JSON spelling; they become null.
ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw InvalidArgument(std::string(what) + " expects two comma-separated numbers");
  }
  return {parse_double(std::string_view(text).substr(0, comma)),
          parse_double(std::string_view(text).substr(comma + 1))};
}

GridFunction load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open grid file '" + path + "'");
  return read_grid(in);
}

template <class Writer>
void write_file(const std::string& path, Writer&& w) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw OutputError("cannot open '" + path + "' for writing");
  w(f);
  f.close();
  if (!f) throw OutputError("failed writing '" + path + "'");
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

ordered_json bound_json(const Ellipticity& ell, double exponent) {
  const BoundReport r = bound_report(ell, exponent);
  ordered_json j;
  j["tau"] = r.tau;
  j["c"] = r.c;
  j["lower_opt"] = r.eps_lower_opt;
  j["lower_interp"] = r.eps_lower_interp;
  j["upper_ass"] = r.eps_upper;
  j["upper_ndim_3"] = upper_bound_ndim(3, ell);
  j["ratio"] = r.ratio;
  j["theorem_product"] = (1.0 / r.tau + 1.0) * r.eps_lower_opt;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hessian integrability exponent bounds and paraboloid lab"};
  app.name("heps");
  app.require_subcommand(1);

  // bound
  double lambda = 1.0, Lambda = 1.0, exponent = kInterpExponent;
  auto* bound = app.add_subcommand("bound", "Two-sided exponent bounds at one ellipticity");
  bound->add_option("--lambda", lambda, "Lower ellipticity constant")->required();
  bound->add_option("--Lambda", Lambda, "Upper ellipticity constant")->required();
  bound->add_option("--exponent", exponent, "Exponent of c in the interpolation point");

  // curve
  double tau_min = 0.01, tau_max = 0.99;
  int steps = 99;
  std::string curve_out, curve_format = "csv";
  auto* curve = app.add_subcommand("curve", "Sweep the bounds over tau and write CSV or SVG");
  curve->add_option("--tau-min", tau_min);
  curve->add_option("--tau-max", tau_max);
  curve->add_option("--steps", steps);
  curve->add_option("--out", curve_out, "Output path")->required();
  curve->add_option("--format", curve_format)->check(CLI::IsMember({"csv", "svg"}));

  // solve, m0
  double c = 0.0;
  int n = 2;
  auto* solve = app.add_subcommand("solve", "Maximize the critical function at fixed c");
  solve->add_option("--c", c)->required();
  solve->add_option("--n", n);
  int m0_n = 2;
  auto* m0cmd = app.add_subcommand("m0", "sup of x^n / (-ln(1-x)) on (0,1)");
  m0cmd->add_option("--n", m0_n);

  // lab
  auto* lab = app.add_subcommand("lab", "Discrete paraboloid experiments");
  lab->require_subcommand(1);
  std::string grid_path, out_path, name, domain = "-1,1", point, family = "all";
  int size = 257, count = 5;
  double a = 1.0, delta = 1.0, t0 = 2.5;
  std::optional<double> ratio;
  double lab_lambda = 1.0, lab_Lambda = 100.0;

  auto* lcorpus = lab->add_subcommand("corpus", "Sample a corpus function to a grid file");
  lcorpus->add_option("--name", name)->required();
  lcorpus->add_option("--n", size);
  lcorpus->add_option("--domain", domain, "lo,hi");
  lcorpus->add_option("--out", out_path)->required();

  auto* lenv = lab->add_subcommand("envelope", "Write the envelope of opening a as a grid file");
  lenv->add_option("--grid", grid_path)->required();
  lenv->add_option("--a", a)->required();
  lenv->add_option("--out", out_path)->required();

  auto* ltheta = lab->add_subcommand("theta", "Curvature function at the node nearest a point");
  ltheta->add_option("--grid", grid_path)->required();
  ltheta->add_option("--point", point, "x,y")->required();

  auto* ldecay = lab->add_subcommand("decay", "Fit the level-set decay of the curvature function");
  ldecay->add_option("--grid", grid_path)->required();
  ldecay->add_option("--t0", t0);
  ldecay->add_option("--count", count);
  ldecay->add_option("--ratio", ratio, "Threshold ratio; default is the intrinsic ratio");
  ldecay->add_option("--lambda", lab_lambda);
  ldecay->add_option("--Lambda", lab_Lambda);

  auto* llemma = lab->add_subcommand("lemma", "Sliding-paraboloid measure inequality");
  llemma->add_option("--grid", grid_path)->required();
  llemma->add_option("--lambda", lab_lambda)->required();
  llemma->add_option("--Lambda", lab_Lambda)->required();
  llemma->add_option("--a", a)->required();
  llemma->add_option("--delta", delta)->required();
  llemma->add_option("--family", family, "all | interior")
      ->check(CLI::IsMember({"all", "interior"}));

  std::vector<const char*> argv{"heps"};
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "heps: " << e.what() << '\n';
      return kInvalidInput;
    }

    if (*bound) {
      emit(out, bound_json(Ellipticity(lambda, Lambda), exponent));
    } else if (*curve) {
      const CurveTable table = build_curve(tau_min, tau_max, steps);
      write_file(curve_out, [&](std::ostream& f) {
        curve_format == "svg" ? write_curve_svg(f, table) : write_curve_csv(f, table);
      });
    } else if (*solve) {
      const CriticalPoint p = solve_system(c, n);
      ordered_json j;
      j["c"] = p.c;
      j["n"] = p.n;
      j["x_c"] = p.x_c;
      j["d_c"] = p.d_c;
      j["residual_value"] = p.residual_value;
      j["residual_slope"] = p.residual_slope;
      j["boundary_flag"] = p.boundary_flag;
      emit(out, j);
    } else if (*m0cmd) {
      const M0Result r = m0(m0_n);
      ordered_json j;
      j["n"] = m0_n;
      j["value"] = r.value;
      j["maximizer"] = r.maximizer;
      emit(out, j);
    } else if (*lcorpus) {
      const auto [lo, hi] = parse_pair(domain, "--domain");
      const GridFunction g = corpus(name, size, Box{lo, hi});
      write_file(out_path, [&](std::ostream& f) { write_grid(f, g); });
    } else if (*lenv) {
      const GridFunction env = a_envelope(load_grid(grid_path), a);
      write_file(out_path, [&](std::ostream& f) { write_grid(f, env); });
    } else if (*ltheta) {
      const GridFunction u = load_grid(grid_path);
      const auto [x, y] = parse_pair(point, "--point");
      const GridIndex g = u.nearest(x, y);
      const double th = theta(u, g);
      ordered_json j;
      j["i"] = g.i;
      j["j"] = g.j;
      j["x"] = u.x(g.i);
      j["y"] = u.y(g.j);
      j["theta"] = number(th);
      j["finite"] = std::isfinite(th);
      emit(out, j);
    } else if (*ldecay) {
      const GridFunction u = load_grid(grid_path);
      const double r = ratio ? *ratio : intrinsic_ratio(Ellipticity(lab_lambda, lab_Lambda));
      const DecayFit fit = decay_fit(u, t0, r, count);
      ordered_json j;
      j["ratio"] = number(r);
      j["thresholds"] = fit.thresholds;
      j["measures"] = fit.measures;
      j["used"] = fit.used;
      j["slope"] = fit.slope;
      j["intercept"] = fit.intercept;
      j["r_squared"] = fit.r_squared;
      j["exponent"] = fit.exponent();
      emit(out, j);
    } else if (*llemma) {
      const GridFunction u = load_grid(grid_path);
      const Ellipticity ell(lab_lambda, lab_Lambda);
      const LemmaCheckReport r = family == "interior"
                                     ? lemma_check(u, ell, a, delta, interior_family(u, a, delta))
                                     : lemma_check(u, ell, a, delta);
      ordered_json j;
      j["a"] = r.a;
      j["delta"] = r.delta;
      j["c"] = r.c;
      j["family"] = family;
      j["family_size"] = r.family_size;
      j["touching_count"] = r.touching_count;
      j["measure_F"] = r.measure_F;
      j["measure_new_contact"] = r.measure_new_contact;
      j["bound"] = r.bound;
      j["slack"] = r.slack;
      j["satisfied"] = r.satisfied;
      j["interior_ok"] = r.interior_ok;
      j["supersolution_fraction"] = supersolution_check(u, ell);
      emit(out, j);
    }
    return kOk;
  } catch (const GridParseError& e) {
    err << "heps: grid parse error: " << e.what() << '\n';
    return kGridParseError;
  } catch (const OutputError& e) {
    err << "heps: " << e.what() << '\n';
    return kOutputError;
  } catch (const InvalidArgument& e) {
    err << "heps: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const SolverError& e) {
    err << "heps: solver failed: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace heps::cli
