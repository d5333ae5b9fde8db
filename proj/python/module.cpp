#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "heps/corpus.hpp"
#include "heps/curvature.hpp"
#include "heps/curve.hpp"
#include "heps/ellipticity.hpp"
#include "heps/envelope.hpp"
#include "heps/errors.hpp"
#include "heps/extremum.hpp"
#include "heps/grid.hpp"
#include "heps/lemma.hpp"

namespace py = pybind11;
using namespace heps;

namespace {

GridFunction grid_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> v,
                             double xmin, double ymin, double h) {
  if (v.ndim() != 2) throw InvalidArgument("values must be a 2-D array indexed [j, i]");
  const auto ny = static_cast<int>(v.shape(0));
  const auto nx = static_cast<int>(v.shape(1));
  std::vector<double> vals(v.data(), v.data() + v.size());
  return GridFunction(nx, ny, xmin, ymin, h, std::move(vals));
}

py::array_t<double> grid_values(const GridFunction& g) {
  py::array_t<double> out({g.ny(), g.nx()});
  std::copy(g.values().begin(), g.values().end(), out.mutable_data());
  return out;
}

py::array_t<bool> mask_array(const ContactSet& cs) {
  py::array_t<bool> out({cs.ny, cs.nx});
  bool* p = out.mutable_data();
  for (std::size_t k = 0; k < cs.mask.size(); ++k) p[k] = cs.mask[k];
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exponent bounds for planar Pucci supersolutions and a discrete paraboloid lab";

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<GridParseError>(m, "GridParseError", PyExc_ValueError);

  py::class_<Ellipticity>(m, "Ellipticity")
      .def(py::init<double, double>(), py::arg("lam"), py::arg("Lam"))
      .def_static("from_ratio", &Ellipticity::from_ratio, py::arg("tau"))
      .def_property_readonly("lam", &Ellipticity::lambda)
      .def_property_readonly("Lam", &Ellipticity::Lambda)
      .def_property_readonly("tau", &Ellipticity::tau)
      .def("__repr__", [](const Ellipticity& e) {
        return "Ellipticity(" + std::to_string(e.lambda()) + ", " + std::to_string(e.Lambda()) + ")";
      });

  m.def("c_of", &c_of, py::arg("ell"));
  m.def("upper_bound_ass", &upper_bound_ass, py::arg("ell"));
  m.def("upper_bound_ndim", &upper_bound_ndim, py::arg("n"), py::arg("ell"));
  m.def(
      "pucci_minus",
      [](double a11, double a12, double a22, const Ellipticity& ell) {
        return pucci_minus(SymMatrix2{a11, a12, a22}, ell);
      },
      py::arg("a11"), py::arg("a12"), py::arg("a22"), py::arg("ell"));
  m.def(
      "pucci_plus",
      [](double a11, double a12, double a22, const Ellipticity& ell) {
        return pucci_plus(SymMatrix2{a11, a12, a22}, ell);
      },
      py::arg("a11"), py::arg("a12"), py::arg("a22"), py::arg("ell"));

  m.def("critical_function", &critical_function, py::arg("x"), py::arg("c"), py::arg("n") = 2);
  m.def(
      "m0",
      [](int n) {
        const M0Result r = m0(n);
        return py::make_tuple(r.value, r.maximizer);
      },
      py::arg("n") = 2, "Returns (value, maximizer).");

  py::class_<CriticalPoint>(m, "CriticalPoint")
      .def_readonly("c", &CriticalPoint::c)
      .def_readonly("n", &CriticalPoint::n)
      .def_readonly("x_c", &CriticalPoint::x_c)
      .def_readonly("d_c", &CriticalPoint::d_c)
      .def_readonly("residual_value", &CriticalPoint::residual_value)
      .def_readonly("residual_slope", &CriticalPoint::residual_slope)
      .def_readonly("boundary_flag", &CriticalPoint::boundary_flag);
  m.def("solve_system", &solve_system, py::arg("c"), py::arg("n") = 2);
  m.def("x_c_closed_form", &x_c_closed_form, py::arg("d"), py::arg("c"));
  m.def("psi", &psi, py::arg("c"));
  m.def("lower_bound_opt", &lower_bound_opt, py::arg("ell"));
  m.def("lower_bound_interp", &lower_bound_interp, py::arg("ell"),
        py::arg("exponent") = kInterpExponent);
  m.def("intrinsic_ratio", &intrinsic_ratio, py::arg("ell"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("tau", &BoundReport::tau)
      .def_readonly("c", &BoundReport::c)
      .def_readonly("lower_opt", &BoundReport::eps_lower_opt)
      .def_readonly("lower_interp", &BoundReport::eps_lower_interp)
      .def_readonly("upper", &BoundReport::eps_upper)
      .def_readonly("ratio", &BoundReport::ratio);
  m.def("bound_report", &bound_report, py::arg("ell"), py::arg("exponent") = kInterpExponent);

  m.def(
      "curve",
      [](double tau_min, double tau_max, int steps) {
        const CurveTable t = build_curve(tau_min, tau_max, steps);
        std::vector<py::dict> rows;
        for (const CurveRow& r : t.rows) {
          rows.push_back(py::dict(py::arg("tau") = r.tau, py::arg("c") = r.c,
                                  py::arg("lower_opt") = r.lower_opt,
                                  py::arg("lower_interp") = r.lower_interp,
                                  py::arg("upper") = r.upper, py::arg("ratio") = r.ratio));
        }
        return rows;
      },
      py::arg("tau_min"), py::arg("tau_max"), py::arg("steps"));

  py::class_<GridFunction>(m, "GridFunction")
      .def(py::init(&grid_from_array), py::arg("values"), py::arg("xmin"), py::arg("ymin"),
           py::arg("h"))
      .def_property_readonly("nx", &GridFunction::nx)
      .def_property_readonly("ny", &GridFunction::ny)
      .def_property_readonly("xmin", &GridFunction::xmin)
      .def_property_readonly("ymin", &GridFunction::ymin)
      .def_property_readonly("h", &GridFunction::h)
      .def_property_readonly("values", &grid_values)
      .def("nearest", [](const GridFunction& g, double x, double y) {
        const GridIndex n = g.nearest(x, y);
        return py::make_tuple(n.i, n.j);
      })
      .def("to_text", [](const GridFunction& g) {
        std::ostringstream s;
        write_grid(s, g);
        return s.str();
      })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream s(text);
        return read_grid(s);
      });

  m.def(
      "corpus",
      [](const std::string& name, int n, double lo, double hi) {
        return corpus(name, n, Box{lo, hi});
      },
      py::arg("name"), py::arg("n"), py::arg("lo") = -1.0, py::arg("hi") = 1.0);
  m.def("corpus_names", &corpus_names);
  m.def("convex_envelope", &convex_envelope, py::arg("v"));
  m.def("a_envelope", &a_envelope, py::arg("u"), py::arg("a"));
  m.def(
      "contact_set", [](const GridFunction& u, double a) { return mask_array(contact_set(u, a)); },
      py::arg("u"), py::arg("a"), "Boolean mask indexed [j, i].");
  m.def(
      "theta", [](const GridFunction& u, int i, int j) { return theta(u, GridIndex{i, j}); },
      py::arg("u"), py::arg("i"), py::arg("j"));
  m.def("level_measure", &level_measure, py::arg("u"), py::arg("t"));
  m.def("inf_convolution", &inf_convolution, py::arg("u"), py::arg("m"));
  m.def(
      "supersolution_check",
      [](const GridFunction& u, const Ellipticity& ell) { return supersolution_check(u, ell); },
      py::arg("u"), py::arg("ell"));

  py::class_<DecayFit>(m, "DecayFit")
      .def_readonly("thresholds", &DecayFit::thresholds)
      .def_readonly("measures", &DecayFit::measures)
      .def_readonly("used", &DecayFit::used)
      .def_readonly("slope", &DecayFit::slope)
      .def_readonly("intercept", &DecayFit::intercept)
      .def_readonly("r_squared", &DecayFit::r_squared)
      .def_property_readonly("exponent", &DecayFit::exponent);
  m.def("decay_fit",
        py::overload_cast<const GridFunction&, double, double, int>(&decay_fit), py::arg("u"),
        py::arg("t0"), py::arg("ratio"), py::arg("count"));

  py::class_<LemmaCheckReport>(m, "LemmaCheckReport")
      .def_readonly("a", &LemmaCheckReport::a)
      .def_readonly("delta", &LemmaCheckReport::delta)
      .def_readonly("c", &LemmaCheckReport::c)
      .def_readonly("family_size", &LemmaCheckReport::family_size)
      .def_readonly("touching_count", &LemmaCheckReport::touching_count)
      .def_readonly("measure_F", &LemmaCheckReport::measure_F)
      .def_readonly("measure_new_contact", &LemmaCheckReport::measure_new_contact)
      .def_readonly("bound", &LemmaCheckReport::bound)
      .def_readonly("slack", &LemmaCheckReport::slack)
      .def_readonly("satisfied", &LemmaCheckReport::satisfied)
      .def_readonly("interior_ok", &LemmaCheckReport::interior_ok);
  m.def(
      "lemma_check",
      [](const GridFunction& u, const Ellipticity& ell, double a, double delta, bool interior) {
        if (interior) return lemma_check(u, ell, a, delta, interior_family(u, a, delta));
        return lemma_check(u, ell, a, delta);
      },
      py::arg("u"), py::arg("ell"), py::arg("a"), py::arg("delta"), py::arg("interior") = false,
      "With interior=True, F keeps only nodes whose touching point stays 2h inside the box.");
}
