#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "janowski/error.hpp"
#include "janowski/implication_trial.hpp"
#include "janowski/moebius_geometry.hpp"
#include "janowski/power_envelope.hpp"
#include "janowski/radius_solver.hpp"
#include "janowski/sector_calculus.hpp"
#include "janowski/special_eval.hpp"

namespace py = pybind11;
using namespace janowski;

namespace {

py::tuple pair(const Interval& i) { return py::make_tuple(i.lo, i.hi); }

JanowskiParams params(Complex A, Complex B, double alpha, Complex gamma) { return {A, B, alpha, gamma}; }

}  // namespace

PYBIND11_MODULE(_janowski, m) {
  m.doc() = "Janowski-type domains: geometry, envelope bounds, radii and special functions";

  static PyObject* error_type =
      py::exception<Error>(m, "JanowskiError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("excess") = e.excess();
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def(
      "image_disk",
      [](Complex A, Complex B, double r) {
        const DiskGeometry g = image_disk(JanowskiParams(A, B), r);
        py::dict d;
        d["kind"] = to_string(g.kind);
        d["tau"] = g.tau;
        d["zeta"] = g.zeta;
        if (g.kind == RegionKind::Disk) {
          d["center"] = g.center;
          d["radius"] = g.radius;
        } else {
          d["boundary_point"] = g.boundary_point;
          d["normal"] = g.normal;
        }
        return d;
      },
      py::arg("A"), py::arg("B"), py::arg("r") = 1.0);

  m.def(
      "eval_powered",
      [](Complex A, Complex B, double alpha, Complex gamma, Complex z) {
        return eval_powered(params(A, B, alpha, gamma), z);
      },
      py::arg("A"), py::arg("B"), py::arg("alpha"), py::arg("gamma"), py::arg("z"));

  m.def(
      "envelope_bounds",
      [](Complex A, Complex B, double alpha, Complex gamma, double r) {
        const BoundReport b = envelope_bounds(params(A, B, alpha, gamma), r);
        py::dict d;
        d["arg"] = pair(b.arg);
        d["modulus"] = pair(b.modulus);
        d["re"] = pair(b.re);
        d["im"] = pair(b.im);
        d["t1"] = b.critical.t1;
        d["t2"] = b.critical.t2;
        d["fallback_used"] = b.fallback_used;
        if (b.shifted) {
          d["shifted_re"] = pair(b.shifted->re);
          d["shifted_im"] = pair(b.shifted->im);
          d["shifted_arg"] = pair(b.shifted->arg_shifted);
        }
        return d;
      },
      py::arg("A"), py::arg("B"), py::arg("alpha") = 1.0, py::arg("gamma") = Complex(0.0),
      py::arg("r") = 1.0);

  m.def("alpha_star", &alpha_star);
  m.def(
      "starlike_radius",
      [](double A, double B, double beta) {
        const StarlikeRadius s = starlike_radius(A, B, beta);
        py::dict d;
        d["r0"] = s.r0;
        d["r0_bisection"] = s.r0_bisection;
        d["theta"] = s.theta;
        d["residual"] = s.residual;
        return d;
      },
      py::arg("A"), py::arg("B"), py::arg("beta"));
  m.def(
      "subordination_radius",
      [](Complex A, Complex B, double alpha, Complex gamma, Complex C, Complex D, double beta,
         Complex delta) {
        return subordination_radius({params(C, D, beta, delta), params(A, B, alpha, gamma)}).radius;
      },
      py::arg("A"), py::arg("B"), py::arg("alpha") = 1.0, py::arg("gamma") = Complex(0.0), py::arg("C"),
      py::arg("D"), py::arg("beta") = 1.0, py::arg("delta") = Complex(0.0));
  m.def(
      "class_inclusion",
      [](Complex A, Complex B, double alpha, Complex C, Complex D, double beta) {
        return class_inclusion(A, B, alpha, C, D, beta).included;
      },
      py::arg("A"), py::arg("B"), py::arg("alpha"), py::arg("C"), py::arg("D"), py::arg("beta"));

  m.def("macgregor_gamma", &macgregor_gamma, py::arg("beta"));
  m.def("K_function", &K_function, py::arg("A"), py::arg("b"), py::arg("alpha"), py::arg("z"));
  m.def("K_quadrature", &K_quadrature, py::arg("A"), py::arg("b"), py::arg("alpha"), py::arg("z"));
  m.def(
      "hyper_3f2",
      [](std::array<double, 3> upper, std::array<double, 2> lower, double x, double tol) {
        return hyper_3f2(upper, lower, x, tol).value;
      },
      py::arg("upper"), py::arg("lower"), py::arg("x"), py::arg("tol") = 1e-15);
  m.def("sector_image",
        [](double m_, double alpha) {
          const Sector s = sector_image(m_, alpha);
          return py::make_tuple(s.lo, s.hi);
        },
        py::arg("m"), py::arg("alpha"));
  m.def("reciprocal_order_sector", &reciprocal_order_sector, py::arg("alpha"), py::arg("beta"));

  m.def("theorems", [] {
    std::vector<std::string> names;
    for (TheoremId id : all_theorems()) names.emplace_back(to_string(id));
    return names;
  });
  m.def(
      "implication_trial",
      [](const std::string& theorem, std::uint64_t seed, std::size_t samples) {
        TrialOptions options;
        options.samples = samples;
        TrialReport r;
        {
          py::gil_scoped_release release;
          r = implication_trial(theorem_from_string(theorem), seed, options);
        }
        py::dict d;
        d["theorem"] = std::string(to_string(r.theorem));
        d["seed"] = r.seed;
        d["mode"] = std::string(to_string(r.mode));
        d["hypothesis_holds"] = r.hypothesis_holds;
        d["conclusion_holds"] = r.conclusion_holds;
        d["worst_margin"] = r.worst_margin;
        d["violation"] = r.violation();
        return d;
      },
      py::arg("theorem"), py::arg("seed"), py::arg("samples") = 4096);
}
