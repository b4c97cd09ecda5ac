#include <sstream>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bpsphere/cli.hpp"
#include "bpsphere/densities.hpp"
#include "bpsphere/verification.hpp"

namespace py = pybind11;
using namespace bpsphere;

namespace {

// Rows of a (T, d) array are the points.
PointTuple to_tuple(const Matrix& rows) {
  PointTuple x;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) x.push_back(rows.row(i).transpose());
  return x;
}

Matrix to_rows(const PointTuple& x) {
  Matrix rows(static_cast<Eigen::Index>(x.size()), x.empty() ? 0 : x.front().size());
  for (std::size_t i = 0; i < x.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = x[i].transpose();
  return rows;
}

TheoremConfig make_config(const std::string& theorem, int n, int k, int m, int q, double r0) {
  TheoremConfig c = TheoremConfig::make(parse_theorem(theorem), n, k, m, q, r0);
  c.validate();
  return c;
}

Integrand make_integrand(const std::string& kind, double radius, double exponent, double cutoff) {
  Integrand f;
  f.kind = parse_integrand(kind);
  f.radius = radius;
  f.exponent = exponent;
  f.cutoff = cutoff;
  return f;
}

py::dict report_dict(const EstimatorReport& r) {
  py::dict d;
  d["mean"] = r.mean;
  d["stderr"] = r.std_error;
  d["samples"] = r.samples;
  d["exact"] = r.exact;
  return d;
}

py::dict verdict_dict(const ComparisonVerdict& v) {
  py::dict d;
  d["theorem"] = v.theorem;
  d["config"] = v.config;
  d["integrand"] = v.integrand;
  d["lhs"] = report_dict(v.lhs);
  d["rhs"] = report_dict(v.rhs);
  d["z_score"] = v.z_score;
  d["pass"] = v.pass;
  d["reason"] = v.reason;
  return d;
}

EstimatorOptions options(std::uint64_t seed, std::uint64_t stream_base, unsigned threads) {
  EstimatorOptions o;
  o.seed = seed;
  o.stream_base = stream_base;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Blaschke-Petkantschin formulas for spheres: densities, samplers and Monte Carlo checks";

  py::register_exception<InvalidInput>(mod, "InvalidInput", PyExc_ValueError);
  py::register_exception<DegenerateInput>(mod, "DegenerateInput", PyExc_ArithmeticError);
  py::register_exception<UnsupportedTheorem>(mod, "UnsupportedTheorem", PyExc_ValueError);

  mod.def("sphere_surface_area", &sphere_surface_area, py::arg("n"));
  mod.def("ball_volume", &ball_volume, py::arg("d"));
  mod.def("grassmannian_measure", &grassmannian_measure, py::arg("k"), py::arg("n"));
  mod.def("factorial", &factorial, py::arg("k"));
  mod.def(
      "simplex_volume", [](const Matrix& points) { return simplex_volume(to_tuple(points)); }, py::arg("points"));

  py::class_<TheoremConfig>(mod, "TheoremConfig")
      .def(py::init(&make_config), py::arg("theorem"), py::arg("n"), py::arg("k") = 1, py::arg("m") = 1,
           py::arg("q") = 0, py::arg("r0") = 0.0)
      .def_property_readonly("theorem", [](const TheoremConfig& c) { return std::string(theorem_name(c.theorem)); })
      .def_readonly("n", &TheoremConfig::n)
      .def_readonly("k", &TheoremConfig::k)
      .def_readonly("m", &TheoremConfig::m)
      .def_readonly("q", &TheoremConfig::q)
      .def_readonly("r0", &TheoremConfig::r0)
      .def_property_readonly("tuple_size", &TheoremConfig::tuple_size)
      .def_property_readonly("point_dim", &TheoremConfig::point_dim)
      .def("describe", &TheoremConfig::describe)
      .def("__repr__", [](const TheoremConfig& c) { return "<TheoremConfig " + c.describe() + ">"; });

  mod.def(
      "draw_tuple",
      [](const TheoremConfig& c, std::uint64_t seed, std::uint64_t stream) {
        Rng rng(RandomStream{seed, stream});
        return to_rows(draw_tuple(c, rng));
      },
      py::arg("config"), py::arg("seed") = 42, py::arg("stream") = 0,
      "Random tuple in general position, one point per row.");
  mod.def(
      "roundtrip_error", [](const TheoremConfig& c, const Matrix& x) { return roundtrip_error(c, to_tuple(x)); },
      py::arg("config"), py::arg("points"));
  mod.def(
      "density_at",
      [](const TheoremConfig& c, const Matrix& x) { return density(c, decompose(c, to_tuple(x))); },
      py::arg("config"), py::arg("points"), "Closed-form Jacobian weight at the parameter point of the tuple.");
  mod.def(
      "fd_density_at",
      [](const TheoremConfig& c, const Matrix& x, double h) {
        return fd_jacobian_density(c, decompose(c, to_tuple(x)), h);
      },
      py::arg("config"), py::arg("points"), py::arg("h") = 1e-5,
      "Finite-difference Jacobian determinant at the parameter point of the tuple.");
  mod.def("is_chart_free", &is_chart_free, py::arg("config"));

  mod.def(
      "estimate_lhs",
      [](const TheoremConfig& c, const std::string& integrand, std::uint64_t samples, std::uint64_t seed,
         std::uint64_t stream_base, unsigned threads, double radius, double exponent, double cutoff) {
        const Integrand f = make_integrand(integrand, radius, exponent, cutoff);
        f.validate_for(c);
        py::gil_scoped_release release;
        return estimate_lhs(f, c, samples, f.default_proposal(), options(seed, stream_base, threads));
      },
      py::arg("config"), py::arg("integrand") = "gaussian", py::arg("samples") = 100000, py::arg("seed") = 42,
      py::arg("stream_base") = 0, py::arg("threads") = 0, py::arg("radius") = 1.0, py::arg("exponent") = 1.0,
      py::arg("cutoff") = 2.0);
  mod.def(
      "estimate_rhs",
      [](const TheoremConfig& c, const std::string& integrand, std::uint64_t samples, std::uint64_t seed,
         std::uint64_t stream_base, unsigned threads, double radius, double exponent, double cutoff) {
        const Integrand f = make_integrand(integrand, radius, exponent, cutoff);
        f.validate_for(c);
        py::gil_scoped_release release;
        return estimate_rhs(c, f, samples, f.default_proposal(), options(seed, stream_base, threads));
      },
      py::arg("config"), py::arg("integrand") = "gaussian", py::arg("samples") = 100000, py::arg("seed") = 42,
      py::arg("stream_base") = 1, py::arg("threads") = 0, py::arg("radius") = 1.0, py::arg("exponent") = 1.0,
      py::arg("cutoff") = 2.0);

  py::class_<EstimatorReport>(mod, "EstimatorReport")
      .def_readonly("mean", &EstimatorReport::mean)
      .def_readonly("stderr", &EstimatorReport::std_error)
      .def_readonly("samples", &EstimatorReport::samples)
      .def_readonly("exact", &EstimatorReport::exact)
      .def("__repr__", [](const EstimatorReport& r) {
        std::ostringstream os;
        os << "<EstimatorReport mean=" << r.mean << " stderr=" << r.std_error << " samples=" << r.samples << ">";
        return os.str();
      });

  mod.def(
      "compare",
      [](const EstimatorReport& lhs, const EstimatorReport& rhs, double threshold) {
        return verdict_dict(compare(lhs, rhs, threshold));
      },
      py::arg("lhs"), py::arg("rhs"), py::arg("threshold") = 3.5);
  mod.def(
      "run_default_suite",
      [](std::uint64_t samples, std::uint64_t seed, unsigned threads) {
        SuiteOptions o;
        o.seed = seed;
        o.threads = threads;
        std::vector<ComparisonVerdict> verdicts;
        {
          py::gil_scoped_release release;
          verdicts = run_suite(default_suite(samples), o);
        }
        py::list out;
        for (const auto& v : verdicts) out.append(verdict_dict(v));
        return out;
      },
      py::arg("samples") = 1000000, py::arg("seed") = 42, py::arg("threads") = 0);

  mod.def(
      "cli",
      [](std::vector<std::string> args) {
        std::vector<const char*> argv{"bpsphere"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int status = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (status, stdout, stderr).");
}
