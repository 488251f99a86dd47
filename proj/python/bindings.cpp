#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bondzeta/covering.hpp"
#include "bondzeta/error.hpp"
#include "bondzeta/euler.hpp"
#include "bondzeta/instance.hpp"
#include "bondzeta/lfunction.hpp"
#include "bondzeta/scattering.hpp"

namespace py = pybind11;
using namespace bondzeta;

namespace {

py::array_t<cplx> to_numpy(const ComplexMatrix& m) {
  py::array_t<cplx> out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
  return out;
}

const FiniteGroup& group_of(const Instance& inst) {
  if (!inst.has_covering()) throw InputError("group/voltages: the instance has no covering data");
  return *inst.group;
}

std::vector<cplx> samples_or_default(const Instance& inst, std::optional<std::vector<cplx>> given,
                                     std::size_t count, std::uint64_t seed) {
  if (given) return *given;
  return sample_lambdas(inst.graph, inst.weights, count, seed);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bond scattering matrices and their zeta functions";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<CoveringError>(m, "CoveringError", base.ptr());
  py::register_exception<RepresentationError>(m, "RepresentationError", base.ptr());

  py::class_<CheckRecord>(m, "CheckRecord")
      .def_readonly("name", &CheckRecord::name)
      .def_readonly("lhs", &CheckRecord::lhs)
      .def_readonly("rhs", &CheckRecord::rhs)
      .def_readonly("error", &CheckRecord::error)
      .def_readonly("passed", &CheckRecord::pass)
      .def_readonly("note", &CheckRecord::note);

  py::class_<Report>(m, "Report")
      .def_readonly("name", &Report::name)
      .def_readonly("tolerance", &Report::tolerance)
      .def_readonly("records", &Report::records)
      .def_readonly("warnings", &Report::warnings)
      .def_property_readonly("passed", &Report::pass)
      .def_property_readonly("max_error", &Report::max_error)
      .def("__bool__", &Report::pass)
      .def("__repr__", [](const Report& r) {
        return "<Report " + r.name + (r.pass() ? " pass" : " FAIL") + ">";
      });

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("num_vertices", [](const Instance& i) { return i.graph.num_vertices(); })
      .def_property_readonly("num_edges", [](const Instance& i) { return i.graph.num_edges(); })
      .def_property_readonly("vertex_names", [](const Instance& i) { return i.graph.vertex_names(); })
      .def_readonly("edge_ids", &Instance::edge_ids)
      .def_property_readonly("has_covering", &Instance::has_covering)
      .def_property_readonly("group_order",
                             [](const Instance& i) -> std::optional<std::size_t> {
                               if (!i.group) return std::nullopt;
                               return i.group->order();
                             })
      .def_property_readonly("rep_names",
                             [](const Instance& i) {
                               std::vector<std::string> names;
                               for (const auto& r : i.irreps().reps) names.push_back(r.name);
                               return names;
                             })
      .def("to_json", &emit_instance)
      .def("digest", &instance_digest)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; });

  m.def("load_instance", &load_instance, py::arg("path"));
  m.def("parse_instance", &parse_instance, py::arg("text"));
  m.def("k3_instance", &k3_instance, py::arg("a") = 0.0, py::arg("b") = 1.0, py::arg("alpha") = 0.0);
  m.def("cover_instance", &cover_instance, py::arg("base"));
  m.def("parse_complex", &parse_complex, py::arg("text"));
  m.def("sample_lambdas",
        [](const Instance& i, std::size_t count, std::uint64_t seed) {
          return sample_lambdas(i.graph, i.weights, count, seed);
        },
        py::arg("instance"), py::arg("count") = 32, py::arg("seed") = 42);

  m.def("hermitian_matrix", [](const Instance& i) { return to_numpy(assemble_H(i.graph, i.weights)); },
        py::arg("instance"));
  m.def("bond_scattering_matrix",
        [](const Instance& i, cplx lambda) {
          return to_numpy(bond_scattering_matrix(i.graph, i.weights, lambda).u);
        },
        py::arg("instance"), py::arg("lam"));
  m.def("secular_det", [](const Instance& i, cplx lambda) { return secular_det(i.graph, i.weights, lambda); },
        py::arg("instance"), py::arg("lam"));
  m.def("vertex_determinant",
        [](const Instance& i, cplx lambda) { return theorem4_rhs(i.graph, i.weights, lambda); },
        py::arg("instance"), py::arg("lam"),
        "2^m (-1)^n det(lambda I - H) / prod_u (H_uu - lambda - i Gamma_u)");
  m.def("l_function_reciprocal",
        [](const Instance& i, const std::string& rep, cplx lambda) {
          group_of(i);
          const IrrepSet irreps = i.irreps();
          return l_function_reciprocal(i.graph, i.weights, *i.voltages, irreps.find(rep), lambda);
        },
        py::arg("instance"), py::arg("rep"), py::arg("lam"));
  m.def("euler_coefficients",
        [](const Instance& i, cplx lambda, std::size_t n) {
          const PolyCoeffs secular = secular_poly(i.graph, i.weights, lambda, n);
          const PolyCoeffs euler = truncated_euler_product(i.graph, i.weights, lambda, n);
          std::vector<cplx> a, b;
          for (std::size_t k = 0; k <= n; ++k) {
            a.push_back(secular[k]);
            b.push_back(euler[k]);
          }
          return std::pair{a, b};
        },
        py::arg("instance"), py::arg("lam"), py::arg("max_len") = 10,
        "coefficients of det(I - uU) and of the truncated Euler product");
  m.def("spectrum",
        [](const Instance& i, double tol) {
          SpectrumComparison s = compare_spectra(i.graph, i.weights, tol);
          py::dict d;
          d["jacobi"] = s.jacobi;
          d["secular"] = s.secular;
          d["max_deviation"] = s.max_deviation;
          d["report"] = s.report;
          return d;
        },
        py::arg("instance"), py::arg("tol") = 1e-6);

  m.def("verify_secular",
        [](const Instance& i, std::optional<std::vector<cplx>> lambdas, std::size_t count,
           std::uint64_t seed, double tol) {
          const auto s = samples_or_default(i, lambdas, count, seed);
          return verify_theorem4(i.graph, i.weights, s, tol);
        },
        py::arg("instance"), py::arg("lambdas") = py::none(), py::arg("count") = 32,
        py::arg("seed") = 42, py::arg("tol") = 1e-9);
  m.def("verify_euler",
        [](const Instance& i, cplx lambda, std::size_t n, double tol) {
          return verify_theorem5(i.graph, i.weights, lambda, n, tol);
        },
        py::arg("instance"), py::arg("lam"), py::arg("max_len") = 10, py::arg("tol") = 1e-8);
  m.def("verify_cover",
        [](const Instance& i, cplx lambda, double tol) {
          const IrrepSet irreps = i.irreps();
          return verify_theorem6(i.graph, i.weights, group_of(i), *i.voltages, irreps, lambda, tol);
        },
        py::arg("instance"), py::arg("lam"), py::arg("tol") = 1e-8);
  m.def("verify_l_function",
        [](const Instance& i, const std::string& rep, std::optional<std::vector<cplx>> lambdas,
           std::size_t count, std::uint64_t seed, double tol) {
          const FiniteGroup& grp = group_of(i);
          const IrrepSet irreps = i.irreps();
          const auto s = samples_or_default(i, lambdas, count, seed);
          return verify_theorem7(i.graph, i.weights, grp, *i.voltages, irreps.find(rep), s, tol);
        },
        py::arg("instance"), py::arg("rep"), py::arg("lambdas") = py::none(),
        py::arg("count") = 16, py::arg("seed") = 42, py::arg("tol") = 1e-9);
  m.def("verify_product",
        [](const Instance& i, cplx lambda, double tol) {
          const IrrepSet irreps = i.irreps();
          return verify_corollary1(i.graph, i.weights, group_of(i), *i.voltages, irreps, lambda, tol);
        },
        py::arg("instance"), py::arg("lam"), py::arg("tol") = 1e-8);
  m.def("verify_unitarity",
        [](const Instance& i, std::vector<double> lambdas, double tol) {
          return verify_unitarity(i.graph, i.weights, lambdas, tol);
        },
        py::arg("instance"), py::arg("lambdas"), py::arg("tol") = 1e-10);
  m.def("verify_proof_identities",
        [](const Instance& i, cplx lambda, double tol) {
          return verify_proof_identities(i.graph, i.weights, lambda, tol);
        },
        py::arg("instance"), py::arg("lam"), py::arg("tol") = 1e-10);
}
