#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gsfock/cli.hpp"
#include "gsfock/errors.hpp"
#include "gsfock/fock_space.hpp"
#include "gsfock/multilinear.hpp"
#include "gsfock/statistics_ops.hpp"
#include "gsfock/statistics_zoo.hpp"
#include "gsfock/wick_ops.hpp"

namespace py = pybind11;
using namespace gsfock;

namespace {

std::size_t two_leg_dim(const ComplexMatrix& m) {
  const auto rows = static_cast<std::size_t>(m.rows());
  std::size_t n = 1;
  while (n * n < rows) ++n;
  if (n * n != rows || m.rows() != m.cols()) throw InputError("expected an N^2 x N^2 matrix");
  return n;
}

py::dict spec_to_dict(const StatisticsSpec& s) {
  py::dict d;
  d["name"] = s.name;
  d["dim"] = s.dim;
  d["cross"] = s.cross.matrix();
  if (s.braid)
    d["braid"] = s.braid->matrix();
  else
    d["braid"] = py::none();
  d["parameters"] = s.parameters;
  d["warnings"] = s.warnings;
  return d;
}

std::optional<BraidOperator> braid_of(const std::optional<ComplexMatrix>& m) {
  if (!m) return std::nullopt;
  return BraidOperator(two_leg_dim(*m), *m);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized-statistics Fock space toolkit";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("kron", [](const ComplexMatrix& a, const ComplexMatrix& b) { return kron(a, b); });
  m.def("place", [](const ComplexMatrix& op, std::size_t position, std::size_t arity, std::size_t dim) {
    return place(op, position, arity, dim);
  }, py::arg("op"), py::arg("position"), py::arg("arity"), py::arg("dim"));
  m.def("adjoint", [](const ComplexMatrix& a) { return adjoint(a); });
  m.def("operator_norm", [](const ComplexMatrix& a) { return operator_norm(a); });
  m.def("flip", &flip);

  m.def("tilde", [](const ComplexMatrix& t) { return tilde(CrossOperator(two_leg_dim(t), t)).matrix(); });
  m.def("untilde", [](const ComplexMatrix& t) { return untilde(TildeOperator(two_leg_dim(t), t)).matrix(); });
  m.def("check_yang_baxter", [](const ComplexMatrix& t, double tol) {
    const CheckOutcome r = check_yang_baxter(TildeOperator(two_leg_dim(t), t), tol);
    return py::make_tuple(r.residual, r.pass);
  }, py::arg("tilde"), py::arg("tol") = kDefaultTolerance);
  m.def("check_braid_relation", [](const ComplexMatrix& b, double tol) {
    const CheckOutcome r = check_braid_relation(BraidOperator(two_leg_dim(b), b), tol);
    return py::make_tuple(r.residual, r.pass);
  }, py::arg("braid"), py::arg("tol") = kDefaultTolerance);
  m.def("check_consistency", [](const ComplexMatrix& t, const std::optional<ComplexMatrix>& b, double tol) {
    const ConsistencyReport r = check_consistency(CrossOperator(two_leg_dim(t), t), braid_of(b), tol);
    py::dict d;
    d["mixed_yang_baxter"] = r.mixed_yb_residual;
    d["projector"] = r.projector_residual;
    d["pass"] = r.pass();
    return d;
  }, py::arg("cross"), py::arg("braid") = py::none(), py::arg("tol") = kDefaultTolerance);

  m.def("boltzmann", [](std::size_t dim) { return spec_to_dict(family_boltzmann(dim)); });
  m.def("boson", [](std::size_t dim) { return spec_to_dict(family_boson(dim)); });
  m.def("fermion", [](std::size_t dim) { return spec_to_dict(family_fermion(dim)); });
  m.def("quon", [](std::size_t dim, double q) { return spec_to_dict(family_quon(dim, q)); });
  m.def("color", [](std::vector<int> group, const Grading& degrees) {
    return spec_to_dict(family_color(Bicharacter::standard(AbelianGroup(std::move(group))), degrees));
  }, py::arg("group"), py::arg("degrees"));

  m.def("gram", [](const ComplexMatrix& cross, std::size_t n) {
    ScalarProduct product(tilde(CrossOperator(two_leg_dim(cross), cross)));
    return product.p(n);
  }, py::arg("cross"), py::arg("n"));
  m.def("quotient_dims", [](const ComplexMatrix& cross, const ComplexMatrix& braid, std::size_t n_max) {
    ScalarProduct product(tilde(CrossOperator(two_leg_dim(cross), cross)));
    const BraidOperator b(two_leg_dim(braid), braid);
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= n_max; ++n) dims.push_back(quotient_structure(product, b, n).quotient_dim);
    return dims;
  }, py::arg("cross"), py::arg("braid"), py::arg("n_max"));
  m.def("annihilation", [](const ComplexMatrix& cross, std::size_t i, std::size_t n) {
    return annihilation_matrix(CrossOperator(two_leg_dim(cross), cross), i, n);
  }, py::arg("cross"), py::arg("i"), py::arg("n"));
  m.def("creation", [](std::size_t dim, std::size_t i, std::size_t n) { return creation_matrix(dim, i, n); },
        py::arg("dim"), py::arg("i"), py::arg("n"));
  m.def("verify_adjointness", [](const ComplexMatrix& cross, std::size_t n_max) {
    ScalarProduct product(tilde(CrossOperator(two_leg_dim(cross), cross)));
    return verify_adjointness(product, n_max).max;
  }, py::arg("cross"), py::arg("n_max"));
  m.def("verify_crel", [](const ComplexMatrix& cross, std::size_t n_max) {
    const CrossOperator t(two_leg_dim(cross), cross);
    ScalarProduct product(tilde(t));
    return verify_crel(t, product, n_max).max;
  }, py::arg("cross"), py::arg("n_max"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
  m.def("report", [](const std::string& config_text) {
    const cli::Outcome o = cli::run_report(cli::parse_config(config_text));
    return py::make_tuple(cli::emit_json(o.report), o.exit_code);
  }, py::arg("config_text"));
}
