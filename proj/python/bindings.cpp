#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mutunc/entanglement.hpp"
#include "mutunc/reproduce.hpp"
#include "mutunc/steering.hpp"
#include "mutunc/uncertainty.hpp"

namespace py = pybind11;
using namespace mutunc;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw DimensionError("expected a 2-d array");
  const auto v = a.unchecked<2>();
  ComplexMatrix m(static_cast<std::size_t>(v.shape(0)), static_cast<std::size_t>(v.shape(1)));
  for (py::ssize_t i = 0; i < v.shape(0); ++i)
    for (py::ssize_t j = 0; j < v.shape(1); ++j) m(i, j) = v(i, j);
  return m;
}

CArray to_array(const ComplexMatrix& m) {
  CArray out({m.rows(), m.cols()});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v(i, j) = m(i, j);
  return out;
}

py::array_t<double> to_array(const RealMatrix& m) {
  py::array_t<double> out({m.rows(), m.cols()});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v(i, j) = m(i, j);
  return out;
}

DensityMatrix state(const CArray& rho, std::optional<std::vector<std::size_t>> dims) {
  const auto m = to_matrix(rho);
  return make_density_matrix(m, dims ? *dims : std::vector<std::size_t>{m.rows()});
}

std::vector<Observable> observables(const std::vector<CArray>& obs) {
  std::vector<Observable> out;
  for (const auto& o : obs) out.push_back(make_observable(to_matrix(o)));
  return out;
}

py::dict verdict_dict(const DetectionVerdict& v) {
  py::dict d;
  d["criterion"] = v.criterion;
  d["statistic"] = v.statistic;
  d["threshold"] = v.threshold;
  d["verdict"] = to_string(v.verdict);
  d["direction"] = to_string(v.direction);
  return d;
}

DetectionVerdict detect(const DensityMatrix& rho, const std::string& criterion) {
  if (criterion == "ppt") return ppt_criterion(rho);
  if (criterion == "kyfan-condf") return kyfan_criterion(rho, KyFanCriterion::condF);
  if (criterion == "kyfan-dsep") return kyfan_criterion(rho, KyFanCriterion::dsep);
  if (criterion == "condvar") {
    const auto basis = gell_mann_basis(local_dimension(rho));
    const auto sets = svd_aligned_observable_sets(pairwise_correlation_tensor(rho, basis, 0, 1), basis);
    return conditional_variance_witness(rho, sets.a, sets.b);
  }
  if (criterion == "nqubit-product") return nqubit_product_test(rho, default_product_test_vectors(rho)).verdict;
  throw ValidationError("unknown criterion: " + criterion);
}

}  // namespace

PYBIND11_MODULE(_mutunc, m) {
  m.doc() = "Mutual and conditional uncertainty of quantum observables";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

  m.def(
      "std_dev", [](const CArray& rho, const CArray& a) { return std_dev(state(rho, {}), make_observable(to_matrix(a))); },
      py::arg("rho"), py::arg("a"));
  m.def(
      "covariance",
      [](const CArray& rho, const CArray& a, const CArray& b) {
        return covariance(state(rho, {}), make_observable(to_matrix(a)), make_observable(to_matrix(b)));
      },
      py::arg("rho"), py::arg("a"), py::arg("b"));
  m.def(
      "mutual_uncertainty",
      [](const CArray& rho, const std::vector<CArray>& obs) {
        return mutual_uncertainty(state(rho, {}), observables(obs));
      },
      py::arg("rho"), py::arg("observables"));
  m.def(
      "conditional_uncertainty",
      [](const CArray& rho, const CArray& a, const CArray& b) {
        return conditional_uncertainty(state(rho, {}), make_observable(to_matrix(a)), make_observable(to_matrix(b)));
      },
      py::arg("rho"), py::arg("a"), py::arg("b"));
  m.def(
      "conditional_variance",
      [](const CArray& rho, const CArray& a, const CArray& b) {
        return conditional_variance(state(rho, {}), make_observable(to_matrix(a)), make_observable(to_matrix(b)));
      },
      py::arg("rho"), py::arg("a"), py::arg("b"));

  m.def(
      "named_state",
      [](const std::string& id, const std::map<std::string, double>& params) {
        const auto s = make_named_state(id, params);
        return py::make_tuple(to_array(s.state.matrix()), s.state.subsystem_dims());
      },
      py::arg("id"), py::arg("params") = std::map<std::string, double>{},
      "Returns (matrix, subsystem dims) for a named state.");
  m.def(
      "partial_trace",
      [](const CArray& rho, std::vector<std::size_t> dims, std::vector<std::size_t> keep) {
        return to_array(partial_trace(state(rho, dims), keep).matrix());
      },
      py::arg("rho"), py::arg("dims"), py::arg("keep"));

  m.def(
      "bloch_vector",
      [](const CArray& rho, std::optional<std::vector<std::size_t>> dims, std::size_t site) {
        const auto s = state(rho, dims);
        return bloch_vector(s, gell_mann_basis(s.subsystem_dims()[site]), site);
      },
      py::arg("rho"), py::arg("dims") = py::none(), py::arg("site") = 0);
  m.def(
      "correlation_tensor",
      [](const CArray& rho, std::vector<std::size_t> dims) {
        const auto s = state(rho, dims);
        return to_array(pairwise_correlation_tensor(s, gell_mann_basis(local_dimension(s)), 0, 1));
      },
      py::arg("rho"), py::arg("dims"));
  m.def(
      "ky_fan_norm",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& t) {
        if (t.ndim() != 2) throw DimensionError("expected a 2-d array");
        RealMatrix r(static_cast<std::size_t>(t.shape(0)), static_cast<std::size_t>(t.shape(1)));
        const auto v = t.unchecked<2>();
        for (py::ssize_t i = 0; i < v.shape(0); ++i)
          for (py::ssize_t j = 0; j < v.shape(1); ++j) r(i, j) = v(i, j);
        return ky_fan_norm(r);
      },
      py::arg("t"));

  m.def(
      "detect",
      [](const CArray& rho, std::vector<std::size_t> dims, const std::string& criterion) {
        return verdict_dict(detect(state(rho, dims), criterion));
      },
      py::arg("rho"), py::arg("dims"), py::arg("criterion"));

  m.def("werner_minf", &werner_minf_analytic, py::arg("p"));
  m.def(
      "pssv_closed_forms",
      [](double alpha) {
        const auto c = pssv_closed_forms(alpha);
        py::dict d;
        d["eta_plus"] = c.eta_plus;
        d["eta_minus"] = c.eta_minus;
        d["m_inf"] = c.m_inf_cv;
        d["reid_product"] = c.reid_product;
        return d;
      },
      py::arg("alpha"));
  m.def("reid_threshold", [] { return reid_threshold_solver(); });

  m.def(
      "reproduce",
      [](const std::string& target, std::uint64_t seed) {
        py::list out;
        for (const auto& r : reproduce(target, seed).rows) {
          py::dict d;
          d["target"] = r.target;
          d["quantity"] = r.quantity;
          d["reference"] = r.reference;
          d["computed"] = r.computed;
          d["tolerance"] = r.tolerance;
          d["check"] = to_string(r.check);
          d["pass"] = r.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("target") = "all", py::arg("seed") = 2024);
}
