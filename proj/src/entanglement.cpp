#include "mutunc/entanglement.hpp"

#include <cmath>

#include "mutunc/uncertainty.hpp"

namespace mutunc {

namespace {

constexpr double kUnitTolerance = 1e-10;
constexpr double kOrthogonalityTolerance = 1e-10;

std::size_t require_bipartite_equal(const DensityMatrix& rho) {
  const auto& dims = rho.subsystem_dims();
  if (dims.size() != 2) throw DimensionError("criterion needs a bipartite state");
  if (dims[0] != dims[1]) throw DimensionError("criterion needs equal local dimensions");
  return dims[0];
}

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 to_vec3(const RealVector& v) { return {v.at(0), v.at(1), v.at(2)}; }

void require_unit(const Vec3& v, const char* what) {
  if (std::abs(norm3(v) - 1.0) > kUnitTolerance) throw ValidationError(std::string(what) + " must be a unit vector");
}

void require_orthogonal(const Vec3& a, const Vec3& r, std::size_t site) {
  if (std::abs(dot3(a, r)) > kOrthogonalityTolerance) {
    throw ValidationError("measurement vector for qubit " + std::to_string(site) +
                          " is not orthogonal to its Bloch vector");
  }
}

double bilinear(const Vec3& a, const RealMatrix& t, const Vec3& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) s += a[k] * t(k, l) * b[l];
  return s;
}

}  // namespace

DetectionVerdict DetectionVerdict::decide(std::string criterion, double statistic, double threshold,
                                          Violation direction, double margin) {
  bool hit = false;
  switch (direction) {
    case Violation::Above:
      hit = statistic > threshold + margin;
      break;
    case Violation::Below:
      hit = statistic < threshold - margin;
      break;
    case Violation::Deviates:
      hit = std::abs(statistic - threshold) > margin;
      break;
  }
  return {std::move(criterion), statistic, threshold, hit ? Verdict::Entangled : Verdict::Inconclusive, direction};
}

std::string to_string(Verdict v) { return v == Verdict::Entangled ? "Entangled" : "Inconclusive"; }

std::string to_string(Violation v) {
  switch (v) {
    case Violation::Above:
      return "above";
    case Violation::Below:
      return "below";
    case Violation::Deviates:
      return "deviates";
  }
  return "unknown";
}

DetectionVerdict conditional_variance_witness(const DensityMatrix& rho, const OrthogonalObservableSet& set_a,
                                              const OrthogonalObservableSet& set_b) {
  const std::size_t d = require_bipartite_equal(rho);
  if (set_a.dim() != d || set_b.dim() != d || set_a.size() != set_b.size()) {
    throw DimensionError("observable sets do not match the local dimension");
  }
  const std::vector<std::size_t> dims{d, d};
  double total = 0.0;
  for (std::size_t i = 0; i < set_a.size(); ++i) {
    const Observable a = embed(set_a.observables()[i], 0, dims);
    const Observable b = embed(set_b.observables()[i], 1, dims);
    total += conditional_variance(rho, a, b);
  }
  return DetectionVerdict::decide("condvar", total, 2.0 * static_cast<double>(d - 1), Violation::Below);
}

double dsep_kyfan_statistic(const RealMatrix& t, std::size_t d) {
  const auto dd = static_cast<double>(d);
  return 0.25 * dd * dd * ky_fan_norm(t);
}

DetectionVerdict kyfan_criterion(const DensityMatrix& rho, KyFanCriterion which) {
  const std::size_t d = require_bipartite_equal(rho);
  return kyfan_criterion(rho, which, gell_mann_basis(d));
}

DetectionVerdict kyfan_criterion(const DensityMatrix& rho, KyFanCriterion which, const GeneratorBasis& basis) {
  const std::size_t d = require_bipartite_equal(rho);
  const RealMatrix t = pairwise_correlation_tensor(rho, basis, 0, 1);
  const auto dd = static_cast<double>(d);
  if (which == KyFanCriterion::dsep) {
    return DetectionVerdict::decide("kyfan-dsep", dsep_kyfan_statistic(t, d), dd * (dd - 1.0) / 2.0,
                                    Violation::Above);
  }
  const double r1 = norm(bloch_vector(rho, basis, 0));
  const double r2 = norm(bloch_vector(rho, basis, 1));
  const double threshold = 2.0 * (dd - 1.0) / dd - 0.5 * (r1 - r2) * (r1 - r2);
  return DetectionVerdict::decide("kyfan-condf", ky_fan_norm(t), threshold, Violation::Above);
}

DetectionVerdict ppt_criterion(const DensityMatrix& rho) {
  if (rho.subsystems() != 2) throw DimensionError("PPT criterion needs a bipartite state");
  const double lowest = min_eigenvalue(partial_transpose(rho, 1));
  return DetectionVerdict::decide("ppt", lowest, 0.0, Violation::Below);
}

bool is_pure(const DensityMatrix& rho) { return rho.purity() >= 1.0 - kPurityTolerance; }

double pure_two_qubit_mutual(const DensityMatrix& psi, const Vec3& a, const Vec3& b) {
  if (psi.subsystem_dims() != std::vector<std::size_t>{2, 2}) throw DimensionError("expected a two-qubit state");
  if (!is_pure(psi)) throw ValidationError("state is not pure");
  require_unit(a, "a");
  require_unit(b, "b");
  const auto basis = gell_mann_basis(2);
  require_orthogonal(a, to_vec3(bloch_vector(psi, basis, 0)), 0);
  require_orthogonal(b, to_vec3(bloch_vector(psi, basis, 1)), 1);
  const RealMatrix t = pairwise_correlation_tensor(psi, basis, 0, 1);
  const double radicand = std::max(0.0, 2.0 + 2.0 * bilinear(a, t, b));
  return 2.0 - std::sqrt(radicand);
}

double concurrence_from_mutual(double m, double t) {
  if (t == 0.0 || !std::isfinite(t)) throw ValidationError("concurrence estimator undefined for t = 0");
  return (2.0 + m * (m - 4.0)) / (2.0 * t);
}

Vec3 orthogonal_unit_vector(const Vec3& candidate, const Vec3& r) {
  const double r2 = dot3(r, r);
  Vec3 v = candidate;
  if (r2 > 0.0) {
    const double c = dot3(candidate, r) / r2;
    for (std::size_t k = 0; k < 3; ++k) v[k] -= c * r[k];
  }
  const double len = norm3(v);
  if (len < 1e-12) throw ValidationError("candidate vector is parallel to the Bloch vector");
  return {v[0] / len, v[1] / len, v[2] / len};
}

NQubitProductResult nqubit_product_test(const DensityMatrix& psi, const std::vector<Vec3>& a_vectors) {
  const auto& dims = psi.subsystem_dims();
  const std::size_t n = dims.size();
  if (n < 2) throw DimensionError("product test needs at least two qubits");
  for (auto d : dims)
    if (d != 2) throw DimensionError("product test needs qubits");
  if (a_vectors.size() != n) {
    throw DimensionError("expected " + std::to_string(n) + " measurement vectors, got " +
                         std::to_string(a_vectors.size()));
  }
  if (!is_pure(psi)) throw ValidationError("state is not pure");

  const auto basis = gell_mann_basis(2);
  const auto decomposition = bloch_decomposition(psi, basis);
  std::vector<Observable> obs;
  for (std::size_t i = 0; i < n; ++i) {
    require_unit(a_vectors[i], "measurement vector");
    require_orthogonal(a_vectors[i], to_vec3(decomposition.local_vectors[i]), i);
    obs.push_back(embed(pauli_dot(a_vectors[i]), i, dims));
  }

  NQubitProductResult out;
  out.mutual = mutual_uncertainty(psi, obs);
  double cross = 0.0;
  for (const auto& [sites, t] : decomposition.pairwise_tensors) cross += bilinear(a_vectors[sites.first], t, a_vectors[sites.second]);
  const auto nn = static_cast<double>(n);
  out.closed_form = nn - std::sqrt(std::max(0.0, nn + 2.0 * cross));
  out.verdict = DetectionVerdict::decide("nqubit-product", out.mutual, nn - std::sqrt(nn), Violation::Deviates,
                                         kProductDeviationTolerance);
  return out;
}

std::vector<Vec3> default_product_test_vectors(const DensityMatrix& psi) {
  const auto basis = gell_mann_basis(2);
  std::vector<Vec3> out;
  for (std::size_t i = 0; i < psi.subsystems(); ++i) {
    const Vec3 r = to_vec3(bloch_vector(psi, basis, i));
    const double r2 = dot3(r, r);
    Vec3 chosen{};
    bool found = false;
    for (const Vec3& cand : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
      // Keep candidates with a reasonable component off r.
      const double along = r2 > 0.0 ? dot3(cand, r) * dot3(cand, r) / r2 : 0.0;
      if (1.0 - along > 0.5) {
        chosen = orthogonal_unit_vector(cand, r);
        found = true;
        break;
      }
    }
    if (!found) chosen = orthogonal_unit_vector({1, 0, 0}, r);
    out.push_back(chosen);
  }
  return out;
}

}  // namespace mutunc
