#include "mutunc/uncertainty.hpp"

#include <cmath>
#include <string>

namespace mutunc {

namespace {

void require_dims(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != a.dim()) {
    throw DimensionError("state dimension " + std::to_string(rho.dim()) + " does not match observable dimension " +
                         std::to_string(a.dim()));
  }
}

// A - ⟨A⟩ I
ComplexMatrix centered(const DensityMatrix& rho, const Observable& a) {
  ComplexMatrix m = a.matrix();
  const double mean = expectation(rho, a);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= mean;
  return m;
}

Observable sum_of(std::span<const Observable> obs) {
  Observable total = obs.front();
  for (std::size_t i = 1; i < obs.size(); ++i) total = total + obs[i];
  return total;
}

}  // namespace

VarianceStd variance_and_std(const DensityMatrix& rho, const Observable& a) {
  require_dims(rho, a);
  const ComplexMatrix c = centered(rho, a);
  double var = trace_of_product(rho.matrix(), c * c).real();
  if (var < 0.0) {
    if (var < -kVarianceClamp) {
      throw ValidationError("negative variance " + std::to_string(var) + "; state or observable is invalid");
    }
    var = 0.0;
  }
  return {var, std::sqrt(var)};
}

double covariance(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_dims(rho, a);
  require_dims(rho, b);
  const ComplexMatrix ca = centered(rho, a);
  const ComplexMatrix cb = centered(rho, b);
  const double ab = trace_of_product(rho.matrix(), ca * cb).real();
  const double ba = trace_of_product(rho.matrix(), cb * ca).real();
  return 0.5 * (ab + ba);
}

double mutual_uncertainty(const DensityMatrix& rho, std::span<const Observable> obs) {
  if (obs.size() < 2) throw ValidationError("mutual uncertainty needs at least two observables");
  double total = 0.0;
  for (const auto& a : obs) total += std_dev(rho, a);
  return total - std_dev(rho, sum_of(obs));
}

double mutual_uncertainty(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  return std_dev(rho, a) + std_dev(rho, b) - std_dev(rho, a + b);
}

double conditional_uncertainty(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  return std_dev(rho, a + b) - std_dev(rho, b);
}

double conditional_mutual_uncertainty(const DensityMatrix& rho, const Observable& a, const Observable& b,
                                      const Observable& c) {
  return conditional_uncertainty(rho, a, c) + conditional_uncertainty(rho, b, c) -
         conditional_uncertainty(rho, a + b, c);
}

double conditional_variance(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  return variance_and_std(rho, a + b).variance - variance_and_std(rho, b).variance;
}

UncertaintyReport uncertainty_report(const DensityMatrix& rho, std::span<const Observable> obs) {
  if (obs.size() < 2) throw ValidationError("uncertainty report needs at least two observables");
  UncertaintyReport r;
  for (const auto& a : obs) r.std_devs.push_back(std_dev(rho, a));
  r.std_sum = std_dev(rho, sum_of(obs));
  double total = 0.0;
  for (double s : r.std_devs) total += s;
  r.mutual = total - r.std_sum;
  r.conditional = conditional_uncertainty(rho, obs[0], obs[1]);
  r.conditional_variance = conditional_variance(rho, obs[0], obs[1]);
  r.covariance = covariance(rho, obs[0], obs[1]);
  if (obs.size() >= 3) r.conditional_mutual = conditional_mutual_uncertainty(rho, obs[0], obs[1], obs[2]);
  return r;
}

}  // namespace mutunc
