#include "mutunc/bloch.hpp"

#include <numeric>

namespace mutunc {

namespace {

void require_basis(std::size_t d, const GeneratorBasis& basis) {
  if (basis.dim() != d) {
    throw DimensionError("generator basis has dimension " + std::to_string(basis.dim()) +
                         " but the sites have dimension " + std::to_string(d));
  }
}

}  // namespace

std::size_t local_dimension(const DensityMatrix& rho) {
  const auto& dims = rho.subsystem_dims();
  for (auto d : dims) {
    if (d != dims.front()) throw DimensionError("sites have mixed local dimensions");
  }
  return dims.front();
}

RealVector bloch_vector(const DensityMatrix& rho, const GeneratorBasis& basis, std::size_t site) {
  require_basis(local_dimension(rho), basis);
  const DensityMatrix local = partial_trace(rho, {site});
  RealVector r(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) r[k] = expectation(local, basis[k]);
  return r;
}

RealMatrix pairwise_correlation_tensor(const DensityMatrix& rho, const GeneratorBasis& basis, std::size_t site_i,
                                       std::size_t site_j) {
  require_basis(local_dimension(rho), basis);
  if (site_i == site_j) throw DimensionError("correlation tensor needs two distinct sites");
  const DensityMatrix pair = partial_trace(rho, {site_i, site_j});
  const bool swapped = site_i > site_j;  // reduced state is ordered by site index
  const std::size_t n = basis.size();
  RealMatrix t(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const ComplexMatrix op = tensor_product(basis[k].matrix(), basis[l].matrix());
      const double v = trace_of_product(pair.matrix(), op).real();
      if (swapped) {
        t(l, k) = v;
      } else {
        t(k, l) = v;
      }
    }
  return t;
}

BlochDecomposition bloch_decomposition(const DensityMatrix& rho, const GeneratorBasis& basis) {
  BlochDecomposition out;
  out.dim = local_dimension(rho);
  out.sites = rho.subsystems();
  for (std::size_t s = 0; s < out.sites; ++s) out.local_vectors.push_back(bloch_vector(rho, basis, s));
  for (std::size_t i = 0; i < out.sites; ++i)
    for (std::size_t j = i + 1; j < out.sites; ++j)
      out.pairwise_tensors.emplace(std::make_pair(i, j), pairwise_correlation_tensor(rho, basis, i, j));
  return out;
}

ComplexMatrix local_state_from_bloch(std::span<const double> r, const GeneratorBasis& basis) {
  const auto d = static_cast<double>(basis.dim());
  ComplexMatrix m = ComplexMatrix::identity(basis.dim()) * cplx(1.0 / d);
  m += basis.combination(r).matrix() * cplx(0.5);
  return m;
}

ComplexMatrix bipartite_state_from_bloch(std::span<const double> r1, std::span<const double> r2, const RealMatrix& t,
                                         const GeneratorBasis& basis) {
  const std::size_t d = basis.dim();
  const std::size_t n = basis.size();
  if (t.rows() != n || t.cols() != n) throw DimensionError("correlation tensor has wrong shape");
  const auto dd = static_cast<double>(d);
  const ComplexMatrix id = ComplexMatrix::identity(d);
  ComplexMatrix m = ComplexMatrix::identity(d * d) * cplx(1.0 / (dd * dd));
  m += tensor_product(basis.combination(r1).matrix(), id) * cplx(0.5 / dd);
  m += tensor_product(id, basis.combination(r2).matrix()) * cplx(0.5 / dd);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      if (t(k, l) == 0.0) continue;
      m += tensor_product(basis[k].matrix(), basis[l].matrix()) * cplx(0.25 * t(k, l));
    }
  return m;
}

double ky_fan_norm(const RealMatrix& m) {
  const auto svd = real_svd(m);
  return std::accumulate(svd.singular_values.begin(), svd.singular_values.end(), 0.0);
}

OrthogonalObservableSet orthogonal_observable_set(const GeneratorBasis& basis, const RealMatrix& theta) {
  if (theta.rows() != basis.size() || theta.cols() != basis.size()) {
    throw DimensionError("rotation must be " + std::to_string(basis.size()) + "x" + std::to_string(basis.size()) +
                         ", got " + theta.shape_string());
  }
  if (!is_orthogonal(theta, 1e-10)) throw ValidationError("rotation matrix is not orthogonal within 1e-10");
  OrthogonalObservableSet set;
  set.rotation_ = theta;
  for (std::size_t i = 0; i < theta.rows(); ++i) set.observables_.push_back(basis.combination(theta.row(i)));
  return set;
}

AlignedSets svd_aligned_observable_sets(const RealMatrix& t, const GeneratorBasis& basis) {
  const auto svd = real_svd(t);
  // Rows of Θ_A are the columns of U; rows of Θ_B are the negated columns of V.
  RealMatrix theta_b = -svd.v.transpose();
  return {orthogonal_observable_set(basis, svd.u.transpose()), orthogonal_observable_set(basis, theta_b)};
}

}  // namespace mutunc
