#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mutunc/generators.hpp"
#include "mutunc/linalg.hpp"

namespace mutunc {

// Local Bloch vectors and pairwise correlation tensors of an N-site state
// with equal local dimension d:
//   r_k(i)   = Tr[ρ σ_k(i)]
//   t_kl(ij) = Tr[ρ σ_k(i) σ_l(j)]
struct BlochDecomposition {
  std::size_t dim = 0;
  std::size_t sites = 0;
  std::vector<RealVector> local_vectors;
  std::map<std::pair<std::size_t, std::size_t>, RealMatrix> pairwise_tensors;  // keys (i, j), i < j
};

// Common local dimension; throws DimensionError when subsystems differ.
std::size_t local_dimension(const DensityMatrix& rho);

RealVector bloch_vector(const DensityMatrix& rho, const GeneratorBasis& basis, std::size_t site);
RealMatrix pairwise_correlation_tensor(const DensityMatrix& rho, const GeneratorBasis& basis, std::size_t site_i,
                                       std::size_t site_j);
BlochDecomposition bloch_decomposition(const DensityMatrix& rho, const GeneratorBasis& basis);

// I/d + ½ r·σ
ComplexMatrix local_state_from_bloch(std::span<const double> r, const GeneratorBasis& basis);

// I/d² + (1/2d)(r₁·σ ⊗ I + I ⊗ r₂·σ) + ¼ Σ t_kl σ_k ⊗ σ_l
ComplexMatrix bipartite_state_from_bloch(std::span<const double> r1, std::span<const double> r2, const RealMatrix& t,
                                         const GeneratorBasis& basis);

// Sum of singular values.
double ky_fan_norm(const RealMatrix& m);

// Ã_i = Σ_j Θ_ij σ_j for an orthogonal Θ; the rows of Θ are the unit
// Bloch vectors a_i of the observables.
class OrthogonalObservableSet {
 public:
  const RealMatrix& rotation() const noexcept { return rotation_; }
  const std::vector<Observable>& observables() const noexcept { return observables_; }
  RealVector bloch_row(std::size_t i) const { return rotation_.row(i); }
  std::size_t size() const noexcept { return observables_.size(); }
  std::size_t dim() const noexcept { return observables_.empty() ? 0 : observables_.front().dim(); }

 private:
  friend OrthogonalObservableSet orthogonal_observable_set(const GeneratorBasis& basis, const RealMatrix& theta);
  RealMatrix rotation_;
  std::vector<Observable> observables_;
};

// Throws ValidationError unless ΘΘᵀ = I within 1e-10.
OrthogonalObservableSet orthogonal_observable_set(const GeneratorBasis& basis, const RealMatrix& theta);

struct AlignedSets {
  OrthogonalObservableSet a;  // a_i = u_i
  OrthogonalObservableSet b;  // b_i = -v_i
};

// Sets built from the singular vectors of T = U Σ Vᵀ, so that
// Σ_i a_iᵀ T b_i = -||T||_KF.
AlignedSets svd_aligned_observable_sets(const RealMatrix& t, const GeneratorBasis& basis);

}  // namespace mutunc
