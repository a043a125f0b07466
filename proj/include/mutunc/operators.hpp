#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mutunc/matrix.hpp"

namespace mutunc {

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = -1e-9;

// Hermitian operator. Stored exactly Hermitian: the validated input is
// replaced by (M + M†)/2.
class Observable {
 public:
  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }

  static Observable zero(std::size_t dim);
  static Observable identity(std::size_t dim);

  friend Observable operator+(const Observable& a, const Observable& b);
  friend Observable operator-(const Observable& a, const Observable& b);
  friend Observable operator*(double s, const Observable& a);
  Observable operator-() const;

 private:
  explicit Observable(ComplexMatrix m) : m_(std::move(m)) {}
  friend Observable make_observable(const ComplexMatrix& m);
  friend Observable hermitian_unchecked(ComplexMatrix m);

  ComplexMatrix m_;
};

// Throws DimensionError for non-square input, ValidationError when
// max |M - M†| exceeds 1e-12.
Observable make_observable(const ComplexMatrix& m);

// Wraps a matrix known to be Hermitian by construction (symmetrized, no check).
Observable hermitian_unchecked(ComplexMatrix m);

// Validated quantum state on a tensor product of subsystems.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  const std::vector<std::size_t>& subsystem_dims() const noexcept { return dims_; }
  std::size_t subsystems() const noexcept { return dims_.size(); }

  // Tr[ρ²].
  double purity() const;

 private:
  DensityMatrix(ComplexMatrix m, std::vector<std::size_t> dims) : m_(std::move(m)), dims_(std::move(dims)) {}
  friend DensityMatrix make_density_matrix(const ComplexMatrix& m, std::vector<std::size_t> dims);

  ComplexMatrix m_;
  std::vector<std::size_t> dims_;
};

// Checks hermiticity (1e-12), unit trace (1e-12), smallest eigenvalue
// >= -1e-9 and that the subsystem dimensions multiply to the matrix size.
DensityMatrix make_density_matrix(const ComplexMatrix& m, std::vector<std::size_t> dims);

// |ψ⟩⟨ψ| for a ket (normalized here).
DensityMatrix pure_state(std::span<const cplx> ket, std::vector<std::size_t> dims);

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
Observable tensor_product(const Observable& a, const Observable& b);

// I ⊗ ... ⊗ op ⊗ ... ⊗ I with op on `site`.
Observable embed(const Observable& op, std::size_t site, std::span<const std::size_t> dims);

// Reduced state on the kept subsystems, in ascending subsystem order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep);

// Transpose on subsystem `sys`; the result is Hermitian with unit trace but
// need not be positive.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims, std::size_t sys);
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t sys);

// Tr[ρA]; the imaginary part (at most roundoff) is discarded.
double expectation(const DensityMatrix& rho, const Observable& a);

}  // namespace mutunc
