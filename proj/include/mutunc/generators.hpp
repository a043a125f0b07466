#pragma once

#include <cstddef>
#include <vector>

#include "mutunc/operators.hpp"

namespace mutunc {

// Real rank-3 tensor indexed (i, j, k), each in [0, n).
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t n) : n_(n), data_(n * n * n, 0.0) {}
  double& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }
  std::size_t extent() const noexcept { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct StructureConstants {
  StructureTensor f;      // f_ijk = -(i/4) Tr([σ_i, σ_j] σ_k)
  StructureTensor d_sym;  // d_ijk = (1/4) Tr({σ_i, σ_j} σ_k)
};

// Generalized Gell-Mann generators of SU(d) with Tr[σ_i σ_j] = 2δ_ij.
// Order: symmetric off-diagonal (j<k lexicographic), antisymmetric
// off-diagonal (same order), then the d-1 diagonal generators. For d = 2
// this is (σ_x, σ_y, σ_z).
class GeneratorBasis {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<Observable>& generators() const noexcept { return generators_; }
  const Observable& operator[](std::size_t i) const { return generators_.at(i); }
  double f(std::size_t i, std::size_t j, std::size_t k) const { return constants_.f(i, j, k); }
  double d_sym(std::size_t i, std::size_t j, std::size_t k) const { return constants_.d_sym(i, j, k); }
  const StructureConstants& constants() const noexcept { return constants_; }

  // Σ_j coeffs[j] σ_j.
  Observable combination(std::span<const double> coeffs) const;

 private:
  friend GeneratorBasis gell_mann_basis(std::size_t d);
  std::size_t dim_ = 0;
  std::vector<Observable> generators_;
  StructureConstants constants_;
};

// Throws ValidationError for d < 2.
GeneratorBasis gell_mann_basis(std::size_t d);

StructureConstants structure_constants(std::span<const Observable> generators);
inline StructureConstants structure_constants(const GeneratorBasis& basis) { return basis.constants(); }

}  // namespace mutunc
