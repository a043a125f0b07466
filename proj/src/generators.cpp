#include "mutunc/generators.hpp"

#include <cmath>

namespace mutunc {

Observable GeneratorBasis::combination(std::span<const double> coeffs) const {
  if (coeffs.size() != generators_.size()) {
    throw DimensionError("expected " + std::to_string(generators_.size()) + " coefficients, got " +
                         std::to_string(coeffs.size()));
  }
  ComplexMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0.0) continue;
    m += generators_[j].matrix() * cplx(coeffs[j]);
  }
  return hermitian_unchecked(std::move(m));
}

GeneratorBasis gell_mann_basis(std::size_t d) {
  if (d < 2) throw ValidationError("generator basis needs d >= 2, got " + std::to_string(d));
  GeneratorBasis basis;
  basis.dim_ = d;
  const cplx i_unit(0.0, 1.0);

  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix m(d, d);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      basis.generators_.push_back(hermitian_unchecked(std::move(m)));
    }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix m(d, d);
      m(j, k) = -i_unit;
      m(k, j) = i_unit;
      basis.generators_.push_back(hermitian_unchecked(std::move(m)));
    }
  for (std::size_t l = 1; l < d; ++l) {
    const double norm = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    ComplexMatrix m(d, d);
    for (std::size_t j = 0; j < l; ++j) m(j, j) = norm;
    m(l, l) = -static_cast<double>(l) * norm;
    basis.generators_.push_back(hermitian_unchecked(std::move(m)));
  }

  basis.constants_ = structure_constants(basis.generators_);
  return basis;
}

StructureConstants structure_constants(std::span<const Observable> generators) {
  const std::size_t n = generators.size();
  StructureConstants out{StructureTensor(n), StructureTensor(n)};
  if (n == 0) return out;

  // With t = Tr[σ_i σ_j σ_k], Tr[σ_j σ_i σ_k] = conj(t) for Hermitian σ, so
  // f_ijk = Im(t)/2 and d_ijk = Re(t)/2.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexMatrix prod = generators[i].matrix() * generators[j].matrix();
      for (std::size_t k = 0; k < n; ++k) {
        const cplx t = trace_of_product(prod, generators[k].matrix());
        out.f(i, j, k) = 0.5 * t.imag();
        out.d_sym(i, j, k) = 0.5 * t.real();
      }
    }
  return out;
}

}  // namespace mutunc
