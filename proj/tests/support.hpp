#pragma once

#include <doctest.h>

#include <cmath>

#include "mutunc/operators.hpp"
#include "mutunc/states.hpp"

namespace testing {

using namespace mutunc;

inline ComplexMatrix pauli(int k) {
  switch (k) {
    case 0:
      return pauli_x().matrix();
    case 1:
      return pauli_y().matrix();
    default:
      return pauli_z().matrix();
  }
}

inline DensityMatrix ket_state(std::initializer_list<cplx> amps, std::vector<std::size_t> dims) {
  std::vector<cplx> v(amps);
  return pure_state(v, std::move(dims));
}

inline DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b) {
  auto dims = a.subsystem_dims();
  dims.insert(dims.end(), b.subsystem_dims().begin(), b.subsystem_dims().end());
  return make_density_matrix(tensor_product(a.matrix(), b.matrix()), dims);
}

// Mixture Σ w_i ρ_i on the dims of the first state.
inline DensityMatrix mixture(const std::vector<DensityMatrix>& states, const std::vector<double>& w) {
  ComplexMatrix m(states.front().dim(), states.front().dim());
  for (std::size_t i = 0; i < states.size(); ++i) m += states[i].matrix() * cplx(w[i]);
  return make_density_matrix(m, states.front().subsystem_dims());
}

// Dimension for trial t cycling through 2..9.
inline std::size_t cycle_dim(int t) { return 2 + static_cast<std::size_t>(t) % 8; }

}  // namespace testing
