#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "mutunc/operators.hpp"

namespace mutunc {

using Vec3 = std::array<double, 3>;

// Pauli matrices and a·σ for qubits.
Observable pauli_x();
Observable pauli_y();
Observable pauli_z();
Observable pauli_dot(const Vec3& a);

// p |Ψ⁻⟩⟨Ψ⁻| + (1 - p) I/4, p in [0, 1].
DensityMatrix werner(double p);
DensityMatrix singlet();

// ¼[I + (2/5)(1-α) σ_z⊗I - (3/5)(1-α) I⊗σ_z - α Σ σ_i⊗σ_i]. Positivity is
// checked at construction; roughly α ∈ [0, 1].
DensityMatrix canonical_example(double alpha);

// ¼[I₉ - Σ |ψ_i⟩⟨ψ_i|] over the five Tiles product vectors.
DensityMatrix tiles_bound_entangled();

// √λ|00⟩ + √(1-λ)|11⟩, λ ∈ [0, 1].
DensityMatrix schmidt_pure(double lambda);

// ⊗_i (I + r_i·σ)/2, each |r_i| <= 1.
DensityMatrix nqubit_product(const std::vector<Vec3>& bloch_vectors);

// (|000⟩ + |111⟩)/√2
DensityMatrix ghz3();

struct NamedState {
  std::string name;
  std::map<std::string, double> parameters;
  DensityMatrix state;
};

// Ids: werner(p), canonical(alpha), tiles, schmidt(lambda),
// nqubit-product(n, theta<i>, phi<i>). Missing parameters take defaults
// (p = 1, alpha = 0.5, lambda = 0.5, n = 2, angles 0).
NamedState make_named_state(const std::string& id, const std::map<std::string, double>& params);

// Seeded source of random states, observables and rotations. The engine is
// std::mt19937_64, whose output is fixed by the standard; the uniform and
// normal transforms are defined here so results are identical everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double normal();   // standard Gaussian (Box-Muller)

  std::vector<cplx> ket(std::size_t dim);
  // Normalized standard-Gaussian complex vector.
  DensityMatrix pure_state(std::size_t dim);
  // Convex mixture of 1-4 pure states.
  DensityMatrix mixed_state(std::size_t dim);
  // Product of pure states on each site.
  DensityMatrix product_pure_state(const std::vector<std::size_t>& dims);
  // Convex mixture of 1-4 products of pure local states on d ⊗ d.
  DensityMatrix separable_state(std::size_t local_dim);
  // Hermitian part of a Gaussian complex matrix, scaled so max |entry| = 1.
  Observable observable(std::size_t dim);
  // Orthogonalized Gaussian matrix.
  RealMatrix rotation(std::size_t n);
  Vec3 unit_vector3();
  // Convex weights, count entries.
  std::vector<double> weights(std::size_t count);

 private:
  std::uint64_t next() { return engine_(); }
  std::mt19937_64 engine_;
};

enum class SampleKind { pure, mixed, separable, observable, rotation };
using Sample = std::variant<DensityMatrix, Observable, RealMatrix>;

// Deterministic given (kind, dim, seed); separable samples live on dim ⊗ dim.
Sample random_sample(SampleKind kind, std::size_t dim, std::uint64_t seed);

}  // namespace mutunc
