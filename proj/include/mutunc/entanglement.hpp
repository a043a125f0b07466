#pragma once

#include <string>
#include <vector>

#include "mutunc/bloch.hpp"
#include "mutunc/states.hpp"

namespace mutunc {

inline constexpr double kVerdictMargin = 1e-10;
inline constexpr double kProductDeviationTolerance = 1e-6;
inline constexpr double kPurityTolerance = 1e-10;

enum class Verdict { Entangled, Inconclusive };

// Which side of the threshold signals entanglement.
enum class Violation {
  Above,    // statistic > threshold + margin
  Below,    // statistic < threshold - margin
  Deviates  // |statistic - threshold| > margin
};

struct DetectionVerdict {
  std::string criterion;
  double statistic = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  Violation direction = Violation::Above;

  static DetectionVerdict decide(std::string criterion, double statistic, double threshold, Violation direction,
                                 double margin = kVerdictMargin);
  bool entangled() const noexcept { return verdict == Verdict::Entangled; }
};

std::string to_string(Verdict v);
std::string to_string(Violation v);

// Σ_i Δ(A_i|B_i)² with A_i = Ã_i ⊗ I, B_i = I ⊗ B̃_i against 2(d-1);
// entangled when the sum falls below. The bound is guaranteed for product
// states ρ₁⊗ρ₂; convex mixtures of products can fall below it.
DetectionVerdict conditional_variance_witness(const DensityMatrix& rho, const OrthogonalObservableSet& set_a,
                                              const OrthogonalObservableSet& set_b);

enum class KyFanCriterion {
  condF,  // ||T||_KF <= 2(d-1)/d - ½(|r₁| - |r₂|)², T_kl = Tr[ρ σ_k⊗σ_l]
  dsep    // ||(d²/4) T||_KF <= d(d-1)/2
};

// Ky-Fan norm of the correlation tensor in the normalization the dsep bound
// is stated in: (d²/4) Tr[ρ σ_k⊗σ_l]. Equals ||T||_KF for qubits.
double dsep_kyfan_statistic(const RealMatrix& t, std::size_t d);

DetectionVerdict kyfan_criterion(const DensityMatrix& rho, KyFanCriterion which);
DetectionVerdict kyfan_criterion(const DensityMatrix& rho, KyFanCriterion which, const GeneratorBasis& basis);

// Smallest eigenvalue of the partial transpose on the second subsystem;
// entangled when negative.
DetectionVerdict ppt_criterion(const DensityMatrix& rho);

// Checks Tr[ρ²] >= 1 - 1e-10.
bool is_pure(const DensityMatrix& rho);

// Closed form 2 - √(2 + 2 aᵀTb) for a pure two-qubit state with
// A = a·σ ⊗ I, B = I ⊗ b·σ, |a| = |b| = 1, a·r₁ = b·r₂ = 0.
double pure_two_qubit_mutual(const DensityMatrix& psi, const Vec3& a, const Vec3& b);

// C = (2 + M(M - 4)) / (2t), t = a₁b₁ - a₂b₂ ≠ 0.
double concurrence_from_mutual(double m, double t);

// Projects `candidate` onto the plane orthogonal to r and normalizes.
Vec3 orthogonal_unit_vector(const Vec3& candidate, const Vec3& r);

struct NQubitProductResult {
  double mutual = 0.0;       // generic Σ ΔA_i - Δ(Σ A_i)
  double closed_form = 0.0;  // N - √(N + 2 Σ_{i<j} a_iᵀ T_ij a_j)
  DetectionVerdict verdict;  // threshold N - √N, Deviates by > 1e-6
};

// Product test for pure N-qubit states, A_i = a_i·σ on qubit i.
NQubitProductResult nqubit_product_test(const DensityMatrix& psi, const std::vector<Vec3>& a_vectors);

// Unit vectors orthogonal to each local Bloch vector (x̂ projected, falling
// back to ŷ then ẑ).
std::vector<Vec3> default_product_test_vectors(const DensityMatrix& psi);

}  // namespace mutunc
