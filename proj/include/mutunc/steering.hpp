#pragma once

#include <array>
#include <string>
#include <vector>

#include "mutunc/operators.hpp"

namespace mutunc {

enum class SteeringCriterion { m_inf, reid };

struct SteeringVerdict {
  SteeringCriterion criterion = SteeringCriterion::m_inf;
  double statistic = 0.0;
  double threshold = 0.0;
  bool steerable = false;

  // m_inf: steerable iff statistic < -1e-10; reid: iff statistic < 1/4 - 1e-10.
  static SteeringVerdict decide(SteeringCriterion criterion, double statistic);
};

std::string to_string(SteeringCriterion c);

// Operator acting on one subsystem of a composite state.
struct LocalObservable {
  std::size_t site = 0;
  Observable op;
};

// Error of the best affine estimate of Bob's A from Alice's outcome of C:
// Δ_inf A = √(ΔA² - Cov(A, C)² / ΔC²), and ΔA when C is dispersion-free.
double inferred_std(const DensityMatrix& rho, const LocalObservable& bob, const LocalObservable& alice);

struct InferredMutual {
  double inferred_a = 0.0;  // Δ_inf A
  double inferred_b = 0.0;  // Δ_inf B
  double sum_std = 0.0;     // Δ(A + B) on Bob's reduced state
  SteeringVerdict verdict;  // statistic M_inf = Δ_inf A + Δ_inf B - Δ(A + B)
};

// A and B must act on the same (Bob) site; the inferring observables on a
// different one.
InferredMutual inferred_mutual_uncertainty(const DensityMatrix& rho, const LocalObservable& a,
                                           const LocalObservable& b, const LocalObservable& c_a,
                                           const LocalObservable& c_b);

// √(1 - p²) - 1/√2
double werner_minf_analytic(double p);

// Matrix-level M_inf on the Werner state with A = σ_x/2, B = σ_z/2 on Bob's
// qubit (site 1) inferred from σ_x/2, σ_z/2 on Alice's (site 0).
InferredMutual werner_minf_matrix(double p);

// Photon-subtracted two-mode squeezed vacuum with squeezing α > 0.
class PSSVState {
 public:
  explicit PSSVState(double alpha);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

struct PhasePoint {
  double x1 = 0.0, p1 = 0.0, x2 = 0.0, p2 = 0.0;
};

// W = (1/π²) exp[2 sinh2α (X₁X₂ - P₁P₂) - cosh2α Σ(X_i² + P_i²)]
//       · [-sinh2α {(P₁-P₂)² - (X₁-X₂)²} + cosh2α {(P₁-P₂)² + (X₁-X₂)²} - 1]
double pssv_wigner_value(const PSSVState& s, const PhasePoint& point);

struct QuadratureSpec {
  std::size_t nodes = 24;  // per axis, >= 5
};

// Gauss-Hermite nodes and weights for ∫ f(y) e^{-y²} dy.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermiteRule gauss_hermite(std::size_t n);

// ⟨X₁^n₁ P₁^m₁ X₂^n₂ P₂^m₂⟩ over W, integrated with tensor-product
// Gauss-Hermite in the normal modes (X₁ ± X₂)/√2, (P₁ ± P₂)/√2, where the
// Gaussian factor of W separates. Exact when 2 + Σ powers <= 2·nodes - 1.
double wigner_moment(const PSSVState& s, const std::array<int, 4>& powers, const QuadratureSpec& q = {});

struct PssvClosedForms {
  double eta_plus = 0.0;      // √(cosh2α + coshα sinhα)
  double eta_minus = 0.0;     // √(cosh2α - coshα sinhα)
  double m_inf_cv = 0.0;      // (√3/2)(1/η₋ + 1/η₊) - (η₊ + η₋)
  double reid_product = 0.0;  // 9 / (2[3 cosh4α + 5])
};
PssvClosedForms pssv_closed_forms(double alpha);

// Inferred variances of X₁ (from X₂) and P₁ (from P₂) and Δ(X₁ + P₁),
// computed from Wigner moments only.
struct PssvMomentSteering {
  double inferred_var_x1 = 0.0;
  double inferred_var_p1 = 0.0;
  double reid_product = 0.0;
  double sum_std = 0.0;  // Δ(X₁ + P₁)
  double m_inf = 0.0;    // Δ_inf X₁ + Δ_inf P₁ - Δ(X₁ + P₁)
};
PssvMomentSteering pssv_moment_steering(const PSSVState& s, const QuadratureSpec& q = {});

SteeringVerdict pssv_m_inf_verdict(double alpha);
SteeringVerdict pssv_reid_verdict(double alpha);

// Root of reid_product(α) = 1/4 on [0.1, 1.5] by bisection (tolerance 1e-10).
double reid_threshold_solver();

}  // namespace mutunc
