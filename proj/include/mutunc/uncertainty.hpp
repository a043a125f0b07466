#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mutunc/operators.hpp"

namespace mutunc {

// Variance roundoff below this magnitude is clamped to zero; anything more
// negative is reported as invalid input.
inline constexpr double kVarianceClamp = 1e-12;

struct VarianceStd {
  double variance = 0.0;
  double std_dev = 0.0;
};

// ΔA² = ⟨A²⟩ - ⟨A⟩², evaluated as Tr[ρ (A - ⟨A⟩)²].
VarianceStd variance_and_std(const DensityMatrix& rho, const Observable& a);

inline double std_dev(const DensityMatrix& rho, const Observable& a) { return variance_and_std(rho, a).std_dev; }

// ½Tr[ρ(AB + BA)] - Tr[ρA]Tr[ρB]; exactly symmetric in (a, b).
double covariance(const DensityMatrix& rho, const Observable& a, const Observable& b);

// M(A_1 : ... : A_n) = Σ ΔA_i - Δ(Σ A_i), n >= 2.
double mutual_uncertainty(const DensityMatrix& rho, std::span<const Observable> obs);
double mutual_uncertainty(const DensityMatrix& rho, const Observable& a, const Observable& b);

// Δ(A|B) = Δ(A+B) - ΔB. Sign-indefinite.
double conditional_uncertainty(const DensityMatrix& rho, const Observable& a, const Observable& b);

// M(A:B|C) = Δ(A|C) + Δ(B|C) - Δ(A+B|C).
double conditional_mutual_uncertainty(const DensityMatrix& rho, const Observable& a, const Observable& b,
                                      const Observable& c);

// Δ(A|B)² = Δ(A+B)² - ΔB² (= ΔA² + 2 Cov(A, B)). Sign-indefinite.
double conditional_variance(const DensityMatrix& rho, const Observable& a, const Observable& b);

struct UncertaintyReport {
  std::vector<double> std_devs;
  double std_sum = 0.0;  // Δ(Σ A_i)
  double mutual = 0.0;
  // The remaining fields concern the first two observables.
  std::optional<double> conditional;           // Δ(A_1|A_2)
  std::optional<double> conditional_variance;  // Δ(A_1|A_2)²
  std::optional<double> covariance;            // Cov(A_1, A_2)
  std::optional<double> conditional_mutual;    // M(A_1:A_2|A_3), with a third observable
};

UncertaintyReport uncertainty_report(const DensityMatrix& rho, std::span<const Observable> obs);

}  // namespace mutunc
