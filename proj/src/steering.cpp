#include "mutunc/steering.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mutunc/numeric.hpp"
#include "mutunc/states.hpp"
#include "mutunc/uncertainty.hpp"

namespace mutunc {

namespace {

constexpr double kSteeringMargin = 1e-10;
constexpr double kReidBound = 0.25;
constexpr double kDispersionFree = 1e-14;

Observable embedded(const DensityMatrix& rho, const LocalObservable& o) {
  return embed(o.op, o.site, rho.subsystem_dims());
}

void require_disjoint(const LocalObservable& bob, const LocalObservable& alice) {
  if (bob.site == alice.site) {
    throw ValidationError("inferring observable must act on a different subsystem than the inferred one");
  }
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

SteeringVerdict SteeringVerdict::decide(SteeringCriterion criterion, double statistic) {
  const double threshold = criterion == SteeringCriterion::m_inf ? 0.0 : kReidBound;
  return {criterion, statistic, threshold, statistic < threshold - kSteeringMargin};
}

std::string to_string(SteeringCriterion c) { return c == SteeringCriterion::m_inf ? "m_inf" : "reid"; }

double inferred_std(const DensityMatrix& rho, const LocalObservable& bob, const LocalObservable& alice) {
  require_disjoint(bob, alice);
  const Observable a = embedded(rho, bob);
  const Observable c = embedded(rho, alice);
  const double var_a = variance_and_std(rho, a).variance;
  const double var_c = variance_and_std(rho, c).variance;
  if (var_c <= kDispersionFree) return std::sqrt(var_a);
  const double cov = covariance(rho, a, c);
  const double reduced = std::min(var_a, cov * cov / var_c);
  return std::sqrt(std::max(0.0, var_a - reduced));
}

InferredMutual inferred_mutual_uncertainty(const DensityMatrix& rho, const LocalObservable& a,
                                           const LocalObservable& b, const LocalObservable& c_a,
                                           const LocalObservable& c_b) {
  if (a.site != b.site) throw ValidationError("A and B must act on the same subsystem");
  if (a.op.dim() != b.op.dim()) throw DimensionError("A and B have different dimensions");
  InferredMutual out;
  out.inferred_a = inferred_std(rho, a, c_a);
  out.inferred_b = inferred_std(rho, b, c_b);
  const DensityMatrix bob = partial_trace(rho, {a.site});
  out.sum_std = std_dev(bob, a.op + b.op);
  out.verdict = SteeringVerdict::decide(SteeringCriterion::m_inf, out.inferred_a + out.inferred_b - out.sum_std);
  return out;
}

double werner_minf_analytic(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("Werner weight p must lie in [0, 1]");
  return std::sqrt(1.0 - p * p) - 1.0 / std::numbers::sqrt2;
}

InferredMutual werner_minf_matrix(double p) {
  const DensityMatrix rho = werner(p);
  const Observable sx = 0.5 * pauli_x();
  const Observable sz = 0.5 * pauli_z();
  return inferred_mutual_uncertainty(rho, {1, sx}, {1, sz}, {0, sx}, {0, sz});
}

PSSVState::PSSVState(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw ValidationError("squeezing parameter must be finite and > 0, got " + std::to_string(alpha));
  }
}

double pssv_wigner_value(const PSSVState& s, const PhasePoint& pt) {
  const double c = std::cosh(2.0 * s.alpha());
  const double sh = std::sinh(2.0 * s.alpha());
  const double exponent = 2.0 * sh * (pt.x1 * pt.x2 - pt.p1 * pt.p2) -
                          c * (pt.x1 * pt.x1 + pt.p1 * pt.p1 + pt.x2 * pt.x2 + pt.p2 * pt.p2);
  const double dp = pt.p1 - pt.p2;
  const double dx = pt.x1 - pt.x2;
  const double prefactor = -sh * (dp * dp - dx * dx) + c * (dp * dp + dx * dx) - 1.0;
  return std::exp(exponent) * prefactor / (std::numbers::pi * std::numbers::pi);
}

GaussHermiteRule gauss_hermite(std::size_t n) {
  if (n == 0) throw ValidationError("Gauss-Hermite rule needs at least one node");
  constexpr double kPiM4 = 0.7511255444649425;  // π^{-1/4}
  constexpr int kMaxIter = 100;
  const auto nn = static_cast<double>(n);
  GaussHermiteRule rule{std::vector<double>(n), std::vector<double>(n)};
  const std::size_t half = (n + 1) / 2;
  double z = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * nn + 1.0) - 1.85575 * std::pow(2.0 * nn + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(nn, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[i - 2];
    }
    double derivative = 0.0;
    int iter = 0;
    for (; iter < kMaxIter; ++iter) {
      // Orthonormal Hermite recurrence.
      double p1 = kPiM4, p2 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        const auto jj = static_cast<double>(j);
        p1 = z * std::sqrt(2.0 / jj) * p2 - std::sqrt((jj - 1.0) / jj) * p3;
      }
      derivative = std::sqrt(2.0 * nn) * p2;
      const double previous = z;
      z = previous - p1 / derivative;
      if (std::abs(z - previous) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    if (iter == kMaxIter) throw ConvergenceError("Gauss-Hermite node iteration did not converge");
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / (derivative * derivative);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

double wigner_moment(const PSSVState& s, const std::array<int, 4>& powers, const QuadratureSpec& q) {
  if (q.nodes < 5) throw ValidationError("quadrature needs at least 5 nodes per axis");
  int total = 0;
  for (int p : powers) {
    if (p < 0) throw ValidationError("moment powers must be non-negative");
    total += p;
  }
  // W carries a degree-2 polynomial factor on top of the monomial.
  if (static_cast<std::size_t>(total + 2) > 2 * q.nodes - 1) {
    throw ValidationError("moment of order " + std::to_string(total) + " is not integrated exactly with " +
                          std::to_string(q.nodes) + " nodes");
  }

  // Gaussian widths in the normal modes u± = (X₁ ± X₂)/√2, v± = (P₁ ± P₂)/√2.
  const double c = std::cosh(2.0 * s.alpha());
  const double sh = std::sinh(2.0 * s.alpha());
  const std::array<double, 4> width{c - sh, c + sh, c + sh, c - sh};  // u+, u-, v+, v-

  const auto rule = gauss_hermite(q.nodes);
  const std::size_t n = q.nodes;
  std::array<std::vector<double>, 4> coord, weight;
  for (std::size_t axis = 0; axis < 4; ++axis) {
    coord[axis].resize(n);
    weight[axis].resize(n);
    const double scale = 1.0 / std::sqrt(width[axis]);
    for (std::size_t k = 0; k < n; ++k) {
      const double y = rule.nodes[k];
      coord[axis][k] = y * scale;
      // Undo the e^{-y²} weight: W already contains its own Gaussian.
      weight[axis][k] = std::exp(std::log(rule.weights[k]) + y * y) * scale;
    }
  }

  const double r2 = 1.0 / std::numbers::sqrt2;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double up = coord[0][i], um = coord[1][j];
      const double x1 = (up + um) * r2, x2 = (up - um) * r2;
      const double wij = weight[0][i] * weight[1][j];
      const double mx = ipow(x1, powers[0]) * ipow(x2, powers[2]);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double vp = coord[2][k], vm = coord[3][l];
          const double p1 = (vp + vm) * r2, p2 = (vp - vm) * r2;
          const double w = pssv_wigner_value(s, {x1, p1, x2, p2});
          sum += wij * weight[2][k] * weight[3][l] * w * mx * ipow(p1, powers[1]) * ipow(p2, powers[3]);
        }
    }
  return sum;
}

PssvClosedForms pssv_closed_forms(double alpha) {
  const PSSVState s(alpha);
  const double c2 = std::cosh(2.0 * alpha);
  const double cs = std::cosh(alpha) * std::sinh(alpha);
  PssvClosedForms f;
  f.eta_plus = std::sqrt(c2 + cs);
  f.eta_minus = std::sqrt(c2 - cs);
  f.m_inf_cv = 0.5 * std::sqrt(3.0) * (1.0 / f.eta_minus + 1.0 / f.eta_plus) - (f.eta_plus + f.eta_minus);
  f.reid_product = 9.0 / (2.0 * (3.0 * std::cosh(4.0 * alpha) + 5.0));
  return f;
}

PssvMomentSteering pssv_moment_steering(const PSSVState& s, const QuadratureSpec& q) {
  auto m = [&](int a, int b, int c, int d) { return wigner_moment(s, {a, b, c, d}, q); };
  const double mx1 = m(1, 0, 0, 0), mp1 = m(0, 1, 0, 0), mx2 = m(0, 0, 1, 0), mp2 = m(0, 0, 0, 1);
  const double var_x1 = m(2, 0, 0, 0) - mx1 * mx1;
  const double var_x2 = m(0, 0, 2, 0) - mx2 * mx2;
  const double var_p1 = m(0, 2, 0, 0) - mp1 * mp1;
  const double var_p2 = m(0, 0, 0, 2) - mp2 * mp2;
  const double cov_x = m(1, 0, 1, 0) - mx1 * mx2;
  const double cov_p = m(0, 1, 0, 1) - mp1 * mp2;
  const double cov_xp = m(1, 1, 0, 0) - mx1 * mp1;

  PssvMomentSteering out;
  out.inferred_var_x1 = var_x1 - cov_x * cov_x / var_x2;
  out.inferred_var_p1 = var_p1 - cov_p * cov_p / var_p2;
  out.reid_product = out.inferred_var_x1 * out.inferred_var_p1;
  out.sum_std = std::sqrt(var_x1 + var_p1 + 2.0 * cov_xp);
  out.m_inf = std::sqrt(out.inferred_var_x1) + std::sqrt(out.inferred_var_p1) - out.sum_std;
  return out;
}

SteeringVerdict pssv_m_inf_verdict(double alpha) {
  return SteeringVerdict::decide(SteeringCriterion::m_inf, pssv_closed_forms(alpha).m_inf_cv);
}

SteeringVerdict pssv_reid_verdict(double alpha) {
  return SteeringVerdict::decide(SteeringCriterion::reid, pssv_closed_forms(alpha).reid_product);
}

double reid_threshold_solver() {
  return bisect_root([](double a) { return pssv_closed_forms(a).reid_product - kReidBound; }, 0.1, 1.5, 1e-10);
}

}  // namespace mutunc
