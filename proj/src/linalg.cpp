#include "mutunc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mutunc {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-14;
constexpr double kSingularClamp = 1e-13;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zero a(p,q) with the unitary U = diag(1, e^{-iφ}) · [[c, s], [-s, c]]
// acting on the (p, q) plane, a <- U† a U and v <- v U.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag;  // e^{iφ}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // Columns of U: u_p = (c, -s e^{-iφ}), u_q = (s, c e^{-iφ}) in the (p, q) plane.
  const cplx up_p = c, uq_p = -s * std::conj(phase);
  const cplx up_q = s, uq_q = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {  // a <- a U
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * up_p + akq * uq_p;
    a(k, q) = akp * up_q + akq * uq_q;
  }
  for (std::size_t k = 0; k < n; ++k) {  // a <- U† a
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(up_p) * apk + std::conj(uq_p) * aqk;
    a(q, k) = std::conj(up_q) * apk + std::conj(uq_q) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (std::size_t k = 0; k < n; ++k) {  // v <- v U
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * up_p + vkq * uq_p;
    v(k, q) = vkp * up_q + vkq * uq_q;
  }
}

}  // namespace

HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& h) {
  if (!h.is_square()) throw DimensionError("eigendecomposition needs a square matrix, got " + h.shape_string());
  const std::size_t n = h.rows();

  // Work on an exactly Hermitian copy built from the upper triangle.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = h(i, j);
      a(j, i) = std::conj(h(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kOffDiagonalTolerance * a.frobenius_norm();
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kMaxSweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigen out{RealVector(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& h) {
  const auto eig = hermitian_eigendecomposition(h);
  return eig.values.empty() ? 0.0 : eig.values.front();
}

RealSvd real_svd(const RealMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t k = std::min(rows, cols);

  const RealMatrix gram = m.transpose() * m;
  const auto eig = hermitian_eigendecomposition(to_complex(gram));

  // Right singular vectors, largest eigenvalue first.
  RealMatrix v(cols, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const std::size_t src = cols - 1 - c;
    std::size_t pivot = 0;
    for (std::size_t r = 0; r < cols; ++r) {
      v(r, c) = eig.vectors(r, src).real();
      if (std::abs(v(r, c)) > std::abs(v(pivot, c))) pivot = r;
    }
    if (v(pivot, c) < 0)
      for (std::size_t r = 0; r < cols; ++r) v(r, c) = -v(r, c);
  }

  // σ_i = ||M v_i||, re-sorted since column norms can swap near-ties.
  const RealMatrix mv = m * v;
  RealVector sigma(cols);
  for (std::size_t c = 0; c < cols; ++c) sigma[c] = norm(mv.column(c));
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  RealSvd out{RealMatrix(rows, rows), RealVector(k), RealMatrix(cols, cols)};
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < cols; ++r) out.v(r, c) = v(r, order[c]);

  const double smax = cols == 0 ? 0.0 : sigma[order[0]];
  for (std::size_t i = 0; i < k; ++i) {
    const double s = sigma[order[i]];
    out.singular_values[i] = (s < kSingularClamp * smax) ? 0.0 : s;
  }

  // Left singular vectors: u_i = M v_i / σ_i for nonzero σ_i, then complete
  // the basis with Gram-Schmidt over the canonical vectors.
  std::vector<RealVector> basis;
  basis.reserve(rows);
  auto orthonormalize = [&](RealVector w) -> bool {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const double proj = dot(w, b);
        for (std::size_t r = 0; r < rows; ++r) w[r] -= proj * b[r];
      }
    }
    const double len = norm(w);
    if (len < 1e-8) return false;
    for (auto& x : w) x /= len;
    basis.push_back(std::move(w));
    return true;
  };
  for (std::size_t i = 0; i < k && out.singular_values[i] > 0.0; ++i) {
    RealVector w = mv.column(order[i]);
    orthonormalize(std::move(w));
  }
  for (std::size_t e = 0; e < rows && basis.size() < rows; ++e) {
    RealVector w(rows, 0.0);
    w[e] = 1.0;
    orthonormalize(std::move(w));
  }
  for (std::size_t c = 0; c < rows; ++c)
    for (std::size_t r = 0; r < rows; ++r) out.u(r, c) = basis[c][r];
  return out;
}

RealMatrix reconstruct(const RealSvd& svd) {
  const std::size_t rows = svd.u.rows();
  const std::size_t cols = svd.v.rows();
  RealMatrix m(rows, cols);
  for (std::size_t i = 0; i < svd.singular_values.size(); ++i) {
    const double s = svd.singular_values[i];
    if (s == 0.0) continue;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) += svd.u(r, i) * s * svd.v(c, i);
  }
  return m;
}

bool is_orthogonal(const RealMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return max_abs_diff(m * m.transpose(), RealMatrix::identity(m.rows())) <= tol;
}

}  // namespace mutunc
