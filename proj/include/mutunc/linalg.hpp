#pragma once

#include <vector>

#include "mutunc/matrix.hpp"

namespace mutunc {

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // column k belongs to values[k]
};

struct RealSvd {
  RealMatrix u;                 // rows x rows, orthogonal
  RealVector singular_values;   // min(rows, cols) values, descending, >= 0
  RealMatrix v;                 // cols x cols, orthogonal
};

// Cyclic complex Jacobi. The input must be Hermitian; only the upper triangle
// is trusted. Converges when the off-diagonal Frobenius norm drops below
// 1e-14 * ||H||_F, otherwise throws ConvergenceError after 100 sweeps.
HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& h);

// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& h);

// SVD via the eigendecomposition of MᵀM. Singular values are recovered as
// ||M v_i|| and those below 1e-13 * max are clamped to zero. Sign convention:
// the largest-magnitude entry of each right singular vector is positive.
RealSvd real_svd(const RealMatrix& m);

// M = U Σ Vᵀ rebuilt from an SVD.
RealMatrix reconstruct(const RealSvd& svd);

bool is_orthogonal(const RealMatrix& m, double tol);

}  // namespace mutunc
