#include "mutunc/operators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "mutunc/linalg.hpp"

namespace mutunc {

namespace {

ComplexMatrix symmetrized(const ComplexMatrix& m) {
  ComplexMatrix h(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

double hermiticity_defect(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void require_same_dim(const Observable& a, const Observable& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("observable dimensions differ: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

// Mixed-radix digits of a flat index, most significant subsystem first.
std::vector<std::size_t> digits(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
  return out;
}

std::size_t flatten(std::span<const std::size_t> idx, std::span<const std::size_t> dims) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + idx[k];
  return flat;
}

}  // namespace

Observable make_observable(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("observable must be square, got " + m.shape_string());
  const double defect = hermiticity_defect(m);
  if (defect > kHermiticityTolerance) {
    throw ValidationError("observable is not Hermitian (max |M - M^dagger| = " + std::to_string(defect) + ")");
  }
  return Observable(symmetrized(m));
}

Observable hermitian_unchecked(ComplexMatrix m) { return Observable(symmetrized(m)); }

Observable Observable::zero(std::size_t dim) { return Observable(ComplexMatrix(dim, dim)); }
Observable Observable::identity(std::size_t dim) { return Observable(ComplexMatrix::identity(dim)); }

Observable operator+(const Observable& a, const Observable& b) {
  require_same_dim(a, b);
  return Observable(a.m_ + b.m_);
}

Observable operator-(const Observable& a, const Observable& b) {
  require_same_dim(a, b);
  return Observable(a.m_ - b.m_);
}

Observable operator*(double s, const Observable& a) { return Observable(a.m_ * cplx(s)); }

Observable Observable::operator-() const { return Observable(-m_); }

double DensityMatrix::purity() const { return trace_of_product(m_, m_).real(); }

DensityMatrix make_density_matrix(const ComplexMatrix& m, std::vector<std::size_t> dims) {
  if (!m.is_square()) throw DimensionError("density matrix must be square, got " + m.shape_string());
  if (dims.empty()) dims = {m.rows()};
  if (std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end()) {
    throw DimensionError("subsystem dimensions must be positive");
  }
  if (product(dims) != m.rows()) {
    throw DimensionError("subsystem dimensions multiply to " + std::to_string(product(dims)) +
                         " but the matrix is " + m.shape_string());
  }
  const double defect = hermiticity_defect(m);
  if (defect > kHermiticityTolerance) {
    throw ValidationError("density matrix is not Hermitian (max |M - M^dagger| = " + std::to_string(defect) + ")");
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw ValidationError("density matrix trace is " + std::to_string(tr) + ", expected 1");
  }
  ComplexMatrix h = symmetrized(m);
  const double lowest = min_eigenvalue(h);
  if (lowest < kPositivityTolerance) {
    throw ValidationError("density matrix has negative eigenvalue " + std::to_string(lowest));
  }
  return DensityMatrix(std::move(h), std::move(dims));
}

DensityMatrix pure_state(std::span<const cplx> ket, std::vector<std::size_t> dims) {
  double n2 = 0.0;
  for (const auto& a : ket) n2 += std::norm(a);
  if (n2 <= 0.0) throw ValidationError("cannot normalize a zero ket");
  const double scale = 1.0 / n2;
  ComplexMatrix m(ket.size(), ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]) * scale;
  return make_density_matrix(m, std::move(dims));
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

Observable tensor_product(const Observable& a, const Observable& b) {
  return hermitian_unchecked(tensor_product(a.matrix(), b.matrix()));
}

Observable embed(const Observable& op, std::size_t site, std::span<const std::size_t> dims) {
  if (site >= dims.size()) {
    throw DimensionError("site " + std::to_string(site) + " out of range for " + std::to_string(dims.size()) +
                         " subsystems");
  }
  if (op.dim() != dims[site]) {
    throw DimensionError("operator of dimension " + std::to_string(op.dim()) + " cannot act on site " +
                         std::to_string(site) + " of dimension " + std::to_string(dims[site]));
  }
  const std::size_t left = product(dims.subspan(0, site));
  const std::size_t right = product(dims.subspan(site + 1));
  ComplexMatrix m = tensor_product(ComplexMatrix::identity(left), op.matrix());
  m = tensor_product(m, ComplexMatrix::identity(right));
  return hermitian_unchecked(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep) {
  const auto& dims = rho.subsystem_dims();
  if (keep.empty()) throw DimensionError("partial trace must keep at least one subsystem");
  std::set<std::size_t> kept(keep.begin(), keep.end());
  if (kept.size() != keep.size()) throw DimensionError("duplicate subsystem index in partial trace");
  for (std::size_t k : kept) {
    if (k >= dims.size()) {
      throw DimensionError("subsystem " + std::to_string(k) + " out of range for " + std::to_string(dims.size()) +
                           " subsystems");
    }
  }
  std::vector<std::size_t> kept_sites(kept.begin(), kept.end());
  std::vector<std::size_t> traced_sites;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (!kept.count(k)) traced_sites.push_back(k);

  std::vector<std::size_t> kept_dims, traced_dims;
  for (auto k : kept_sites) kept_dims.push_back(dims[k]);
  for (auto k : traced_sites) traced_dims.push_back(dims[k]);
  const std::size_t nk = product(kept_dims);
  const std::size_t nt = product(traced_dims);

  std::vector<std::size_t> full(dims.size());
  auto global_index = [&](std::size_t kept_flat, std::size_t traced_flat) {
    const auto kd = digits(kept_flat, kept_dims);
    const auto td = digits(traced_flat, traced_dims);
    for (std::size_t i = 0; i < kept_sites.size(); ++i) full[kept_sites[i]] = kd[i];
    for (std::size_t i = 0; i < traced_sites.size(); ++i) full[traced_sites[i]] = td[i];
    return flatten(full, dims);
  };

  // Precompute the global index table once: (kept, traced) -> flat.
  std::vector<std::size_t> table(nk * nt);
  for (std::size_t a = 0; a < nk; ++a)
    for (std::size_t t = 0; t < nt; ++t) table[a * nt + t] = global_index(a, t);

  const auto& m = rho.matrix();
  ComplexMatrix out(nk, nk);
  for (std::size_t a = 0; a < nk; ++a)
    for (std::size_t b = 0; b < nk; ++b) {
      cplx s{};
      for (std::size_t t = 0; t < nt; ++t) s += m(table[a * nt + t], table[b * nt + t]);
      out(a, b) = s;
    }
  return make_density_matrix(out, kept_dims);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims, std::size_t sys) {
  if (sys >= dims.size()) {
    throw DimensionError("subsystem " + std::to_string(sys) + " out of range for " + std::to_string(dims.size()) +
                         " subsystems");
  }
  if (!m.is_square() || product(dims) != m.rows()) throw DimensionError("partial transpose: dims do not match matrix");
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    auto rd = digits(r, dims);
    for (std::size_t c = 0; c < n; ++c) {
      auto cd = digits(c, dims);
      std::swap(rd[sys], cd[sys]);
      out(flatten(rd, dims), flatten(cd, dims)) = m(r, c);
      std::swap(rd[sys], cd[sys]);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t sys) {
  return partial_transpose(rho.matrix(), rho.subsystem_dims(), sys);
}

double expectation(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != a.dim()) {
    throw DimensionError("state dimension " + std::to_string(rho.dim()) + " does not match observable dimension " +
                         std::to_string(a.dim()));
  }
  return trace_of_product(rho.matrix(), a.matrix()).real();
}

}  // namespace mutunc
