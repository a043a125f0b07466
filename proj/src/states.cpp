#include "mutunc/states.hpp"

#include <cmath>
#include <numbers>

namespace mutunc {

namespace {

const cplx I_UNIT(0.0, 1.0);

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError(std::string(name) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

double param_or(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::vector<cplx> kron(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

ComplexMatrix projector(const std::vector<cplx>& v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

}  // namespace

Observable pauli_x() { return hermitian_unchecked(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}); }
Observable pauli_y() { return hermitian_unchecked(ComplexMatrix{{0.0, -I_UNIT}, {I_UNIT, 0.0}}); }
Observable pauli_z() { return hermitian_unchecked(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}); }

Observable pauli_dot(const Vec3& a) {
  return hermitian_unchecked(ComplexMatrix{{a[2], cplx(a[0], -a[1])}, {cplx(a[0], a[1]), -a[2]}});
}

DensityMatrix werner(double p) {
  require_unit_interval(p, "Werner weight p");
  const double s = 1.0 / std::numbers::sqrt2;
  const ComplexMatrix psi_minus = projector({0.0, s, -s, 0.0});
  return make_density_matrix(psi_minus * cplx(p) + ComplexMatrix::identity(4) * cplx((1.0 - p) / 4.0), {2, 2});
}

DensityMatrix singlet() { return werner(1.0); }

DensityMatrix canonical_example(double alpha) {
  const ComplexMatrix x = pauli_x().matrix();
  const ComplexMatrix y = pauli_y().matrix();
  const ComplexMatrix z = pauli_z().matrix();
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix m = ComplexMatrix::identity(4);
  m += tensor_product(z, id) * cplx(0.4 * (1.0 - alpha));
  m -= tensor_product(id, z) * cplx(0.6 * (1.0 - alpha));
  m -= (tensor_product(x, x) + tensor_product(y, y) + tensor_product(z, z)) * cplx(alpha);
  m *= cplx(0.25);
  try {
    return make_density_matrix(m, {2, 2});
  } catch (const ValidationError& e) {
    throw ValidationError("canonical example is not a valid state at alpha = " + std::to_string(alpha) + ": " +
                          e.what());
  }
}

DensityMatrix tiles_bound_entangled() {
  const double h = 1.0 / std::numbers::sqrt2;
  const std::vector<cplx> k0{1, 0, 0}, k1{0, 1, 0}, k2{0, 0, 1};
  const std::vector<cplx> k0m1{h, -h, 0}, k1m2{0, h, -h};
  const double t = 1.0 / std::sqrt(3.0);
  const std::vector<cplx> all{t, t, t};
  const std::vector<std::vector<cplx>> tiles{kron(k0, k0m1), kron(k0m1, k2), kron(k2, k1m2), kron(k1m2, k0),
                                             kron(all, all)};
  ComplexMatrix m = ComplexMatrix::identity(9);
  for (const auto& v : tiles) m -= projector(v);
  m *= cplx(0.25);
  return make_density_matrix(m, {3, 3});
}

DensityMatrix schmidt_pure(double lambda) {
  require_unit_interval(lambda, "Schmidt coefficient lambda");
  const std::vector<cplx> ket{std::sqrt(lambda), 0.0, 0.0, std::sqrt(1.0 - lambda)};
  return pure_state(ket, {2, 2});
}

DensityMatrix nqubit_product(const std::vector<Vec3>& bloch_vectors) {
  if (bloch_vectors.empty()) throw ValidationError("product state needs at least one qubit");
  ComplexMatrix m = ComplexMatrix::identity(1);
  for (const auto& r : bloch_vectors) {
    const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (len > 1.0 + 1e-12) throw ValidationError("Bloch vector longer than 1: " + std::to_string(len));
    ComplexMatrix local = ComplexMatrix::identity(2) + pauli_dot(r).matrix();
    local *= cplx(0.5);
    m = tensor_product(m, local);
  }
  return make_density_matrix(m, std::vector<std::size_t>(bloch_vectors.size(), 2));
}

DensityMatrix ghz3() {
  std::vector<cplx> ket(8, 0.0);
  ket[0] = ket[7] = 1.0 / std::numbers::sqrt2;
  return pure_state(ket, {2, 2, 2});
}

NamedState make_named_state(const std::string& id, const std::map<std::string, double>& params) {
  if (id == "werner") {
    const double p = param_or(params, "p", 1.0);
    return {id, {{"p", p}}, werner(p)};
  }
  if (id == "canonical") {
    const double a = param_or(params, "alpha", 0.5);
    return {id, {{"alpha", a}}, canonical_example(a)};
  }
  if (id == "tiles") return {id, {}, tiles_bound_entangled()};
  if (id == "schmidt") {
    const double l = param_or(params, "lambda", 0.5);
    return {id, {{"lambda", l}}, schmidt_pure(l)};
  }
  if (id == "nqubit-product") {
    const double n_real = param_or(params, "n", 2.0);
    if (n_real < 1.0 || n_real > 10.0 || n_real != std::floor(n_real)) {
      throw ValidationError("nqubit-product needs an integer n in [1, 10]");
    }
    const auto n = static_cast<std::size_t>(n_real);
    std::map<std::string, double> used{{"n", n_real}};
    std::vector<Vec3> vecs;
    for (std::size_t i = 0; i < n; ++i) {
      const double theta = param_or(params, "theta" + std::to_string(i), 0.0);
      const double phi = param_or(params, "phi" + std::to_string(i), 0.0);
      used["theta" + std::to_string(i)] = theta;
      used["phi" + std::to_string(i)] = phi;
      vecs.push_back({std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)});
    }
    return {id, used, nqubit_product(vecs)};
  }
  throw ValidationError("unknown state id '" + id + "'");
}

// --- Sampler -----------------------------------------------------------------

double Sampler::uniform() {
  // 53 high bits -> [0, 1)
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Sampler::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<cplx> Sampler::ket(std::size_t dim) {
  std::vector<cplx> v(dim);
  double n2 = 0.0;
  for (auto& a : v) {
    const double re = normal();
    const double im = normal();
    a = cplx(re, im);
    n2 += std::norm(a);
  }
  const double s = 1.0 / std::sqrt(n2);
  for (auto& a : v) a *= s;
  return v;
}

DensityMatrix Sampler::pure_state(std::size_t dim) { return mutunc::pure_state(ket(dim), {dim}); }

std::vector<double> Sampler::weights(std::size_t count) {
  std::vector<double> w(count);
  double total = 0.0;
  for (auto& x : w) {
    x = uniform() + 1e-3;
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

DensityMatrix Sampler::mixed_state(std::size_t dim) {
  const std::size_t terms = 1 + static_cast<std::size_t>(uniform() * 4.0);
  const auto w = weights(terms);
  ComplexMatrix m(dim, dim);
  for (std::size_t t = 0; t < terms; ++t) m += projector(ket(dim)) * cplx(w[t]);
  return make_density_matrix(m, {dim});
}

DensityMatrix Sampler::product_pure_state(const std::vector<std::size_t>& dims) {
  std::vector<cplx> v{1.0};
  for (auto d : dims) v = kron(v, ket(d));
  return mutunc::pure_state(v, dims);
}

DensityMatrix Sampler::separable_state(std::size_t local_dim) {
  const std::size_t terms = 1 + static_cast<std::size_t>(uniform() * 4.0);
  const auto w = weights(terms);
  ComplexMatrix m(local_dim * local_dim, local_dim * local_dim);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto a = ket(local_dim);
    const auto b = ket(local_dim);
    m += projector(kron(a, b)) * cplx(w[t]);
  }
  return make_density_matrix(m, {local_dim, local_dim});
}

Observable Sampler::observable(std::size_t dim) {
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const double re = normal();
      const double im = normal();
      g(i, j) = cplx(re, im);
    }
  ComplexMatrix h = (g + g.adjoint()) * cplx(0.5);
  const double scale = h.max_abs();
  if (scale > 0.0) h *= cplx(1.0 / scale);
  return hermitian_unchecked(std::move(h));
}

RealMatrix Sampler::rotation(std::size_t n) {
  RealMatrix q(n, n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) = normal();
    // Modified Gram-Schmidt on rows, two passes.
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t k = 0; k < i; ++k) {
          double proj = 0.0;
          for (std::size_t c = 0; c < n; ++c) proj += q(i, c) * q(k, c);
          for (std::size_t c = 0; c < n; ++c) q(i, c) -= proj * q(k, c);
        }
      double len = 0.0;
      for (std::size_t c = 0; c < n; ++c) len += q(i, c) * q(i, c);
      len = std::sqrt(len);
      if (len < 1e-8) {
        ok = false;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) q(i, c) /= len;
    }
    if (ok) return q;
  }
}

Vec3 Sampler::unit_vector3() {
  for (;;) {
    const Vec3 v{normal(), normal(), normal()};
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (len > 1e-8) return {v[0] / len, v[1] / len, v[2] / len};
  }
}

Sample random_sample(SampleKind kind, std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw ValidationError("random samples need dim >= 2");
  Sampler s(seed);
  switch (kind) {
    case SampleKind::pure:
      return s.pure_state(dim);
    case SampleKind::mixed:
      return s.mixed_state(dim);
    case SampleKind::separable:
      return s.separable_state(dim);
    case SampleKind::observable:
      return s.observable(dim);
    case SampleKind::rotation:
      return s.rotation(dim);
  }
  throw ValidationError("unsupported sample kind");
}

}  // namespace mutunc
