#include <Eigen/Dense>

#include <numbers>

#include "mutunc/generators.hpp"
#include "mutunc/linalg.hpp"
#include "mutunc/matrix_io.hpp"
#include "support.hpp"

using namespace mutunc;
using namespace testing;

namespace {

const cplx I{0.0, 1.0};

ComplexMatrix random_complex(Sampler& s, std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(s.normal(), s.normal());
  return m;
}

RealMatrix random_real(Sampler& s, std::size_t r, std::size_t c) {
  RealMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = s.normal();
  return m;
}

double unitarity_error(const ComplexMatrix& v) {
  return max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(v.cols()));
}

}  // namespace

TEST_SUITE("operator-core") {
  TEST_CASE("make_observable") {
    CHECK_NOTHROW(make_observable(pauli(0)));
    ComplexMatrix bad{{0.0, I}, {I, 0.0}};
    CHECK_THROWS_AS(make_observable(bad), ValidationError);
    CHECK_THROWS_AS(make_observable(ComplexMatrix(2, 3)), DimensionError);
    const Observable sum = pauli_x() + pauli_z();
    CHECK(max_abs_diff(sum.matrix(), pauli(0) + pauli(2)) == 0.0);
  }

  TEST_CASE("make_density_matrix") {
    CHECK_NOTHROW(make_density_matrix(ComplexMatrix::identity(2) * cplx(0.5), {2}));
    // |0><0| - 0.1 |1><1| rescaled to unit trace
    ComplexMatrix neg{{1.0 / 0.9, 0.0}, {0.0, -0.1 / 0.9}};
    CHECK_THROWS_AS(make_density_matrix(neg, {2}), ValidationError);
    CHECK_NOTHROW(werner(0.5));
    CHECK_THROWS_AS(make_density_matrix(ComplexMatrix::identity(4) * cplx(0.25), {2, 3}), DimensionError);
    CHECK_THROWS_AS(make_density_matrix(ComplexMatrix::identity(2), {2}), ValidationError);
    // empty dims means one subsystem
    CHECK(make_density_matrix(ComplexMatrix::identity(3) * cplx(1.0 / 3), {}).subsystem_dims() ==
          std::vector<std::size_t>{3});
  }

  TEST_CASE("gell_mann_basis") {
    const auto b2 = gell_mann_basis(2);
    REQUIRE(b2.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(max_abs_diff(b2[k].matrix(), pauli(k)) < 1e-15);
    CHECK(gell_mann_basis(3).size() == 8);
    CHECK_THROWS_AS(gell_mann_basis(1), ValidationError);

    for (std::size_t d = 2; d <= 6; ++d) {
      const auto b = gell_mann_basis(d);
      CHECK(b.size() == d * d - 1);
      for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(std::abs(b[i].matrix().trace()) < 1e-12);
        for (std::size_t j = 0; j < b.size(); ++j) {
          const cplx t = trace_of_product(b[i].matrix(), b[j].matrix());
          CHECK(std::abs(t - cplx(i == j ? 2.0 : 0.0)) < 1e-12);
        }
      }
    }
  }

  TEST_CASE("structure constants") {
    const auto b2 = gell_mann_basis(2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          double eps = 0.0;
          if (i != j && j != k && i != k) eps = ((j + 3 - i) % 3 == 1) ? 1.0 : -1.0;
          CHECK(b2.f(i, j, k) == doctest::Approx(eps).epsilon(1e-14));
          CHECK(std::abs(b2.d_sym(i, j, k)) < 1e-14);
        }

    for (std::size_t d : {2u, 3u, 4u}) {
      const auto b = gell_mann_basis(d);
      for (std::size_t k = 0; k < b.size(); ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < b.size(); ++i) s += b.d_sym(i, i, k);
        CHECK(std::abs(s) < 1e-10);
      }
    }
  }

  TEST_CASE("generator product expansion") {
    for (std::size_t d = 2; d <= 5; ++d) {
      const auto b = gell_mann_basis(d);
      const auto n = b.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          ComplexMatrix rhs = ComplexMatrix::identity(d) * cplx(i == j ? 2.0 / static_cast<double>(d) : 0.0);
          for (std::size_t k = 0; k < n; ++k) rhs += b[k].matrix() * cplx(b.d_sym(i, j, k), b.f(i, j, k));
          CHECK(max_abs_diff(b[i].matrix() * b[j].matrix(), rhs) < 1e-10);
        }
    }
  }

  TEST_CASE("tensor_product") {
    CHECK(max_abs_diff(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4)) == 0.0);
    const auto zz = tensor_product(pauli(2), pauli(2));
    const double diag[] = {1, -1, -1, 1};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(zz(i, j) == cplx(i == j ? diag[i] : 0.0));

    Sampler s(11);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_complex(s, 2), b = random_complex(s, 2), c = random_complex(s, 2),
                 d = random_complex(s, 2);
      CHECK(max_abs_diff(tensor_product(a, b) * tensor_product(c, d), tensor_product(a * c, b * d)) < 1e-12);
    }
  }

  TEST_CASE("partial_trace") {
    Sampler s(5);
    const auto r1 = s.mixed_state(2), r2 = s.mixed_state(3);
    const auto prod = product(r1, r2);
    CHECK(max_abs_diff(partial_trace(prod, {0}).matrix(), r1.matrix()) < 1e-14);
    CHECK(max_abs_diff(partial_trace(prod, {1}).matrix(), r2.matrix()) < 1e-14);

    const ComplexMatrix half = ComplexMatrix::identity(2) * cplx(0.5);
    for (std::size_t site : {0u, 1u}) CHECK(max_abs_diff(partial_trace(singlet(), {site}).matrix(), half) < 1e-15);
    for (double p : {0.0, 0.3, 0.7, 1.0}) CHECK(max_abs_diff(partial_trace(werner(p), {1}).matrix(), half) < 1e-15);

    const auto three = product(prod, s.mixed_state(2));
    const auto kept = partial_trace(three, {0, 2});
    CHECK(kept.subsystem_dims() == std::vector<std::size_t>{2, 2});
    CHECK(std::abs(kept.matrix().trace() - 1.0) < 1e-12);
    CHECK_THROWS(partial_trace(prod, {2}));
    CHECK_THROWS(partial_trace(prod, {}));
  }

  TEST_CASE("partial_transpose") {
    Sampler s(3);
    const auto prod = s.product_pure_state({2, 3});
    CHECK(min_eigenvalue(partial_transpose(prod, 1)) >= -1e-12);
    CHECK(min_eigenvalue(partial_transpose(singlet(), 1)) == doctest::Approx(-0.5).epsilon(1e-12));
    const auto rho = s.mixed_state(6);
    const auto mixed = make_density_matrix(rho.matrix(), {2, 3});
    const auto twice = partial_transpose(partial_transpose(mixed, 0), mixed.subsystem_dims(), 0);
    CHECK(max_abs_diff(twice, mixed.matrix()) < 1e-14);
    CHECK_THROWS(partial_transpose(mixed, 2));
  }

  TEST_CASE("hermitian_eigendecomposition") {
    const auto e3 = hermitian_eigendecomposition(ComplexMatrix::identity(3));
    for (double v : e3.values) CHECK(v == doctest::Approx(1.0));
    const auto ex = hermitian_eigendecomposition(pauli(0));
    CHECK(ex.values[0] == doctest::Approx(-1.0));
    CHECK(ex.values[1] == doctest::Approx(1.0));

    const auto werner_half = hermitian_eigendecomposition(werner(0.5).matrix());
    CHECK(werner_half.values[0] == doctest::Approx(0.125));
    CHECK(werner_half.values[3] == doctest::Approx(0.625));

    Sampler s(9);
    for (int t = 0; t < 50; ++t) {
      const ComplexMatrix h = s.observable(9).matrix();
      const auto e = hermitian_eigendecomposition(h);
      ComplexMatrix lambda(9, 9);
      for (std::size_t k = 0; k < 9; ++k) lambda(k, k) = e.values[k];
      CHECK(max_abs_diff(e.vectors * lambda * e.vectors.adjoint(), h) <= 1e-11 * h.max_abs());
      CHECK(unitarity_error(e.vectors) < 1e-11);
      double sum = 0.0;
      for (double v : e.values) sum += v;
      CHECK(std::abs(sum - h.trace().real()) < 1e-11);
      CHECK(std::is_sorted(e.values.begin(), e.values.end()));
    }
  }

  TEST_CASE("eigenvalues agree with Eigen") {
    Sampler s(1234);
    for (int t = 0; t < 400; ++t) {
      const std::size_t n = cycle_dim(t);
      const ComplexMatrix h = s.observable(n).matrix();
      Eigen::MatrixXcd em(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) em(i, j) = h(i, j);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
      const auto ours = hermitian_eigendecomposition(h).values;
      for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(ours[k] - solver.eigenvalues()(k)) < 1e-11);
    }
  }

  TEST_CASE("eigensolver at n = 64") {
    Sampler s(64);
    const ComplexMatrix h = s.observable(64).matrix();
    const auto e = hermitian_eigendecomposition(h);
    ComplexMatrix lambda(64, 64);
    for (std::size_t k = 0; k < 64; ++k) lambda(k, k) = e.values[k];
    CHECK(max_abs_diff(e.vectors * lambda * e.vectors.adjoint(), h) <= 1e-11 * h.max_abs());
    CHECK(unitarity_error(e.vectors) < 1e-11);
  }

  TEST_CASE("real_svd") {
    const RealMatrix d{{1, 0, 0}, {0, -2, 0}, {0, 0, 3}};
    const auto sd = real_svd(d);
    CHECK(sd.singular_values[0] == doctest::Approx(3.0));
    CHECK(sd.singular_values[1] == doctest::Approx(2.0));
    CHECK(sd.singular_values[2] == doctest::Approx(1.0));

    Sampler s(8);
    for (int t = 0; t < 20; ++t) {
      const RealMatrix rot = s.rotation(5);
      for (double v : real_svd(rot).singular_values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    }
    for (int t = 0; t < 50; ++t) {
      const RealMatrix m = random_real(s, 8, 8);
      const auto svd = real_svd(m);
      CHECK(max_abs_diff(reconstruct(svd), m) < 1e-11);
      CHECK(is_orthogonal(svd.u, 1e-11));
      CHECK(is_orthogonal(svd.v, 1e-11));
      CHECK(std::is_sorted(svd.singular_values.rbegin(), svd.singular_values.rend()));
      for (double v : svd.singular_values) CHECK(v >= 0.0);
    }
    // rank deficient: U completion still orthogonal
    RealMatrix low(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) low(i, j) = static_cast<double>((i + 1) * (j + 1));
    const auto lsvd = real_svd(low);
    CHECK(lsvd.singular_values[1] == 0.0);
    CHECK(is_orthogonal(lsvd.u, 1e-11));
    CHECK(max_abs_diff(reconstruct(lsvd), low) < 1e-11);
  }

  TEST_CASE("singular-value sum is orthogonally invariant") {
    Sampler s(77);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 3 + static_cast<std::size_t>(t) % 6;
      const RealMatrix m = random_real(s, n, n);
      const RealMatrix q = s.rotation(n), r = s.rotation(n);
      double a = 0.0, b = 0.0;
      for (double v : real_svd(m).singular_values) a += v;
      for (double v : real_svd(q.transpose() * m * r).singular_values) b += v;
      CHECK(std::abs(a - b) < 1e-10);
    }
  }

  TEST_CASE("expectation") {
    Sampler s(2);
    const auto rho = s.mixed_state(4);
    CHECK(expectation(rho, Observable::identity(4)) == doctest::Approx(1.0).epsilon(1e-12));
    const auto zero = ket_state({1.0, 0.0}, {2});
    CHECK(expectation(zero, pauli_z()) == doctest::Approx(1.0));
    for (double p : {0.0, 0.25, 0.8}) {
      CHECK(expectation(werner(p), tensor_product(pauli_x(), pauli_x())) == doctest::Approx(-p).epsilon(1e-14));
    }
    CHECK_THROWS_AS(expectation(rho, pauli_x()), DimensionError);
  }

  TEST_CASE("matrix file round trip") {
    Sampler s(4);
    const auto rho = s.mixed_state(4);
    const auto text = to_matrix_json(rho.matrix(), {2, 2});
    const auto back = parse_matrix_json(text);
    CHECK(back.dims == std::vector<std::size_t>{2, 2});
    CHECK(max_abs_diff(back.matrix, rho.matrix()) < 1e-15);

    const auto real_only = parse_matrix_json(R"({"re": [[0.5, 0], [0, 0.5]]})");
    CHECK(real_only.dims == std::vector<std::size_t>{2});
    CHECK_THROWS(parse_matrix_json(R"({"re": [[1, 0], [0]]})"));
    CHECK_THROWS(parse_matrix_json(R"({"re": [[1, 0], [0, 1]], "im": [[0, 0]]})"));
    CHECK_THROWS(parse_matrix_json("not json"));
  }
}
