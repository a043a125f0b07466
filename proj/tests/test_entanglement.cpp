#include <numbers>

#include "mutunc/entanglement.hpp"
#include "mutunc/reproduce.hpp"
#include "mutunc/uncertainty.hpp"
#include "support.hpp"

using namespace mutunc;
using namespace testing;

namespace {

Vec3 bloch3(const DensityMatrix& rho, std::size_t site) {
  const auto r = bloch_vector(rho, gell_mann_basis(2), site);
  return {r[0], r[1], r[2]};
}

double generic_two_qubit(const DensityMatrix& psi, const Vec3& a, const Vec3& b) {
  const auto& dims = psi.subsystem_dims();
  return mutual_uncertainty(psi, embed(pauli_dot(a), 0, dims), embed(pauli_dot(b), 1, dims));
}

}  // namespace

TEST_SUITE("entanglement-detect") {
  TEST_CASE("verdict margins") {
    CHECK(DetectionVerdict::decide("x", 1.0 + 2e-10, 1.0, Violation::Above).entangled());
    CHECK_FALSE(DetectionVerdict::decide("x", 1.0 + 5e-11, 1.0, Violation::Above).entangled());
    CHECK(DetectionVerdict::decide("x", -2e-10, 0.0, Violation::Below).entangled());
    CHECK_FALSE(DetectionVerdict::decide("x", -5e-11, 0.0, Violation::Below).entangled());
    CHECK(DetectionVerdict::decide("x", 1.1, 1.0, Violation::Deviates, 0.05).entangled());
    CHECK_FALSE(DetectionVerdict::decide("x", 1.01, 1.0, Violation::Deviates, 0.05).entangled());
  }

  TEST_CASE("conditional_variance_witness") {
    const auto b2 = gell_mann_basis(2);
    const auto sigma = orthogonal_observable_set(b2, RealMatrix::identity(3));
    const auto v = conditional_variance_witness(singlet(), sigma, sigma);
    CHECK(v.statistic == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(v.threshold == 2.0);
    CHECK(v.entangled());

    Sampler s(50);
    for (int t = 0; t < 200; ++t) {
      const std::size_t d = 2 + static_cast<std::size_t>(t) % 2;
      const auto basis = gell_mann_basis(d);
      const auto n = d * d - 1;
      const auto rho = s.product_pure_state({d, d});
      const auto a = orthogonal_observable_set(basis, s.rotation(n));
      const auto b = orthogonal_observable_set(basis, s.rotation(n));
      CHECK(conditional_variance_witness(rho, a, b).statistic >= 2.0 * static_cast<double>(d - 1) - 1e-9);
    }

    CHECK_THROWS_AS(conditional_variance_witness(tiles_bound_entangled(), sigma, sigma), DimensionError);
  }

  TEST_CASE("witness with aligned sets detects Werner states above a threshold") {
    const auto b2 = gell_mann_basis(2);
    auto margin = [&](double p) {
      const auto rho = werner(p);
      const auto sets = svd_aligned_observable_sets(pairwise_correlation_tensor(rho, b2, 0, 1), b2);
      const auto v = conditional_variance_witness(rho, sets.a, sets.b);
      return v.statistic - v.threshold;
    };
    // statistic 3 - 6p against 2 (for p > 0 where the aligned sets exist)
    CHECK(margin(0.1) > 0.0);
    CHECK(margin(0.9) < 0.0);
    double lo = 0.1, hi = 0.9;
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      (margin(mid) > 0.0 ? lo : hi) = mid;
    }
    CHECK(lo == doctest::Approx(1.0 / 6.0).epsilon(1e-7));
  }

  TEST_CASE("kyfan criteria on the canonical example") {
    const double condf = 5.0 * std::sqrt(221.0) - 74.0;
    CHECK(49.0 / (74.0 + 5.0 * std::sqrt(221.0)) == doctest::Approx(condf).epsilon(1e-14));
    CHECK(example1_threshold(Example1Criterion::condF) == doctest::Approx(condf).epsilon(1e-8));
    CHECK(example1_threshold(Example1Criterion::dsep) == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
    CHECK(kyfan_criterion(canonical_example(0.34), KyFanCriterion::condF).entangled());
    CHECK_FALSE(kyfan_criterion(canonical_example(0.32), KyFanCriterion::condF).entangled());
    CHECK(kyfan_criterion(canonical_example(0.34), KyFanCriterion::dsep).entangled());
    CHECK_FALSE(kyfan_criterion(canonical_example(0.33), KyFanCriterion::dsep).entangled());
    CHECK(kyfan_criterion(canonical_example(0.4), KyFanCriterion::dsep).statistic == doctest::Approx(1.2));
  }

  TEST_CASE("kyfan criteria on the Tiles state") {
    const auto rho = tiles_bound_entangled();
    const auto condf = kyfan_criterion(rho, KyFanCriterion::condF);
    const auto dsep = kyfan_criterion(rho, KyFanCriterion::dsep);
    CHECK(condf.threshold == doctest::Approx(4.0 / 3.0));
    CHECK(dsep.threshold == doctest::Approx(3.0));
    CHECK(dsep.statistic == doctest::Approx(3.1603).epsilon(5e-4 / 3.1603));
    CHECK(condf.entangled());
    CHECK(dsep.entangled());
    CHECK_THROWS_AS(kyfan_criterion(ghz3(), KyFanCriterion::condF), DimensionError);
  }

  TEST_CASE("condF threshold never exceeds dsep on qubits") {
    Sampler s(51);
    for (int t = 0; t < 200; ++t) {
      const auto rho = make_density_matrix(s.mixed_state(4).matrix(), {2, 2});
      const auto c = kyfan_criterion(rho, KyFanCriterion::condF);
      const auto d = kyfan_criterion(rho, KyFanCriterion::dsep);
      CHECK(c.threshold <= d.threshold + 1e-15);
      CHECK(c.statistic == doctest::Approx(d.statistic).epsilon(1e-14));
      if (d.entangled()) CHECK(c.entangled());
    }
  }

  TEST_CASE("ppt_criterion") {
    Sampler s(52);
    for (int t = 0; t < 50; ++t) CHECK_FALSE(ppt_criterion(s.product_pure_state({2, 3})).entangled());
    CHECK_FALSE(ppt_criterion(werner(0.3)).entangled());
    CHECK(ppt_criterion(werner(0.34)).entangled());
    CHECK(werner_ppt_threshold() == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
    CHECK_FALSE(ppt_criterion(tiles_bound_entangled()).entangled());
    CHECK(ppt_criterion(tiles_bound_entangled()).statistic >= -1e-10);
    CHECK(example1_threshold(Example1Criterion::ppt) == doctest::Approx((5.0 * std::sqrt(6.0) - 6.0) / 19.0).epsilon(1e-8));
  }

  TEST_CASE("soundness on separable states") {
    Sampler s(53);
    for (int t = 0; t < 500; ++t) {
      const std::size_t d = 2 + static_cast<std::size_t>(t) % 2;
      const auto rho = s.separable_state(d);
      CHECK_FALSE(ppt_criterion(rho).entangled());
      CHECK_FALSE(kyfan_criterion(rho, KyFanCriterion::condF).entangled());
      CHECK_FALSE(kyfan_criterion(rho, KyFanCriterion::dsep).entangled());
    }
  }

  TEST_CASE("pure_two_qubit_mutual") {
    Sampler s(54);
    for (int t = 0; t < 100; ++t) {
      const auto psi = s.product_pure_state({2, 2});
      const Vec3 a = orthogonal_unit_vector(s.unit_vector3(), bloch3(psi, 0));
      const Vec3 b = orthogonal_unit_vector(s.unit_vector3(), bloch3(psi, 1));
      const double m = pure_two_qubit_mutual(psi, a, b);
      CHECK(m == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
      CHECK(std::abs(m - generic_two_qubit(psi, a, b)) < 1e-10);
    }
    const Vec3 x{1, 0, 0};
    CHECK(pure_two_qubit_mutual(singlet(), x, x) == doctest::Approx(2.0));
    CHECK(std::abs(pure_two_qubit_mutual(schmidt_pure(0.5), x, x)) < 1e-7);

    for (int t = 0; t < 100; ++t) {
      const auto psi = s.pure_state(4);
      const auto rho = make_density_matrix(psi.matrix(), {2, 2});
      const auto r1 = bloch3(rho, 0), r2 = bloch3(rho, 1);
      if (std::sqrt(r1[0] * r1[0] + r1[1] * r1[1] + r1[2] * r1[2]) > 0.99) continue;
      const Vec3 a = orthogonal_unit_vector(s.unit_vector3(), r1);
      const Vec3 b = orthogonal_unit_vector(s.unit_vector3(), r2);
      CHECK(std::abs(pure_two_qubit_mutual(rho, a, b) - generic_two_qubit(rho, a, b)) < 1e-10);
    }

    CHECK_THROWS_AS(pure_two_qubit_mutual(werner(0.5), x, x), ValidationError);
    const Vec3 z{0, 0, 1};
    CHECK_THROWS_AS(pure_two_qubit_mutual(schmidt_pure(0.3), z, x), ValidationError);
    CHECK_THROWS_AS(pure_two_qubit_mutual(singlet(), {2, 0, 0}, x), ValidationError);
  }

  TEST_CASE("concurrence_from_mutual") {
    CHECK(std::abs(concurrence_from_mutual(2.0 - std::sqrt(2.0), 0.7)) < 1e-14);
    CHECK(concurrence_from_mutual(0.0, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(concurrence_from_mutual(0.5, 0.0), ValidationError);
    const Vec3 x{1, 0, 0};
    const double m = pure_two_qubit_mutual(schmidt_pure(0.3), x, x);
    CHECK(concurrence_from_mutual(m, 1.0) == doctest::Approx(2.0 * std::sqrt(0.21)).epsilon(1e-9));

    // in-plane a, b with t = a1 b1 - a2 b2
    const double th = 0.4, ph = -1.1;
    const Vec3 a{std::cos(th), std::sin(th), 0}, b{std::cos(ph), std::sin(ph), 0};
    const double tt = a[0] * b[0] - a[1] * b[1];
    for (double lambda : {0.05, 0.2, 0.45, 0.8}) {
      const double c = concurrence_from_mutual(pure_two_qubit_mutual(schmidt_pure(lambda), a, b), tt);
      CHECK(c == doctest::Approx(2.0 * std::sqrt(lambda * (1.0 - lambda))).epsilon(1e-9));
      CHECK(c >= -1e-8);
      CHECK(c <= 1.0 + 1e-8);
      CHECK(2.0 - std::sqrt(2.0 + 2.0 * c * tt) ==
            doctest::Approx(pure_two_qubit_mutual(schmidt_pure(lambda), a, b)).epsilon(1e-10));
    }
  }

  TEST_CASE("orthogonal_unit_vector") {
    const Vec3 v = orthogonal_unit_vector({1, 1, 0}, {0, 0.5, 0});
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(std::abs(v[1]) < 1e-15);
    CHECK_THROWS_AS(orthogonal_unit_vector({0, 1, 0}, {0, 1, 0}), ValidationError);
  }

  TEST_CASE("nqubit_product_test") {
    const Vec3 x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    const auto three = nqubit_product({z, x, y});
    const auto res = nqubit_product_test(three, {x, y, z});
    CHECK(res.mutual == doctest::Approx(3.0 - std::sqrt(3.0)).epsilon(1e-12));
    CHECK(res.closed_form == doctest::Approx(res.mutual).epsilon(1e-12));
    CHECK_FALSE(res.verdict.entangled());

    const auto two = nqubit_product({z, z});
    CHECK(nqubit_product_test(two, {x, y}).mutual == doctest::Approx(2.0 - std::sqrt(2.0)));

    // x̂ on every qubit of GHZ3 happens to give exactly 3 - √3
    const auto gx = nqubit_product_test(ghz3(), {x, x, x});
    CHECK(gx.mutual == doctest::Approx(3.0 - std::sqrt(3.0)).epsilon(1e-12));
    const auto gz = nqubit_product_test(ghz3(), {z, z, z});
    CHECK(std::abs(gz.mutual - (3.0 - std::sqrt(3.0))) > 1e-3);
    CHECK(gz.verdict.entangled());
    CHECK(gz.closed_form == doctest::Approx(gz.mutual).epsilon(1e-12));

    Sampler s(55);
    for (int t = 0; t < 50; ++t) {
      const auto psi = make_density_matrix(s.pure_state(8).matrix(), {2, 2, 2});
      std::vector<Vec3> vecs;
      for (std::size_t i = 0; i < 3; ++i) vecs.push_back(orthogonal_unit_vector(s.unit_vector3(), bloch3(psi, i)));
      const auto r = nqubit_product_test(psi, vecs);
      CHECK(std::abs(r.mutual - r.closed_form) < 1e-10);
    }

    CHECK_THROWS_AS(nqubit_product_test(three, {x, y}), DimensionError);
    CHECK_THROWS_AS(nqubit_product_test(three, {z, y, z}), ValidationError);
    CHECK_THROWS_AS(nqubit_product_test(tiles_bound_entangled(), {x, x}), DimensionError);
  }

  TEST_CASE("default_product_test_vectors") {
    const auto psi = nqubit_product({{1, 0, 0}, {0, 0, 1}, {0.6, 0.8, 0}});
    const auto vecs = default_product_test_vectors(psi);
    const auto res = nqubit_product_test(psi, vecs);
    CHECK(res.mutual == doctest::Approx(3.0 - std::sqrt(3.0)).epsilon(1e-12));
  }
}
