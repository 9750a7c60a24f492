#include <doctest.h>

#include <cmath>

#include "dit/verify.hpp"

using dit::IdentityId;
using dit::kPi;
using dit::Status;

TEST_CASE("status names") {
  CHECK(dit::status_name(Status::Pass) == "pass");
  CHECK(dit::status_name(Status::Fail) == "fail");
  CHECK(dit::status_name(Status::Inconclusive) == "inconclusive");
  CHECK(dit::identity_name(IdentityId::LaplaceK) == "LaplaceK");
}

TEST_CASE("sine-kernel identity") {
  const auto zero = dit::check_kernel_identity(IdentityId::Eq2_4, 1, kPi / 2);
  CHECK(std::abs(zero.rhs) <= 1e-16);
  CHECK(std::abs(zero.lhs) <= 1e-6);
  CHECK(zero.status == Status::Pass);
  const auto c = dit::check_kernel_identity(IdentityId::Eq2_4, 0, 1.0);
  CHECK(c.rhs == doctest::Approx(0.8509181282).epsilon(1e-10));
  CHECK(c.status == Status::Pass);
  CHECK(c.abs_err <= 1e-10);
  CHECK_THROWS_AS(dit::check_kernel_identity(IdentityId::Eq2_4, 0, 0.0), dit::DomainError);
  CHECK_THROWS_AS(dit::check_kernel_identity(IdentityId::Eq2_24, 0, 1.0), dit::DomainError);
}

TEST_CASE("cosine-kernel identity") {
  for (int n : {1, 4}) {
    for (double u : {0.5, kPi}) {
      const auto c = dit::check_kernel_identity(IdentityId::Eq2_24, n, u);
      CHECK(c.rhs == doctest::Approx(-std::cos(n * u) / std::sinh(u)));
      CHECK(c.status == Status::Pass);
    }
  }
}

TEST_CASE("Lommel orthogonality constant") {
  const auto c = dit::check_kernel_identity(IdentityId::Eq2_30, 2, 1.0, -1.0);
  CHECK(c.status == Status::Pass);
  CHECK(c.abs_err <= 1e-5 * (1.0 + std::abs(c.rhs)));
  const auto half = dit::check_lemma1(2, 1.0, -1.0, dit::LommelPower::TwoPowMuMinusOne);
  CHECK(half.status == Status::Fail);
  CHECK(half.lhs / half.rhs == doctest::Approx(2.0).epsilon(1e-8));
  CHECK_THROWS_AS(dit::check_kernel_identity(IdentityId::Eq2_30, 2, 1.0), dit::DomainError);
}

TEST_CASE("Laplace transform of K") {
  const auto a = dit::check_laplace_k(1, kPi);
  CHECK(std::abs(a.rhs) <= 1e-15);
  CHECK(std::abs(a.lhs) <= 1e-8);
  const auto b = dit::check_laplace_k(2, kPi / 2);
  CHECK(std::abs(b.lhs) <= 1e-8);
  const auto c = dit::check_laplace_k(1, 1.0);
  CHECK(c.rhs == doctest::Approx(kPi * std::sin(1.0) / std::sinh(1.0)).epsilon(1e-15));
  CHECK(c.status == Status::Pass);
  CHECK(c.abs_err <= 1e-8 * (1.0 + std::abs(c.rhs)));
  CHECK_THROWS_AS(dit::check_laplace_k(0, 1.0), dit::DomainError);
}

TEST_CASE("integral representations of normalized J") {
  const auto re = dit::check_representation(false, 1, 1.0);
  const auto im = dit::check_representation(true, 1, 1.0);
  CHECK(re.status == Status::Pass);
  CHECK(im.status == Status::Pass);
  CHECK(re.abs_err <= 1e-9);
  CHECK(im.abs_err <= 1e-9);
  CHECK_THROWS_AS(dit::check_representation(true, 0, 1.0), dit::DomainError);
}

TEST_CASE("bound suprema") {
  for (auto t : {dit::BoundTarget::Lebedev_2_34, dit::BoundTarget::Lommel_2_33,
                 dit::BoundTarget::TheoremProof_JBound}) {
    const auto rep = dit::check_bounds(t, dit::default_bound_grid(t));
    CAPTURE(dit::bound_name(t));
    CHECK(rep.status == Status::Pass);
    CHECK(rep.sup > 0.0);
    CHECK(std::isfinite(rep.sup_refined));
    CHECK(rep.rel_change <= 0.05);
    CHECK(rep.points >= 20);
  }
  dit::BoundGrid tiny = dit::default_bound_grid(dit::BoundTarget::Lebedev_2_34);
  tiny.n_values = {1};
  tiny.points = 10;
  CHECK_THROWS_AS(dit::check_bounds(dit::BoundTarget::Lebedev_2_34, tiny), dit::DomainError);
}

TEST_CASE("ODE residuals") {
  const auto j0 = dit::check_ode_residual(dit::OdeTarget::BesselJ_1_7, 0, std::nullopt, 2.0, 1e-3, 1);
  CHECK(j0.residuals.front() <= 1e-4);
  for (int n : {0, 2}) {
    const auto r = dit::check_ode_residual(dit::OdeTarget::BesselJ_1_7, n, std::nullopt, 5.0);
    CHECK(r.status == Status::Pass);
    for (double order : r.orders) CHECK(order == doctest::Approx(2.0).epsilon(0.05));
  }
  const auto s = dit::check_ode_residual(dit::OdeTarget::Lommel_1_20, 1, -0.5, 3.0);
  CHECK(s.status == Status::Pass);
  CHECK(s.residuals.back() <= 1e-4);
  // The right side x^mu leaves a residual of size x^{mu+1} - x^mu that does not shrink with h.
  const auto wrong =
      dit::check_ode_residual(dit::OdeTarget::Lommel_1_20, 1, -0.5, 3.0, 0.2, 3, dit::LommelRhs::PowMu);
  CHECK(wrong.status == Status::Fail);
  CHECK(wrong.residuals.back() == doctest::Approx(std::pow(3.0, 0.5) - std::pow(3.0, -0.5)).epsilon(1e-3));
  CHECK_THROWS_AS(dit::check_ode_residual(dit::OdeTarget::Lommel_1_20, 1, std::nullopt, 3.0), dit::DomainError);
  CHECK_THROWS_AS(dit::check_ode_residual(dit::OdeTarget::BesselJ_1_7, 1, std::nullopt, 0.1), dit::DomainError);
}

TEST_CASE("sequence roundtrips") {
  const auto lommel = dit::TransformKind::lommel(-0.5);
  const auto rep = dit::run_roundtrip_seq(lommel, dit::CoeffSeq::make(lommel, 1, {1.0}));
  CHECK(rep.status == Status::Pass);
  REQUIRE(rep.items.size() == 2);
  CHECK(rep.items[1].expected == 0.0);
  CHECK(std::abs(rep.items[1].recovered) <= 1e-4);

  dit::QuadConfig starved = dit::transform_config();
  starved.max_panels = 1;
  const auto re = dit::TransformKind::re();
  const auto bad = dit::run_roundtrip_seq(re, dit::CoeffSeq::make(re, 0, {1.0}), 1e-14, starved);
  CHECK(bad.status == Status::Inconclusive);
}

TEST_CASE("function roundtrips") {
  const std::vector<double> grid = {0.5, 2.0};
  const auto lommel = dit::TransformKind::lommel(-0.5);
  const auto even = dit::PeriodicProfile::from_coeffs({0.0, 1.0}, {});
  const auto zero = dit::run_roundtrip_fn(lommel, even, grid, 2);
  CHECK(zero.status == Status::Pass);
  for (const auto& item : zero.items) {
    CHECK(std::abs(item.expected) <= 1e-12);
    CHECK(std::abs(item.recovered) <= 1e-12);
  }
  const auto re = dit::run_roundtrip_fn(dit::TransformKind::re(), dit::PeriodicProfile::one_minus_cos(), grid, 2);
  CHECK(re.status == Status::Pass);
  CHECK(re.resolved_sign == -1.0);
  REQUIRE(re.err_opposite_sign.size() == grid.size());
  for (double e : re.err_opposite_sign) CHECK(e > 1e-3);
}
