#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "udw/regression.hpp"
#include "udw/verify.hpp"

using namespace udw;
using namespace udw::regression;
using dynamics::DensityMatrix;
using spectral::response;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("evolution system entries") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  const auto es = evolution_system(p, bs);
  CHECK_THAT(es.m33, WithinRel(-0.0399376201769180, 1e-12));
  CHECK(es.m22 == std::conj(es.m11));
  CHECK_THAT((es.m11 + es.m22).real(), WithinRel(-(bs.g_zero + 0.25 * bs.g_plus), 1e-12));
  CHECK_THAT(es.c3, WithinRel(0.25 * bs.g_neg, 1e-14));
  CHECK_THAT(es.steady[2], WithinRel(1.86396188962503e-3, 1e-12));
  // steady = -M^{-1} C componentwise
  CHECK_THAT(es.m33 * es.steady[2] + es.c3, WithinAbs(0.0, 1e-16));
  CHECK(es.steady[0] == 0.0);
  CHECK(es.steady[1] == 0.0);
  CHECK(es.m33 < 0.0);
}

TEST_CASE("ladder operator algebra") {
  const auto bs = response(PhysParams(1.0, 1.0, 1.0));
  const Mat2 raise = operator_matrix(SystemOperator::Raise, bs);
  const Mat2 lower = operator_matrix(SystemOperator::Lower, bs);
  const Mat2 anti = raise * lower + lower * raise;
  CHECK(anti(0, 0) == cplx(1.0));
  CHECK(anti(1, 1) == cplx(1.0));
  CHECK(anti(0, 1) == cplx(0.0));
  const Mat2 r2 = raise * raise;
  const Mat2 l2 = lower * lower;
  for (int i = 0; i < 4; ++i) {
    CHECK(r2.m[i] == cplx(0.0));
    CHECK(l2.m[i] == cplx(0.0));
  }
  // fluctuation operators sum to zero
  const Mat2 sum = operator_matrix(SystemOperator::FluctNumber, bs) +
                   operator_matrix(SystemOperator::FluctAntiNumber, bs);
  for (int i = 0; i < 4; ++i) CHECK_THAT(std::abs(sum.m[i]), WithinAbs(0.0, 1e-15));
}

TEST_CASE("absorption correlator") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  // never forms when the earlier operation is a de-excitation at tau' = 0
  for (double tau : {0.0, 1.0, 10.0})
    CHECK(std::abs(corr_absorption(p, bs, 0.0, tau)) == 0.0);
  // steady-state zero-delay value is P1
  CHECK_THAT(corr_absorption(p, bs, kInf, 0.0).real(), WithinRel(bs.p1, 1e-14));
  // steady-state modulus after unit delay
  CHECK_THAT(std::abs(corr_absorption(p, bs, kInf, 1.0)), WithinRel(0.966088668859848, 1e-9));
}

TEST_CASE("emission correlator") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  const auto es = evolution_system(p, bs);
  // still present at tau' = 0: a pure phase-decay factor
  CHECK_THAT(std::abs(corr_emission(p, bs, 0.0, 0.0) - cplx(1.0)), WithinAbs(0.0, 1e-14));
  for (double tau : {0.5, 2.0}) {
    const cplx expected = std::exp(es.m11 * tau);
    CHECK_THAT(std::abs(corr_emission(p, bs, 0.0, tau) - expected), WithinAbs(0.0, 1e-14));
  }
  CHECK_THAT(corr_emission(p, bs, kInf, 0.0).real(), WithinRel(bs.p2, 1e-14));
  CHECK(std::abs(corr_emission(p, bs, 3.0, 1e4)) < 1e-30);
}

TEST_CASE("emission phase winds at minus the shifted gap") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  const auto checks = verify::emission_phase_rate(p, bs);
  for (const auto& c : checks) {
    INFO(c.name << " residual " << c.residual);
    CHECK(c.passed);
  }
}

TEST_CASE("a sign flip in the level shift fails the phase-rate check") {
  const PhysParams p(1.0, 1.0, 1.0);
  auto bs = response(p);
  bs.k_minus = -bs.k_minus;
  const auto checks = verify::emission_phase_rate(p, bs);
  CHECK_FALSE(checks[0].passed);
}

TEST_CASE("number-number correlator") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  CHECK_THAT(corr_number(p, bs, 0.0, 0.0), WithinRel(1.0, 1e-14));
  // stationary limit factorizes through the single-time population
  for (double tau : {0.0, 1.0, 7.0})
    CHECK_THAT(corr_number(p, bs, kInf, tau),
               WithinRel(bs.p2 * dynamics::expect_number(p, bs, tau), 1e-13));
  CHECK_THAT(corr_number(p, bs, kInf, kInf), WithinRel(bs.p2 * bs.p2, 1e-13));
}

TEST_CASE("number-antinumber correlator and the operator sum rule") {
  const PhysParams p(0.8, 1.4, 1.2);
  const auto bs = response(p);
  for (double tp : {0.0, 0.6, 3.0, 25.0})
    CHECK(corr_number_antinumber(p, bs, tp, 0.0) == 0.0);
  for (double tp : {0.0, 0.6, 3.0, 25.0, kInf})
    for (double tau : {0.0, 0.9, 4.0, 50.0}) {
      const double lhs = corr_number(p, bs, tp, tau) + corr_number_antinumber(p, bs, tp, tau);
      CHECK_THAT(lhs, WithinAbs(dynamics::expect_number(p, bs, tp), 1e-12));
    }
  CHECK_THAT(corr_number_antinumber(p, bs, kInf, kInf), WithinRel(bs.p1 * bs.p2, 1e-13));
}

TEST_CASE("hbt correlator: antibunching and limits") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  for (double tp : {0.0, 1.0, 9.0, kInf}) CHECK(corr_hbt(p, bs, tp, 0.0) == 0.0);
  CHECK_THAT(corr_hbt(p, bs, kInf, kInf), WithinRel(bs.p2 * bs.p2, 1e-13));
  CHECK_THAT(hbt_infinite_delay(bs), WithinRel(bs.p2 * bs.p2, 1e-15));
  // steady-state value grows monotonically in the delay toward P2^2
  double prev = -1.0;
  for (double tau = 0.0; tau <= 60.0; tau += 1.5) {
    const double v = hbt_pss(p, bs, tau);
    CHECK(v > prev);
    CHECK(v < 1.0);
    prev = v;
  }
  // and grows with the acceleration at fixed delay
  double prev_a = -1.0;
  for (double a : {0.5, 1.0, 2.0}) {
    const PhysParams pa(a, 1.0, 1.0);
    const double v = hbt_pss(pa, response(pa), 5.0);
    CHECK(v > prev_a);
    prev_a = v;
  }
}

TEST_CASE("hbt sum rule") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  for (double tp : {0.0, 0.5, 4.0, kInf})
    for (double tau : {0.0, 0.8, 6.0, 40.0}) {
      const double lhs = corr_hbt(p, bs, tp, tau) + corr_hbt_swapped(p, bs, tp, tau);
      CHECK_THAT(lhs, WithinAbs(dynamics::expect_number(p, bs, tp), 1e-12));
    }
}

TEST_CASE("correlators validate their delays") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  CHECK_THROWS_AS(corr_emission(p, bs, 1.0, -0.5), InvalidParameter);
  CHECK_THROWS_AS(corr_number(p, bs, -1.0, 0.5), InvalidParameter);
}

TEST_CASE("superoperator oracle matches every nonzero closed form") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  const auto gen = dynamics::build_generator(p, bs);
  const double h = dynamics::default_step(p, bs);
  const std::vector<double> taus{0.0, 0.5, 2.0, 10.0};
  const auto rho0 = DensityMatrix::excited();

  for (double tp : {0.0, 1.0, 5.0}) {
    const auto abs_series =
        qrt_oracle_series(gen, rho0, SystemOperator::Lower, SystemOperator::Raise, {}, tp, taus, h);
    const auto emi_series =
        qrt_oracle_series(gen, rho0, SystemOperator::Raise, SystemOperator::Lower, {}, tp, taus, h);
    const auto num_series = qrt_oracle_series(gen, rho0, SystemOperator::Number,
                                              SystemOperator::Number, {}, tp, taus, h);
    const auto numanti_series = qrt_oracle_series(gen, rho0, SystemOperator::Number,
                                                  SystemOperator::AntiNumber, {}, tp, taus, h);
    const auto hbt_series =
        qrt_oracle_series(gen, rho0, SystemOperator::Raise, SystemOperator::Number,
                          SystemOperator::Lower, tp, taus, h);
    const auto hbts_series =
        qrt_oracle_series(gen, rho0, SystemOperator::Raise, SystemOperator::AntiNumber,
                          SystemOperator::Lower, tp, taus, h);
    for (std::size_t i = 0; i < taus.size(); ++i) {
      CHECK_THAT(std::abs(abs_series[i] - corr_absorption(p, bs, tp, taus[i])),
                 WithinAbs(0.0, 1e-8));
      CHECK_THAT(std::abs(emi_series[i] - corr_emission(p, bs, tp, taus[i])),
                 WithinAbs(0.0, 1e-8));
      CHECK_THAT(std::abs(num_series[i] - corr_number(p, bs, tp, taus[i])),
                 WithinAbs(0.0, 1e-8));
      CHECK_THAT(std::abs(numanti_series[i] - corr_number_antinumber(p, bs, tp, taus[i])),
                 WithinAbs(0.0, 1e-8));
      CHECK_THAT(std::abs(hbt_series[i] - corr_hbt(p, bs, tp, taus[i])), WithinAbs(0.0, 1e-8));
      CHECK_THAT(std::abs(hbts_series[i] - corr_hbt_swapped(p, bs, tp, taus[i])),
                 WithinAbs(0.0, 1e-8));
    }
  }
}

TEST_CASE("single-point oracle agrees with the batched variant") {
  const PhysParams p(0.5, 2.0, 1.0);
  const auto bs = response(p);
  const auto gen = dynamics::build_generator(p, bs);
  const double h = dynamics::default_step(p, bs);
  const auto rho0 = DensityMatrix::excited();
  const cplx single = qrt_oracle(gen, rho0, SystemOperator::Raise, SystemOperator::Lower,
                                 SystemOperator::Lower, 2.0, 3.0, h);
  const std::vector<double> taus{3.0};
  const auto series = qrt_oracle_series(gen, rho0, SystemOperator::Raise, SystemOperator::Lower,
                                        SystemOperator::Lower, 2.0, taus, h);
  CHECK_THAT(std::abs(single - series[0]), WithinAbs(0.0, 1e-12));
}

TEST_CASE("oracle zero catalogue") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  const auto gen = dynamics::build_generator(p, bs);
  const double h = dynamics::default_step(p, bs);
  const auto rho0 = DensityMatrix::excited();
  const std::pair<SystemOperator, SystemOperator> zeros[] = {
      {SystemOperator::Lower, SystemOperator::Lower},
      {SystemOperator::Lower, SystemOperator::Number},
      {SystemOperator::Raise, SystemOperator::Raise},
      {SystemOperator::Raise, SystemOperator::Number},
      {SystemOperator::Number, SystemOperator::Lower},
      {SystemOperator::Number, SystemOperator::Raise},
  };
  for (const auto& [left, mid] : zeros)
    for (double tp : {0.0, 2.0})
      for (double tau : {0.0, 1.0, 8.0})
        CHECK(std::abs(qrt_oracle(gen, rho0, left, mid, {}, tp, tau, h)) < 1e-10);
}

TEST_CASE("oracle rejects infinite times") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  const auto gen = dynamics::build_generator(p, bs);
  CHECK_THROWS_AS(qrt_oracle(gen, DensityMatrix::excited(), SystemOperator::Raise,
                             SystemOperator::Lower, {}, kInf, 1.0, 1e-3),
                  InvalidParameter);
}

TEST_CASE("correlator series carries kind and grid") {
  const PhysParams p(1.0, 1.0, 1.0);
  const auto bs = response(p);
  const std::vector<double> taus{0.0, 1.0, 2.0};
  const auto s = correlator_series(p, bs, CorrelatorKind::Emission, 0.5, taus);
  REQUIRE(s.values.size() == 3);
  CHECK(s.kind == CorrelatorKind::Emission);
  CHECK(std::string(kind_name(s.kind)) == "emission");
  CHECK_THAT(std::abs(s.values[1] - corr_emission(p, bs, 0.5, 1.0)), WithinAbs(0.0, 1e-15));
}
