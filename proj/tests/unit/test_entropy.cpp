#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shannon1d/entropy.hpp"
#include "shannon1d/errors.hpp"
#include "shannon1d/systems.hpp"

using namespace shannon1d;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double e = std::numbers::e;
const QuadratureSpec tight{1e-12, 20000, std::nullopt};

}  // namespace

TEST(Entropy, BbmBound) { EXPECT_NEAR(bbm_bound(), 2.144729885849400174, 1e-15); }

TEST(Entropy, DiscreteBasics) {
  EXPECT_NEAR(discrete_entropy(DiscreteDistribution({0.5, 0.5})), 1.0, 1e-15);
  EXPECT_NEAR(discrete_entropy(DiscreteDistribution({0.25, 0.25, 0.25, 0.25})), 2.0, 1e-15);
  EXPECT_NEAR(discrete_entropy(DiscreteDistribution({1.0, 0.0})), 0.0, 1e-15);
  EXPECT_NEAR(discrete_entropy(DiscreteDistribution({0.5, 0.5}), e), std::log(2.0), 1e-15);
  EXPECT_THROW(DiscreteDistribution({0.5, 0.6}), std::domain_error);
  EXPECT_THROW(DiscreteDistribution({1.2, -0.2}), std::domain_error);
  EXPECT_THROW(discrete_entropy(DiscreteDistribution({1.0}), 1.0), std::domain_error);
}

TEST(Entropy, ContinuousBaseChange) {
  const Density rho = box_position_density(BoxState(1, 2.0));
  const double nats = continuous_entropy(rho, tight, e);
  EXPECT_NEAR(nats, std::log(4.0) - 1.0, 1e-9);
  EXPECT_NEAR(continuous_entropy(rho, tight, 2.0), nats / std::log(2.0), 1e-9);
}

TEST(Entropy, SpaceMismatchRejected) {
  const OscillatorState s(0, 1.0);
  EXPECT_THROW(entropy_x(oscillator_momentum_density(s), atomic_units(), tight), std::invalid_argument);
  EXPECT_THROW(entropy_p(oscillator_position_density(s), atomic_units(), tight), std::invalid_argument);
}

TEST(Entropy, SpecValidation) {
  EXPECT_THROW(validate(QuadratureSpec{0.0, 100, std::nullopt}), std::domain_error);
  EXPECT_THROW(validate(QuadratureSpec{1e-10, 0, std::nullopt}), std::domain_error);
  EXPECT_NO_THROW(validate(QuadratureSpec{}));
}

TEST(Entropy, OscillatorGroundStateClosedForms) {
  for (double omega : {0.06, 0.5, 1.0, 2.5, 8.005}) {
    const EntropyReport r = entropy_sum(make_state(System::oscillator, 0, omega), tight);
    EXPECT_NEAR(r.sx, 0.5 * std::log(pi * e / omega), 1e-8) << omega;
    EXPECT_NEAR(r.sp, 0.5 * std::log(pi * e * omega), 1e-8) << omega;
    EXPECT_NEAR(r.st, bbm_bound(), 1e-8) << omega;
  }
}

TEST(Entropy, BoxPositionClosedForm) {
  for (double xc : {0.1, 0.5, 1.0, 4.5, 9.005}) {
    for (int n = 1; n <= 3; ++n) {
      const BoxState s(n, xc);
      EXPECT_NEAR(entropy_x(box_position_density(s), s.units(), tight), std::log(2 * xc) - 1.0, 1e-8);
    }
  }
}

TEST(Entropy, FrozenOracleValues) {
  const auto sx = [](const OscillatorState& s) { return entropy_x(oscillator_position_density(s), s.units(), tight); };
  const auto sp_box = [](const BoxState& s) { return entropy_p(box_momentum_density(s), s.units(), tight); };
  EXPECT_NEAR(sx(OscillatorState(0, 1.0)), 1.072364942924700087, 1e-9);
  EXPECT_NEAR(sx(OscillatorState(1, 1.0)), 1.342727788386178257, 1e-9);
  EXPECT_NEAR(sx(OscillatorState(2, 1.0)), 1.498609233251727841, 1e-9);
  EXPECT_NEAR(sx(OscillatorState(2, 0.06)), 2.905314591631746024, 1e-9);
  const OscillatorState slow(1, 0.06);
  EXPECT_NEAR(entropy_p(oscillator_momentum_density(slow), slow.units(), tight), -0.0639775699938399265, 1e-9);
  EXPECT_NEAR(sp_box(BoxState(1, 1.0)), 2.5188909070786365, 1e-9);
  EXPECT_NEAR(sp_box(BoxState(2, 1.0)), 2.913856525546409, 1e-9);
  EXPECT_NEAR(sp_box(BoxState(3, 1.0)), 3.059994822722775, 1e-9);
  EXPECT_NEAR(sp_box(BoxState(3, 0.1)), 5.36257991571682, 1e-9);
  EXPECT_NEAR(sp_box(BoxState(1, 4.0)), 1.1325965459587457, 1e-9);
}

TEST(Entropy, MirrorSymmetryOfOscillator) {
  for (int n = 0; n <= 2; ++n) {
    for (double omega : {0.2, 3.0}) {
      const EntropyReport a = entropy_sum(make_state(System::oscillator, n, omega), tight);
      const EntropyReport b = entropy_sum(make_state(System::oscillator, n, 1.0 / omega), tight);
      EXPECT_NEAR(a.sx, b.sp, 1e-9);
      EXPECT_NEAR(a.sp, b.sx, 1e-9);
    }
  }
}

TEST(Entropy, EntropySumIndependentOfFrequency) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> omega(0.05, 9.0);
  for (int n = 0; n <= 3; ++n) {
    double lo = 1e9, hi = -1e9;
    for (int i = 0; i < 6; ++i) {
      const double st = entropy_sum(make_state(System::oscillator, n, omega(rng)), tight).st;
      lo = std::min(lo, st);
      hi = std::max(hi, st);
    }
    EXPECT_LT(hi - lo, 1e-6) << n;
  }
}

TEST(Entropy, BoxPositionEntropyIndependentOfN) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> width(0.1, 9.0);
  for (int i = 0; i < 4; ++i) {
    const double xc = width(rng);
    double lo = 1e9, hi = -1e9;
    for (int n = 1; n <= 5; ++n) {
      const BoxState s(n, xc);
      const double sx = entropy_x(box_position_density(s), s.units(), tight);
      lo = std::min(lo, sx);
      hi = std::max(hi, sx);
    }
    EXPECT_LT(hi - lo, 1e-8) << xc;
  }
}

TEST(Entropy, UnitRescalingInvariance) {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> scale(0.2, 5.0);
  for (int trial = 0; trial < 4; ++trial) {
    const double L = scale(rng), A = scale(rng), M = scale(rng);
    const UnitSystem units = rescaled(L, A, M);
    const int n = trial % 3;

    const EntropyReport ho = entropy_sum(make_state(System::oscillator, n, 1.7), tight);
    const EntropyReport ho_scaled = entropy_sum(make_state(System::oscillator, n, 1.7 * A / (M * L * L), units), tight);
    EXPECT_NEAR(ho.sx, ho_scaled.sx, 1e-8);
    EXPECT_NEAR(ho.sp, ho_scaled.sp, 1e-8);
    EXPECT_NEAR(ho.st, ho_scaled.st, 1e-8);

    const EntropyReport box = entropy_sum(make_state(System::box, n + 1, 2.3), tight);
    const EntropyReport box_scaled = entropy_sum(make_state(System::box, n + 1, 2.3 * L, units), tight);
    EXPECT_NEAR(box.sx, box_scaled.sx, 1e-8);
    EXPECT_NEAR(box.sp, box_scaled.sp, 1e-8);
    EXPECT_NEAR(box.st, box_scaled.st, 1e-8);

    const Density rho = box_position_density(BoxState(n + 1, 2.3));
    EXPECT_NEAR(entropy_x(rho, atomic_units(), tight), entropy_x(rho.rescaled(L), rescaled(L, 1.0, 1.0), tight),
                1e-8);
    const Density gamma = oscillator_momentum_density(OscillatorState(n, 0.9));
    EXPECT_NEAR(entropy_p(gamma, atomic_units(), tight), entropy_p(gamma.rescaled(A), rescaled(1.0, A, 1.0), tight),
                1e-8);
  }
}

TEST(Entropy, SxDecreasesWithConfinement) {
  double prev = 1e9;
  for (double xc : {9.0, 5.0, 2.0, 1.0, 0.5, 0.1}) {
    const BoxState s(2, xc);
    const double sx = entropy_x(box_position_density(s), s.units(), tight);
    EXPECT_LT(sx, prev);
    prev = sx;
  }
  prev = 1e9;
  for (double omega : {0.06, 0.5, 1.0, 4.0, 8.0}) {
    const double sx = entropy_sum(make_state(System::oscillator, 1, omega), tight).sx;
    EXPECT_LT(sx, prev);
    prev = sx;
  }
}

TEST(Entropy, EntropySumGrowsWithN) {
  double prev = -1e9;
  for (int n = 0; n <= 4; ++n) {
    const double st = entropy_sum(make_state(System::oscillator, n, 1.0), tight).st;
    EXPECT_GT(st, prev);
    prev = st;
  }
  prev = -1e9;
  for (int n = 1; n <= 4; ++n) {
    const double st = entropy_sum(make_state(System::box, n, 1.0), tight).st;
    EXPECT_GT(st, prev);
    prev = st;
  }
}

TEST(Entropy, BoxBeatsOscillatorGroundButNotExcited) {
  const double box1 = entropy_sum(make_state(System::box, 1, 1.0), tight).st;
  EXPECT_NEAR(box1, 2.2120, 5e-5);
  EXPECT_GT(box1, bbm_bound());
  for (int n = 2; n <= 3; ++n) {
    EXPECT_LT(entropy_sum(make_state(System::box, n, 1.0), tight).st,
              entropy_sum(make_state(System::oscillator, n - 1, 1.0), tight).st);
  }
}

TEST(Uncertainty, OscillatorProductIsNPlusHalf) {
  for (int n = 0; n <= 3; ++n) {
    const UncertaintyReport u = uncertainty(make_state(System::oscillator, n, 2.5), tight);
    EXPECT_NEAR(u.product, n + 0.5, 1e-9);
    EXPECT_NEAR(u.dx, std::sqrt((n + 0.5) / 2.5), 1e-9);
    EXPECT_NEAR(u.mean_x, 0.0, 1e-12);
    EXPECT_NEAR(u.mean_p, 0.0, 1e-12);
    EXPECT_NEAR(u.kennard_margin, n, 1e-9);
  }
}

TEST(Uncertainty, BoxClosedForms) {
  const double oracle[] = {1.084536165573984035, 1.595009302044812536, 1.672530308459408594};
  for (int n = 1; n <= 3; ++n) {
    const UncertaintyReport u = uncertainty(make_state(System::box, n, 6.0), tight);
    EXPECT_NEAR(u.dx, oracle[n - 1], 1e-9);
    EXPECT_NEAR(u.mean_x2, 36.0 * (1.0 / 12.0 - 1.0 / (2.0 * n * n * pi * pi)), 1e-9);
    EXPECT_NEAR(u.dp, n * pi / 6.0, 1e-9);
    EXPECT_GT(u.kennard_margin, 0.0);
  }
}

TEST(Moments, MatchUncertaintyReport) {
  const QuantumState s = make_state(System::oscillator, 1, 0.4);
  const Moments m = moments(position_density(s), tight);
  EXPECT_NEAR(m.second, 1.5 / 0.4, 1e-9);
  EXPECT_NEAR(m.mean, 0.0, 1e-12);
}
