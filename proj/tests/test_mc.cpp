#include <doctest.h>

#include "fraclab/errors.hpp"
#include "fraclab/kinetic.hpp"
#include "fraclab/mc.hpp"
#include "fraclab/rng.hpp"

#include <cmath>
#include <vector>

using namespace fraclab;

TEST_CASE("fixed-count functional with one jump is the first sojourn") {
  const double B = 1.0, gamma = 1.0;
  const ModeState start{0.3, 1};
  const std::uint64_t seed = 314;
  SpectralParams p{B, gamma, std::nullopt};
  Xoshiro256 scalar(stream_seed(seed, 0));
  const double expect = psi_flight(p, start) * scalar.exponential();
  CHECK(mc_fixed_count(B, gamma, start, 1, seed) ==
        doctest::Approx(expect).epsilon(1e-14));
  CHECK(mc_fixed_count(B, gamma, start, 0, seed) == 0.0);
}

TEST_CASE("flight sample inside the first sojourn moves at the start velocity") {
  const double B = 2.0, gamma = 1.0;
  const ModeState start{0.2, 2};
  const std::uint64_t seed = 99;
  SpectralParams p{B, gamma, std::nullopt};
  Xoshiro256 scalar(stream_seed(seed, 0));
  const double hold = lambda_holding(p, start) * scalar.exponential();
  const double t = 0.5 * hold;
  const auto s = mc_flight(B, gamma, start, {t}, 1000, seed);
  CHECK(s.disp[0] ==
        doctest::Approx(group_velocity(p, 0.2) * t).epsilon(1e-13));
  CHECK(s.final_state.k == start.k);
  CHECK(s.final_state.i == start.i);
  CHECK(s.jumps == 1);
}

TEST_CASE("flight sample agrees across target subsets at fixed seed") {
  const double B = 1.0, gamma = 1.0;
  const ModeState start{0.3, 1};
  const auto both = mc_flight(B, gamma, start, {3.0, 8.0}, 1 << 20, 2024);
  const auto last = mc_flight(B, gamma, start, {8.0}, 1 << 20, 2024);
  CHECK(both.disp[1] == doctest::Approx(last.disp[0]).epsilon(1e-12));
  CHECK(both.final_state.k == last.final_state.k);
  CHECK(both.jumps == last.jumps);
}

TEST_CASE("flight kernel matches the scalar trajectory route in law") {
  // both routes estimate E[cos(theta X_T)]; they use independent streams, so
  // compare the two Monte Carlo means within combined confidence bands
  const double B = 1.0, gamma = 1.0, T = 10.0, theta = 0.3;
  const ModeState start{0.3, 1};
  SpectralParams p{B, gamma, std::nullopt};
  const int M = 4000;

  double m1 = 0.0, q1 = 0.0, m2 = 0.0, q2 = 0.0;
  for (int m = 0; m < M; ++m) {
    const auto s = mc_flight(B, gamma, start, {T}, 1 << 22, 5000 + m);
    const double c = std::cos(theta * s.disp[0]);
    m1 += c;
    q1 += c * c;
    const auto traj = simulate_trajectory(p, start, 400, 900000 + m);
    const double x = flight_integral(p, traj, 0.0, T, 1.0);
    const double c2 = std::cos(theta * x);
    m2 += c2;
    q2 += c2 * c2;
  }
  m1 /= M;
  m2 /= M;
  const double v1 = q1 / M - m1 * m1;
  const double v2 = q2 / M - m2 * m2;
  const double band = 3.0 * (std::sqrt(v1 / M) + std::sqrt(v2 / M));
  CHECK(std::fabs(m1 - m2) < band + 1e-6);
}

TEST_CASE("clock sample tracks 2 gamma t at large scale") {
  const double B = 1.0, gamma = 1.0;
  const auto s = mc_clock(B, gamma, {0.3, 1}, 2e5, 0.1, 1.0, 1 << 24, 17);
  CHECK(s.s_end == doctest::Approx(2.0).epsilon(0.05));
  CHECK(s.max_dev < 0.1);
  CHECK(s.jumps > 100000);
}

TEST_CASE("budget errors surface as BudgetError") {
  CHECK_THROWS_AS(mc_flight(1.0, 1.0, {0.3, 1}, {1e6}, 16, 1), BudgetError);
  CHECK_THROWS_AS(mc_clock(1.0, 1.0, {0.3, 1}, 1e6, 0.1, 1.0, 16, 1),
                  BudgetError);
}

TEST_CASE("degenerate start state is rejected") {
  CHECK_THROWS_AS(mc_flight(1.0, 1.0, {0.0, 1}, {1.0}, 100, 1),
                  SingularityError);
}
