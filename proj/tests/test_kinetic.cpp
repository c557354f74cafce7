#include <doctest.h>

#include "fraclab/errors.hpp"
#include "fraclab/kinetic.hpp"
#include "fraclab/quadrature.hpp"

#include <cmath>

using namespace fraclab;

TEST_CASE("sample_pi reproduces the invariant measure") {
  SpectralParams p{1.0, 1.0, std::nullopt};
  Xoshiro256 rng(42);
  const int n = 200000;
  double s2_sum = 0.0;
  int branch1 = 0;
  for (int j = 0; j < n; ++j) {
    const ModeState s = sample_pi(p, rng);
    const double sn = std::sin(M_PI * s.k);
    s2_sum += sn * sn;
    branch1 += s.i == 1;
  }
  // E[sin^2(pi K)] = 3/4 under the k-marginal 2 sin^2(pi k);
  // Var[sin^2] = 1/16
  const double s2_mean = s2_sum / n;
  CHECK(std::fabs(s2_mean - 0.75) < 3.0 * 0.25 / std::sqrt((double)n));

  // branch-1 mass from the density itself
  const double p1 = integrate(
                        [&](double k) {
                          return pi_density(p, {k, 1});
                        },
                        -0.5, 0.5, 1e-11, 1e-11)
                        .value;
  const double freq = (double)branch1 / n;
  const double sd = std::sqrt(p1 * (1.0 - p1) / n);
  CHECK(std::fabs(freq - p1) < 3.0 * sd);
}

TEST_CASE("jump chain draws are independent of the current state") {
  SpectralParams p{0.5, 1.0, std::nullopt};
  Xoshiro256 a(9), b(9);
  const ModeState s1 = step_chain(p, {0.1, 1}, a);
  const ModeState s2 = step_chain(p, {-0.4, 2}, b);
  CHECK(s1.k == s2.k);
  CHECK(s1.i == s2.i);
}

TEST_CASE("holding times scale as 1/gamma and average near 1/(2 gamma)") {
  SpectralParams p1{1.0, 1.0, std::nullopt};
  SpectralParams p2{1.0, 2.0, std::nullopt};
  const auto t1 = simulate_trajectory(p1, {0.3, 1}, 2000, 77);
  const auto t2 = simulate_trajectory(p2, {0.3, 1}, 2000, 77);
  for (std::size_t n = 0; n < t1.holdings.size(); ++n) {
    CHECK(t2.holdings[n] ==
          doctest::Approx(0.5 * t1.holdings[n]).epsilon(1e-12));
  }

  // heavy-tailed (index 3/2) sample mean: slow convergence, generous band
  const auto big = simulate_trajectory(p1, {0.3, 1}, 4000000, 123);
  const double mean = big.clock.back() / big.holdings.size();
  CHECK(mean == doctest::Approx(0.5).epsilon(0.08));
}

TEST_CASE("trajectory clock is the cumulative sum of holdings") {
  SpectralParams p{2.0, 1.0, std::nullopt};
  const auto traj = simulate_trajectory(p, {0.2, 2}, 500, 5);
  double acc = 0.0;
  for (std::size_t n = 0; n < traj.holdings.size(); ++n) {
    acc += traj.holdings[n];
    CHECK(traj.clock[n] == doctest::Approx(acc).epsilon(1e-12));
  }
  CHECK_THROWS_AS(simulate_trajectory(p, {0.0, 1}, 10, 1), SingularityError);
}

TEST_CASE("flight integral over a hand-built trajectory") {
  SpectralParams p{1.0, 1.0, std::nullopt};
  Trajectory traj;
  traj.states = {{0.2, 1}, {-0.3, 2}, {0.4, 1}};
  traj.holdings = {1.0, 2.0, 1.5};
  traj.clock = {1.0, 3.0, 4.5};
  const double v0 = group_velocity(p, 0.2);
  const double v1 = group_velocity(p, -0.3);
  // t = 2.5 cuts the second sojourn after 1.5 time units
  const double expect = 7.0 - (v0 * 1.0 + v1 * 1.5) / (2.0 * M_PI);
  CHECK(flight_integral(p, traj, 7.0, 2.5) ==
        doctest::Approx(expect).epsilon(1e-13));
  // explicit prefactor overrides the default 1/(2 pi)
  CHECK(flight_integral(p, traj, 0.0, 2.5, 1.0) ==
        doctest::Approx(-(v0 + 1.5 * v1)).epsilon(1e-13));
  CHECK(flight_integral(p, traj, 7.0, 0.0) == 7.0);
  CHECK_THROWS_AS(flight_integral(p, traj, 0.0, 5.0),
                  InsufficientTrajectoryError);
}

TEST_CASE("clock inverse counts jumps up to the rescaled horizon") {
  Trajectory traj;
  traj.clock = {1.0, 2.0, 3.0, 10.0, 20.0};
  // N = 4, alpha = 3/2 -> scale = 8; horizon = 8 * 0.3 = 2.4 -> 2 jumps
  CHECK(clock_inverse(traj, 0.3, 4.0, 1.5) ==
        doctest::Approx(2.0 / 8.0).epsilon(1e-14));
  CHECK(clock_inverse(traj, 0.0, 4.0, 1.5) == 0.0);
  CHECK_THROWS_AS(clock_inverse(traj, 10.0, 4.0, 1.5),
                  InsufficientTrajectoryError);
}

TEST_CASE("generator annihilates constants and scales linearly in gamma") {
  SpectralParams p{1.0, 1.0, std::nullopt};
  auto one = [](double, int) { return 1.0; };
  // two branch integrals at abs_tol 1e-10 each
  CHECK(std::fabs(apply_generator(p, one, {0.3, 1})) < 5e-9);

  auto f = [](double k, int i) { return std::cos(2.0 * M_PI * k) + 0.3 * i; };
  SpectralParams p2{1.0, 2.0, std::nullopt};
  const ModeState s{0.17, 2};
  CHECK(apply_generator(p2, f, s) ==
        doctest::Approx(2.0 * apply_generator(p, f, s)).epsilon(1e-9));
}

TEST_CASE("generator equals gamma times the collision operator") {
  // for u-independent observables the two integral operators coincide up to
  // the noise intensity factor
  SpectralParams p{1.5, 0.8, std::nullopt};
  auto f = [](double k, int i) {
    return std::sin(2.0 * M_PI * k) + 0.2 * std::cos(4.0 * M_PI * k) * i;
  };
  auto J = [&](double, double k, int i) { return f(k, i); };
  for (const ModeState s : {ModeState{0.3, 1}, ModeState{-0.12, 2}}) {
    const double lhs = apply_generator(p, f, s);
    const double rhs = 0.8 * apply_collision(p, J, 0.0, s.k, s.i);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
  }
}

TEST_CASE("collision operator closed form at B = 0") {
  // with J = cos(2 pi k), [C J](k) = cos(4 pi k) - cos(2 pi k)
  SpectralParams p{0.0, 1.0, std::nullopt};
  auto J = [](double, double k, int) { return std::cos(2.0 * M_PI * k); };
  for (double k : {0.25, 1.0 / 3.0, 0.1}) {
    const double expect =
        std::cos(4.0 * M_PI * k) - std::cos(2.0 * M_PI * k);
    for (int i : {1, 2}) {
      CHECK(apply_collision(p, J, 0.0, k, i) ==
            doctest::Approx(expect).epsilon(1e-8));
    }
  }
}
