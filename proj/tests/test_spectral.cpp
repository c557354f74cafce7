#include <doctest.h>

#include "fraclab/errors.hpp"
#include "fraclab/quadrature.hpp"
#include "fraclab/spectral.hpp"

#include <cmath>

using namespace fraclab;

TEST_CASE("dispersion and weights satisfy the exact identities") {
  for (double B : {0.0, 0.5, 1.0, 10.0}) {
    SpectralParams p{B, 1.0, std::nullopt};
    for (double k : {-0.49, -0.25, 0.1, 0.33, 0.45}) {
      const double sq = std::sqrt(alpha_hat(k) + 0.25 * B * B);
      CHECK(omega(p, k, 1) == doctest::Approx(sq + 0.5 * B).epsilon(1e-15));
      CHECK(omega(p, k, 2) == doctest::Approx(sq - 0.5 * B).epsilon(1e-15));
      // product identity omega_1 omega_2 = alpha_hat
      CHECK(omega(p, k, 1) * omega(p, k, 2) ==
            doctest::Approx(alpha_hat(k)).epsilon(1e-13));
      // partition of unity
      CHECK(std::fabs(theta_sq(p, k, 1) + theta_sq(p, k, 2) - 1.0) < 1e-14);
      CHECK(theta_sq(p, k, 1) >= 0.0);
      CHECK(theta_sq(p, k, 2) >= 0.0);
    }
  }
}

TEST_CASE("group velocity: parity, bound, small-k behavior") {
  for (double B : {0.0, 1.0, 100.0}) {
    SpectralParams p{B, 1.0, std::nullopt};
    for (double k : {0.05, 0.2, 0.4, 0.499}) {
      CHECK(group_velocity(p, -k) ==
            doctest::Approx(-group_velocity(p, k)).epsilon(1e-14));
      CHECK(std::fabs(group_velocity(p, k)) <= 4.0 * M_PI * M_PI * M_PI);
    }
  }
  // with B > 0, v_B(k)/k -> 8 pi^2 / B as k -> 0
  SpectralParams p{2.0, 1.0, std::nullopt};
  const double k = 1e-7;
  CHECK(group_velocity(p, k) / k ==
        doctest::Approx(8.0 * M_PI * M_PI / 2.0).epsilon(1e-6));
  // at B = 0 the velocity has a finite one-sided limit 2 pi
  SpectralParams p0{0.0, 1.0, std::nullopt};
  CHECK(group_velocity(p0, 1e-9) == doctest::Approx(2.0 * M_PI).epsilon(1e-8));
}

TEST_CASE("degenerate inputs throw") {
  SpectralParams p0{0.0, 1.0, std::nullopt};
  CHECK_THROWS_AS(theta_sq(p0, 0.0, 1), DegenerateInputError);
  CHECK_THROWS_AS(group_velocity(p0, 0.0), DegenerateInputError);
  SpectralParams p{1.0, 1.0, std::nullopt};
  CHECK_THROWS_AS(lambda_holding(p, {0.0, 1}), SingularityError);
  CHECK_THROWS_AS(omega(p, 0.1, 3), ConfigError);
  SpectralParams bad{1.0, -1.0, std::nullopt};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("scattering rate closed forms match their quadrature twins") {
  for (double k : {0.1, 0.25, 0.45}) {
    CHECK(total_rate_R(k) ==
          doctest::Approx(total_rate_R_quad(k)).epsilon(1e-10));
  }
  CHECK(R_bar() == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(R_bar_quad() == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("invariant density normalizes to one over both branches") {
  for (double B : {0.0, 1.0, 5.0}) {
    SpectralParams p{B, 1.0, std::nullopt};
    double total = 0.0;
    for (int i : {1, 2}) {
      total += integrate(
                   [&](double k) {
                     return pi_density(p, {k, i});
                   },
                   -0.5, 0.5, 1e-11, 1e-11)
                   .value;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("effective field scaling") {
  SpectralParams p{2.0, 1.0, Scaling{0.5, 1e4}};
  CHECK(p.b_eff() == doctest::Approx(2.0 * 1e-2).epsilon(1e-14));
  SpectralParams q{2.0, 1.0, std::nullopt};
  CHECK(q.b_eff() == 2.0);
}

TEST_CASE("mean holding and flight function relations") {
  SpectralParams p{1.0, 0.7, std::nullopt};
  const ModeState s{0.2, 1};
  CHECK(lambda_holding(p, s) ==
        doctest::Approx(1.0 /
                        (0.7 * theta_sq(p, 0.2, 1) * total_rate_R(0.2)))
            .epsilon(1e-14));
  CHECK(psi_flight(p, s) ==
        doctest::Approx(group_velocity(p, 0.2) * lambda_holding(p, s))
            .epsilon(1e-14));
  // Psi is odd in k
  CHECK(psi_flight(p, {-0.2, 1}) ==
        doctest::Approx(-psi_flight(p, s)).epsilon(1e-14));
}

TEST_CASE("lattice eigenmode identity holds to near machine precision") {
  for (int L : {4, 8, 64}) {
    for (double B : {0.0, 1.0, 10.0}) {
      SpectralParams p{B, 1.0, std::nullopt};
      for (int m = 0; m < L; ++m) {
        if (m == 0 && B == 0.0) continue;
        for (int i : {1, 2}) {
          CHECK(verify_eigenmode(p, L, m, i, 7) <= 1e-12);
        }
      }
    }
  }
}
