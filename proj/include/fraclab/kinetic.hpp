#pragma once

#include "fraclab/rng.hpp"
#include "fraclab/spectral.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace fraclab {

/// Ordered jump record of the process (K(.), I(.)).
struct Trajectory {
  std::vector<ModeState> states;
  std::vector<double> holdings;  // lambda(X_n) * tau_n
  std::vector<double> clock;     // cumulative sums T_n
  std::uint64_t rng_seed = 0;
};

/// Exact draw from the invariant measure pi_B (rejection sampling).
ModeState sample_pi(const SpectralParams& p, Xoshiro256& rng);

/// One step of the jump chain. The kernel equals pi_B, so this is an
/// independent draw regardless of `current`.
ModeState step_chain(const SpectralParams& p, const ModeState& current,
                     Xoshiro256& rng);

Trajectory simulate_trajectory(const SpectralParams& p, const ModeState& x0,
                               std::size_t n_jumps, std::uint64_t seed);

/// Z_u(t) = u - int_0^t v(K(s))/(2 pi) ds, exact over the piecewise-constant
/// velocity; `prefactor` defaults to 1/(2 pi).
double flight_integral(const SpectralParams& p, const Trajectory& traj,
                       double u, double t, double prefactor = -1.0);

/// S_N(t) = j_N(N^alpha t) / N^alpha where j_N counts jumps.
double clock_inverse(const Trajectory& traj, double t, double N, double alpha);

/// Generator L_B[f](k,i) by adaptive quadrature of the jump kernel.
double apply_generator(const SpectralParams& p,
                       const std::function<double(double, int)>& f,
                       const ModeState& s);

/// Collision operator [C_B J]_i(u,k); J maps (u, k, branch) -> value.
double apply_collision(const SpectralParams& p,
                       const std::function<double(double, double, int)>& J,
                       double u, double k, int i);

}  // namespace fraclab
