#include "fraclab/kinetic.hpp"

#include "fraclab/errors.hpp"
#include "fraclab/quadrature.hpp"

#include <cmath>

namespace fraclab {

ModeState sample_pi(const SpectralParams& p, Xoshiro256& rng) {
  const double B = p.b_eff();
  // k-marginal has density 2 sin^2(pi k); envelope 2 over the uniform
  // proposal, acceptance rate 1/2. Conditional on acceptance u/s^2 is again
  // uniform, which decides the branch for free.
  for (;;) {
    const double k = rng.uniform() - 0.5;
    const double s = std::sin(M_PI * k);
    const double s2 = s * s;
    const double u = rng.uniform();
    if (u >= s2) continue;
    const double sq = std::sqrt(4.0 * s2 + 0.25 * B * B);
    const double th1 = 0.5 + 0.25 * B / sq;
    return {k, u < s2 * th1 ? 1 : 2};
  }
}

ModeState step_chain(const SpectralParams& p, const ModeState& /*current*/,
                     Xoshiro256& rng) {
  return sample_pi(p, rng);
}

Trajectory simulate_trajectory(const SpectralParams& p, const ModeState& x0,
                               std::size_t n_jumps, std::uint64_t seed) {
  if (x0.k == 0.0) throw SingularityError("trajectory start at k=0");
  Trajectory traj;
  traj.rng_seed = seed;
  traj.states.reserve(n_jumps);
  traj.holdings.reserve(n_jumps);
  traj.clock.reserve(n_jumps);
  Xoshiro256 rng(seed);
  ModeState x = x0;
  double t = 0.0, comp = 0.0;
  for (std::size_t n = 0; n < n_jumps; ++n) {
    const double h = lambda_holding(p, x) * rng.exponential();
    traj.states.push_back(x);
    traj.holdings.push_back(h);
    // compensated running sum for the clock
    const double y = h - comp;
    const double tn = t + y;
    comp = (tn - t) - y;
    t = tn;
    traj.clock.push_back(t);
    x = sample_pi(p, rng);
  }
  return traj;
}

double flight_integral(const SpectralParams& p, const Trajectory& traj,
                       double u, double t, double prefactor) {
  if (prefactor < 0.0) prefactor = 1.0 / (2.0 * M_PI);
  if (t == 0.0) return u;
  if (traj.clock.empty() || traj.clock.back() < t)
    throw InsufficientTrajectoryError("trajectory ends before horizon");
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t n = 0; n < traj.states.size(); ++n) {
    const double end = traj.clock[n];
    const double v = group_velocity(p, traj.states[n].k);
    if (end >= t) {
      acc += v * (t - prev);
      return u - prefactor * acc;
    }
    acc += v * (end - prev);
    prev = end;
  }
  throw InsufficientTrajectoryError("trajectory ends before horizon");
}

double clock_inverse(const Trajectory& traj, double t, double N, double alpha) {
  if (t == 0.0) return 0.0;
  const double scale = std::pow(N, alpha);
  const double horizon = scale * t;
  if (traj.clock.empty() || traj.clock.back() < horizon)
    throw InsufficientTrajectoryError("trajectory ends before horizon");
  // count jumps with T_n <= horizon
  std::size_t lo = 0, hi = traj.clock.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (traj.clock[mid] <= horizon)
      lo = mid + 1;
    else
      hi = mid;
  }
  return static_cast<double>(lo) / scale;
}

double apply_generator(const SpectralParams& p,
                       const std::function<double(double, int)>& f,
                       const ModeState& s) {
  const double lam = lambda_holding(p, s);
  const double fx = f(s.k, s.i);
  double mean = 0.0;
  for (int j = 1; j <= 2; ++j) {
    mean += integrate(
                [&](double k2) {
                  return f(k2, j) * pi_density(p, {k2, j});
                },
                -0.5, 0.5, 1e-10, 1e-12)
                .value;
  }
  return (mean - fx) / lam;
}

double apply_collision(const SpectralParams& p,
                       const std::function<double(double, double, int)>& J,
                       double u, double k, int i) {
  const double thi = theta_sq(p, k, i);
  const double Ji = J(u, k, i);
  double out = 0.0;
  for (int j = 1; j <= 2; ++j) {
    out += integrate(
               [&](double k2) {
                 const double R = scattering_R(k, k2);
                 if (R == 0.0) return 0.0;  // also dodges theta at k2=0, B=0
                 return thi * R * theta_sq(p, k2, j) * (J(u, k2, j) - Ji);
               },
               -0.5, 0.5, 1e-10, 1e-12)
               .value;
  }
  return out;
}

}  // namespace fraclab
