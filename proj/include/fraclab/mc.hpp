#pragma once

#include "fraclab/spectral.hpp"

#include <cstdint>
#include <vector>

namespace fraclab {

/// One trajectory of the flight functional, evaluated at increasing physical
/// times. `disp[m]` is the raw integral int_0^{t_m} v(K(s)) ds (no 1/(2 pi),
/// no N scaling); callers apply their own normalization.
struct FlightSample {
  std::vector<double> disp;
  ModeState final_state;  // state occupied at the last target time
  std::uint64_t jumps = 0;
};

/// Simulates the jump process at field B_eff and evaluates the flight
/// integral at each target. Throws BudgetError when jump_cap is hit.
FlightSample mc_flight(double B_eff, double gamma, const ModeState& start,
                       const std::vector<double>& t_targets,
                       std::uint64_t jump_cap, std::uint64_t seed);

/// Clock statistics of one path: exact sup_{t in [t0,T]} |S_N(t) - 2 gamma t|
/// over the step function S_N(t) = j_N(scale*t)/scale, plus S_N(T).
struct ClockSample {
  double max_dev = 0.0;
  double s_end = 0.0;
  std::uint64_t jumps = 0;
};

ClockSample mc_clock(double B_eff, double gamma, const ModeState& start,
                     double scale, double t0, double T, std::uint64_t jump_cap,
                     std::uint64_t seed);

/// Fixed-jump-count functional: sum of Psi(X_n) tau_n over n_jumps sojourns,
/// the first from `start`. Raw sum, no normalization.
double mc_fixed_count(double B_eff, double gamma, const ModeState& start,
                      std::uint64_t n_jumps, std::uint64_t seed);

}  // namespace fraclab
