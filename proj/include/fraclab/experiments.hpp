#pragma once

#include "fraclab/spectral.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace fraclab {

// ---------------------------------------------------------------------------
// scaled-process characteristic functions against the limit law

struct CharfnConfig {
  double B = 0.0, gamma = 1.0, delta = 0.0;
  std::vector<double> N_list;
  double t = 1.0;
  double u = 0.0;
  std::vector<double> theta;
  std::uint64_t M = 100;    // ensemble size for the time-changed process Z
  std::uint64_t M_y = 0;    // ensemble for the fixed-count variant Y; 0 = M/10
  std::uint64_t seed = 1;
  ModeState start{0.3, 1};
  double allowance = 0.02;  // declared finite-size allowance
  double prefactor = 0.0;   // flight prefactor; 0 = 1/(2 pi)
};

struct CharfnRow {
  double N = 0.0, theta = 0.0;
  double est_re = 0.0, est_im = 0.0;  // E[exp(i theta (X - u))]
  double ci = 0.0;                    // 3/sqrt(M)
  double theory = 0.0;                // limit value (real by symmetry)
  bool pass = false;
  char variant = 'Z';
};

struct CharfnReport {
  CharfnConfig config;
  std::vector<CharfnRow> rows;
};

CharfnReport charfn_convergence(const CharfnConfig& config);

// ---------------------------------------------------------------------------
// clock law of large numbers

struct ClockConfig {
  double B = 0.0, gamma = 1.0, delta = 0.0;
  std::vector<double> N_list;
  double t0 = 0.1, T = 1.0;
  double eps = 0.1;
  std::uint64_t M = 100;
  std::uint64_t seed = 1;
  ModeState start{0.3, 1};
};

struct ClockRow {
  double N = 0.0;
  double exceed_prob = 0.0;
  double ci = 0.0;           // 3 sigma binomial
  double mean_S_end = 0.0;   // mean of S_N(T)
  double sd_mean = 0.0;      // 3 sigma of the mean
  bool pass = false;         // exceed_prob below threshold at largest N
};

struct ClockReport {
  ClockConfig config;
  double threshold = 0.01;
  std::vector<ClockRow> rows;
};

ClockReport clock_convergence(const ClockConfig& config);

// ---------------------------------------------------------------------------
// hydrodynamic limit of f_{B_N}

struct HydroConfig {
  double B = 0.0, gamma = 1.0, delta = 0.0;
  double N = 100.0;
  double t = 0.5, u = 0.0;
  std::uint64_t M = 100;
  std::uint64_t seed = 1;
  ModeState start{0.3, 1};
  ModeState start2{0.1, 2};  // second start state for the independence check
  double moll_lambda = 1.0, moll_r = 1.0;
  double k_amp = 0.0;  // f0(u,k,i) = J(u) (1 + k_amp cos(2 pi k))
  double L = 64.0;
  int n_points = 16384;
  double allowance = 0.02;
  // optional k-integrated discrepancy (expensive): 0 disables
  std::uint64_t M_k = 0;
  int k_grid = 33;
};

struct HydroEstimate {
  ModeState start;
  double estimate = 0.0;
  double ci = 0.0;  // 3 sigma of the mean
};

struct HydroReport {
  HydroConfig config;
  double theory = 0.0;  // (1/2) rho_delta(t, u) from the PDE module
  std::vector<HydroEstimate> estimates;
  bool pass = false;        // every estimate within ci + allowance of theory
  bool pass_indep = false;  // estimates agree within combined intervals
  // k-integrated discrepancy sum_i int |f - rho/2| dk (when M_k > 0),
  // reported for the base grid and the refined (2x) grid, L1 and L2 forms
  double k_l1 = 0.0, k_l1_refined = 0.0;
  double k_l2 = 0.0, k_l2_refined = 0.0;
};

HydroReport hydro_limit_f(const HydroConfig& config);

// ---------------------------------------------------------------------------
// acceptance criteria

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string detail;
};

/// Runs acceptance criterion `id` (1..10) with pinned tolerances.
CriterionResult run_criterion(int id, std::uint64_t seed);

}  // namespace fraclab
