#pragma once

#include "fraclab/spectral.hpp"

#include <cstdint>
#include <vector>

namespace fraclab {

double alpha_delta(double delta);  // 3/2 for delta >= 1/2, else (5-delta)/3

/// pi_{B_N}(Psi_{B_N} > N r) by super-level bisection plus quadrature.
/// Requires params.scaling; r != 0 (negative r uses Psi's oddness).
double tail_exact(const SpectralParams& p, double r);

struct TailCI {
  double estimate = 0.0;
  double half_width = 0.0;  // 3 sigma binomial
};

TailCI tail_empirical(const SpectralParams& p, double r,
                      std::uint64_t n_samples, std::uint64_t seed);

/// Limiting value of N^{alpha_delta} pi(Psi > N r).
double scaled_tail_theory(double B, double gamma, double delta, double r);

struct TailRow {
  double N, r, tail, scaled, theory, rel_err;
};

struct TailReport {
  double B, gamma, delta;
  std::vector<TailRow> rows;
};

TailReport scaled_tail_limit(double B, double gamma, double delta,
                             const std::vector<double>& r_grid,
                             const std::vector<double>& N_sequence);

/// Least-squares exponent of tail ~ N^{-alpha} at fixed r.
double fit_N_exponent(const TailReport& report, double r);
/// Least-squares slope of log(scaled tail) vs log r at fixed N.
double fit_r_slope(const TailReport& report, double N);

}  // namespace fraclab
