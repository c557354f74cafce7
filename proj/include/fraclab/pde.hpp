#pragma once

#include "fraclab/levy.hpp"

#include <vector>

namespace fraclab {

/// Real-space profile on a uniform periodic grid over [-L, L).
struct GridProfile {
  double L = 0.0;
  int n = 0;  // power of two
  std::vector<double> values;

  double du() const { return 2.0 * L / n; }
  double u_at(int j) const { return -L + j * du(); }
  double mass() const;                    // trapezoid (== du * sum, periodic)
  std::vector<double> frequencies() const;  // rfft bins, xi_m = m / (2L)
};

/// J^{lambda,r}(u) = exp(-lambda/(r^2-u^2)) 1_{[-r,r]}(u).
GridProfile make_mollifier(double L, int n, double lambda, double r);
/// Gaussian bump exp(-u^2/(2 sigma^2)) (not compactly supported).
GridProfile make_gaussian(double L, int n, double sigma);

/// Multiplier symbol Phi(2 pi xi_m) on the profile's rfft bins.
std::vector<double> symbol_for(const GridProfile& profile,
                               const LevyExponent& exponent);

/// Fourier-multiplier semigroup: coefficient m gets exp(t * symbol[m]).
GridProfile evolve_symbol(const GridProfile& profile,
                          const std::vector<double>& symbol, double t);
GridProfile evolve(const GridProfile& profile, const LevyExponent& exponent,
                   double t);

double l2_norm(const GridProfile& a);
double l2_distance(const GridProfile& a, const GridProfile& b);
/// Parseval twin of l2_distance, computed in the frequency domain.
double l2_distance_freq(const GridProfile& a, const GridProfile& b);

struct StudyRow {
  double B = 0.0;
  double distance = 0.0;  // time-integrated L2 distance to the reference
  double ref_norm = 0.0;  // time-integrated L2 norm of the reference
};

struct InterpolationStudy {
  std::vector<StudyRow> to_zero;  // rho_B vs rho_0
  std::vector<StudyRow> to_inf;   // rho_B(B^{1/3} t) vs rho_inf
};

/// Limit comparison of the interpolating evolution against the two
/// closed-form stable limits, over the given time grid.
InterpolationStudy interpolation_limit_study(
    const std::vector<double>& B_to_zero, const std::vector<double>& B_to_inf,
    double gamma, const GridProfile& f0, const std::vector<double>& t_grid);

}  // namespace fraclab
