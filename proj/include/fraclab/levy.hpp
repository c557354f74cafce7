#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace fraclab {

enum class Branch { plus, minus };
enum class Regime { delta_gt_half, delta_eq_half, delta_lt_half };

struct RootResult {
  double x;       // x_{B,+-}(r)
  double xprime;  // d x / d r, from the differentiated defining relation
};

/// Implicit root of (2 sqrt(x^2 + B^2/4) +- B) x = pi / (gamma r).
/// Odd in r; solved by bracketed bisection plus a Newton endgame.
RootResult solve_x(Branch branch, double B, double gamma, double r);

/// Levy density g_{B,+-}(r); even, positive.
double density_g(Branch branch, double B, double gamma, double r);

/// Primitive h_{B,+-}(|r|) = (1/4pi) int_0^{x(|r|)} (1/2 +- B/(4 sqrt(x^2+B^2/4))) x^2 dx.
double primitive_h(Branch branch, double B, double gamma, double r);

double kappa0();     // 1/(4 pi)
double kappa_inf();  // 1/(6 pi)

/// int_0^inf (1 - cos u) u^{-1-alpha} du, quadrature body + analytic closure.
double cos_tail_integral(double alpha);
/// Same integral via the stable-law identity -Gamma(-alpha) cos(pi alpha / 2).
double cos_tail_integral_closed(double alpha);

/// (D_0, D_infinity): D_0 = 2 kappa0 int (1-cos r)/r^{5/2},
/// D_inf = 2 kappa_inf int (1-cos r)/r^{8/3}; quadrature route.
std::pair<double, double> limit_constants();

/// Jump-size measure nu_delta of the limiting Levy process.
class LevyMeasureSpec {
public:
  /// tau_moment_exponent applies to the delta<1/2 regime only: the moment of
  /// the Exp(1) holding variable entering the prefactor is
  /// Gamma(1 + tau_moment_exponent). Pass a negative value for the default 5/3.
  static LevyMeasureSpec make(Regime regime, double B, double gamma,
                              double tau_moment_exponent = -1.0);

  Regime regime() const { return regime_; }
  double B() const { return B_; }
  double gamma() const { return gamma_; }
  double alpha_tail() const;  // 3/2, or 5/3 (also the delta=1/2 attractor)

  /// density nu(r), even in r
  double density(double r) const;
  /// nu((r, inf)) for r > 0
  double tail_mass(double r) const;
  /// d nu / d r at r > 0 (used by the oscillatory tail correction)
  double density_derivative(double r) const;

  bool pure_power() const;
  /// A such that nu(r) = A |r|^{-1-alpha_tail} (pure power regimes only)
  double power_prefactor() const;

  /// int min(1, r^2) dnu, quadrature with power-law closure
  double integrability() const;

private:
  LevyMeasureSpec() = default;
  void build_interpolating_cache();

  Regime regime_ = Regime::delta_gt_half;
  double B_ = 0.0, gamma_ = 1.0;
  double prefactor_ = 0.0;  // pure power regimes
  // log-log cache for the delta = 1/2 density
  std::shared_ptr<const struct NuCache> cache_;
};

/// Levy exponent Phi_delta; real, even, nonpositive, Phi(0) = 0.
class LevyExponent {
public:
  explicit LevyExponent(LevyMeasureSpec spec) : spec_(std::move(spec)) {}

  /// quadrature route, all regimes
  double phi(double theta) const;
  /// closed-form power law; throws ConfigError for the interpolating regime
  double phi_closed(double theta) const;
  /// phi() for pure power regimes evaluated through the closed form (they
  /// agree to the quadrature tolerance); phi() otherwise
  double phi_fast(double theta) const;

  const LevyMeasureSpec& spec() const { return spec_; }

private:
  LevyMeasureSpec spec_;
};

/// Multiplier action of the generator: out[j] = Phi(2 pi xi[j]) * in[j],
/// with xi in ordinary frequency units.
std::vector<std::complex<double>> generator_apply(
    const LevyExponent& exponent, const std::vector<double>& xi,
    const std::vector<std::complex<double>>& in);

}  // namespace fraclab
