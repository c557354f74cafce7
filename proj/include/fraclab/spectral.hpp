#pragma once

#include <optional>

namespace fraclab {

/// Field scaling B_eff = B * N^-delta.
struct Scaling {
  double delta = 0.0;
  double N = 1.0;
};

struct SpectralParams {
  double B = 0.0;      // field intensity, >= 0
  double gamma = 1.0;  // noise intensity, > 0
  std::optional<Scaling> scaling;

  double b_eff() const;
  void validate() const;  // throws ConfigError on bad values
};

/// A phonon mode: wave number k in [-1/2, 1/2) and branch i in {1,2}.
struct ModeState {
  double k = 0.0;
  int i = 1;
};

double alpha_hat(double k);
double alpha_hat_prime(double k);

/// Dispersion relation omega_{i,B}(k). Uses the effective field.
double omega(const SpectralParams& p, double k, int i);

/// theta^2_{i,B}(k); theta^2_1 + theta^2_2 = 1. Undefined at (k,B)=(0,0).
double theta_sq(const SpectralParams& p, double k, int i);

/// Group velocity v_B(k); odd in k, undefined at (k,B)=(0,0).
double group_velocity(const SpectralParams& p, double k);

double scattering_R(double k, double k2);
double total_rate_R(double k);        // closed form 8 sin^2(pi k)
double R_bar();                       // closed form 4
double total_rate_R_quad(double k);   // quadrature twin
double R_bar_quad();                  // quadrature twin

/// Mean sojourn time lambda_B(k,i); diverges at k=0.
double lambda_holding(const SpectralParams& p, const ModeState& s);

/// Flight function Psi_B = v_B * lambda_B; odd in k, diverges at k=0.
double psi_flight(const SpectralParams& p, const ModeState& s);

/// Invariant density theta^2_{i,B}(k) R(k) / R_bar.
double pi_density(const SpectralParams& p, const ModeState& s);

/// Residual of the eigenmode identity for mode k=m/L, branch i, relative to
/// the eigenvector norm. Exact identity: expected residual <= 1e-12.
double verify_eigenmode(const SpectralParams& p, int L, int m, int i,
                        unsigned long long seed = 1);

}  // namespace fraclab
