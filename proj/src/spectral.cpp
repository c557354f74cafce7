#include "fraclab/spectral.hpp"

#include "fraclab/errors.hpp"
#include "fraclab/quadrature.hpp"
#include "fraclab/rng.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace fraclab {

double SpectralParams::b_eff() const {
  if (!scaling) return B;
  return B * std::pow(scaling->N, -scaling->delta);
}

void SpectralParams::validate() const {
  if (!(gamma > 0.0)) throw ConfigError("gamma must be positive");
  if (!(B >= 0.0)) throw ConfigError("B must be nonnegative");
  if (scaling) {
    if (!(scaling->N >= 1.0)) throw ConfigError("scaling N must be >= 1");
    if (!(scaling->delta >= 0.0)) throw ConfigError("delta must be >= 0");
  }
}

double alpha_hat(double k) {
  const double s = std::sin(M_PI * k);
  return 4.0 * s * s;
}

double alpha_hat_prime(double k) { return 4.0 * M_PI * std::sin(2.0 * M_PI * k); }

namespace {

void check_branch(int i) {
  if (i != 1 && i != 2) throw ConfigError("branch index must be 1 or 2");
}

// sqrt(alpha_hat(k) + B^2/4), the common frequency scale
double freq_scale(double B, double k) {
  const double s = std::sin(M_PI * k);
  return std::sqrt(4.0 * s * s + 0.25 * B * B);
}

}  // namespace

double omega(const SpectralParams& p, double k, int i) {
  check_branch(i);
  const double B = p.b_eff();
  const double sq = freq_scale(B, k);
  return i == 1 ? sq + 0.5 * B : sq - 0.5 * B;
}

double theta_sq(const SpectralParams& p, double k, int i) {
  check_branch(i);
  const double B = p.b_eff();
  const double sq = freq_scale(B, k);
  if (sq == 0.0)
    throw DegenerateInputError("theta_sq undefined at k=0 with B=0");
  const double t1 = 0.5 + 0.25 * B / sq;
  return i == 1 ? t1 : 1.0 - t1;
}

double group_velocity(const SpectralParams& p, double k) {
  const double B = p.b_eff();
  if (B == 0.0) {
    if (k == 0.0)
      throw DegenerateInputError("group_velocity undefined at k=0 with B=0");
    // v_0(k) = 2 pi sign(k) cos(pi k), the one-sided limit of the general form
    return 2.0 * M_PI * (k > 0.0 ? 1.0 : -1.0) * std::cos(M_PI * k);
  }
  return alpha_hat_prime(k) / (2.0 * freq_scale(B, k));
}

double scattering_R(double k, double k2) {
  const double s = std::sin(M_PI * k);
  const double s2 = std::sin(M_PI * k2);
  return 16.0 * s * s * s2 * s2;
}

double total_rate_R(double k) {
  const double s = std::sin(M_PI * k);
  return 8.0 * s * s;
}

double R_bar() { return 4.0; }

double total_rate_R_quad(double k) {
  return integrate([k](double k2) { return scattering_R(k, k2); }, -0.5, 0.5,
                   1e-12, 1e-12)
      .value;
}

double R_bar_quad() {
  return integrate([](double k) { return total_rate_R_quad(k); }, -0.5, 0.5,
                   1e-10, 1e-12)
      .value;
}

double lambda_holding(const SpectralParams& p, const ModeState& s) {
  const double R = total_rate_R(s.k);
  if (R == 0.0) throw SingularityError("lambda_B diverges at k=0");
  return 1.0 / (p.gamma * theta_sq(p, s.k, s.i) * R);
}

double psi_flight(const SpectralParams& p, const ModeState& s) {
  return group_velocity(p, s.k) * lambda_holding(p, s);
}

double pi_density(const SpectralParams& p, const ModeState& s) {
  if (s.k == 0.0 && p.b_eff() == 0.0) return 0.0;  // R(0)=0 kills the factor
  return theta_sq(p, s.k, s.i) * total_rate_R(s.k) / R_bar();
}

double verify_eigenmode(const SpectralParams& p, int L, int m, int i,
                        unsigned long long seed) {
  check_branch(i);
  if (L < 2) throw ConfigError("lattice size must be >= 2");
  if (m < 0 || m >= L) throw ConfigError("mode index out of range");
  // wave number of lattice mode m, folded into [-1/2, 1/2)
  double k = static_cast<double>(m) / L;
  if (k >= 0.5) k -= 1.0;
  const double B = p.b_eff();
  if (k == 0.0 && B == 0.0)
    throw DegenerateInputError("eigenmode undefined at k=0 with B=0");

  using C = std::complex<double>;
  Xoshiro256 rng(seed);
  C q[2], pm[2];
  for (int c = 0; c < 2; ++c) {
    q[c] = C(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
    pm[c] = C(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
  }

  // reduced mode dynamics: q' = p, p' = -alpha_hat(k) q + B sigma p,
  // sigma = [[0,1],[-1,0]]
  const double ah = alpha_hat(k);
  C qd[2], pd[2];
  for (int c = 0; c < 2; ++c) qd[c] = pm[c];
  pd[0] = -ah * q[0] + B * pm[1];
  pd[1] = -ah * q[1] - B * pm[0];

  const double w1 = omega(p, k, 1);
  const double w2 = omega(p, k, 2);
  // the identity is scale-invariant; when the branch weight vanishes exactly
  // (k=0, branch 2) test the unnormalized combination instead
  double th = std::sqrt(theta_sq(p, k, i));
  if (th == 0.0) th = 1.0;
  const C I(0.0, 1.0);

  auto psi = [&](const C* qq, const C* pp) -> C {
    if (i == 1) return th * (pp[0] - I * w2 * qq[0] + I * pp[1] + w2 * qq[1]);
    return th * (pp[0] - I * w1 * qq[0] - I * pp[1] - w1 * qq[1]);
  };

  const C psi0 = psi(q, pm);
  const C dpsi = psi(qd, pd);
  const double wi = i == 1 ? w1 : w2;
  const double norm = std::abs(psi0);
  if (norm == 0.0) throw DegenerateInputError("zero eigenvector sample");
  return std::abs(dpsi + I * wi * psi0) / norm;
}

}  // namespace fraclab
