#include "fraclab/tails.hpp"

#include "fraclab/errors.hpp"
#include "fraclab/kinetic.hpp"
#include "fraclab/levy.hpp"
#include "fraclab/quadrature.hpp"
#include "fraclab/rng.hpp"

#include <cmath>

namespace fraclab {

double alpha_delta(double delta) {
  if (!(delta >= 0.0)) throw ConfigError("delta must be >= 0");
  return delta >= 0.5 ? 1.5 : (5.0 - delta) / 3.0;
}

namespace {

double psi_pos(const SpectralParams& p, double k, int i) {
  return psi_flight(p, {k, i});
}

// Psi(.,i) must decrease on (0, 1/2) for the super-level boundary to be a
// single root; checked on a coarse grid before bisection is trusted.
void check_monotone(const SpectralParams& p, int i) {
  const int n = 10000;
  double prev = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double k = 0.5 * j / (n + 1.0);
    const double v = psi_pos(p, k, i);
    if (j > 1 && v > prev)
      throw NonconvergenceError(
          "tail_exact: Psi not monotone on (0,1/2) for branch " +
          std::to_string(i));
    prev = v;
  }
}

}  // namespace

double tail_exact(const SpectralParams& p, double r) {
  p.validate();
  if (!p.scaling) throw ConfigError("tail_exact needs the (delta, N) scaling");
  if (r == 0.0) throw ConfigError("tail_exact needs r != 0");
  const double N = p.scaling->N;
  const double T = N * std::fabs(r);  // threshold on |Psi|

  double tail = 0.0;
  for (int i = 1; i <= 2; ++i) {
    check_monotone(p, i);
    // Psi(0+,i) = +inf and Psi(1/2-,i) = 0: bisect Psi - T on (0, 1/2)
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 90; ++it) {
      const double mid = 0.5 * (lo + hi);
      (psi_pos(p, mid, i) > T ? lo : hi) = mid;
    }
    const double kstar = 0.5 * (lo + hi);
    tail += integrate(
                [&p, i](double k) {
                  return pi_density(p, {k, i});
                },
                0.0, kstar, 0.0, 1e-11, 8000)
                .value;
  }
  return tail;
}

TailCI tail_empirical(const SpectralParams& p, double r,
                      std::uint64_t n_samples, std::uint64_t seed) {
  p.validate();
  if (!p.scaling) throw ConfigError("tail_empirical needs the scaling");
  if (n_samples < 1) throw ConfigError("need at least one sample");
  const double N = p.scaling->N;
  const double thr = N * r;
  Xoshiro256 rng(stream_seed(seed, 0));
  std::uint64_t hits = 0;
  for (std::uint64_t m = 0; m < n_samples; ++m) {
    const ModeState s = sample_pi(p, rng);
    if (psi_flight(p, s) > thr) ++hits;
  }
  TailCI ci;
  ci.estimate = static_cast<double>(hits) / n_samples;
  ci.half_width =
      3.0 * std::sqrt(ci.estimate * (1.0 - ci.estimate) / n_samples);
  return ci;
}

double scaled_tail_theory(double B, double gamma, double delta, double r) {
  r = std::fabs(r);
  if (r == 0.0) throw ConfigError("scaled_tail_theory needs r != 0");
  if (delta > 0.5) {
    return std::sqrt(M_PI) / (3.0 * std::sqrt(2.0)) * std::pow(gamma, -1.5) *
           std::pow(r, -1.5);
  }
  if (delta == 0.5) {
    return primitive_h(Branch::minus, B, gamma, 0.25 * r) +
           primitive_h(Branch::plus, B, gamma, 0.25 * r);
  }
  return std::pow(2.0, -1.0 / 3.0) * std::pow(M_PI, 2.0 / 3.0) / 5.0 *
         std::pow(gamma, -5.0 / 3.0) * std::pow(B, -1.0 / 3.0) *
         std::pow(r, -5.0 / 3.0);
}

TailReport scaled_tail_limit(double B, double gamma, double delta,
                             const std::vector<double>& r_grid,
                             const std::vector<double>& N_sequence) {
  for (std::size_t i = 1; i < N_sequence.size(); ++i)
    if (!(N_sequence[i] > N_sequence[i - 1]))
      throw ConfigError("N sequence must be increasing");
  TailReport rep{B, gamma, delta, {}};
  const double alpha = alpha_delta(delta);
  for (double N : N_sequence) {
    SpectralParams p{B, gamma, Scaling{delta, N}};
    for (double r : r_grid) {
      const double tail = tail_exact(p, r);
      const double scaled = std::pow(N, alpha) * tail;
      const double theory = scaled_tail_theory(B, gamma, delta, r);
      rep.rows.push_back(
          {N, r, tail, scaled, theory, std::fabs(scaled - theory) / theory});
    }
  }
  return rep;
}

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2) throw ConfigError("exponent fit needs >= 2 points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

double fit_N_exponent(const TailReport& report, double r) {
  std::vector<double> x, y;
  for (const auto& row : report.rows) {
    if (row.r == r) {
      x.push_back(std::log(row.N));
      y.push_back(std::log(row.tail));
    }
  }
  return -ls_slope(x, y);
}

double fit_r_slope(const TailReport& report, double N) {
  std::vector<double> x, y;
  for (const auto& row : report.rows) {
    if (row.N == N) {
      x.push_back(std::log(row.r));
      y.push_back(std::log(row.scaled));
    }
  }
  return ls_slope(x, y);
}

}  // namespace fraclab
