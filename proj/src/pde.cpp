#include "fraclab/pde.hpp"

#include "fraclab/errors.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>

namespace fraclab {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_grid(const GridProfile& p) {
  if (!(p.L > 0.0) || !power_of_two(p.n) ||
      p.values.size() != static_cast<std::size_t>(p.n))
    throw ConfigError("invalid grid profile");
}

void check_same_grid(const GridProfile& a, const GridProfile& b) {
  if (a.L != b.L || a.n != b.n)
    throw GridMismatchError("profiles live on different grids");
}

std::vector<std::complex<double>> rfft(const GridProfile& p) {
  std::vector<double> in(p.values);
  std::vector<std::complex<double>> out(p.n / 2 + 1);
  fftw_plan plan = fftw_plan_dft_r2c_1d(
      p.n, in.data(), reinterpret_cast<fftw_complex*>(out.data()),
      FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

std::vector<double> irfft(std::vector<std::complex<double>> spec, int n) {
  std::vector<double> out(n);
  fftw_plan plan = fftw_plan_dft_c2r_1d(
      n, reinterpret_cast<fftw_complex*>(spec.data()), out.data(),
      FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  for (double& v : out) v /= n;
  return out;
}

}  // namespace

double GridProfile::mass() const { return du() * [this] {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}(); }

std::vector<double> GridProfile::frequencies() const {
  std::vector<double> xi(n / 2 + 1);
  for (int m = 0; m <= n / 2; ++m) xi[m] = m / (2.0 * L);
  return xi;
}

GridProfile make_mollifier(double L, int n, double lambda, double r) {
  if (!(lambda > 0.0) || !(r > 0.0))
    throw ConfigError("mollifier needs lambda > 0 and r > 0");
  if (!(L > r)) throw ConfigError("domain must contain the support");
  if (!power_of_two(n)) throw ConfigError("n_points must be a power of two");
  GridProfile p{L, n, std::vector<double>(n, 0.0)};
  for (int j = 0; j < n; ++j) {
    const double u = p.u_at(j);
    if (std::fabs(u) < r) p.values[j] = std::exp(-lambda / (r * r - u * u));
  }
  return p;
}

GridProfile make_gaussian(double L, int n, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("gaussian needs sigma > 0");
  if (!power_of_two(n)) throw ConfigError("n_points must be a power of two");
  GridProfile p{L, n, std::vector<double>(n, 0.0)};
  for (int j = 0; j < n; ++j) {
    const double u = p.u_at(j);
    p.values[j] = std::exp(-0.5 * u * u / (sigma * sigma));
  }
  return p;
}

std::vector<double> symbol_for(const GridProfile& profile,
                               const LevyExponent& exponent) {
  check_grid(profile);
  const std::vector<double> xi = profile.frequencies();
  std::vector<double> sym(xi.size());
  for (std::size_t m = 0; m < xi.size(); ++m)
    sym[m] = exponent.phi_fast(2.0 * M_PI * xi[m]);
  return sym;
}

GridProfile evolve_symbol(const GridProfile& profile,
                          const std::vector<double>& symbol, double t) {
  check_grid(profile);
  if (!(t >= 0.0)) throw ConfigError("evolution time must be >= 0");
  if (symbol.size() != static_cast<std::size_t>(profile.n / 2 + 1))
    throw GridMismatchError("symbol length does not match the grid");
  auto spec = rfft(profile);
  for (std::size_t m = 0; m < spec.size(); ++m)
    spec[m] *= std::exp(t * symbol[m]);
  GridProfile out{profile.L, profile.n, irfft(std::move(spec), profile.n)};
  return out;
}

GridProfile evolve(const GridProfile& profile, const LevyExponent& exponent,
                   double t) {
  return evolve_symbol(profile, symbol_for(profile, exponent), t);
}

double l2_norm(const GridProfile& a) {
  check_grid(a);
  double s = 0.0;
  for (double v : a.values) s += v * v;
  return std::sqrt(s * a.du());
}

double l2_distance(const GridProfile& a, const GridProfile& b) {
  check_grid(a);
  check_grid(b);
  check_same_grid(a, b);
  double s = 0.0;
  for (int j = 0; j < a.n; ++j) {
    const double d = a.values[j] - b.values[j];
    s += d * d;
  }
  return std::sqrt(s * a.du());
}

double l2_distance_freq(const GridProfile& a, const GridProfile& b) {
  check_grid(a);
  check_grid(b);
  check_same_grid(a, b);
  const auto sa = rfft(a);
  const auto sb = rfft(b);
  double s = 0.0;
  for (std::size_t m = 0; m < sa.size(); ++m) {
    const double d = std::norm(sa[m] - sb[m]);
    // interior rfft bins stand for a conjugate pair
    const bool edge = m == 0 || m + 1 == sa.size();
    s += edge ? d : 2.0 * d;
  }
  return std::sqrt(s * a.du() / a.n);
}

namespace {

double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i)
    s += 0.5 * (y[i] + y[i - 1]) * (t[i] - t[i - 1]);
  return s;
}

StudyRow study_one(double B, double time_scale, const GridProfile& f0,
                   const std::vector<double>& symbol_B,
                   const std::vector<GridProfile>& refs,
                   const std::vector<double>& ref_norms,
                   const std::vector<double>& t_grid) {
  std::vector<double> dist(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const GridProfile evolved =
        evolve_symbol(f0, symbol_B, time_scale * t_grid[i]);
    dist[i] = l2_distance(evolved, refs[i]);
  }
  StudyRow row;
  row.B = B;
  row.distance = trapezoid(t_grid, dist);
  row.ref_norm = trapezoid(t_grid, ref_norms);
  return row;
}

}  // namespace

InterpolationStudy interpolation_limit_study(
    const std::vector<double>& B_to_zero, const std::vector<double>& B_to_inf,
    double gamma, const GridProfile& f0, const std::vector<double>& t_grid) {
  check_grid(f0);
  if (t_grid.size() < 2) throw ConfigError("need at least two time points");

  InterpolationStudy study;

  const LevyExponent exp0(
      LevyMeasureSpec::make(Regime::delta_gt_half, 0.0, gamma));
  const LevyExponent expinf(
      LevyMeasureSpec::make(Regime::delta_lt_half, 1.0, gamma));

  auto make_refs = [&](const LevyExponent& e, std::vector<GridProfile>& refs,
                       std::vector<double>& norms) {
    const auto sym = symbol_for(f0, e);
    refs.reserve(t_grid.size());
    norms.resize(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
      refs.push_back(evolve_symbol(f0, sym, t_grid[i]));
      norms[i] = l2_norm(refs.back());
    }
  };

  std::vector<GridProfile> refs0, refsinf;
  std::vector<double> norms0, normsinf;
  make_refs(exp0, refs0, norms0);
  make_refs(expinf, refsinf, normsinf);

  for (double B : B_to_zero) {
    const LevyExponent eB(
        LevyMeasureSpec::make(Regime::delta_eq_half, B, gamma));
    study.to_zero.push_back(study_one(B, 1.0, f0, symbol_for(f0, eB), refs0,
                                      norms0, t_grid));
  }
  for (double B : B_to_inf) {
    const LevyExponent eB(
        LevyMeasureSpec::make(Regime::delta_eq_half, B, gamma));
    study.to_inf.push_back(study_one(B, std::cbrt(B), f0, symbol_for(f0, eB),
                                     refsinf, normsinf, t_grid));
  }
  return study;
}

}  // namespace fraclab
