#include "fraclab/levy.hpp"

#include "fraclab/errors.hpp"
#include "fraclab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace fraclab {

namespace {

void check_pos(double gamma) {
  if (!(gamma > 0.0)) throw ConfigError("gamma must be positive");
}

double defining_rhs(double gamma, double r) { return M_PI / (gamma * r); }

// F(x) = (2 sqrt(x^2+q) +- B) x - rhs, strictly increasing on x > 0.
// The minus combination is evaluated as 2x^2/(sq + B/2), which is exact
// algebra and avoids the catastrophic cancellation 2*sq - B at large B.
struct Defining {
  double B, q, rhs;
  bool plus;
  double coeff(double x) const {
    const double sq = std::sqrt(x * x + q);
    return plus ? 2.0 * sq + B : 2.0 * x * x / (sq + 0.5 * B);
  }
  double value(double x) const { return coeff(x) * x - rhs; }
  double slope(double x) const {
    const double sq = std::sqrt(x * x + q);
    return coeff(x) + 2.0 * x * x / sq;
  }
};

}  // namespace

RootResult solve_x(Branch branch, double B, double gamma, double r) {
  check_pos(gamma);
  if (!(B >= 0.0)) throw ConfigError("B must be nonnegative");
  if (r == 0.0) throw DegenerateInputError("solve_x undefined at r=0");
  const double rp = std::fabs(r);
  const double sign = r > 0.0 ? 1.0 : -1.0;
  Defining F{B, 0.25 * B * B, defining_rhs(gamma, rp), branch == Branch::plus};

  // plus-branch bound sqrt(pi/(2 gamma r)); the minus branch may sit higher,
  // expand by doubling
  double lo = 0.0;
  double hi = std::sqrt(M_PI / (2.0 * gamma * rp));
  int guard = 0;
  while (F.value(hi) < 0.0) {
    hi *= 2.0;
    if (++guard > 600) throw NonconvergenceError("solve_x: bracket expansion");
  }
  // bisection to ~1e-3 relative
  for (int it = 0; it < 200 && (hi - lo) > 1e-3 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (F.value(mid) < 0.0 ? lo : hi) = mid;
  }
  // bracketed Newton endgame: every step stays inside [lo, hi] and the
  // bracket shrinks, so a root at a bracket edge cannot cycle
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = F.value(x);
    (fx < 0.0 ? lo : hi) = x;
    double xn = x - fx / F.slope(x);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    const bool done = std::fabs(xn - x) <= 4e-15 * x || hi - lo <= 4e-15 * hi;
    x = xn;
    if (done) break;
  }
  if (!(std::fabs(F.value(x)) <= 1e-12 * F.rhs))
    throw NonconvergenceError("solve_x: Newton stalled");
  // implicit differentiation: F_x(x) x'(r) = d rhs / d r = -pi/(gamma r^2)
  const double xp = -M_PI / (gamma * rp * rp) / F.slope(x);
  return {sign * x, xp};
}

namespace {

// the branch weight (1/2 +- B/(4 sqrt(x^2+q))) in cancellation-free form
double branch_factor(Branch branch, double B, double x) {
  const double sq = std::sqrt(x * x + 0.25 * B * B);
  if (branch == Branch::plus) return (2.0 * sq + B) / (4.0 * sq);
  return x * x / (sq * (2.0 * sq + B));
}

}  // namespace

double density_g(Branch branch, double B, double gamma, double r) {
  const RootResult root = solve_x(branch, B, gamma, std::fabs(r));
  const double x = root.x;
  return -(root.xprime / (4.0 * M_PI)) * branch_factor(branch, B, x) * x * x;
}

double primitive_h(Branch branch, double B, double gamma, double r) {
  const double xr = solve_x(branch, B, gamma, std::fabs(r)).x;
  const QuadResult q = integrate(
      [branch, B](double x) {
        return branch_factor(branch, B, x) * x * x;
      },
      0.0, xr, 0.0, 1e-12, 8000);
  return q.value / (4.0 * M_PI);
}

double kappa0() { return 1.0 / (4.0 * M_PI); }
double kappa_inf() { return 1.0 / (6.0 * M_PI); }

namespace {

// int_K^inf cos u * u^{-1-a} du, asymptotic integration by parts (K large)
double cos_tail_osc(double a, double K) {
  const double a1 = 1.0 + a;
  const double s = std::sin(K), c = std::cos(K);
  double term = std::pow(K, -a1);
  double out = -s * term;
  term /= K;
  out += a1 * c * term;
  term /= K;
  out += a1 * (a1 + 1.0) * s * term;
  term /= K;
  out -= a1 * (a1 + 1.0) * (a1 + 2.0) * c * term;
  return out;
}

// int_K^inf (1 - cos u) u^{-1-a} du
double cos_tail_closure(double a, double K) {
  return std::pow(K, -a) / a - cos_tail_osc(a, K);
}

}  // namespace

namespace {

// integrates a nonnegative oscillatory integrand of angular frequency freq
// over [a, b] in chunks of at most ~4 periods, so each adaptive call sees a
// resolvable panel; per-chunk relative errors add since the sign is fixed
double integrate_osc(const std::function<double(double)>& f, double a,
                     double b, double freq, double rel_tol) {
  const double chunk = std::max((b - a) / 4096.0, 8.0 * M_PI / freq);
  double sum = 0.0;
  double lo = a;
  while (lo < b) {
    const double hi = std::min(b, lo + chunk);
    sum += integrate(f, lo, hi, 0.0, rel_tol, 8000).value;
    lo = hi;
  }
  return sum;
}

}  // namespace

double cos_tail_integral(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw ConfigError("cos_tail_integral: alpha must be in (0,2)");
  const double K = 1e4;
  // u = w^6 lifts the u^{1-alpha} endpoint behaviour to at least w^1
  const double body0 =
      integrate(
          [alpha](double w) {
            const double w2 = w * w, w3 = w2 * w;
            const double u = w3 * w3;
            if (u == 0.0) return 0.0;  // w below the underflow cutoff
            // 2 sin^2(u/2) keeps full relative precision where 1-cos loses
            // it; grouping as (sin/u)^2 u^{1-alpha} avoids overflow of the
            // bare u^{-1-alpha} deep in the adaptive subdivision
            const double h = std::sin(0.5 * u) / u;
            return 2.0 * h * h * std::pow(u, 1.0 - alpha) * 6.0 * w2 * w3;
          },
          0.0, 1.0, 0.0, 1e-12, 8000)
          .value;
  const double body1 = integrate_osc(
      [alpha](double u) {
        const double h = std::sin(0.5 * u);
        return 2.0 * h * h * std::pow(u, -1.0 - alpha);
      },
      1.0, K, 1.0, 1e-12);
  return body0 + body1 + cos_tail_closure(alpha, K);
}

double cos_tail_integral_closed(double alpha) {
  return -std::tgamma(-alpha) * std::cos(0.5 * M_PI * alpha);
}

std::pair<double, double> limit_constants() {
  return {2.0 * kappa0() * cos_tail_integral(1.5),
          2.0 * kappa_inf() * cos_tail_integral(5.0 / 3.0)};
}

// ---------------------------------------------------------------------------
// interpolating-measure cache

struct NuCache {
  std::vector<double> lx, ly, slope;  // log r, log nu, d log nu / d log r
  double r_lo = 0.0, r_hi = 0.0;
  double p_lo = 0.0, p_hi = 0.0;  // end power exponents

  double log_eval(double lr, double* dslope) const {
    const std::size_t n = lx.size();
    std::size_t i =
        std::upper_bound(lx.begin(), lx.end(), lr) - lx.begin();
    if (i == 0) i = 1;
    if (i == n) i = n - 1;
    const double h = lx[i] - lx[i - 1];
    const double t = (lr - lx[i - 1]) / h;
    const double y0 = ly[i - 1], y1 = ly[i];
    const double m0 = slope[i - 1] * h, m1 = slope[i] * h;
    const double t2 = t * t, t3 = t2 * t;
    const double v = (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * m0 +
                     (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * m1;
    if (dslope) {
      *dslope = ((6 * t2 - 6 * t) * y0 + (3 * t2 - 4 * t + 1) * m0 +
                 (-6 * t2 + 6 * t) * y1 + (3 * t2 - 2 * t) * m1) /
                h;
    }
    return v;
  }
};

namespace {

// monotone (Fritsch-Carlson) slopes on a uniform grid
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n - 1), m(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    d[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  m[0] = d[0];
  m[n - 1] = d[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0)
      m[i] = 0.0;
    else
      m[i] = 2.0 / (1.0 / d[i - 1] + 1.0 / d[i]);
  }
  return m;
}

const std::vector<std::pair<double, double>>& laguerre64() {
  static const auto nodes = gauss_laguerre(64);
  return nodes;
}

}  // namespace

void LevyMeasureSpec::build_interpolating_cache() {
  auto cache = std::make_shared<NuCache>();
  // keep the 5/2 -> 8/3 crossover radius ~ pi/(2 gamma B^2) well inside the
  // table so the end power extensions see settled exponents
  cache->r_lo = std::clamp(1e-3 * M_PI / (2.0 * gamma_ * B_ * B_), 1e-14, 1e-7);
  cache->r_hi = 1e7;
  const int per_decade = 96;
  const double llo = std::log(cache->r_lo), lhi = std::log(cache->r_hi);
  const int n = static_cast<int>(per_decade * (lhi - llo) / std::log(10.0)) + 1;
  const auto& gl = laguerre64();
  cache->lx.resize(n);
  cache->ly.resize(n);
  for (int i = 0; i < n; ++i) {
    const double lr = llo + (lhi - llo) * i / (n - 1);
    const double r = std::exp(lr);
    double nu = 0.0;
    for (const auto& [tau, w] : gl) {
      const double s = 0.5 * M_PI * r / tau;
      nu += w / tau *
            (density_g(Branch::plus, B_, gamma_, s) +
             density_g(Branch::minus, B_, gamma_, s));
    }
    nu *= M_PI * gamma_;
    cache->lx[i] = lr;
    cache->ly[i] = std::log(nu);
  }
  cache->slope = pchip_slopes(cache->lx, cache->ly);
  cache->p_lo = cache->slope.front();
  cache->p_hi = cache->slope.back();
  cache_ = cache;
}

LevyMeasureSpec LevyMeasureSpec::make(Regime regime, double B, double gamma,
                                      double tau_moment_exponent) {
  check_pos(gamma);
  LevyMeasureSpec spec;
  spec.regime_ = regime;
  spec.B_ = B;
  spec.gamma_ = gamma;
  switch (regime) {
    case Regime::delta_gt_half:
      spec.prefactor_ =
          std::pow(gamma, -0.5) * kappa0() * std::tgamma(2.5);
      break;
    case Regime::delta_lt_half: {
      if (!(B > 0.0))
        throw ConfigError("delta<1/2 measure needs a positive field");
      const double p =
          tau_moment_exponent < 0.0 ? 5.0 / 3.0 : tau_moment_exponent;
      spec.prefactor_ = std::pow(gamma, -2.0 / 3.0) * std::pow(B, -1.0 / 3.0) *
                        kappa_inf() * std::tgamma(1.0 + p);
      break;
    }
    case Regime::delta_eq_half:
      if (!(B > 0.0))
        throw ConfigError("interpolating measure needs a positive field");
      spec.build_interpolating_cache();
      break;
  }
  return spec;
}

double LevyMeasureSpec::alpha_tail() const {
  return regime_ == Regime::delta_gt_half ? 1.5 : 5.0 / 3.0;
}

bool LevyMeasureSpec::pure_power() const {
  return regime_ != Regime::delta_eq_half;
}

double LevyMeasureSpec::power_prefactor() const {
  if (!pure_power())
    throw ConfigError("interpolating measure has no power prefactor");
  return prefactor_;
}

double LevyMeasureSpec::density(double r) const {
  r = std::fabs(r);
  if (r == 0.0) throw SingularityError("nu diverges at r=0");
  if (pure_power()) return prefactor_ * std::pow(r, -1.0 - alpha_tail());
  const NuCache& c = *cache_;
  if (r < c.r_lo)
    return std::exp(c.ly.front()) * std::pow(r / c.r_lo, c.p_lo);
  if (r > c.r_hi)
    return std::exp(c.ly.back()) * std::pow(r / c.r_hi, c.p_hi);
  return std::exp(c.log_eval(std::log(r), nullptr));
}

double LevyMeasureSpec::density_derivative(double r) const {
  if (!(r > 0.0)) throw ConfigError("density_derivative needs r > 0");
  if (pure_power()) {
    const double a = alpha_tail();
    return -(1.0 + a) * prefactor_ * std::pow(r, -2.0 - a);
  }
  const NuCache& c = *cache_;
  double p;
  double nu;
  if (r < c.r_lo) {
    p = c.p_lo;
    nu = std::exp(c.ly.front()) * std::pow(r / c.r_lo, p);
  } else if (r > c.r_hi) {
    p = c.p_hi;
    nu = std::exp(c.ly.back()) * std::pow(r / c.r_hi, p);
  } else {
    nu = std::exp(c.log_eval(std::log(r), &p));
  }
  return nu * p / r;
}

double LevyMeasureSpec::tail_mass(double r) const {
  if (!(r > 0.0)) throw ConfigError("tail_mass needs r > 0");
  if (pure_power()) {
    const double a = alpha_tail();
    return prefactor_ * std::pow(r, -a) / a;
  }
  const NuCache& c = *cache_;
  const double nu_hi = std::exp(c.ly.back());
  const double ext = nu_hi * c.r_hi / (-c.p_hi - 1.0);
  if (r >= c.r_hi) return density(r) * r / (-c.p_hi - 1.0);
  return integrate([this](double s) { return density(s); }, r, c.r_hi, 0.0,
                   1e-10, 20000)
             .value +
         ext;
}

double LevyMeasureSpec::integrability() const {
  // 2 [ int_0^1 r^2 nu + nu((1,inf)) ] with the small-r endpoint handled by
  // a power closure (interpolating) or smoothing substitution (power law)
  double small;
  if (pure_power()) {
    const double a = alpha_tail();
    small = integrate(
                [this, a](double w) {
                  const double r = w * w;
                  return r * r * prefactor_ * std::pow(r, -1.0 - a) * 2.0 * w;
                },
                0.0, 1.0, 0.0, 1e-10, 8000)
                .value;
  } else {
    const NuCache& c = *cache_;
    const double nu_lo = std::exp(c.ly.front());
    small = nu_lo * std::pow(c.r_lo, 3.0) / (3.0 + c.p_lo) +
            integrate([this](double r) { return r * r * density(r); }, c.r_lo,
                      1.0, 0.0, 1e-10, 20000)
                .value;
  }
  return 2.0 * (small + tail_mass(1.0));
}

// ---------------------------------------------------------------------------
// exponent

double LevyExponent::phi(double theta) const {
  double th = std::fabs(theta);
  if (th == 0.0) return 0.0;
  const double K = 512.0;
  double rc = K / th;
  if (!spec_.pure_power()) {
    // stay inside the cached range so the boundary derivative is reliable
    rc = std::min(rc, 1e6);
  }
  auto f = [this, th](double r) {
    const double h = std::sin(0.5 * th * r);
    return 2.0 * h * h * spec_.density(r);
  };
  double body = 0.0;
  const double b1 = std::min(1.0, rc);
  // r = w^6 lifts the r^{1-alpha} endpoint behaviour to at least w^1
  body += integrate(
              [&f](double w) {
                const double w2 = w * w, w3 = w2 * w;
                return f(w3 * w3) * 6.0 * w2 * w3;
              },
              0.0, std::pow(b1, 1.0 / 6.0), 0.0, 1e-11, 20000)
              .value;
  if (rc > b1) body += integrate_osc(f, b1, rc, th, 1e-11);

  double tail;
  if (spec_.pure_power()) {
    const double a = spec_.alpha_tail();
    tail = spec_.power_prefactor() * std::pow(th, a) *
           cos_tail_closure(a, th * rc);
  } else {
    // nu((rc,inf)) minus the oscillatory remainder, two integrations by parts
    const double nu_c = spec_.density(rc);
    const double nup_c = spec_.density_derivative(rc);
    tail = spec_.tail_mass(rc) + std::sin(th * rc) * nu_c / th +
           std::cos(th * rc) * nup_c / (th * th);
  }
  return -2.0 * (body + tail);
}

double LevyExponent::phi_closed(double theta) const {
  if (!spec_.pure_power())
    throw ConfigError("no closed form for the interpolating exponent");
  const double a = spec_.alpha_tail();
  return -2.0 * spec_.power_prefactor() * cos_tail_integral_closed(a) *
         std::pow(std::fabs(theta), a);
}

double LevyExponent::phi_fast(double theta) const {
  return spec_.pure_power() ? phi_closed(theta) : phi(theta);
}

std::vector<std::complex<double>> generator_apply(
    const LevyExponent& exponent, const std::vector<double>& xi,
    const std::vector<std::complex<double>>& in) {
  if (xi.size() != in.size())
    throw GridMismatchError("frequency grid and coefficients differ in size");
  std::vector<std::complex<double>> out(in.size());
  for (std::size_t j = 0; j < in.size(); ++j)
    out[j] = exponent.phi_fast(2.0 * M_PI * xi[j]) * in[j];
  return out;
}

}  // namespace fraclab
