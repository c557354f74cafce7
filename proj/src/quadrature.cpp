#include "fraclab/quadrature.hpp"

#include "fraclab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace fraclab {

namespace {

// 15-point Kronrod nodes on [-1,1] with Kronrod and embedded 7-point Gauss
// weights (QUADPACK dqk15 coefficients).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

struct PanelLess {
  bool operator()(const Panel& p, const Panel& q) const {
    return p.error < q.error;
  }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double gauss = kWg[3] * fc;
  double kron = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    kron += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kron * h;
  const double diff = std::fabs((kron - gauss) * h);
  // QUADPACK-style sharpened error estimate.
  p.error = diff;
  if (diff > 0.0) {
    double resabs = 0.0;
    // cheap scale estimate from the Kronrod sum itself
    resabs = std::fabs(kron * h);
    const double scaled = std::pow(200.0 * diff / (resabs + 1e-300), 1.5);
    if (scaled < 1.0) p.error = diff * scaled;
  }
  return p;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_panels) {
  if (!(b > a)) {
    if (a == b) return {0.0, 0.0, 0};
    throw QuadratureError("integrate: empty or reversed interval");
  }
  std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
  Panel p0 = eval_panel(f, a, b);
  double total = p0.value;
  double err = p0.error;
  heap.push(p0);
  int panels = 1;
  while (err > std::max(abs_tol, rel_tol * std::fabs(total))) {
    if (panels >= max_panels)
      throw QuadratureError("integrate: panel budget exhausted (err=" +
                            std::to_string(err) + ")");
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw QuadratureError("integrate: interval too small to subdivide");
    Panel left = eval_panel(f, worst.a, mid);
    Panel right = eval_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  return {total, err, panels};
}

QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            double abs_tol, double rel_tol, int max_panels) {
  auto g = [&f, a](double t) {
    const double om = 1.0 - t;
    return f(a + t / om) / (om * om);
  };
  return integrate(g, 0.0, 1.0, abs_tol, rel_tol, max_panels);
}

std::vector<std::pair<double, double>> gauss_laguerre(int n) {
  if (n < 1) throw ConfigError("gauss_laguerre: n must be positive");
  std::vector<std::pair<double, double>> out(n);
  double z = 0.0, z_prev = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      z_prev = z;
      z += 15.0 / (1.0 + 2.5 * n);
    } else {
      const double step = ((1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1)));
      const double znew = z + step * (z - z_prev);
      z_prev = z;
      z = znew;
    }
    double pp = 0.0, p2 = 0.0;
    bool done = false;
    for (int it = 0; it < 200; ++it) {
      double p1 = 1.0;
      p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0 - z) * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (p1 - p2) / z;
      const double dz = p1 / pp;
      z -= dz;
      if (std::fabs(dz) <= 1e-15 * (1.0 + std::fabs(z))) {
        done = true;
        break;
      }
    }
    if (!done) throw NonconvergenceError("gauss_laguerre: Newton stalled");
    out[i] = {z, -1.0 / (pp * n * p2)};
  }
  return out;
}

std::vector<std::pair<double, double>> gauss_legendre(int n) {
  if (n < 1) throw ConfigError("gauss_legendre: n must be positive");
  std::vector<std::pair<double, double>> out(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    bool done = false;
    for (int it = 0; it < 200; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::fabs(dz) <= 1e-15) {
        done = true;
        break;
      }
    }
    if (!done) throw NonconvergenceError("gauss_legendre: Newton stalled");
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    out[i] = {-z, w};
    out[n - 1 - i] = {z, w};
  }
  return out;
}

}  // namespace fraclab
