#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace fraclab {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;   // error estimate
  int panels = 0;       // panels used by the adaptive subdivision
};

/// Adaptive Gauss-Kronrod (7-15) quadrature on [a, b].
/// Splits the worst panel until |error| <= max(abs_tol, rel_tol*|value|).
/// Throws QuadratureError when the panel budget is exhausted first.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-12,
                     int max_panels = 4000);

/// Quadrature on [a, inf) via the map x = a + t/(1-t), t in [0,1).
QuadResult integrate_to_inf(const std::function<double(double)>& f, double a,
                            double abs_tol = 1e-12, double rel_tol = 1e-12,
                            int max_panels = 4000);

/// Gauss-Laguerre nodes/weights: sum_i w_i f(x_i) ~ int_0^inf e^{-x} f(x) dx.
std::vector<std::pair<double, double>> gauss_laguerre(int n);

/// Gauss-Legendre nodes/weights on [-1, 1].
std::vector<std::pair<double, double>> gauss_legendre(int n);

}  // namespace fraclab
