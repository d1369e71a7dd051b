// Polynomial functional calculus on contractions, Cesaro means, and the
// von Neumann bound  ||phi(T)|| <= sup_{|z|<=1} |phi(z)|.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "concalc/core.hpp"
#include "concalc/matcore.hpp"

namespace concalc {

struct AnalyticFunction {
  std::vector<Complex> coefficients;  // c_0..c_m, phi(z) = sum c_k z^k
  std::string label;

  // Index of the last nonzero coefficient (0 for the zero function).
  int degree() const {
    for (std::size_t k = coefficients.size(); k-- > 0;)
      if (coefficients[k] != Complex(0.0, 0.0)) return static_cast<int>(k);
    return 0;
  }
};

inline Complex eval(const AnalyticFunction& phi, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = phi.coefficients.size(); k-- > 0;)
    acc = acc * z + phi.coefficients[k];
  return acc;
}

inline AnalyticFunction differentiate(const AnalyticFunction& phi) {
  AnalyticFunction out;
  out.label = phi.label.empty() ? std::string() : phi.label + "'";
  for (std::size_t k = 1; k < phi.coefficients.size(); ++k)
    out.coefficients.push_back(static_cast<double>(k) * phi.coefficients[k]);
  return out;
}

// Horner evaluation of phi(T).  The calculus and its norm bound are claimed
// only for contractions, so non-contractions are rejected.
inline ComplexMatrix eval_on_contraction(const AnalyticFunction& phi,
                                         const ComplexMatrix& t) {
  if (!is_contraction(t))
    throw contract_error("eval_on_contraction: input is not a contraction");
  const Eigen::Index d = t.rows();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (std::size_t k = phi.coefficients.size(); k-- > 0;) {
    acc = acc * t;
    acc += phi.coefficients[k] * identity(d);
  }
  return acc;
}

// n-th Cesaro mean: coefficient k is tapered by (1 - k/(n+1)) for k <= n
// and dropped beyond.
inline AnalyticFunction cesaro_mean(const AnalyticFunction& phi, int n) {
  if (n < 0) throw input_error("cesaro_mean: n must be nonnegative");
  AnalyticFunction out;
  out.label = phi.label.empty() ? std::string() : "cesaro" + std::to_string(n) + "(" + phi.label + ")";
  const std::size_t len = std::min(phi.coefficients.size(), static_cast<std::size_t>(n) + 1);
  out.coefficients.resize(len);
  for (std::size_t k = 0; k < len; ++k)
    out.coefficients[k] =
        (1.0 - static_cast<double>(k) / (n + 1.0)) * phi.coefficients[k];
  return out;
}

inline int default_circle_grid(int degree) { return 64 * (degree + 1); }

// max over a uniform grid on the unit circle of |phi|; a Bernstein-type
// oversampling factor of 64 keeps the grid max within ~1e-6 of the sup for
// the polynomial degrees in scope.
inline double sup_on_circle_grid(const AnalyticFunction& phi, int grid_points) {
  if (grid_points < 1) throw input_error("sup_on_circle_grid: empty grid");
  double best = 0.0;
  for (int j = 0; j < grid_points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / grid_points;
    best = std::max(best, std::abs(eval(phi, std::polar(1.0, theta))));
  }
  return best;
}

inline constexpr double kVonNeumannGridSlack = 1e-6;

// ||phi(T)|| minus the grid sup of |phi| on the circle; at most grid_slack
// (default 1e-6) for contractions.  A coarse pass of 64*(deg+1) points can
// undersample the sup by ~deg^2 sup (pi/grid)^2, which exceeds the slack,
// so a second pass refines the grid until that quadratic bound clears it.
inline double von_neumann_residual(const AnalyticFunction& phi, const ComplexMatrix& t) {
  const double norm = operator_norm(eval_on_contraction(phi, t));
  const int deg = phi.degree();
  const int coarse = default_circle_grid(deg);
  if (deg == 0) return norm - sup_on_circle_grid(phi, coarse);

  const double coarse_sup = sup_on_circle_grid(phi, coarse);
  const double sup_bound = 1.01 * std::max(coarse_sup, 1e-12);
  const double needed = std::min(
      static_cast<double>(1 << 22),
      std::numbers::pi * deg * std::sqrt(sup_bound / kVonNeumannGridSlack) + 1.0);
  const int grid = std::max(coarse, static_cast<int>(needed));
  return norm - sup_on_circle_grid(phi, grid);
}

}  // namespace concalc
