// Littlewood-Paley analysis on the circle with the canonical piecewise
// linear weight w: supp w = [1/2, 2], w(1) = 1, linear on [1/2,1] and [1,2].
//
// Scale n >= 1 masks frequency k by w(|k|/2^n); the base piece
// W_0 = conj(z) + 1 + z covers k in {-1, 0, 1}.  Positive frequencies feed
// the analytic pieces, k <= -2 the antianalytic ones, and the pieces
// reconstruct the input coefficient-exactly: per frequency the two active
// weights are dyadic rationals summing to 1, the larger-weight piece takes
// the rounded product and the other the exact remainder.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <span>
#include <vector>

#include "concalc/core.hpp"

namespace concalc {

struct TrigPolynomial {
  int min_k = 0;
  std::vector<Complex> coeffs;  // Fourier coefficients for k = min_k, min_k+1, ...

  int max_k() const { return min_k + static_cast<int>(coeffs.size()) - 1; }

  Complex coeff(int k) const {
    const int idx = k - min_k;
    if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return {0.0, 0.0};
    return coeffs[static_cast<std::size_t>(idx)];
  }

  Complex eval(double theta) const {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const int k = min_k + static_cast<int>(i);
      acc += coeffs[i] * std::polar(1.0, k * theta);
    }
    return acc;
  }

  int support_radius() const {
    int m = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != Complex(0.0, 0.0))
        m = std::max(m, std::abs(min_k + static_cast<int>(i)));
    return m;
  }
};

inline double w_weight(double x) {
  if (x <= 0.5 || x >= 2.0) return 0.0;
  return x <= 1.0 ? 2.0 * x - 1.0 : 2.0 - x;
}

struct LPDecomposition {
  std::vector<TrigPolynomial> analytic_pieces;      // n = 0, 1, ...
  std::vector<TrigPolynomial> antianalytic_pieces;  // n = 1, 2, ... (index n-1)
};

namespace detail {

inline TrigPolynomial from_map(const std::map<int, Complex>& m) {
  TrigPolynomial out;
  if (m.empty()) {
    out.min_k = 0;
    out.coeffs = {Complex(0.0, 0.0)};
    return out;
  }
  out.min_k = m.begin()->first;
  out.coeffs.assign(static_cast<std::size_t>(m.rbegin()->first - out.min_k + 1),
                    Complex(0.0, 0.0));
  for (const auto& [k, c] : m) out.coeffs[static_cast<std::size_t>(k - out.min_k)] = c;
  return out;
}

}  // namespace detail

inline LPDecomposition lp_decompose(const TrigPolynomial& phi) {
  std::map<int, std::map<int, Complex>> analytic, antianalytic;  // scale -> coeffs

  for (std::size_t i = 0; i < phi.coeffs.size(); ++i) {
    const int k = phi.min_k + static_cast<int>(i);
    const Complex c = phi.coeffs[i];
    if (k >= -1 && k <= 1) {
      analytic[0][k] = c;  // W_0
      continue;
    }
    const long long a = std::llabs(static_cast<long long>(k));
    int j = 0;
    while ((1LL << (j + 1)) <= a) ++j;  // 2^j <= a < 2^{j+1}
    auto& side = (k > 0) ? analytic : antianalytic;
    if (a == (1LL << j)) {
      side[j][k] = c;  // w = 1 at scale j
      continue;
    }
    const double denom = static_cast<double>(1LL << j);
    const double w_low = static_cast<double>((1LL << (j + 1)) - a) / denom;   // scale j
    const double w_high = static_cast<double>(a - (1LL << j)) / denom;        // scale j+1
    if (w_low >= w_high) {
      const Complex first = c * w_low;
      side[j][k] = first;
      side[j + 1][k] = c - first;
    } else {
      const Complex first = c * w_high;
      side[j + 1][k] = first;
      side[j][k] = c - first;
    }
  }

  LPDecomposition out;
  const int max_analytic = analytic.empty() ? 0 : analytic.rbegin()->first;
  out.analytic_pieces.resize(static_cast<std::size_t>(max_analytic) + 1);
  for (int n = 0; n <= max_analytic; ++n) {
    auto it = analytic.find(n);
    out.analytic_pieces[static_cast<std::size_t>(n)] =
        detail::from_map(it == analytic.end() ? std::map<int, Complex>{} : it->second);
  }
  const int max_anti = antianalytic.empty() ? 0 : antianalytic.rbegin()->first;
  out.antianalytic_pieces.resize(static_cast<std::size_t>(std::max(0, max_anti)));
  for (int n = 1; n <= max_anti; ++n) {
    auto it = antianalytic.find(n);
    out.antianalytic_pieces[static_cast<std::size_t>(n - 1)] = detail::from_map(
        it == antianalytic.end() ? std::map<int, Complex>{} : it->second);
  }
  return out;
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Uniform-grid L^p norm with normalized Lebesgue measure (max for p = inf).
inline double grid_lp_norm(const TrigPolynomial& piece, double p, int grid) {
  if (grid < 1) throw input_error("grid_lp_norm: empty grid");
  if (p == kInf) {
    double best = 0.0;
    for (int g = 0; g < grid; ++g)
      best = std::max(best,
                      std::abs(piece.eval(2.0 * std::numbers::pi * g / grid)));
    return best;
  }
  double acc = 0.0;
  for (int g = 0; g < grid; ++g)
    acc += std::pow(std::abs(piece.eval(2.0 * std::numbers::pi * g / grid)), p);
  return std::pow(acc / grid, 1.0 / p);
}

// ell^q over all pieces (analytic and antianalytic) of 2^{ns} ||piece||_{L^p(grid)}.
inline double besov_norm(const TrigPolynomial& phi, double s, double p, double q,
                         int grid) {
  if (p < 1.0 || q < 1.0) throw input_error("besov_norm: p, q must be >= 1");
  if (grid < 64 * (phi.support_radius() + 1))
    throw input_error("besov_norm: grid below 64*(M+1)");

  const LPDecomposition lp = lp_decompose(phi);
  std::vector<double> entries;
  for (std::size_t n = 0; n < lp.analytic_pieces.size(); ++n)
    entries.push_back(std::exp2(static_cast<double>(n) * s) *
                      grid_lp_norm(lp.analytic_pieces[n], p, grid));
  for (std::size_t n = 0; n < lp.antianalytic_pieces.size(); ++n)
    entries.push_back(std::exp2(static_cast<double>(n + 1) * s) *
                      grid_lp_norm(lp.antianalytic_pieces[n], p, grid));

  if (q == kInf) {
    double best = 0.0;
    for (double e : entries) best = std::max(best, e);
    return best;
  }
  double acc = 0.0;
  for (double e : entries) acc += std::pow(e, q);
  return std::pow(acc, 1.0 / q);
}

inline double besov_norm(const TrigPolynomial& phi, double s, double p, double q) {
  return besov_norm(phi, s, p, q, 64 * (phi.support_radius() + 1));
}

inline TrigPolynomial riesz_project(const TrigPolynomial& phi) {
  TrigPolynomial out = phi;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    if (out.min_k + static_cast<int>(i) < 0) out.coeffs[i] = Complex(0.0, 0.0);
  return out;
}

// Diagnostic against the analytic characterization of (B^s_{p,inf})_+:
// min/max over the radii of (1-r)^{n-s} ||phi_r^{(n)}||_{L^p(grid)} divided
// by besov_norm(phi, s, p, inf).  Norm equivalence only; the constants are
// not pinned.
inline std::pair<double, double> analytic_characterization_ratio(
    const TrigPolynomial& phi, double s, int n, std::span<const double> radii,
    double p = kInf) {
  if (n < 0) throw input_error("analytic_characterization_ratio: n must be >= 0");
  for (std::size_t i = 0; i < phi.coeffs.size(); ++i)
    if (phi.min_k + static_cast<int>(i) < 0 && phi.coeffs[i] != Complex(0.0, 0.0))
      throw input_error("analytic_characterization_ratio: input must be analytic");
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0))
      throw input_error("analytic_characterization_ratio: radii must lie in (0,1)");
  if (radii.empty()) throw input_error("analytic_characterization_ratio: no radii");

  const int grid = 64 * (phi.support_radius() + 1);
  const double denom = besov_norm(phi, s, p, kInf, grid);
  if (denom == 0.0) return {0.0, 0.0};

  double lo = kInf, hi = 0.0;
  for (double r : radii) {
    // phi^{(n)}(r zeta) = sum_{k>=n} c_k k!/(k-n)! r^{k-n} zeta^{k-n}
    TrigPolynomial dilated;
    dilated.min_k = 0;
    for (int k = std::max(n, phi.min_k); k <= phi.max_k(); ++k) {
      double falling = 1.0;
      for (int i = 0; i < n; ++i) falling *= k - i;
      const Complex value = phi.coeff(k) * falling * std::pow(r, k - n);
      const int out_k = k - n;
      if (out_k >= static_cast<int>(dilated.coeffs.size()))
        dilated.coeffs.resize(static_cast<std::size_t>(out_k) + 1, Complex(0.0, 0.0));
      dilated.coeffs[static_cast<std::size_t>(out_k)] = value;
    }
    if (dilated.coeffs.empty()) dilated.coeffs = {Complex(0.0, 0.0)};
    const double value =
        std::pow(1.0 - r, n - s) * grid_lp_norm(dilated, p, grid) / denom;
    lo = std::min(lo, value);
    hi = std::max(hi, value);
  }
  return {lo, hi};
}

}  // namespace concalc
