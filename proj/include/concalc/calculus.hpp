// Increment and commutator formulas, operator derivatives along the segment
// T_t = (1-t)T + tR, and Hilbert-Schmidt differentiability checks.
//
//   phi(T) - phi(R)        = DOI(Dphi; E_T, T - R, E_R)
//   phi(T)Q - Q phi(T)     = DOI(Dphi; E_T, TQ - QT, E_T)
//   (d/dt)^n phi(T_t)      = n! MOI(D^n phi; E_t, R - T, ..., R - T, E_t)
//
// Derivatives are computed through exact tensor expansions; the dilation
// route and a noncommutative word-expansion oracle serve as cross-checks.
#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "concalc/core.hpp"
#include "concalc/divdiff.hpp"
#include "concalc/funcalc.hpp"
#include "concalc/matcore.hpp"
#include "concalc/opint.hpp"

namespace concalc {

struct ContractionPath {
  ComplexMatrix t;
  ComplexMatrix r;

  ContractionPath(ComplexMatrix t_init, ComplexMatrix r_init)
      : t(std::move(t_init)), r(std::move(r_init)) {
    if (t.rows() != r.rows() || t.cols() != r.cols())
      throw input_error("ContractionPath: endpoint dimensions differ");
    for (double s : {0.0, 0.25, 0.5, 0.75, 1.0})
      if (!is_contraction((1.0 - s) * t + s * r))
        throw contract_error("ContractionPath: segment leaves the contraction set");
  }

  ComplexMatrix at(double s) const { return (1.0 - s) * t + s * r; }
};

struct DerivativeReport {
  enum class Norm { operator_norm, hilbert_schmidt };
  int order;
  ComplexMatrix formula_value;
  ComplexMatrix oracle_value;
  double residual;
  Norm norm_used;
};

namespace detail {
inline int dilation_degree_for(const AnalyticFunction& phi) {
  return std::max(1, phi.degree() + 1);
}
}  // namespace detail

inline double increment_formula_residual(const AnalyticFunction& phi,
                                         const ContractionPath& path,
                                         DiagonalPolicy policy) {
  const ComplexMatrix lhs =
      eval_on_contraction(phi, path.t) - eval_on_contraction(phi, path.r);
  const ComplexMatrix doi =
      doi_dilation(DividedDifferenceKernel(phi, policy), path.t, path.t - path.r,
                   path.r, detail::dilation_degree_for(phi));
  return operator_norm(lhs - doi);
}

inline double commutator_formula_residual(const AnalyticFunction& phi,
                                          const ComplexMatrix& t,
                                          const ComplexMatrix& q,
                                          DiagonalPolicy policy) {
  require_square(q, "commutator_formula_residual");
  if (q.rows() != t.rows())
    throw input_error("commutator_formula_residual: dimension mismatch");
  const ComplexMatrix phi_t = eval_on_contraction(phi, t);
  const ComplexMatrix lhs = phi_t * q - q * phi_t;
  const ComplexMatrix doi =
      doi_dilation(DividedDifferenceKernel(phi, policy), t, t * q - q * t, t,
                   detail::dilation_degree_for(phi));
  return operator_norm(lhs - doi);
}

// d/ds phi(T_s) at s = t, via the exact tensor expansion of D(phi) with both
// measure slots at T_t.
inline ComplexMatrix derivative(const AnalyticFunction& phi, const ContractionPath& path,
                                double t) {
  const ComplexMatrix mid = path.at(t);
  return doi_tensor(tensor_expansion(phi, 1), mid, path.r - path.t, mid);
}

inline ComplexMatrix nth_derivative(const AnalyticFunction& phi,
                                    const ContractionPath& path, double t, int n) {
  if (n < 1) throw input_error("nth_derivative: order must be >= 1");
  const ComplexMatrix mid = path.at(t);
  const ComplexMatrix delta = path.r - path.t;
  const std::vector<ComplexMatrix> slots(static_cast<std::size_t>(n) + 1, mid);
  const std::vector<ComplexMatrix> ops(static_cast<std::size_t>(n), delta);
  double factorial = 1.0;
  for (int i = 2; i <= n; ++i) factorial *= i;
  return factorial * moi_tensor(tensor_expansion(phi, n), slots, ops);
}

inline ComplexMatrix second_derivative(const AnalyticFunction& phi,
                                       const ContractionPath& path, double t) {
  return nth_derivative(phi, path, t, 2);
}

// Independent oracle: expand phi(T_t + s(R-T)) as a matrix polynomial in s
// by summing, per monomial, all words in {T_t, R-T}; returns n! times the
// coefficient of s^n.  Words of length l with j insertions accumulate as
// G_{l}[j] = G_{l-1}[j] A + G_{l-1}[j-1] B.
inline ComplexMatrix polynomial_taylor_oracle(const AnalyticFunction& phi,
                                              const ContractionPath& path, double t,
                                              int n) {
  if (n < 0) throw input_error("polynomial_taylor_oracle: order must be >= 0");
  if (phi.degree() > 12)
    throw input_error("polynomial_taylor_oracle: degree > 12 (word blow-up guard)");

  const ComplexMatrix a = path.at(t);
  const ComplexMatrix b = path.r - path.t;
  const Eigen::Index d = a.rows();

  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  if (n == 0 && !phi.coefficients.empty()) acc += phi.coefficients[0] * identity(d);

  std::vector<ComplexMatrix> words{identity(d)};  // words[j] at current length
  const int deg = static_cast<int>(phi.coefficients.size()) - 1;
  for (int len = 1; len <= deg; ++len) {
    std::vector<ComplexMatrix> next(static_cast<std::size_t>(std::min(len, n)) + 1,
                                    ComplexMatrix::Zero(d, d));
    for (int j = 0; j < static_cast<int>(next.size()); ++j) {
      if (j < static_cast<int>(words.size())) next[static_cast<std::size_t>(j)] =
          words[static_cast<std::size_t>(j)] * a;
      if (j >= 1 && j - 1 < static_cast<int>(words.size()))
        next[static_cast<std::size_t>(j)] += words[static_cast<std::size_t>(j - 1)] * b;
    }
    words = std::move(next);
    if (len >= n && n < static_cast<int>(words.size()))
      acc += phi.coefficients[static_cast<std::size_t>(len)] *
             words[static_cast<std::size_t>(n)];
  }

  double factorial = 1.0;
  for (int i = 2; i <= n; ++i) factorial *= i;
  return factorial * acc;
}

// || phi(T) - phi(R) ||_{S2} <= sup |phi'| * || T - R ||_{S2}  (+ 1e-8).
inline bool hs_lipschitz_check(const AnalyticFunction& phi, const ContractionPath& path) {
  const AnalyticFunction dphi = differentiate(phi);
  const double sup = sup_on_circle_grid(dphi, default_circle_grid(dphi.degree()));
  const double lhs =
      hs_norm(eval_on_contraction(phi, path.t) - eval_on_contraction(phi, path.r));
  return lhs <= sup * hs_norm(path.t - path.r) + 1e-8;
}

// Commutator companion: || phi(T)Q - Q phi(T) ||_{S2} <= sup |phi'| * || TQ - QT ||_{S2}.
inline bool hs_commutator_lipschitz_check(const AnalyticFunction& phi,
                                          const ComplexMatrix& t,
                                          const ComplexMatrix& q) {
  const AnalyticFunction dphi = differentiate(phi);
  const double sup = sup_on_circle_grid(dphi, default_circle_grid(dphi.degree()));
  const ComplexMatrix phi_t = eval_on_contraction(phi, t);
  return hs_norm(phi_t * q - q * phi_t) <= sup * hs_norm(t * q - q * t) + 1e-8;
}

inline constexpr std::array<double, 5> kHsDifferenceSteps = {1e-1, 1e-2, 1e-3, 1e-4,
                                                             1e-5};

// S_2 residuals of the difference quotient against the derivative at t = 0,
// one per step in kHsDifferenceSteps.
inline std::vector<std::pair<double, double>> hs_difference_quotients(
    const AnalyticFunction& phi, const ContractionPath& path) {
  const ComplexMatrix deriv = derivative(phi, path, 0.0);
  const ComplexMatrix base = eval_on_contraction(phi, path.t);
  std::vector<std::pair<double, double>> out;
  for (double s : kHsDifferenceSteps) {
    const ComplexMatrix quotient = (eval_on_contraction(phi, path.at(s)) - base) / s;
    out.emplace_back(s, hs_norm(quotient - deriv));
  }
  return out;
}

inline DerivativeReport hs_differentiability_report(const AnalyticFunction& phi,
                                                    const ContractionPath& path) {
  const ComplexMatrix deriv = derivative(phi, path, 0.0);
  const double s = kHsDifferenceSteps.back();
  const ComplexMatrix quotient =
      (eval_on_contraction(phi, path.at(s)) - eval_on_contraction(phi, path.t)) / s;
  DerivativeReport report;
  report.order = 1;
  report.formula_value = deriv;
  report.oracle_value = quotient;
  report.residual = hs_norm(quotient - deriv);
  report.norm_used = DerivativeReport::Norm::hilbert_schmidt;
  return report;
}

}  // namespace concalc
