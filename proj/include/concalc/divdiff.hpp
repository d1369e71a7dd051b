// Divided differences of all orders and their exact monomial tensor
// expansions for polynomials:
//
//     D^k(z^m)(x_1,...,x_{k+1}) = sum_{a_1+...+a_{k+1} = m-k} prod x_i^{a_i},
//
// an empty sum when m < k.  Coincident points are handled through the
// expansion (a polynomial, defined everywhere) instead of limits of the
// recursion, which cancel catastrophically near the diagonal.
#pragma once

#include <cmath>
#include <cstdlib>
#include <span>
#include <vector>

#include "concalc/core.hpp"
#include "concalc/funcalc.hpp"

namespace concalc {

struct TensorExpansion {
  struct Term {
    Complex coeff;
    std::vector<int> exps;  // length order + 1
  };
  int order = 0;
  std::vector<Term> terms;
};

namespace detail {

inline void compositions_rec(int total, int parts, std::vector<int>& prefix,
                             std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    prefix.push_back(first);
    compositions_rec(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

// All (parts)-tuples of nonnegative integers summing to total, lexicographic.
inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  compositions_rec(total, parts, prefix, out);
  return out;
}

}  // namespace detail

inline TensorExpansion tensor_expansion(const AnalyticFunction& phi, int k) {
  if (k < 0) throw input_error("tensor_expansion: order must be nonnegative");
  TensorExpansion out;
  out.order = k;
  for (int m = 0; m < static_cast<int>(phi.coefficients.size()); ++m) {
    const Complex c = phi.coefficients[static_cast<std::size_t>(m)];
    if (c == Complex(0.0, 0.0) || m < k) continue;
    for (auto& exps : detail::compositions(m - k, k + 1))
      out.terms.push_back({c, std::move(exps)});
  }
  return out;
}

inline Complex evaluate(const TensorExpansion& te, std::span<const Complex> points) {
  if (static_cast<int>(points.size()) != te.order + 1)
    throw input_error("TensorExpansion evaluate: wrong number of points");
  Complex acc = 0.0;
  for (const auto& term : te.terms) {
    Complex prod = term.coeff;
    for (std::size_t i = 0; i < term.exps.size(); ++i)
      prod *= std::pow(points[i], term.exps[i]);
    acc += prod;
  }
  return acc;
}

// Upper bound for the projective tensor norm in this representation: each
// monomial factor has sup-norm 1 on the circle, so sum |coeff|.
inline double projective_bound(const TensorExpansion& te) {
  double acc = 0.0;
  for (const auto& term : te.terms) acc += std::abs(term.coeff);
  return acc;
}

namespace detail {

inline Complex divided_difference_rec(const AnalyticFunction& phi,
                                      std::vector<Complex>& pts) {
  const std::size_t n = pts.size();
  if (n == 1) return eval(phi, pts[0]);
  // Pivot on the last two arguments exactly as the inductive definition
  // reads; symmetry in the arguments is a property, not a device.
  const Complex a = pts[n - 2];
  const Complex b = pts[n - 1];
  pts.pop_back();
  const Complex left = divided_difference_rec(phi, pts);
  pts[n - 2] = b;
  const Complex right = divided_difference_rec(phi, pts);
  pts[n - 2] = a;
  pts.push_back(b);
  return (left - right) / (a - b);
}

}  // namespace detail

inline Complex divided_difference(const AnalyticFunction& phi, int k,
                                  std::span<const Complex> points) {
  if (k < 0) throw input_error("divided_difference: order must be nonnegative");
  if (static_cast<int>(points.size()) != k + 1)
    throw input_error("divided_difference: need k+1 points");

  bool coincident = false;
  for (std::size_t i = 0; i < points.size() && !coincident; ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(points[i] - points[j]) < 1e-12) {
        coincident = true;
        break;
      }
  if (coincident) return evaluate(tensor_expansion(phi, k), points);

  std::vector<Complex> pts(points.begin(), points.end());
  return detail::divided_difference_rec(phi, pts);
}

}  // namespace concalc
