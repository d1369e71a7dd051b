// Double and multiple operator integrals with respect to the atomic
// semi-spectral measures of contractions, by two independent routes.
//
// Dilation route: build power dilations U_T, U_R, embed Q in the corner of
// the enlarged space, form the Hadamard-type sum
//     sum_{i,j} Phi(lambda_i, mu_j) P_i Q~ P_j
// over the dilation eigenprojections, compress back to H.
//
// Tensor route: for Phi given as a finite sum of monomial elementary
// tensors, sum coeff * T^{a_1} Q R^{a_2} (and the (n+1)-slot analog).
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "concalc/core.hpp"
#include "concalc/dilation.hpp"
#include "concalc/divdiff.hpp"
#include "concalc/funcalc.hpp"
#include "concalc/matcore.hpp"

namespace concalc {

enum class DiagonalPolicy {
  derivative,  // continue D(phi) to the diagonal by phi'
  zero,        // force the kernel to vanish on the diagonal
};

// Below this separation the raw difference quotient is numerically
// meaningless and the diagonal policy takes over.
inline constexpr double kDiagonalArcTol = 1e-8;

// First-order divided-difference kernel of a polynomial with a diagonal
// policy.  Off the diagonal it is evaluated through the homogeneous sums
//     s_K(x, y) = sum_{a+b=K} x^a y^b,   s_K = x s_{K-1} + y^K,
// which are free of the cancellation that kills (phi(x)-phi(y))/(x-y) for
// nearby points.
class DividedDifferenceKernel {
public:
  DividedDifferenceKernel(AnalyticFunction phi, DiagonalPolicy policy)
      : phi_(std::move(phi)), dphi_(differentiate(phi_)), policy_(policy) {}

  Complex operator()(Complex x, Complex y) const {
    if (std::abs(x - y) < kDiagonalArcTol) {
      if (policy_ == DiagonalPolicy::zero) return 0.0;
      Complex mid = 0.5 * (x + y);
      const double len = std::abs(mid);
      mid = len > 0.0 ? mid / len : x;  // arc midpoint for near-unimodular points
      return eval(dphi_, mid);
    }
    // D(phi)(x,y) = sum_b y^b sum_{k>=b+1} c_k x^{k-1-b}; inner sums by Horner.
    const auto& c = phi_.coefficients;
    Complex total = 0.0;
    Complex y_pow = 1.0;
    for (std::size_t b = 0; b + 1 < c.size(); ++b) {
      Complex horner = 0.0;
      for (std::size_t k = c.size(); k-- > b + 1;) horner = horner * x + c[k];
      total += y_pow * horner;
      y_pow *= y;
    }
    return total;
  }

  const AnalyticFunction& function() const { return phi_; }
  DiagonalPolicy policy() const { return policy_; }

private:
  AnalyticFunction phi_;
  AnalyticFunction dphi_;
  DiagonalPolicy policy_;
};

// Canonical form: terms sorted by exponent tuple, duplicate tuples merged,
// exact zeros dropped.  Both tensor-route integrals reduce their input to
// this form first, so expansions that are rearrangements or splittings of
// one another integrate to bitwise-identical operators.
inline TensorExpansion canonical(const TensorExpansion& te) {
  TensorExpansion out;
  out.order = te.order;
  out.terms = te.terms;
  for (const auto& term : out.terms)
    if (static_cast<int>(term.exps.size()) != te.order + 1)
      throw input_error("TensorExpansion: exponent tuple length mismatch");
  std::stable_sort(out.terms.begin(), out.terms.end(),
                   [](const TensorExpansion::Term& a, const TensorExpansion::Term& b) {
                     return a.exps < b.exps;
                   });
  std::vector<TensorExpansion::Term> merged;
  for (auto& term : out.terms) {
    if (!merged.empty() && merged.back().exps == term.exps)
      merged.back().coeff += term.coeff;
    else
      merged.push_back(std::move(term));
  }
  std::erase_if(merged,
                [](const TensorExpansion::Term& t) { return t.coeff == Complex(0.0, 0.0); });
  out.terms = std::move(merged);
  return out;
}

struct DoiResult {
  ComplexMatrix value;
  double kernel_sup;  // max |Phi| over the evaluated eigenvalue pairs
};

template <class Kernel>
DoiResult doi_dilation_with_sup(Kernel&& kernel, const ComplexMatrix& t,
                                const ComplexMatrix& q, const ComplexMatrix& r,
                                int degree) {
  require_square(q, "doi_dilation");
  if (t.rows() != q.rows() || r.rows() != q.rows())
    throw input_error("doi_dilation: dimension mismatch");

  const Eigen::Index d = t.rows();
  const UnitaryEigensystem left = unitary_eig(power_dilation(t, degree).unitary);
  const UnitaryEigensystem right = unitary_eig(power_dilation(r, degree).unitary);
  const Eigen::Index kl = left.eigenvalues.size();
  const Eigen::Index kr = right.eigenvalues.size();

  ComplexMatrix embedded = ComplexMatrix::Zero(kl, kr);
  embedded.topLeftCorner(d, d) = q;

  // a_{ij} = <v_i, Q~ w_j>; the integral is V (Phi o A) W*.
  const ComplexMatrix a = left.eigenvectors.adjoint() * embedded * right.eigenvectors;
  ComplexMatrix weighted(kl, kr);
  double sup = 0.0;
  for (Eigen::Index i = 0; i < kl; ++i)
    for (Eigen::Index j = 0; j < kr; ++j) {
      const Complex value = kernel(left.eigenvalues(i), right.eigenvalues(j));
      if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw evaluation_error("doi_dilation: kernel not finite at an eigenvalue pair");
      sup = std::max(sup, std::abs(value));
      weighted(i, j) = value * a(i, j);
    }
  const ComplexMatrix full = left.eigenvectors * weighted * right.eigenvectors.adjoint();
  return DoiResult{compress(full, d), sup};
}

template <class Kernel>
ComplexMatrix doi_dilation(Kernel&& kernel, const ComplexMatrix& t,
                           const ComplexMatrix& q, const ComplexMatrix& r,
                           int degree) {
  return doi_dilation_with_sup(std::forward<Kernel>(kernel), t, q, r, degree).value;
}

// sum over terms coeff * T^{a_1} Q R^{a_2}.
inline ComplexMatrix doi_tensor(const TensorExpansion& expansion, const ComplexMatrix& t,
                                const ComplexMatrix& q, const ComplexMatrix& r) {
  if (expansion.order != 1) throw input_error("doi_tensor: expansion must have order 1");
  require_square(q, "doi_tensor");
  if (t.rows() != q.rows() || r.rows() != q.rows())
    throw input_error("doi_tensor: dimension mismatch");

  const TensorExpansion te = canonical(expansion);
  const Eigen::Index d = t.rows();
  int max_left = 0, max_right = 0;
  for (const auto& term : te.terms) {
    max_left = std::max(max_left, term.exps[0]);
    max_right = std::max(max_right, term.exps[1]);
  }
  std::vector<ComplexMatrix> t_pow{identity(d)}, r_pow{identity(d)};
  for (int i = 0; i < max_left; ++i) t_pow.push_back(t * t_pow.back());
  for (int i = 0; i < max_right; ++i) r_pow.push_back(r * r_pow.back());

  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& term : te.terms)
    out += term.coeff * t_pow[static_cast<std::size_t>(term.exps[0])] * q *
           r_pow[static_cast<std::size_t>(term.exps[1])];
  return out;
}

// sum over terms coeff * T_1^{a_1} Q_1 T_2^{a_2} ... Q_n T_{n+1}^{a_{n+1}}.
inline ComplexMatrix moi_tensor(const TensorExpansion& expansion,
                                std::span<const ComplexMatrix> contractions,
                                std::span<const ComplexMatrix> operators) {
  const int n = expansion.order;
  if (static_cast<int>(contractions.size()) != n + 1 ||
      static_cast<int>(operators.size()) != n)
    throw input_error("moi_tensor: need n+1 contractions and n operators");
  const Eigen::Index d = contractions[0].rows();
  for (const auto& m : contractions)
    if (m.rows() != d || m.cols() != d) throw input_error("moi_tensor: shape mismatch");
  for (const auto& m : operators)
    if (m.rows() != d || m.cols() != d) throw input_error("moi_tensor: shape mismatch");
  const TensorExpansion te = canonical(expansion);

  std::vector<std::vector<ComplexMatrix>> powers(contractions.size());
  for (std::size_t s = 0; s < contractions.size(); ++s) {
    int max_exp = 0;
    for (const auto& term : te.terms)
      max_exp = std::max(max_exp, term.exps[s]);
    powers[s].push_back(identity(d));
    for (int i = 0; i < max_exp; ++i)
      powers[s].push_back(contractions[s] * powers[s].back());
  }

  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& term : te.terms) {
    ComplexMatrix word = powers[0][static_cast<std::size_t>(term.exps[0])];
    for (int s = 0; s < n; ++s)
      word = word * operators[static_cast<std::size_t>(s)] *
             powers[static_cast<std::size_t>(s) + 1]
                   [static_cast<std::size_t>(term.exps[static_cast<std::size_t>(s) + 1])];
    out += term.coeff * word;
  }
  return out;
}

// || moi(rep_a) - moi(rep_b) || for two expansions that agree pointwise.
// The pointwise agreement is checked first on a 32x32 circle grid; kernels
// that differ as functions are a precondition violation, not a result.
inline double representation_independence_check(const TensorExpansion& rep_a,
                                                const TensorExpansion& rep_b,
                                                const ComplexMatrix& t,
                                                const ComplexMatrix& q,
                                                const ComplexMatrix& r) {
  if (rep_a.order != 1 || rep_b.order != 1)
    throw input_error("representation_independence_check: expansions must have order 1");
  constexpr int kGrid = 32;
  for (int i = 0; i < kGrid; ++i)
    for (int j = 0; j < kGrid; ++j) {
      const Complex x = std::polar(1.0, 2.0 * std::numbers::pi * i / kGrid);
      const Complex y = std::polar(1.0, 2.0 * std::numbers::pi * j / kGrid);
      const Complex pts[2] = {x, y};
      if (std::abs(evaluate(rep_a, pts) - evaluate(rep_b, pts)) > 1e-8)
        throw contract_error(
            "representation_independence_check: expansions differ as functions");
    }
  return operator_norm(doi_tensor(rep_a, t, q, r) - doi_tensor(rep_b, t, q, r));
}

// Checks the Hilbert-Schmidt bound: the S_2 norm of the integral is at most
// (sup |Phi| over the evaluated pairs) * ||Q||_{S_2}, up to 1e-9.
template <class Kernel>
bool doi_s2_bound_check(Kernel&& kernel, const ComplexMatrix& t, const ComplexMatrix& q,
                        const ComplexMatrix& r, int degree) {
  const DoiResult res =
      doi_dilation_with_sup(std::forward<Kernel>(kernel), t, q, r, degree);
  return hs_norm(res.value) <= res.kernel_sup * hs_norm(q) + 1e-9;
}

}  // namespace concalc
