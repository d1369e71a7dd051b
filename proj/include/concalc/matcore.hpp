// Dense complex kernel: norms, unitary eigendecomposition, PSD square roots.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "concalc/core.hpp"

namespace concalc {

inline constexpr double kTolUnit = 1e-10;
inline constexpr double kTolOrth = 1e-10;

inline double tol_recon(Eigen::Index dim) { return 1e-9 * static_cast<double>(dim); }

// Largest singular value.
inline double operator_norm(const ComplexMatrix& m) {
  require_finite(m, "operator_norm");
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

// Frobenius norm.
inline double hs_norm(const ComplexMatrix& m) {
  require_finite(m, "hs_norm");
  return m.norm();
}

inline bool is_contraction(const ComplexMatrix& t, double tol = kTolUnit) {
  require_square(t, "is_contraction");
  require_finite(t, "is_contraction");
  return operator_norm(t) <= 1.0 + tol;
}

struct UnitaryEigensystem {
  ComplexVector eigenvalues;   // sorted by principal argument in [0, 2pi)
  ComplexMatrix eigenvectors;  // orthonormal columns, one per eigenvalue
};

inline double principal_argument(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += 2.0 * std::numbers::pi;
  return a;
}

// Eigendecomposition of a (numerically) unitary matrix through the complex
// Schur form; for normal input the Schur factor is diagonal, so the Schur
// basis is an orthonormal eigenbasis.
inline UnitaryEigensystem unitary_eig(const ComplexMatrix& u, double tol = kTolUnit) {
  require_square(u, "unitary_eig");
  require_finite(u, "unitary_eig");
  const Eigen::Index d = u.rows();
  if (operator_norm(u.adjoint() * u - identity(d)) > tol)
    throw contract_error("unitary_eig: input is not unitary within tolerance");

  Eigen::ComplexSchur<ComplexMatrix> schur(u, /*computeU=*/true);
  if (schur.info() != Eigen::Success)
    throw evaluation_error("unitary_eig: Schur iteration failed to converge");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  const ComplexVector lambda = schur.matrixT().diagonal();
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return principal_argument(lambda(a)) < principal_argument(lambda(b));
  });

  UnitaryEigensystem out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    out.eigenvalues(i) = lambda(order[static_cast<std::size_t>(i)]);
    out.eigenvectors.col(i) = schur.matrixU().col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

// Hermitian square root of a PSD matrix; eigenvalues in [-tol, 0) are
// clamped to zero, anything below -tol is rejected.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& h, double tol = kTolUnit) {
  require_square(h, "psd_sqrt");
  require_finite(h, "psd_sqrt");
  if (operator_norm(h - h.adjoint()) > tol)
    throw contract_error("psd_sqrt: input is not Hermitian within tolerance");

  const ComplexMatrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm);
  if (es.info() != Eigen::Success)
    throw evaluation_error("psd_sqrt: eigensolver failed");

  Eigen::VectorXd vals = es.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -tol)
      throw not_psd_error("psd_sqrt: eigenvalue below -tol, input is not PSD");
    if (vals(i) < 0.0) vals(i) = 0.0;
  }
  const ComplexMatrix root =
      es.eigenvectors() * vals.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
  return 0.5 * (root + root.adjoint());
}

}  // namespace concalc
