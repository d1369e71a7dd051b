// Finite-degree unitary power dilations of a contraction.
//
// A degree-N dilation is a unitary U on H^{(N+1)} whose leading d-by-d
// corner reproduces T^n for every 0 <= n <= N.  The block-cyclic layout is
//
//     [ T    0  ...  0   D_{T*} ]
//     [ D_T  0  ...  0   -T*    ]
//     [ 0    I  ...  0    0     ]
//     [ ...       I       ...   ]      D_T = (I - T*T)^{1/2}.
//
// Degree 1 is the classical 2x2 block construction.
#pragma once

#include "concalc/core.hpp"
#include "concalc/matcore.hpp"

namespace concalc {

struct PowerDilation {
  ComplexMatrix unitary;   // d(N+1) x d(N+1)
  Eigen::Index base_dim;   // d; H is embedded as the first d coordinates
  int degree;              // N >= 1
};

// Leading d-by-d corner, i.e. the compression P_H M |_H.
inline ComplexMatrix compress(const ComplexMatrix& m, Eigen::Index d) {
  if (m.rows() < d || m.cols() < d)
    throw input_error("compress: block larger than matrix");
  return m.topLeftCorner(d, d);
}

inline PowerDilation power_dilation(const ComplexMatrix& t, int degree) {
  if (degree < 1) throw input_error("power_dilation: degree must be >= 1");
  if (!is_contraction(t))
    throw contract_error("power_dilation: input is not a contraction");

  const Eigen::Index d = t.rows();
  // Both defect operators come from one SVD of T.  Computing them as two
  // separate PSD square roots loses the intertwining T D_T = D_{T*} T to
  // ~sqrt(eps) at the boundary of the contraction set (sqrt is not
  // Lipschitz at 0), which would break unitarity of U beyond 1e-10.
  Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd defect_sv(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double s = svd.singularValues()(i);
    defect_sv(i) = std::sqrt(std::max(0.0, 1.0 - s * s));
  }
  const ComplexMatrix defect =
      svd.matrixV() * defect_sv.asDiagonal() * svd.matrixV().adjoint();
  const ComplexMatrix defect_adj =
      svd.matrixU() * defect_sv.asDiagonal() * svd.matrixU().adjoint();

  const Eigen::Index n_blocks = degree + 1;
  ComplexMatrix u = ComplexMatrix::Zero(d * n_blocks, d * n_blocks);
  auto block = [&](Eigen::Index i, Eigen::Index j) {
    return u.block(i * d, j * d, d, d);
  };
  block(0, 0) = t;
  block(0, degree) = defect_adj;
  block(1, 0) = defect;
  block(1, degree) = -t.adjoint();
  for (Eigen::Index j = 1; j < degree; ++j) block(j + 1, j) = identity(d);

  return PowerDilation{std::move(u), d, degree};
}

inline PowerDilation halmos_dilation(const ComplexMatrix& t) {
  return power_dilation(t, 1);
}

// max_{0<=n<=degree} || compress(U^n) - T^n ||.
inline double verify_dilation(const PowerDilation& dil, const ComplexMatrix& t) {
  require_square(t, "verify_dilation");
  if (t.rows() != dil.base_dim ||
      dil.unitary.rows() != dil.base_dim * (dil.degree + 1) ||
      dil.unitary.rows() != dil.unitary.cols())
    throw input_error("verify_dilation: inconsistent shapes");

  double worst = 0.0;
  ComplexMatrix u_pow = identity(dil.unitary.rows());
  ComplexMatrix t_pow = identity(dil.base_dim);
  for (int n = 0; n <= dil.degree; ++n) {
    worst = std::max(worst, operator_norm(compress(u_pow, dil.base_dim) - t_pow));
    if (n < dil.degree) {
      u_pow = dil.unitary * u_pow;
      t_pow = t * t_pow;
    }
  }
  return worst;
}

}  // namespace concalc
