// Atomic semi-spectral measures of a contraction: the compression of the
// spectral measure of a power dilation back to H.  The atoms satisfy
//
//     weight_j >= 0,   sum_j weight_j = I,   sum_j point_j^n weight_j = T^n
//
// for all 0 <= n <= degree.
#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "concalc/core.hpp"
#include "concalc/dilation.hpp"
#include "concalc/matcore.hpp"

namespace concalc {

struct AtomicSemiSpectralMeasure {
  struct Atom {
    Complex point;         // unit-modulus
    ComplexMatrix weight;  // d x d Hermitian PSD
  };
  std::vector<Atom> atoms;
  Eigen::Index dim;
  int degree;  // fidelity degree inherited from the dilation
};

// Eigenvalues closer than this arc distance are merged into one atom; the
// weights add, and every integrand in scope is continuous.
inline constexpr double kAtomMergeArc = 1e-8;

inline AtomicSemiSpectralMeasure semispectral_from_dilation(const PowerDilation& dil) {
  const UnitaryEigensystem eig = unitary_eig(dil.unitary);
  const Eigen::Index d = dil.base_dim;
  const Eigen::Index total = eig.eigenvalues.size();

  // Eigenvalues arrive sorted by argument; cluster by arc gaps.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // [begin, end)
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= total; ++i) {
    if (i == total || principal_argument(eig.eigenvalues(i)) -
                              principal_argument(eig.eigenvalues(i - 1)) >=
                          kAtomMergeArc) {
      clusters.emplace_back(begin, i);
      begin = i;
    }
  }
  // Wrap-around: the first and last cluster may meet across argument 0.
  if (clusters.size() >= 2) {
    const double front = principal_argument(eig.eigenvalues(0));
    const double back = principal_argument(eig.eigenvalues(total - 1));
    if (front + 2.0 * std::numbers::pi - back < kAtomMergeArc) {
      auto last = clusters.back();
      clusters.pop_back();
      clusters.front().first = last.first;  // marks a wrapped range
    }
  }

  AtomicSemiSpectralMeasure out;
  out.dim = d;
  out.degree = dil.degree;
  for (auto [lo, hi] : clusters) {
    ComplexMatrix weight = ComplexMatrix::Zero(d, d);
    Complex point_sum = 0.0;
    Eigen::Index count = 0;
    auto add = [&](Eigen::Index i) {
      const ComplexVector v = eig.eigenvectors.col(i).head(d);
      weight += v * v.adjoint();
      point_sum += eig.eigenvalues(i);
      ++count;
    };
    if (lo < hi) {
      for (Eigen::Index i = lo; i < hi; ++i) add(i);
    } else {  // wrapped cluster
      for (Eigen::Index i = lo; i < total; ++i) add(i);
      for (Eigen::Index i = 0; i < hi; ++i) add(i);
    }
    Complex point = point_sum / static_cast<double>(count);
    point /= std::abs(point);
    out.atoms.push_back({point, 0.5 * (weight + weight.adjoint())});
  }
  return out;
}

template <class F>
ComplexMatrix integrate(const AtomicSemiSpectralMeasure& measure, F&& f) {
  ComplexMatrix out = ComplexMatrix::Zero(measure.dim, measure.dim);
  for (const auto& atom : measure.atoms) {
    const Complex value = f(atom.point);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
      throw evaluation_error("integrate: integrand not finite at an atom");
    out += value * atom.weight;
  }
  return out;
}

// max_{0<=n<=n_max} || integrate(zeta^n) - T^n ||.
inline double moment_residual(const AtomicSemiSpectralMeasure& measure,
                              const ComplexMatrix& t, int n_max) {
  require_square(t, "moment_residual");
  if (t.rows() != measure.dim) throw input_error("moment_residual: dimension mismatch");
  if (n_max < 0 || n_max > measure.degree)
    throw input_error("moment_residual: n_max exceeds fidelity degree");

  double worst = 0.0;
  ComplexMatrix t_pow = identity(measure.dim);
  std::vector<Complex> point_pow(measure.atoms.size(), Complex(1.0, 0.0));
  for (int n = 0; n <= n_max; ++n) {
    ComplexMatrix moment = ComplexMatrix::Zero(measure.dim, measure.dim);
    for (std::size_t j = 0; j < measure.atoms.size(); ++j)
      moment += point_pow[j] * measure.atoms[j].weight;
    worst = std::max(worst, operator_norm(moment - t_pow));
    if (n < n_max) {
      t_pow = t * t_pow;
      for (std::size_t j = 0; j < measure.atoms.size(); ++j)
        point_pow[j] *= measure.atoms[j].point;
    }
  }
  return worst;
}

}  // namespace concalc
