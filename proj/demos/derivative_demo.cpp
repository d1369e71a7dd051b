// Differentiates t -> phi((1-t)T + tR) three ways: the tensor-route double
// operator integral, the dilation route, and central differences.
#include <cstdio>

#include "concalc/concalc.hpp"

int main() {
  using namespace concalc;

  const ComplexMatrix t = random_contraction(11, 4, ContractionMode::strict);
  const ComplexMatrix r = random_contraction(12, 4, ContractionMode::boundary);
  const ContractionPath path(t, r);
  const AnalyticFunction phi = random_polynomial(13, 6);

  const double at = 0.4;
  const ComplexMatrix tensor_route = derivative(phi, path, at);
  const ComplexMatrix mid = path.at(at);
  const ComplexMatrix dilation_route =
      doi_dilation(DividedDifferenceKernel(phi, DiagonalPolicy::derivative), mid,
                   r - t, mid, phi.degree() + 1);

  std::printf("|tensor - dilation|   : %.3e\n",
              operator_norm(tensor_route - dilation_route));
  for (double h : {1e-2, 1e-3, 1e-4}) {
    const ComplexMatrix fd = (eval_on_contraction(phi, path.at(at + h)) -
                              eval_on_contraction(phi, path.at(at - h))) /
                             (2.0 * h);
    std::printf("central diff h=%.0e    : %.3e\n", h,
                operator_norm(fd - tensor_route));
  }
  return 0;
}
