#include <cmath>
#include <limits>

#include <catch2/catch_amalgamated.hpp>

#include "concalc/funcalc.hpp"
#include "concalc/random_gen.hpp"
#include "concalc/semispectral.hpp"

using namespace concalc;

namespace {

ComplexMatrix scalar(double x) {
  ComplexMatrix m(1, 1);
  m(0, 0) = x;
  return m;
}

AtomicSemiSpectralMeasure measure_of(const ComplexMatrix& t, int degree) {
  return semispectral_from_dilation(power_dilation(t, degree));
}

}  // namespace

TEST_CASE("worked scalar case T = 0.5") {
  const AtomicSemiSpectralMeasure e = measure_of(scalar(0.5), 1);
  REQUIRE(e.atoms.size() == 2);
  // Atoms sorted by argument: +1 first, then -1.
  CHECK(std::abs(e.atoms[0].point - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(e.atoms[1].point - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(e.atoms[0].weight(0, 0) - Complex(0.75, 0)) < 1e-12);
  CHECK(std::abs(e.atoms[1].weight(0, 0) - Complex(0.25, 0)) < 1e-12);
}

TEST_CASE("worked scalar case T = 0") {
  const AtomicSemiSpectralMeasure e = measure_of(scalar(0.0), 1);
  REQUIRE(e.atoms.size() == 2);
  CHECK(std::abs(e.atoms[0].weight(0, 0) - Complex(0.5, 0)) < 1e-12);
  CHECK(std::abs(e.atoms[1].weight(0, 0) - Complex(0.5, 0)) < 1e-12);
  Complex first_moment = 0.0;
  for (const auto& atom : e.atoms) first_moment += atom.point * atom.weight(0, 0);
  CHECK(std::abs(first_moment) < 1e-12);
}

TEST_CASE("unitary contraction: weights are idempotent") {
  const ComplexMatrix u = random_contraction(31, 3, ContractionMode::unitary);
  const AtomicSemiSpectralMeasure e = measure_of(u, 2);
  for (const auto& atom : e.atoms)
    REQUIRE(operator_norm(atom.weight * atom.weight - atom.weight) < 1e-9);
  CHECK(moment_residual(e, u, 2) < 1e-9);
}

TEST_CASE("integrate closed forms") {
  const ComplexMatrix t = random_contraction(37, 4, ContractionMode::strict);
  const AtomicSemiSpectralMeasure e = measure_of(t, 3);

  const ComplexMatrix total = integrate(e, [](Complex) { return Complex(1, 0); });
  CHECK(operator_norm(total - identity(4)) < 1e-10);

  ComplexMatrix t_pow = identity(4);
  for (int n = 0; n <= 3; ++n) {
    const ComplexMatrix moment = integrate(e, [&](Complex z) { return std::pow(z, n); });
    CHECK(operator_norm(moment - t_pow) < 1e-9);
    t_pow = t * t_pow;
  }
}

TEST_CASE("integrate conj on a unitary gives the adjoint") {
  const ComplexMatrix u = random_contraction(41, 3, ContractionMode::unitary);
  const AtomicSemiSpectralMeasure e = measure_of(u, 1);
  const ComplexMatrix adj = integrate(e, [](Complex z) { return std::conj(z); });
  CHECK(operator_norm(adj - u.adjoint()) < 1e-9);
}

TEST_CASE("integrate rejects non-finite integrand values") {
  const AtomicSemiSpectralMeasure e = measure_of(scalar(0.5), 1);
  CHECK_THROWS_AS(
      integrate(e, [](Complex) {
        return Complex(std::numeric_limits<double>::quiet_NaN(), 0);
      }),
      evaluation_error);
}

TEST_CASE("moment residual behavior") {
  const ComplexMatrix t = random_contraction(43, 3, ContractionMode::strict);
  AtomicSemiSpectralMeasure e = measure_of(t, 3);
  CHECK(moment_residual(e, t, 3) < 1e-9);
  CHECK(moment_residual(e, t, 0) < 1e-10);
  CHECK_THROWS_AS(moment_residual(e, t, 4), input_error);

  e.atoms[0].weight(0, 0) += 0.01;
  CHECK(moment_residual(e, t, 3) >= 0.005);
}

TEST_CASE("repeated eigenvalues merge into higher-rank atoms") {
  // T = 0.5 I_2: each dilation eigenvalue is doubly degenerate, so the
  // clustered weights have rank two and the scalar weights double up.
  ComplexMatrix t = 0.5 * identity(2);
  const AtomicSemiSpectralMeasure e = measure_of(t, 1);
  REQUIRE(e.atoms.size() == 2);
  CHECK(operator_norm(e.atoms[0].weight - 0.75 * identity(2)) < 1e-12);
  CHECK(operator_norm(e.atoms[1].weight - 0.25 * identity(2)) < 1e-12);
  CHECK(moment_residual(e, t, 1) < 1e-12);
}

TEST_CASE("clusters merge across the argument wrap-around") {
  // Unitary with eigenvalues e^{+-i 1e-10}: their arguments fall on both
  // sides of 0 and must land in one atom.
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 0) = std::polar(1.0, 1e-10);
  t(1, 1) = std::polar(1.0, -1e-10);
  const AtomicSemiSpectralMeasure e = measure_of(t, 2);
  for (const auto& atom : e.atoms)
    REQUIRE(std::abs(std::abs(atom.point) - 1.0) < 1e-12);
  // One merged atom near 1 carrying both unit eigenprojections.
  bool found = false;
  for (const auto& atom : e.atoms)
    if (std::abs(atom.point - Complex(1, 0)) < 1e-8 &&
        std::abs(atom.weight.trace() - Complex(2, 0)) < 1e-8)
      found = true;
  CHECK(found);
  CHECK(moment_residual(e, t, 2) < 1e-9);
}

TEST_CASE("axioms hold across random contractions") {
  for (int trial = 0; trial < 120; ++trial) {
    const Eigen::Index dim = 1 + trial % 5;
    const int degree = 1 + trial % 6;
    const ComplexMatrix t =
        random_contraction(10000 + trial, dim, static_cast<ContractionMode>(trial % 3));
    const AtomicSemiSpectralMeasure e = measure_of(t, degree);

    ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
    for (const auto& atom : e.atoms) {
      REQUIRE(std::abs(std::abs(atom.point) - 1.0) < 1e-12);
      REQUIRE(operator_norm(atom.weight - atom.weight.adjoint()) < 1e-10);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(atom.weight);
      REQUIRE(es.eigenvalues()(0) > -1e-10);
      total += atom.weight;
    }
    REQUIRE(operator_norm(total - identity(dim)) < 1e-10);
    REQUIRE(moment_residual(e, t, degree) < 1e-9);
  }
}

TEST_CASE("dilation independence at matching fidelity") {
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index dim = 1 + trial % 4;
    const int degree = 1 + trial % 4;
    const ComplexMatrix t =
        random_contraction(11000 + trial, dim, static_cast<ContractionMode>(trial % 3));
    const AtomicSemiSpectralMeasure a = measure_of(t, degree);
    const AtomicSemiSpectralMeasure b = measure_of(t, degree + 2);
    for (int n = 0; n <= degree; ++n) {
      const auto zn = [&](Complex z) { return std::pow(z, n); };
      REQUIRE(operator_norm(integrate(a, zn) - integrate(b, zn)) < 1e-9);
    }
  }
}

TEST_CASE("functional calculus consistency with Horner") {
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index dim = 1 + trial % 4;
    const int degree = 1 + trial % 6;
    const ComplexMatrix t =
        random_contraction(12000 + trial, dim, static_cast<ContractionMode>(trial % 3));
    const AnalyticFunction phi = random_polynomial(12000 + trial, degree);
    const AtomicSemiSpectralMeasure e = measure_of(t, degree);
    const ComplexMatrix via_measure =
        integrate(e, [&](Complex z) { return eval(phi, z); });
    REQUIRE(operator_norm(via_measure - eval_on_contraction(phi, t)) < 1e-9);
  }
}
