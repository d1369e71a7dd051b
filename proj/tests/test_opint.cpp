#include <array>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "concalc/opint.hpp"
#include "concalc/random_gen.hpp"

using namespace concalc;

namespace {

ComplexMatrix scalar(double x) {
  ComplexMatrix m(1, 1);
  m(0, 0) = x;
  return m;
}

AnalyticFunction monomial(int m) {
  AnalyticFunction phi;
  phi.coefficients.assign(static_cast<std::size_t>(m) + 1, 0.0);
  phi.coefficients.back() = 1.0;
  return phi;
}

}  // namespace

TEST_CASE("doi_dilation closed forms") {
  const ComplexMatrix t = random_contraction(1, 3, ContractionMode::strict);
  const ComplexMatrix r = random_contraction(2, 3, ContractionMode::strict);
  const ComplexMatrix q = random_gaussian_matrix(3, 3);

  const ComplexMatrix total =
      doi_dilation([](Complex, Complex) { return Complex(1, 0); }, t, q, r, 2);
  CHECK(operator_norm(total - q) < 1e-10);

  const ComplexMatrix product =
      doi_dilation([](Complex x, Complex y) { return x * y; }, t, q, r, 2);
  CHECK(operator_norm(product - t * q * r) < 1e-10);

  const ComplexMatrix one = doi_dilation(
      DividedDifferenceKernel(monomial(2), DiagonalPolicy::derivative), scalar(0.3),
      scalar(1.0), scalar(0.7), 3);
  CHECK(std::abs(one(0, 0) - Complex(1.0, 0)) < 1e-12);
}

TEST_CASE("doi_tensor closed forms") {
  const ComplexMatrix t = random_contraction(4, 3, ContractionMode::strict);
  const ComplexMatrix r = random_contraction(5, 3, ContractionMode::boundary);
  const ComplexMatrix q = random_gaussian_matrix(6, 3);

  CHECK(operator_norm(doi_tensor(tensor_expansion(monomial(1), 1), t, q, r) - q) <
        1e-14);
  CHECK(operator_norm(doi_tensor(tensor_expansion(monomial(2), 1), t, q, r) -
                      (t * q + q * r)) < 1e-14);
}

TEST_CASE("divided-difference kernel values") {
  const AnalyticFunction phi = random_polynomial(77, 6);
  const DividedDifferenceKernel deriv_kernel(phi, DiagonalPolicy::derivative);
  const DividedDifferenceKernel zero_kernel(phi, DiagonalPolicy::zero);
  const AnalyticFunction dphi = differentiate(phi);

  const Complex zeta = std::polar(1.0, 0.3);
  const Complex tau = std::polar(1.0, 2.1);
  const Complex quotient = (eval(phi, zeta) - eval(phi, tau)) / (zeta - tau);
  CHECK(std::abs(deriv_kernel(zeta, tau) - quotient) < 1e-12);
  CHECK(std::abs(zero_kernel(zeta, tau) - quotient) < 1e-12);

  CHECK(std::abs(deriv_kernel(zeta, zeta) - eval(dphi, zeta)) < 1e-14);
  CHECK(std::abs(zero_kernel(zeta, zeta)) == 0.0);
}

TEST_CASE("dual routes agree on random cases") {
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index dim = 1 + trial % 5;
    const int degree = 1 + trial % 8;
    const ComplexMatrix t =
        random_contraction(2000 + trial, dim, static_cast<ContractionMode>(trial % 3));
    const ComplexMatrix r = random_contraction(2100 + trial, dim,
                                               static_cast<ContractionMode>((trial + 1) % 3));
    const ComplexMatrix q = random_gaussian_matrix(2200 + trial, dim);
    const AnalyticFunction phi = random_polynomial(2300 + trial, degree);

    const ComplexMatrix tensor_route = doi_tensor(tensor_expansion(phi, 1), t, q, r);
    const ComplexMatrix dilation_route =
        doi_dilation(DividedDifferenceKernel(phi, DiagonalPolicy::derivative), t, q, r,
                     degree + 1);
    REQUIRE(operator_norm(tensor_route - dilation_route) < 1e-9);
  }
}

TEST_CASE("moi_tensor closed forms") {
  const ComplexMatrix t = random_contraction(7, 3, ContractionMode::strict);
  const ComplexMatrix q1 = random_gaussian_matrix(8, 3);
  const ComplexMatrix q2 = random_gaussian_matrix(9, 3);

  const std::array<ComplexMatrix, 3> slots{t, t, t};
  const std::array<ComplexMatrix, 2> ops{q1, q2};

  const ComplexMatrix constant = moi_tensor(tensor_expansion(monomial(2), 2), slots, ops);
  CHECK(operator_norm(constant - q1 * q2) < 1e-14);

  const ComplexMatrix cubic = moi_tensor(tensor_expansion(monomial(3), 2), slots, ops);
  CHECK(operator_norm(cubic - (t * q1 * q2 + q1 * t * q2 + q1 * q2 * t)) < 1e-13);
}

TEST_CASE("order-1 moi reduces to doi") {
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index dim = 1 + trial % 5;
    const ComplexMatrix t =
        random_contraction(2400 + trial, dim, static_cast<ContractionMode>(trial % 3));
    const ComplexMatrix r = random_contraction(2500 + trial, dim,
                                               static_cast<ContractionMode>((trial + 2) % 3));
    const ComplexMatrix q = random_gaussian_matrix(2600 + trial, dim);
    const AnalyticFunction phi = random_polynomial(2700 + trial, 1 + trial % 8);
    const TensorExpansion te = tensor_expansion(phi, 1);

    const std::array<ComplexMatrix, 2> slots{t, r};
    const std::array<ComplexMatrix, 1> ops{q};
    REQUIRE(operator_norm(moi_tensor(te, slots, ops) - doi_tensor(te, t, q, r)) <
            1e-12);
  }
}

TEST_CASE("moi shape reduction: trailing identity folds into the last slot") {
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index dim = 1 + trial % 4;
    const int n = 2 + trial % 2;
    const int degree = n + trial % (7 - n);
    const AnalyticFunction phi = random_polynomial(2800 + trial, degree);
    const TensorExpansion te = tensor_expansion(phi, n);

    std::vector<ComplexMatrix> slots;
    for (int s = 0; s <= n; ++s)
      slots.push_back(random_contraction(2900 + 10 * trial + s, dim,
                                         static_cast<ContractionMode>(trial % 3)));
    slots[static_cast<std::size_t>(n)] = slots[static_cast<std::size_t>(n - 1)];
    std::vector<ComplexMatrix> ops;
    for (int s = 0; s + 1 < n; ++s)
      ops.push_back(random_gaussian_matrix(3000 + 10 * trial + s, dim));
    ops.push_back(identity(dim));

    // Partially summed expansion: merge the last two exponents.
    TensorExpansion folded;
    folded.order = n - 1;
    for (const auto& term : te.terms) {
      TensorExpansion::Term merged;
      merged.coeff = term.coeff;
      merged.exps.assign(term.exps.begin(), term.exps.end() - 2);
      merged.exps.push_back(term.exps[static_cast<std::size_t>(n - 1)] +
                            term.exps[static_cast<std::size_t>(n)]);
      folded.terms.push_back(std::move(merged));
    }

    std::vector<ComplexMatrix> folded_slots(slots.begin(), slots.end() - 1);
    std::vector<ComplexMatrix> folded_ops(ops.begin(), ops.end() - 1);
    REQUIRE(operator_norm(moi_tensor(te, slots, ops) -
                          moi_tensor(folded, folded_slots, folded_ops)) < 1e-9);
  }
}

TEST_CASE("representation independence") {
  const ComplexMatrix t = random_contraction(11, 4, ContractionMode::strict);
  const ComplexMatrix r = random_contraction(12, 4, ContractionMode::boundary);
  const ComplexMatrix q = random_gaussian_matrix(13, 4);

  // Permuted and split representation integrates to the identical operator.
  const AnalyticFunction phi = random_polynomial(14, 7);
  const TensorExpansion te = tensor_expansion(phi, 1);
  TensorExpansion regrouped;
  regrouped.order = 1;
  for (std::size_t k = te.terms.size(); k-- > 0;) {
    regrouped.terms.push_back({0.5 * te.terms[k].coeff, te.terms[k].exps});
    regrouped.terms.push_back({0.5 * te.terms[k].coeff, te.terms[k].exps});
  }
  CHECK(representation_independence_check(te, regrouped, t, q, r) == 0.0);

  // D(z^3) as {zeta^2 + zeta tau + tau^2} against (zeta+tau)^2 - zeta tau.
  const TensorExpansion direct = tensor_expansion(monomial(3), 1);
  TensorExpansion algebraic;
  algebraic.order = 1;
  algebraic.terms.push_back({1.0, {2, 0}});
  algebraic.terms.push_back({2.0, {1, 1}});
  algebraic.terms.push_back({1.0, {0, 2}});
  algebraic.terms.push_back({-1.0, {1, 1}});
  CHECK(representation_independence_check(direct, algebraic, t, q, r) <= 1e-12);

  // A genuinely different kernel fails the pointwise grid check.
  TensorExpansion corrupted = direct;
  corrupted.terms[0].coeff += 0.1;
  CHECK_THROWS_AS(representation_independence_check(direct, corrupted, t, q, r),
                  contract_error);
}

TEST_CASE("linearity in kernel and argument") {
  const ComplexMatrix t = random_contraction(15, 3, ContractionMode::strict);
  const ComplexMatrix r = random_contraction(16, 3, ContractionMode::strict);
  const ComplexMatrix q1 = random_gaussian_matrix(17, 3);
  const ComplexMatrix q2 = random_gaussian_matrix(18, 3);
  const AnalyticFunction a = random_polynomial(19, 5);
  const AnalyticFunction b = random_polynomial(20, 3);

  const auto ka = DividedDifferenceKernel(a, DiagonalPolicy::derivative);
  const auto kb = DividedDifferenceKernel(b, DiagonalPolicy::derivative);
  const Complex alpha(0.7, -0.2);

  const auto combined = [&](Complex x, Complex y) { return ka(x, y) + alpha * kb(x, y); };
  const ComplexMatrix lhs = doi_dilation(combined, t, q1, r, 6);
  const ComplexMatrix rhs = doi_dilation(ka, t, q1, r, 6) +
                            alpha * doi_dilation(kb, t, q1, r, 6);
  CHECK(operator_norm(lhs - rhs) < 1e-10);

  const ComplexMatrix sum_arg = doi_dilation(ka, t, q1 + q2, r, 6);
  CHECK(operator_norm(sum_arg - doi_dilation(ka, t, q1, r, 6) -
                      doi_dilation(ka, t, q2, r, 6)) < 1e-10);
}

TEST_CASE("Hilbert-Schmidt bound") {
  const ComplexMatrix t = random_contraction(21, 4, ContractionMode::strict);
  const ComplexMatrix r = random_contraction(22, 4, ContractionMode::boundary);
  const ComplexMatrix q = random_gaussian_matrix(23, 4);

  CHECK(doi_s2_bound_check([](Complex, Complex) { return Complex(1, 0); }, t, q, r, 2));

  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index dim = 1 + trial % 5;
    const int degree = 1 + trial % 8;
    const ComplexMatrix tt =
        random_contraction(3100 + trial, dim, static_cast<ContractionMode>(trial % 3));
    const ComplexMatrix rr = random_contraction(3200 + trial, dim,
                                                static_cast<ContractionMode>((trial + 1) % 3));
    const ComplexMatrix qq = random_gaussian_matrix(3300 + trial, dim);
    const AnalyticFunction phi = random_polynomial(3400 + trial, degree);
    REQUIRE(doi_s2_bound_check(DividedDifferenceKernel(phi, DiagonalPolicy::derivative),
                               tt, qq, rr, degree + 1));
  }

  // Rank-one argument with a high-degree kernel.
  ComplexMatrix rank_one = ComplexMatrix::Zero(4, 4);
  rank_one(0, 2) = Complex(2.0, 1.0);
  CHECK(doi_s2_bound_check(DividedDifferenceKernel(monomial(8), DiagonalPolicy::derivative),
                           t, rank_one, r, 9));
}

TEST_CASE("tensor routes are deterministic and order-insensitive") {
  const ComplexMatrix t = random_contraction(24, 4, ContractionMode::strict);
  const ComplexMatrix r = random_contraction(25, 4, ContractionMode::strict);
  const ComplexMatrix q = random_gaussian_matrix(26, 4);
  const TensorExpansion te = tensor_expansion(random_polynomial(27, 8), 1);

  TensorExpansion reversed;
  reversed.order = 1;
  reversed.terms.assign(te.terms.rbegin(), te.terms.rend());

  const ComplexMatrix a = doi_tensor(te, t, q, r);
  const ComplexMatrix b = doi_tensor(reversed, t, q, r);
  CHECK(operator_norm(a - b) == 0.0);

  const ComplexMatrix again = doi_tensor(te, t, q, r);
  CHECK(operator_norm(a - again) == 0.0);
}
