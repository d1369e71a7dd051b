// Acceptance battery: every check runs at desk scale (dims <= 6, degrees
// <= 10) with pinned tolerances and prints one pass/fail line.
#include <chrono>
#include <cstdio>
#include <string>

#include "concalc/concalc.hpp"

using namespace concalc;

namespace {

int failures = 0;

void report(int number, bool pass, const std::string& text) {
  std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", number, text.c_str());
  if (!pass) ++failures;
}

SuiteConfig config(int cases, int dim_hi, int deg_lo, int deg_hi) {
  SuiteConfig cfg;
  cfg.seed = 42;
  cfg.cases = cases;
  cfg.dim_lo = 1;
  cfg.dim_hi = dim_hi;
  cfg.deg_lo = deg_lo;
  cfg.deg_hi = deg_hi;
  return cfg;
}

char buffer[256];

std::string describe(const SuiteReport& r, const char* what) {
  std::snprintf(buffer, sizeof buffer, "%s (records=%zu, max residual %.3e)", what,
                r.cases.size(), r.max_residual);
  return buffer;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  // 1. Dilation fidelity: 500 random (T, N <= 6), compress(U^n) = T^n within 1e-9.
  {
    const SuiteReport r = run_suite("dilation", config(500, 6, 1, 6));
    report(1, r.pass, describe(r, "dilation fidelity <= 1e-9, unitarity <= 1e-10"));
  }

  // 2. Semi-spectral axioms and moments, plus the worked scalar case T = 0.5.
  {
    const SuiteReport r = run_suite("semispectral", config(500, 6, 1, 10));

    ComplexMatrix half(1, 1);
    half(0, 0) = 0.5;
    const AtomicSemiSpectralMeasure e =
        semispectral_from_dilation(power_dilation(half, 1));
    const bool scalar_case =
        e.atoms.size() == 2 && std::abs(e.atoms[0].point - Complex(1, 0)) < 1e-12 &&
        std::abs(e.atoms[0].weight(0, 0) - Complex(0.75, 0)) < 1e-12 &&
        std::abs(e.atoms[1].point - Complex(-1, 0)) < 1e-12 &&
        std::abs(e.atoms[1].weight(0, 0) - Complex(0.25, 0)) < 1e-12;
    report(2, r.pass && scalar_case,
           describe(r, "semi-spectral PSD/mass <= 1e-10, moments <= 1e-9, T=0.5 atoms"));
  }

  // 3. Von Neumann inequality with grid slack 1e-6 on 500 random cases.
  {
    const SuiteReport r = run_suite("vn", config(500, 6, 1, 8));
    report(3, r.pass, describe(r, "von Neumann residual <= 1e-6"));
  }

  // 4. Increment formula on 500 random cases under both diagonal policies.
  {
    const SuiteReport r = run_suite("increment", config(500, 6, 1, 10));
    report(4, r.pass, describe(r, "increment formula <= 1e-8, both policies"));
  }

  // 5. Commutator formula on 500 cases; both Hilbert-Schmidt corollaries on 1000.
  {
    const SuiteReport rc = run_suite("commutator", config(500, 6, 1, 10));
    const SuiteReport rl = run_suite("hs-lipschitz", config(1000, 6, 1, 10));
    std::snprintf(buffer, sizeof buffer,
                  "commutator <= 1e-8 (max %.3e), HS corollaries slack 1e-8 (max %.3e)",
                  rc.max_residual, rl.max_residual);
    report(5, rc.pass && rl.pass, buffer);
  }

  // 6. Derivatives: n-th derivative equals the word-expansion oracle within
  //    1e-10 (n <= 4, deg <= 8); central-difference order >= 1.9 for orders 1, 2.
  {
    const SuiteReport rn = run_suite("derivativeN", config(500, 5, 1, 8));
    const SuiteReport r1 = run_suite("derivative1", config(200, 6, 2, 10));
    const SuiteReport r2 = run_suite("derivative2", config(200, 6, 2, 10));
    std::snprintf(buffer, sizeof buffer,
                  "taylor oracle <= 1e-10 (max %.3e), CD orders >= 1.9 (records %zu/%zu)",
                  rn.max_residual, r1.cases.size(), r2.cases.size());
    report(6, rn.pass && r1.pass && r2.pass, buffer);
  }

  // 7. Hilbert-Schmidt differentiability: quotient residuals decrease with
  //    observed order >= 0.95 across s = 1e-1..1e-5.
  {
    const SuiteReport r = run_suite("hs-diff", config(200, 5, 2, 10));
    report(7, r.pass, describe(r, "HS difference quotients, order >= 0.95"));
  }

  // 8. Dual-route DOI equality and representation independence.
  {
    const SuiteReport r = run_suite("doi-dual", config(500, 5, 1, 8));

    const ComplexMatrix t = random_contraction(881, 4, ContractionMode::strict);
    const ComplexMatrix q = random_gaussian_matrix(882, 4);
    const ComplexMatrix rr = random_contraction(883, 4, ContractionMode::boundary);
    AnalyticFunction z3;
    z3.coefficients = {0.0, 0.0, 0.0, 1.0};
    TensorExpansion algebraic;  // (zeta+tau)^2 - zeta tau, expanded
    algebraic.order = 1;
    algebraic.terms.push_back({1.0, {2, 0}});
    algebraic.terms.push_back({2.0, {1, 1}});
    algebraic.terms.push_back({1.0, {0, 2}});
    algebraic.terms.push_back({-1.0, {1, 1}});
    const double regroup =
        representation_independence_check(tensor_expansion(z3, 1), algebraic, t, q, rr);
    std::snprintf(buffer, sizeof buffer,
                  "dual-route <= 1e-9 (max %.3e), regrouped kernel gap %.3e <= 1e-12",
                  r.max_residual, regroup);
    report(8, r.pass && regroup <= 1e-12, buffer);
  }

  // 9. Besov machinery: exact partition of unity to 2^16, coefficient-exact
  //    reconstruction, ||z^m||_{B^1_{inf,1}} = m for m = 1..64 within 1e-9.
  {
    const SuiteReport r = run_suite("besov", config(200, 6, 1, 10));
    report(9, r.pass, describe(r, "partition exact, reconstruction exact, |z^m| = m"));
  }

  // 10. Determinism: identical configs produce identical reports modulo wall time.
  {
    bool identical = true;
    for (const char* name : {"increment", "vn", "besov"}) {
      const SuiteConfig cfg = config(50, 4, 1, 6);
      const std::string a = report_json(run_suite(name, cfg), false).dump();
      const std::string b = report_json(run_suite(name, cfg), false).dump();
      identical = identical && a == b;
    }
    report(10, identical, "byte-identical reports for identical configs");
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("acceptance battery finished in %.1f s: %s\n", seconds,
              failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
