// Randomized verification suites with JSON/CSV reports.
//
// Every suite draws its cases deterministically from (seed, case index),
// emits one or more named records per case, and passes when every record's
// residual is at or below its tolerance.  Records are sorted by case id, so
// a report is byte-identical across runs up to the wall-time field.
#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "concalc/besov.hpp"
#include "concalc/calculus.hpp"
#include "concalc/core.hpp"
#include "concalc/dilation.hpp"
#include "concalc/funcalc.hpp"
#include "concalc/json_io.hpp"
#include "concalc/opint.hpp"
#include "concalc/random_gen.hpp"
#include "concalc/semispectral.hpp"

namespace concalc {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int dim_lo = 1;
  int dim_hi = 6;
  int deg_lo = 1;
  int deg_hi = 10;
  int cases = 200;
  std::map<std::string, double> tol;  // per-record-kind overrides

  double tolerance(const std::string& name, double fallback) const {
    auto it = tol.find(name);
    return it == tol.end() ? fallback : it->second;
  }

  void validate() const {
    if (cases < 1) throw input_error("SuiteConfig: cases must be >= 1");
    if (dim_lo < 1 || dim_hi < dim_lo) throw input_error("SuiteConfig: empty dim range");
    if (deg_lo < 0 || deg_hi < deg_lo)
      throw input_error("SuiteConfig: empty degree range");
  }
};

struct CaseRecord {
  std::string case_id;
  int dim = 0;
  int degree = 0;
  std::string inputs_digest;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CaseRecord> cases;
  double max_residual = 0.0;
  bool pass = true;
  double wall_ms = 0.0;  // excluded from determinism comparisons
};

// FNV-1a digest of the case inputs.
class Digest {
public:
  void bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ ^= p[i];
      hash_ *= 1099511628211ULL;
    }
  }
  void add(double x) { bytes(&x, sizeof x); }
  void add(int x) { bytes(&x, sizeof x); }
  void add(std::uint64_t x) { bytes(&x, sizeof x); }
  void add(Complex z) {
    add(z.real());
    add(z.imag());
  }
  void add(const ComplexMatrix& m) {
    add(static_cast<int>(m.rows()));
    add(static_cast<int>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) add(m(i, j));
  }
  void add(const AnalyticFunction& phi) {
    add(static_cast<int>(phi.coefficients.size()));
    for (Complex c : phi.coefficients) add(c);
  }
  std::uint64_t value() const { return hash_; }

  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

private:
  std::uint64_t hash_ = 1469598103934665603ULL;
};

namespace detail {

inline std::string case_id(int index, const char* kind) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "c%04d", index);
  return std::string(buf) + "/" + kind;
}

inline void push_record(SuiteReport& report, int index, const char* kind, int dim,
                        int degree, const Digest& digest, double residual,
                        double tolerance) {
  CaseRecord rec;
  rec.case_id = case_id(index, kind);
  rec.dim = dim;
  rec.degree = degree;
  rec.inputs_digest = digest.hex();
  rec.residual = residual;
  rec.tolerance = tolerance;
  rec.pass = residual <= tolerance;
  report.cases.push_back(std::move(rec));
}

inline int pick_in_range(SeededRng& rng, int lo, int hi) {
  if (lo >= hi) return lo;
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng.bits() % span);
}

inline ContractionMode pick_mode(int index) {
  switch (index % 3) {
    case 0: return ContractionMode::strict;
    case 1: return ContractionMode::boundary;
    default: return ContractionMode::unitary;
  }
}

inline double least_squares_slope(const std::vector<double>& x,
                                  const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Order deficit max(0, required - slope) of log residuals against log steps.
// The slope is fitted only over points clear of the per-step cancellation
// floor; when every point sits at the floor the stencil is exact for the
// case at hand and the deficit is zero.
inline double order_deficit(const std::vector<double>& steps,
                            const std::vector<double>& residuals, double required,
                            const std::vector<double>& noise_floor) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (residuals[i] <= 32.0 * noise_floor[i]) continue;
    lx.push_back(std::log(steps[i]));
    ly.push_back(std::log(residuals[i]));
  }
  if (lx.size() < 2) return 0.0;
  return std::max(0.0, required - least_squares_slope(lx, ly));
}

inline std::uint64_t case_seed(const SuiteConfig& cfg, std::uint64_t suite_tag,
                               int index) {
  return detail::mix(detail::mix(cfg.seed, suite_tag),
                     static_cast<std::uint64_t>(index));
}

inline std::uint64_t suite_tag(const std::string& name) {
  Digest d;
  d.bytes(name.data(), name.size());
  return d.value();
}

// ---- individual suites ----------------------------------------------------

inline void suite_dilation(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("dilation");
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int deg = std::max(1, pick_in_range(rng, cfg.deg_lo, cfg.deg_hi));
    const ComplexMatrix t = random_contraction(cs, dim, pick_mode(i));
    Digest dg;
    dg.add(t);
    dg.add(deg);
    const PowerDilation dil = power_dilation(t, deg);
    push_record(report, i, "fidelity", dim, deg, dg, verify_dilation(dil, t),
                cfg.tolerance("fidelity", 1e-9));
    push_record(report, i, "unitarity", dim, deg, dg,
                operator_norm(dil.unitary.adjoint() * dil.unitary -
                              identity(dil.unitary.rows())),
                cfg.tolerance("unitarity", 1e-10));
  }
}

inline void suite_semispectral(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("semispectral");
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int deg = std::max(1, pick_in_range(rng, cfg.deg_lo, cfg.deg_hi));
    const ComplexMatrix t = random_contraction(cs, dim, pick_mode(i));
    Digest dg;
    dg.add(t);
    dg.add(deg);
    const AtomicSemiSpectralMeasure measure =
        semispectral_from_dilation(power_dilation(t, deg));

    ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
    double psd_violation = 0.0;
    for (const auto& atom : measure.atoms) {
      total += atom.weight;
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(atom.weight);
      psd_violation = std::max(psd_violation, std::max(0.0, -es.eigenvalues()(0)));
    }
    push_record(report, i, "mass", dim, deg, dg, operator_norm(total - identity(dim)),
                cfg.tolerance("mass", 1e-10));
    push_record(report, i, "psd", dim, deg, dg, psd_violation,
                cfg.tolerance("psd", 1e-10));
    push_record(report, i, "moment", dim, deg, dg, moment_residual(measure, t, deg),
                cfg.tolerance("moment", 1e-9));
  }
}

inline void suite_vn(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("vn");
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int deg = pick_in_range(rng, cfg.deg_lo, cfg.deg_hi);
    const ComplexMatrix t = random_contraction(cs, dim, pick_mode(i));
    const AnalyticFunction phi = random_polynomial(cs, deg);
    Digest dg;
    dg.add(t);
    dg.add(phi);
    push_record(report, i, "vn", dim, deg, dg, von_neumann_residual(phi, t),
                cfg.tolerance("vn", kVonNeumannGridSlack));
  }
}

inline void suite_increment(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("increment");
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int deg = pick_in_range(rng, cfg.deg_lo, cfg.deg_hi);
    const ComplexMatrix t = random_contraction(detail::mix(cs, 1), dim, pick_mode(i));
    const ComplexMatrix r = random_contraction(detail::mix(cs, 2), dim, pick_mode(i + 1));
    const AnalyticFunction phi = random_polynomial(cs, deg);
    Digest dg;
    dg.add(t);
    dg.add(r);
    dg.add(phi);
    const ContractionPath path(t, r);
    push_record(report, i, "deriv-policy", dim, deg, dg,
                increment_formula_residual(phi, path, DiagonalPolicy::derivative),
                cfg.tolerance("increment", 1e-8));
    push_record(report, i, "zero-policy", dim, deg, dg,
                increment_formula_residual(phi, path, DiagonalPolicy::zero),
                cfg.tolerance("increment", 1e-8));
  }
}

inline void suite_commutator(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("commutator");
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int deg = pick_in_range(rng, cfg.deg_lo, cfg.deg_hi);
    const ComplexMatrix t = random_contraction(cs, dim, pick_mode(i));
    const ComplexMatrix q = random_gaussian_matrix(detail::mix(cs, 3), dim);
    const AnalyticFunction phi = random_polynomial(cs, deg);
    Digest dg;
    dg.add(t);
    dg.add(q);
    dg.add(phi);
    push_record(report, i, "commutator", dim, deg, dg,
                commutator_formula_residual(phi, t, q, DiagonalPolicy::derivative),
                cfg.tolerance("commutator", 1e-8));
  }
}

inline void suite_derivative1(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("derivative1");
  const std::vector<double> steps = {1e-2, 1e-3, 1e-4};
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int deg = std::max(2, pick_in_range(rng, cfg.deg_lo, cfg.deg_hi));
    const ComplexMatrix t = random_contraction(detail::mix(cs, 1), dim, pick_mode(i));
    const ComplexMatrix r = random_contraction(detail::mix(cs, 2), dim, pick_mode(i + 1));
    const AnalyticFunction phi = random_polynomial(cs, deg);
    const double t0 = 0.25 + 0.5 * rng.uniform();
    Digest dg;
    dg.add(t);
    dg.add(r);
    dg.add(phi);
    dg.add(t0);

    const ContractionPath path(t, r);
    const ComplexMatrix deriv = derivative(phi, path, t0);
    const double scale =
        operator_norm(eval_on_contraction(phi, path.at(t0))) + operator_norm(deriv) + 1.0;
    std::vector<double> residuals, floor;
    for (double h : steps) {
      const ComplexMatrix fd = (eval_on_contraction(phi, path.at(t0 + h)) -
                                eval_on_contraction(phi, path.at(t0 - h))) /
                               (2.0 * h);
      residuals.push_back(operator_norm(fd - deriv));
      floor.push_back(2.3e-16 * scale / h);
    }
    push_record(report, i, "order", dim, deg, dg,
                order_deficit(steps, residuals, 1.9, floor),
                cfg.tolerance("order", 0.0));

    const ComplexMatrix mid = path.at(t0);
    const ComplexMatrix via_dilation =
        doi_dilation(DividedDifferenceKernel(phi, DiagonalPolicy::derivative), mid,
                     r - t, mid, phi.degree() + 1);
    push_record(report, i, "limit", dim, deg, dg, operator_norm(deriv - via_dilation),
                cfg.tolerance("limit", 1e-9));
  }
}

inline void suite_derivative2(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("derivative2");
  const std::vector<double> steps = {1e-1, 1e-2, 1e-3};
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int deg = std::max(2, pick_in_range(rng, cfg.deg_lo, cfg.deg_hi));
    const ComplexMatrix t = random_contraction(detail::mix(cs, 1), dim, pick_mode(i));
    const ComplexMatrix r = random_contraction(detail::mix(cs, 2), dim, pick_mode(i + 1));
    const AnalyticFunction phi = random_polynomial(cs, deg);
    const double t0 = 0.25 + 0.5 * rng.uniform();
    Digest dg;
    dg.add(t);
    dg.add(r);
    dg.add(phi);
    dg.add(t0);

    const ContractionPath path(t, r);
    const ComplexMatrix second = second_derivative(phi, path, t0);
    push_record(report, i, "taylor2", dim, deg, dg,
                operator_norm(second - polynomial_taylor_oracle(phi, path, t0, 2)),
                cfg.tolerance("taylor", 1e-10));

    std::vector<double> residuals, floor;
    const ComplexMatrix base = eval_on_contraction(phi, path.at(t0));
    const double scale = operator_norm(base) + operator_norm(second) + 1.0;
    for (double h : steps) {
      const ComplexMatrix fd = (eval_on_contraction(phi, path.at(t0 + h)) - 2.0 * base +
                                eval_on_contraction(phi, path.at(t0 - h))) /
                               (h * h);
      residuals.push_back(operator_norm(fd - second));
      floor.push_back(4.0 * 2.3e-16 * scale / (h * h));
    }
    push_record(report, i, "order2", dim, deg, dg,
                order_deficit(steps, residuals, 1.9, floor),
                cfg.tolerance("order", 0.0));
  }
}

inline void suite_derivative_n(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("derivativeN");
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int order = 1 + i % 4;
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int lo = std::max(cfg.deg_lo, order);
    const int hi = std::max(lo, std::min(cfg.deg_hi, 8));
    const int deg = pick_in_range(rng, lo, hi);
    const ComplexMatrix t = random_contraction(detail::mix(cs, 1), dim, pick_mode(i));
    const ComplexMatrix r = random_contraction(detail::mix(cs, 2), dim, pick_mode(i + 1));
    const AnalyticFunction phi = random_polynomial(cs, deg);
    const double t0 = rng.uniform();
    Digest dg;
    dg.add(t);
    dg.add(r);
    dg.add(phi);
    dg.add(t0);
    dg.add(order);

    const ContractionPath path(t, r);
    push_record(report, i, "taylor", dim, deg, dg,
                operator_norm(nth_derivative(phi, path, t0, order) -
                              polynomial_taylor_oracle(phi, path, t0, order)),
                cfg.tolerance("taylor", 1e-10));
  }
}

inline void suite_hs_lipschitz(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("hs-lipschitz");
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int deg = pick_in_range(rng, cfg.deg_lo, cfg.deg_hi);
    const ComplexMatrix t = random_contraction(detail::mix(cs, 1), dim, pick_mode(i));
    const ComplexMatrix r = random_contraction(detail::mix(cs, 2), dim, pick_mode(i + 1));
    const ComplexMatrix q = random_gaussian_matrix(detail::mix(cs, 3), dim);
    const AnalyticFunction phi = random_polynomial(cs, deg);
    Digest dg;
    dg.add(t);
    dg.add(r);
    dg.add(q);
    dg.add(phi);

    const AnalyticFunction dphi = differentiate(phi);
    const double sup = sup_on_circle_grid(dphi, default_circle_grid(dphi.degree()));
    const double hsp = hs_norm(eval_on_contraction(phi, t) - eval_on_contraction(phi, r)) -
                       sup * hs_norm(t - r);
    push_record(report, i, "hsp", dim, deg, dg, hsp, cfg.tolerance("hs-lip", 1e-8));

    const ComplexMatrix phi_t = eval_on_contraction(phi, t);
    const double sled =
        hs_norm(phi_t * q - q * phi_t) - sup * hs_norm(t * q - q * t);
    push_record(report, i, "sled", dim, deg, dg, sled, cfg.tolerance("hs-lip", 1e-8));
  }
}

inline void suite_hs_diff(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("hs-diff");
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int deg = std::max(2, pick_in_range(rng, cfg.deg_lo, cfg.deg_hi));
    const ComplexMatrix t = random_contraction(detail::mix(cs, 1), dim, pick_mode(i));
    const ComplexMatrix r = random_contraction(detail::mix(cs, 2), dim, pick_mode(i + 1));
    const AnalyticFunction phi = random_polynomial(cs, deg);
    Digest dg;
    dg.add(t);
    dg.add(r);
    dg.add(phi);

    const ContractionPath path(t, r);
    const auto quotients = hs_difference_quotients(phi, path);
    const double scale = hs_norm(eval_on_contraction(phi, t)) +
                         hs_norm(derivative(phi, path, 0.0)) + 1.0;
    std::vector<double> steps, residuals, floor;
    for (auto [s, res] : quotients) {
      steps.push_back(s);
      residuals.push_back(res);
      floor.push_back(2.3e-16 * scale / s);
    }
    // The order regression runs on the asymptotic tail s <= 1e-2; at
    // s = 1e-1 a degree-10 polynomial is still saturated by higher Taylor
    // terms.  The full schedule feeds the monotonicity and bound checks.
    const std::vector<double> tail_steps(steps.begin() + 1, steps.end());
    const std::vector<double> tail_res(residuals.begin() + 1, residuals.end());
    const std::vector<double> tail_floor(floor.begin() + 1, floor.end());
    push_record(report, i, "order", dim, deg, dg,
                order_deficit(tail_steps, tail_res, 0.95, tail_floor),
                cfg.tolerance("order", 0.0));

    double worst_increase = 0.0;
    for (std::size_t k = 0; k + 1 < residuals.size(); ++k)
      if (residuals[k + 1] > 32.0 * floor[k + 1])
        worst_increase = std::max(worst_increase, residuals[k + 1] - residuals[k]);
    push_record(report, i, "monotone", dim, deg, dg, worst_increase,
                cfg.tolerance("monotone", 1e-12));

    const double bound = hs_norm(second_derivative(phi, path, 0.0));
    const double final_gap =
        residuals.back() - 10.0 * steps.back() * bound - 32.0 * floor.back();
    push_record(report, i, "final", dim, deg, dg, std::max(0.0, final_gap),
                cfg.tolerance("final", 0.0));
  }
}

inline void suite_besov(const SuiteConfig& cfg, SuiteReport& report) {
  // Partition of unity, exact, k = 2..2^16.
  {
    double worst = 0.0;
    for (long long k = 2; k <= (1LL << 16); ++k) {
      double sum = 0.0;
      for (int n = 1; (1LL << (n - 1)) <= k; ++n)
        sum += w_weight(static_cast<double>(k) / std::exp2(n));
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    Digest dg;
    dg.add(static_cast<std::uint64_t>(1ULL << 16));
    push_record(report, 0, "partition", 0, 0, dg, worst,
                cfg.tolerance("partition", 0.0));
  }

  // || z^m ||_{B^1_{inf,1}} = m for m = 1..64.
  for (int m = 1; m <= 64; ++m) {
    TrigPolynomial zm;
    zm.min_k = m;
    zm.coeffs = {Complex(1.0, 0.0)};
    Digest dg;
    dg.add(m);
    push_record(report, m, "zm", 0, m, dg,
                std::abs(besov_norm(zm, 1.0, kInf, 1.0) - static_cast<double>(m)),
                cfg.tolerance("zm", 1e-9));
  }

  // Coefficient-exact reconstruction on random trig polynomials.
  const std::uint64_t tag = suite_tag("besov");
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int radius = pick_in_range(rng, 1, 32);
    TrigPolynomial phi;
    phi.min_k = -radius;
    phi.coeffs.resize(static_cast<std::size_t>(2 * radius) + 1);
    for (auto& c : phi.coeffs) c = rng.complex_normal();
    Digest dg;
    dg.add(radius);
    for (Complex c : phi.coeffs) dg.add(c);

    const LPDecomposition lp = lp_decompose(phi);
    double worst = 0.0;
    for (int k = phi.min_k; k <= phi.max_k(); ++k) {
      Complex sum = 0.0;
      for (const auto& piece : lp.analytic_pieces) sum += piece.coeff(k);
      for (const auto& piece : lp.antianalytic_pieces) sum += piece.coeff(k);
      worst = std::max(worst, std::abs(sum - phi.coeff(k)));
    }
    push_record(report, 100 + i, "recon", 0, radius, dg, worst,
                cfg.tolerance("recon", 0.0));
  }
}

inline void suite_doi_dual(const SuiteConfig& cfg, SuiteReport& report) {
  const std::uint64_t tag = suite_tag("doi-dual");
  for (int i = 0; i < cfg.cases; ++i) {
    const std::uint64_t cs = case_seed(cfg, tag, i);
    SeededRng rng(cs);
    const int dim = pick_in_range(rng, cfg.dim_lo, cfg.dim_hi);
    const int deg = std::max(1, std::min(pick_in_range(rng, cfg.deg_lo, cfg.deg_hi), 8));
    const ComplexMatrix t = random_contraction(detail::mix(cs, 1), dim, pick_mode(i));
    const ComplexMatrix r = random_contraction(detail::mix(cs, 2), dim, pick_mode(i + 1));
    const ComplexMatrix q = random_gaussian_matrix(detail::mix(cs, 3), dim);
    const AnalyticFunction phi = random_polynomial(cs, deg);
    Digest dg;
    dg.add(t);
    dg.add(r);
    dg.add(q);
    dg.add(phi);

    const TensorExpansion te = tensor_expansion(phi, 1);
    const DoiResult via_dilation = doi_dilation_with_sup(
        DividedDifferenceKernel(phi, DiagonalPolicy::derivative), t, q, r,
        phi.degree() + 1);
    push_record(report, i, "dual", dim, deg, dg,
                operator_norm(doi_tensor(te, t, q, r) - via_dilation.value),
                cfg.tolerance("dual", 1e-9));
    push_record(report, i, "s2", dim, deg, dg,
                std::max(0.0, hs_norm(via_dilation.value) -
                                  via_dilation.kernel_sup * hs_norm(q)),
                cfg.tolerance("s2", 1e-9));

    // Representation independence: permute the terms and split each
    // coefficient into two exact halves.
    TensorExpansion regrouped;
    regrouped.order = 1;
    for (std::size_t k = te.terms.size(); k-- > 0;) {
      regrouped.terms.push_back({0.5 * te.terms[k].coeff, te.terms[k].exps});
      regrouped.terms.push_back({0.5 * te.terms[k].coeff, te.terms[k].exps});
    }
    push_record(report, i, "repind", dim, deg, dg,
                representation_independence_check(te, regrouped, t, q, r),
                cfg.tolerance("repind", 0.0));
  }
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "dilation",    "semispectral", "increment",    "commutator",
      "derivative1", "derivative2",  "derivativeN",  "hs-lipschitz",
      "hs-diff",     "besov",        "doi-dual",     "vn"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  cfg.validate();
  SuiteReport report;
  report.suite = name;
  report.config = cfg;
  const auto start = std::chrono::steady_clock::now();

  if (name == "dilation") detail::suite_dilation(cfg, report);
  else if (name == "semispectral") detail::suite_semispectral(cfg, report);
  else if (name == "increment") detail::suite_increment(cfg, report);
  else if (name == "commutator") detail::suite_commutator(cfg, report);
  else if (name == "derivative1") detail::suite_derivative1(cfg, report);
  else if (name == "derivative2") detail::suite_derivative2(cfg, report);
  else if (name == "derivativeN") detail::suite_derivative_n(cfg, report);
  else if (name == "hs-lipschitz") detail::suite_hs_lipschitz(cfg, report);
  else if (name == "hs-diff") detail::suite_hs_diff(cfg, report);
  else if (name == "besov") detail::suite_besov(cfg, report);
  else if (name == "doi-dual") detail::suite_doi_dual(cfg, report);
  else if (name == "vn") detail::suite_vn(cfg, report);
  else throw input_error("unknown suite: " + name);

  std::stable_sort(report.cases.begin(), report.cases.end(),
                   [](const CaseRecord& a, const CaseRecord& b) {
                     return a.case_id < b.case_id;
                   });
  report.max_residual = 0.0;
  report.pass = true;
  for (const auto& rec : report.cases) {
    report.max_residual = std::max(report.max_residual, rec.residual);
    report.pass = report.pass && rec.pass;
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

inline json report_json(const SuiteReport& report, bool include_wall_time = true) {
  json cases = json::array();
  for (const auto& rec : report.cases)
    cases.push_back(json{{"case_id", rec.case_id},
                         {"dim", rec.dim},
                         {"degree", rec.degree},
                         {"inputs_digest", rec.inputs_digest},
                         {"residual", rec.residual},
                         {"tolerance", rec.tolerance},
                         {"pass", rec.pass}});
  json cfg{{"seed", report.config.seed},
           {"dims", {report.config.dim_lo, report.config.dim_hi}},
           {"degrees", {report.config.deg_lo, report.config.deg_hi}},
           {"cases", report.config.cases},
           {"tol", report.config.tol}};
  json out{{"schema", 1},
           {"suite", report.suite},
           {"config", std::move(cfg)},
           {"cases", std::move(cases)},
           {"max_residual", report.max_residual},
           {"pass", report.pass}};
  if (include_wall_time) out["wall_ms"] = report.wall_ms;
  return out;
}

inline void emit_csv(const SuiteReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw input_error("emit_csv: cannot open " + path.string());
  out << "case_id,dim,degree,residual,tolerance,pass\n";
  for (const auto& rec : report.cases) {
    std::ostringstream line;
    line << rec.case_id << ',' << rec.dim << ',' << rec.degree << ','
         << std::setprecision(17) << rec.residual << ',' << rec.tolerance << ','
         << (rec.pass ? "true" : "false");
    out << line.str() << '\n';
  }
  if (!out) throw input_error("emit_csv: write failed for " + path.string());
}

}  // namespace concalc
