// Deterministic case generation.  All randomness flows through a fixed
// Box-Muller transform over mt19937_64 uniforms so the same (seed, dim,
// mode) always reproduces the same operator on any platform.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

#include "concalc/core.hpp"
#include "concalc/funcalc.hpp"
#include "concalc/matcore.hpp"

namespace concalc {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

}  // namespace detail

class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(detail::splitmix64(seed)) {}

  // Uniform in (0, 1].
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) / std::numbers::sqrt2;
  }

  std::uint64_t bits() { return engine_(); }

private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

enum class ContractionMode { strict, boundary, unitary };

inline std::string_view mode_name(ContractionMode m) {
  switch (m) {
    case ContractionMode::strict: return "strict";
    case ContractionMode::boundary: return "boundary";
    case ContractionMode::unitary: return "unitary";
  }
  return "?";
}

inline ComplexMatrix random_gaussian_matrix(std::uint64_t seed, Eigen::Index dim) {
  SeededRng rng(detail::mix(seed, 0x6d61740aULL + static_cast<std::uint64_t>(dim)));
  ComplexMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return g;
}

inline ComplexMatrix random_contraction(std::uint64_t seed, Eigen::Index dim,
                                        ContractionMode mode) {
  if (dim < 1) throw input_error("random_contraction: dim must be >= 1");
  const std::uint64_t tag =
      mode == ContractionMode::strict ? 1 : mode == ContractionMode::boundary ? 2 : 3;
  const ComplexMatrix g = random_gaussian_matrix(detail::mix(seed, tag), dim);
  switch (mode) {
    case ContractionMode::strict: {
      const double top = operator_norm(g);
      return g * (0.9 / std::max(1.0, top));
    }
    case ContractionMode::boundary: {
      const double top = operator_norm(g);
      return top > 0.0 ? ComplexMatrix(g / top) : identity(dim);
    }
    case ContractionMode::unitary: {
      Eigen::HouseholderQR<ComplexMatrix> qr(g);
      return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    }
  }
  throw input_error("random_contraction: unknown mode");
}

// Random polynomial of exactly the requested degree.
inline AnalyticFunction random_polynomial(std::uint64_t seed, int degree) {
  if (degree < 0) throw input_error("random_polynomial: degree must be >= 0");
  SeededRng rng(detail::mix(seed, 0x706f6c79ULL));
  AnalyticFunction phi;
  phi.coefficients.resize(static_cast<std::size_t>(degree) + 1);
  for (auto& c : phi.coefficients) c = rng.complex_normal();
  while (std::abs(phi.coefficients.back()) < 1e-3)
    phi.coefficients.back() = rng.complex_normal();
  return phi;
}

}  // namespace concalc
