// JSON interchange.  Matrices use row-major {"rows", "cols", "data"} with
// complex entries encoded as [re, im]; readers reject shape or length
// mismatches and non-finite values.
#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "concalc/besov.hpp"
#include "concalc/calculus.hpp"
#include "concalc/core.hpp"
#include "concalc/dilation.hpp"
#include "concalc/divdiff.hpp"
#include "concalc/funcalc.hpp"
#include "concalc/semispectral.hpp"

namespace concalc {

using json = nlohmann::json;

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw input_error("complex entry must be a [re, im] pair");
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw input_error("complex entry is not finite");
  return z;
}

inline json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data.push_back(complex_to_json(m(i, j)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline ComplexMatrix matrix_from_json(const json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw input_error("matrix JSON needs rows, cols, data");
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  if (rows < 1 || cols < 1) throw input_error("matrix JSON: dimensions must be positive");
  const json& data = j.at("data");
  if (!data.is_array() ||
      static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw input_error("matrix JSON: data length does not match rows*cols");
  ComplexMatrix m(rows, cols);
  Eigen::Index idx = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j2 = 0; j2 < cols; ++j2)
      m(i, j2) = complex_from_json(data[static_cast<std::size_t>(idx++)]);
  return m;
}

inline json dilation_to_json(const PowerDilation& d) {
  json j = matrix_to_json(d.unitary);
  j["base_dim"] = d.base_dim;
  j["degree"] = d.degree;
  return j;
}

inline PowerDilation dilation_from_json(const json& j) {
  PowerDilation d{matrix_from_json(j), j.at("base_dim").get<Eigen::Index>(),
                  j.at("degree").get<int>()};
  if (d.degree < 1 || d.base_dim < 1 ||
      d.unitary.rows() != d.base_dim * (d.degree + 1) ||
      d.unitary.rows() != d.unitary.cols())
    throw input_error("dilation JSON: inconsistent shape");
  return d;
}

inline json measure_to_json(const AtomicSemiSpectralMeasure& e) {
  json atoms = json::array();
  for (const auto& atom : e.atoms)
    atoms.push_back(json{{"point", complex_to_json(atom.point)},
                         {"weight", matrix_to_json(atom.weight)}});
  return json{{"atoms", std::move(atoms)}, {"degree", e.degree}};
}

inline AtomicSemiSpectralMeasure measure_from_json(const json& j) {
  AtomicSemiSpectralMeasure e;
  e.degree = j.at("degree").get<int>();
  for (const json& aj : j.at("atoms")) {
    AtomicSemiSpectralMeasure::Atom atom;
    atom.point = complex_from_json(aj.at("point"));
    atom.weight = matrix_from_json(aj.at("weight"));
    e.atoms.push_back(std::move(atom));
  }
  if (e.atoms.empty()) throw input_error("measure JSON: no atoms");
  e.dim = e.atoms.front().weight.rows();
  for (const auto& atom : e.atoms)
    if (atom.weight.rows() != e.dim || atom.weight.cols() != e.dim)
      throw input_error("measure JSON: atom dimensions differ");
  return e;
}

inline json function_to_json(const AnalyticFunction& phi) {
  json coeffs = json::array();
  for (Complex c : phi.coefficients) coeffs.push_back(complex_to_json(c));
  return json{{"coeffs", std::move(coeffs)}, {"label", phi.label}};
}

inline AnalyticFunction function_from_json(const json& j) {
  AnalyticFunction phi;
  for (const json& cj : j.at("coeffs")) phi.coefficients.push_back(complex_from_json(cj));
  phi.label = j.value("label", std::string());
  return phi;
}

inline json expansion_to_json(const TensorExpansion& te) {
  json terms = json::array();
  for (const auto& term : te.terms)
    terms.push_back(json{{"coeff", complex_to_json(term.coeff)}, {"exps", term.exps}});
  return json{{"order", te.order}, {"terms", std::move(terms)}};
}

inline TensorExpansion expansion_from_json(const json& j) {
  TensorExpansion te;
  te.order = j.at("order").get<int>();
  if (te.order < 0) throw input_error("expansion JSON: negative order");
  for (const json& tj : j.at("terms")) {
    TensorExpansion::Term term;
    term.coeff = complex_from_json(tj.at("coeff"));
    term.exps = tj.at("exps").get<std::vector<int>>();
    if (static_cast<int>(term.exps.size()) != te.order + 1)
      throw input_error("expansion JSON: exponent tuple length mismatch");
    for (int e : term.exps)
      if (e < 0) throw input_error("expansion JSON: negative exponent");
    te.terms.push_back(std::move(term));
  }
  return te;
}

inline json trigpoly_to_json(const TrigPolynomial& phi) {
  json coeffs = json::array();
  for (Complex c : phi.coeffs) coeffs.push_back(complex_to_json(c));
  return json{{"min_k", phi.min_k}, {"coeffs", std::move(coeffs)}};
}

inline TrigPolynomial trigpoly_from_json(const json& j) {
  TrigPolynomial phi;
  phi.min_k = j.at("min_k").get<int>();
  for (const json& cj : j.at("coeffs")) phi.coeffs.push_back(complex_from_json(cj));
  if (phi.coeffs.empty()) throw input_error("trig polynomial JSON: empty coefficients");
  return phi;
}

inline json derivative_report_to_json(const DerivativeReport& r) {
  return json{{"order", r.order},
              {"formula_value", matrix_to_json(r.formula_value)},
              {"oracle_value", matrix_to_json(r.oracle_value)},
              {"residual", r.residual},
              {"norm_used", r.norm_used == DerivativeReport::Norm::operator_norm
                                ? "operator"
                                : "hilbert_schmidt"}};
}

}  // namespace concalc
