// Shared scalar/matrix aliases and the error taxonomy used across concalc.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace concalc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Malformed or out-of-range inputs: shape mismatches, non-finite entries,
// bad parameters.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An operation's stated precondition on operator data does not hold
// (non-contraction, non-unitary beyond tolerance, non-Hermitian, ...).
class contract_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class not_psd_error : public contract_error {
public:
  using contract_error::contract_error;
};

// A user-supplied function produced a non-finite value where one was needed.
class evaluation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(const ComplexMatrix& m) { return m.allFinite(); }

inline void require_finite(const ComplexMatrix& m, const char* what) {
  if (!is_finite(m)) throw input_error(std::string(what) + ": non-finite entries");
}

inline void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw input_error(std::string(what) + ": matrix must be square");
}

inline ComplexMatrix identity(Eigen::Index d) {
  return ComplexMatrix::Identity(d, d);
}

}  // namespace concalc
