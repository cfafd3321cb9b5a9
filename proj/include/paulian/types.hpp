#ifndef PAULIAN_TYPES_HPP
#define PAULIAN_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace paulian {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default tolerance on the max-entry norm; operators entering the pipelines
// are expected to have operator norm <= 10 (family members are normalized).
inline constexpr double kDefaultTol = 1e-9;

// Max absolute entry (the norm all tolerances in this library refer to).
inline double max_abs(const Matrix &m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vector &v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

inline bool approx_equal(const Matrix &a, const Matrix &b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  return max_abs(a - b) <= tol;
}

} // namespace paulian

#endif
