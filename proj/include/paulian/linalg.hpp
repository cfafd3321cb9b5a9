#ifndef PAULIAN_LINALG_HPP
#define PAULIAN_LINALG_HPP

#include <utility>
#include <vector>

#include "paulian/errors.hpp"
#include "paulian/types.hpp"

namespace paulian {

// A subspace of C^n held as a frame of orthonormal columns.
class Subspace {
public:
  Subspace() = default;

  // frame: ambient_dim x r with orthonormal columns (checked within tol).
  explicit Subspace(Matrix frame, double tol = kDefaultTol);

  static Subspace full(Eigen::Index dim);
  static Subspace zero(Eigen::Index dim);

  Eigen::Index ambient_dim() const { return frame_.rows(); }
  Eigen::Index dim() const { return frame_.cols(); }
  const Matrix &frame() const { return frame_; }

  // frame . frame^dagger; idempotent and self-adjoint.
  Matrix projector() const { return frame_ * frame_.adjoint(); }

  bool contains(const Vector &v, double tol = kDefaultTol) const;

private:
  Matrix frame_;
};

inline Matrix projector(const Subspace &s) { return s.projector(); }

// Span of the inputs, rank-revealed by modified Gram-Schmidt in input order;
// residuals of norm < tol are dropped.
Subspace orthonormal_basis(const std::vector<Vector> &vectors, double tol = kDefaultTol);
Subspace orthonormal_basis(const Matrix &columns, double tol = kDefaultTol);

// Orthonormal basis of the orthogonal complement of s, built from standard
// basis vectors in ascending index.
Matrix complement_basis(const Subspace &s, double tol = kDefaultTol);

// Eigenspaces of a self-adjoint involution, via rank-revealing
// orthonormalization of the columns of (I +- P)/2 (no general eigensolver,
// so there is no eigenvalue-ordering ambiguity).
std::pair<Subspace, Subspace> involution_eigensplit(const Matrix &P, double tol = kDefaultTol);

// Extend a partial isometry A (A^dagger A an orthogonal projector; domain =
// range of A^dagger) to a full unitary.  Completion is deterministic: the
// orthonormal complements of domain and image are enumerated by ascending
// standard-basis index and matched in order.
Matrix unitary_extend(const Matrix &partial, double tol = kDefaultTol);

// Conveniences shared across modules.
bool is_self_adjoint(const Matrix &m, double tol = kDefaultTol);
bool is_unitary(const Matrix &m, double tol = kDefaultTol);

// Deterministic global-phase fix: scales a unit vector so its first entry of
// magnitude > tol is real positive.
Vector fix_global_phase(Vector v, double tol = kDefaultTol);

// |<a|b>| after optimal phase alignment equals 1 - distance/2 ... we just
// need the distance up to global phase.
double phase_aligned_distance(const Vector &a, const Vector &b);

} // namespace paulian

#endif
