#include "paulian/linalg.hpp"

#include <cmath>

namespace paulian {

const char *errc_name(Errc c) {
  switch (c) {
  case Errc::invalid_input: return "InvalidInput";
  case Errc::dimension_mismatch: return "DimensionMismatch";
  case Errc::length_mismatch: return "LengthMismatch";
  case Errc::parse_error: return "ParseError";
  case Errc::validation: return "ValidationError";
  case Errc::io_error: return "IoError";
  case Errc::not_an_involution: return "NotAnInvolution";
  case Errc::not_self_adjoint: return "NotSelfAdjoint";
  case Errc::not_isometry: return "NotIsometry";
  case Errc::not_unitary: return "NotUnitary";
  case Errc::not_normal: return "NotNormal";
  case Errc::not_paulian: return "NotPaulian";
  case Errc::not_invariant: return "NotInvariant";
  case Errc::not_maximal_abelian: return "NotMaximalAbelian";
  case Errc::non_orthogonal_codewords: return "NonOrthogonalCodewords";
  case Errc::zero_projection: return "ZeroProjection";
  case Errc::not_correctable: return "NotCorrectable";
  case Errc::too_many_errors: return "TooManyErrors";
  case Errc::capacity_exceeded: return "CapacityExceeded";
  case Errc::insufficient_space: return "InsufficientSpace";
  case Errc::insufficient_spares: return "InsufficientSpares";
  case Errc::not_divisible: return "NotDivisible";
  case Errc::table_invalid: return "TableInvalid";
  case Errc::state_outside_domain: return "StateOutsideDomain";
  case Errc::uncorrectable_syndrome: return "UncorrectableSyndrome";
  case Errc::invalid_channel: return "InvalidChannel";
  case Errc::signature_collision: return "SignatureCollision";
  case Errc::scalar_operator: return "ScalarOperator";
  case Errc::cutoff_too_small: return "CutoffTooSmall";
  case Errc::certification_failure: return "CertificationFailure";
  }
  return "Error";
}

Subspace::Subspace(Matrix frame, double tol) : frame_(std::move(frame)) {
  require(frame_.rows() >= frame_.cols(), Errc::invalid_input,
          "subspace frame has more columns than ambient dimension");
  if (frame_.cols() > 0) {
    Matrix gram = frame_.adjoint() * frame_;
    require(approx_equal(gram, Matrix::Identity(frame_.cols(), frame_.cols()), tol),
            Errc::invalid_input, "subspace frame columns are not orthonormal");
  }
  require(frame_.allFinite(), Errc::invalid_input, "subspace frame has non-finite entries");
}

Subspace Subspace::full(Eigen::Index dim) {
  return Subspace(Matrix::Identity(dim, dim));
}

Subspace Subspace::zero(Eigen::Index dim) {
  return Subspace(Matrix(dim, 0));
}

bool Subspace::contains(const Vector &v, double tol) const {
  Vector residual = v - frame_ * (frame_.adjoint() * v);
  return max_abs(residual) <= tol * std::max(1.0, max_abs(v));
}

namespace {

// Modified Gram-Schmidt with a second orthogonalization pass.  Columns are
// consumed in order; a column whose residual norm falls below tol is dropped.
// `out` may be pre-seeded with columns that are kept as-is.
void mgs_append(Matrix &out, Eigen::Index &ncols, const Vector &v, double tol) {
  Vector r = v;
  for (int pass = 0; pass < 2; ++pass)
    if (ncols > 0) {
      auto q = out.leftCols(ncols);
      r -= q * (q.adjoint() * r);
    }
  double nrm = r.norm();
  if (nrm < tol)
    return;
  out.col(ncols++) = r / nrm;
}

} // namespace

Subspace orthonormal_basis(const std::vector<Vector> &vectors, double tol) {
  require(tol > 0, Errc::invalid_input, "tolerance must be positive");
  require(!vectors.empty(), Errc::invalid_input, "no vectors supplied");
  const Eigen::Index n = vectors.front().size();
  for (const Vector &v : vectors)
    require(v.size() == n, Errc::invalid_input, "ambient dimension mismatch among input vectors");
  Matrix out(n, std::min<Eigen::Index>(n, (Eigen::Index)vectors.size()));
  Eigen::Index ncols = 0;
  for (const Vector &v : vectors)
    if (ncols < n)
      mgs_append(out, ncols, v, tol);
  return Subspace(out.leftCols(ncols));
}

Subspace orthonormal_basis(const Matrix &columns, double tol) {
  std::vector<Vector> vs;
  vs.reserve(columns.cols());
  for (Eigen::Index j = 0; j < columns.cols(); ++j)
    vs.push_back(columns.col(j));
  return orthonormal_basis(vs, tol);
}

Matrix complement_basis(const Subspace &s, double tol) {
  const Eigen::Index n = s.ambient_dim();
  Matrix out(n, n);
  Eigen::Index ncols = 0;
  out.leftCols(s.dim()) = s.frame();
  ncols = s.dim();
  for (Eigen::Index j = 0; j < n && ncols < n; ++j)
    mgs_append(out, ncols, Vector::Unit(n, j), tol);
  require(ncols == n, Errc::certification_failure, "complement completion failed");
  return out.rightCols(n - s.dim());
}

std::pair<Subspace, Subspace> involution_eigensplit(const Matrix &P, double tol) {
  require(P.rows() == P.cols(), Errc::invalid_input, "eigensplit needs a square matrix");
  const Eigen::Index n = P.rows();
  require(is_self_adjoint(P, tol), Errc::not_self_adjoint, "operator is not self-adjoint");
  require(approx_equal(P * P, Matrix::Identity(n, n), tol), Errc::not_an_involution,
          "operator does not square to the identity");
  // Rank tolerance is looser than the operator tolerance: the projector
  // columns of a tol-accurate involution are clean to ~tol, and genuine
  // directions have norm >= 1/sqrt(n).
  const double rank_tol = std::sqrt(tol);
  Subspace plus = orthonormal_basis(Matrix((Matrix::Identity(n, n) + P) / 2.0), rank_tol);
  Subspace minus = orthonormal_basis(Matrix((Matrix::Identity(n, n) - P) / 2.0), rank_tol);
  require(plus.dim() + minus.dim() == n, Errc::certification_failure,
          "eigenspace dimensions do not sum to the ambient dimension");
  return {plus, minus};
}

Matrix unitary_extend(const Matrix &partial, double tol) {
  require(partial.rows() == partial.cols(), Errc::invalid_input,
          "partial isometry must be a square matrix");
  const Eigen::Index n = partial.rows();
  Matrix ata = partial.adjoint() * partial;
  require(is_self_adjoint(ata, tol) && approx_equal(ata * ata, ata, tol), Errc::not_isometry,
          "operator is not an isometry on its domain");
  const double rank_tol = std::sqrt(tol);
  Subspace domain = orthonormal_basis(ata, rank_tol);
  Subspace image = orthonormal_basis(partial, rank_tol);
  require(domain.dim() == image.dim(), Errc::dimension_mismatch,
          "image dimension differs from domain dimension");
  Matrix dcomp = complement_basis(domain, rank_tol);
  Matrix icomp = complement_basis(image, rank_tol);
  Matrix u = partial * domain.projector();
  u += icomp * dcomp.adjoint();
  require(is_unitary(u, std::sqrt(tol)), Errc::certification_failure,
          "extension is not unitary");
  return u;
}

bool is_self_adjoint(const Matrix &m, double tol) {
  return m.rows() == m.cols() && approx_equal(m, m.adjoint(), tol);
}

bool is_unitary(const Matrix &m, double tol) {
  if (m.rows() != m.cols())
    return false;
  return approx_equal(m.adjoint() * m, Matrix::Identity(m.cols(), m.cols()), tol);
}

Vector fix_global_phase(Vector v, double tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > tol) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      return v;
    }
  }
  return v;
}

double phase_aligned_distance(const Vector &a, const Vector &b) {
  Complex overlap = a.dot(b);
  Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1, 0);
  return max_abs(Vector(a * phase - b));
}

} // namespace paulian
