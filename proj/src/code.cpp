#include "paulian/code.hpp"

#include <cmath>

#include "paulian/errors.hpp"

namespace paulian {

Ambient Ambient::make_qubits(int n) {
  require(n >= 1 && n <= 20, Errc::invalid_input, "qubit count out of range");
  Ambient a;
  a.kind = Kind::qubits;
  a.qubits = n;
  a.dim = Eigen::Index(1) << n;
  return a;
}

Ambient Ambient::make_bosonic(int modes, int cutoff) {
  require(modes >= 1 && cutoff >= 1, Errc::invalid_input, "bad bosonic descriptor");
  Ambient a;
  a.kind = Kind::bosonic;
  a.modes = modes;
  a.cutoff = cutoff;
  a.dim = 1;
  for (int i = 0; i < modes; ++i) {
    a.dim *= cutoff + 1;
    require(a.dim <= (Eigen::Index(1) << 22), Errc::invalid_input, "bosonic space too large");
  }
  return a;
}

Ambient Ambient::make_generic(Eigen::Index dim) {
  require(dim >= 1, Errc::invalid_input, "dimension must be positive");
  Ambient a;
  a.kind = Kind::generic;
  a.dim = dim;
  return a;
}

namespace {

void check_error_shape(const QuantumCode &code, const Matrix &e) {
  require(e.rows() == code.ambient.dim && e.cols() == code.ambient.dim,
          Errc::dimension_mismatch, "error operator does not act on the ambient space");
}

} // namespace

KlResult kl_matrix(const QuantumCode &code, const std::vector<Matrix> &errors, double tol) {
  const Matrix &frame = code.code_frame.frame();
  const Eigen::Index k = frame.cols();
  require(k >= 1, Errc::invalid_input, "code space is trivial");
  for (const Matrix &e : errors)
    check_error_shape(code, e);

  // images of the code space under each error
  std::vector<Matrix> images;
  images.reserve(errors.size());
  for (const Matrix &e : errors)
    images.push_back(e * frame);

  KlResult res;
  res.alpha = Matrix::Zero(errors.size(), errors.size());
  res.correctable = true;
  const Matrix id = Matrix::Identity(k, k);
  for (std::size_t i = 0; i < errors.size(); ++i) {
    for (std::size_t j = 0; j < errors.size(); ++j) {
      Matrix block = images[i].adjoint() * images[j]; // frame^t E^t F frame
      Complex a = block.trace() / double(k);
      double dev = max_abs(Matrix(block - a * id));
      res.max_deviation = std::max(res.max_deviation, dev);
      if (dev > tol)
        res.correctable = false;
      res.alpha(i, j) = a;
    }
  }
  return res;
}

DetectReport detect_classify(const QuantumCode &code, const Matrix &E, double tol) {
  check_error_shape(code, E);
  require(is_unitary(E, tol), Errc::not_unitary, "detect_classify needs a unitary operator");
  const Matrix &frame = code.code_frame.frame();
  const Eigen::Index k = frame.cols();
  Matrix block = frame.adjoint() * E * frame;
  Complex a = block.trace() / double(k);
  DetectReport rep;
  rep.magnitude = std::abs(a);
  rep.theta = std::arg(a);
  bool proportional = max_abs(Matrix(block - a * Matrix::Identity(k, k))) <= tol;
  if (!proportional) {
    rep.cls = DetectClass::undetectable;
    rep.theta = 0.0;
    return rep;
  }
  if (rep.magnitude <= tol) {
    rep.cls = DetectClass::orthogonal_image;
    rep.theta = 0.0;
  } else if (std::abs(rep.magnitude - 1.0) <= tol) {
    rep.cls = DetectClass::identity_on_code;
  } else {
    rep.cls = DetectClass::oblique;
    rep.theta = 0.0;
  }
  return rep;
}

OrthonormalFamily orthonormalize_errors(const QuantumCode &code, double tol) {
  const Matrix &frame = code.code_frame.frame();
  const Eigen::Index n = code.ambient.dim;
  const Eigen::Index k = frame.cols();
  const double kd = double(k);

  // The identity is always part of the family (the paper's F has I in it),
  // so it joins the correctability check even when not declared.
  std::vector<Matrix> errs;
  errs.reserve(code.declared_errors.size() + 1);
  errs.push_back(Matrix::Identity(n, n));
  for (const Matrix &e : code.declared_errors)
    errs.push_back(e);
  KlResult kl = kl_matrix(code, errs, tol);
  require(kl.correctable, Errc::not_correctable,
          "declared errors (with identity adjoined) fail the Knill-Laflamme condition");

  OrthonormalFamily fam;
  fam.members.push_back(Matrix::Identity(n, n));
  fam.names.push_back("I");
  fam.provenance.push_back({});

  // Image blocks of members on the code space; with the KL condition
  // verified, every cross block is proportional to I_k, so scalar
  // Gram-Schmidt in the trace metric realizes the blockwise condition.
  std::vector<Matrix> member_images{frame};

  const double merge_tol = tol * kd;
  for (std::size_t ei = 0; ei < code.declared_errors.size(); ++ei) {
    Matrix img = code.declared_errors[ei] * frame;
    Matrix op = code.declared_errors[ei];
    std::size_t best = 0;
    double best_overlap = -1.0;
    for (std::size_t mj = 0; mj < fam.members.size(); ++mj) {
      Complex c = (member_images[mj].adjoint() * img).trace() / kd;
      img -= c * member_images[mj];
      op -= c * fam.members[mj];
      if (std::abs(c) > best_overlap) {
        best_overlap = std::abs(c);
        best = mj;
      }
    }
    double residual = std::sqrt(std::abs((img.adjoint() * img).trace().real()) / kd);
    if (residual < merge_tol) {
      fam.provenance[best].push_back(ei);
      continue;
    }
    fam.members.push_back(op / residual);
    fam.names.push_back(ei < code.error_names.size() ? code.error_names[ei]
                                                     : "E" + std::to_string(ei));
    fam.provenance.push_back({ei});
    member_images.push_back(img / residual);
  }
  return fam;
}

Subspace error_span_space(const QuantumCode &code, const OrthonormalFamily &fam, double tol) {
  const Matrix &frame = code.code_frame.frame();
  const Eigen::Index k = frame.cols();
  Matrix cols(code.ambient.dim, Eigen::Index(fam.members.size()) * k);
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    cols.middleCols(Eigen::Index(i) * k, k) = fam.members[i] * frame;
  Subspace span = orthonormal_basis(cols, std::sqrt(tol));
  require(span.dim() == cols.cols(), Errc::certification_failure,
          "family images failed to span an orthogonal direct sum");
  return span;
}

} // namespace paulian
