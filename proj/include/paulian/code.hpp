#ifndef PAULIAN_CODE_HPP
#define PAULIAN_CODE_HPP

#include <optional>
#include <string>
#include <vector>

#include "paulian/linalg.hpp"

namespace paulian {

// Ambient space descriptor: a register of qubits, a truncated Fock space, or
// a plain finite-dimensional space.
struct Ambient {
  enum class Kind { qubits, bosonic, generic };
  Kind kind = Kind::generic;
  int qubits = 0; // Kind::qubits
  int modes = 0;  // Kind::bosonic
  int cutoff = 0; // Kind::bosonic, levels 0..cutoff per mode
  Eigen::Index dim = 0;

  static Ambient make_qubits(int n);
  static Ambient make_bosonic(int modes, int cutoff);
  static Ambient make_generic(Eigen::Index dim);
  bool infinite_proxy() const { return kind == Kind::bosonic; }
};

struct QuantumCode {
  Ambient ambient;
  Subspace code_frame; // the code space H_C
  std::vector<Matrix> declared_errors;
  std::vector<std::string> error_names;
  std::optional<int> distance; // user-declared metadata, never computed
};

// Maximal orthonormal family F spanning the reachable space; members[0] is
// always the identity.  provenance[i] lists the declared-error indices the
// member represents (degenerate errors merge).
struct OrthonormalFamily {
  std::vector<Matrix> members;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> provenance;
};

struct KlResult {
  Matrix alpha; // Hermitian by construction
  bool correctable = false;
  double max_deviation = 0.0; // worst |Pi E^t F Pi - alpha Pi| entry
};

// Knill-Laflamme test: correctable iff Pi_C E^dagger F Pi_C = alpha_{EF} Pi_C
// for all pairs.
KlResult kl_matrix(const QuantumCode &code, const std::vector<Matrix> &errors,
                   double tol = kDefaultTol);

enum class DetectClass { orthogonal_image, identity_on_code, oblique, undetectable };

struct DetectReport {
  DetectClass cls;
  double magnitude = 0.0; // |a| where Pi E Pi = a Pi
  double theta = 0.0;     // arg(a) for identity_on_code
};

// Classification of a unitary error by Pi_C E Pi_C = a Pi_C.
DetectReport detect_classify(const QuantumCode &code, const Matrix &E, double tol = kDefaultTol);

// Gram-Schmidt in the metric (E,F) -> tr(Pi E^dagger F Pi)/dim(H_C), declared
// order, identity first; errors acting identically on the code space merge
// into the earliest representative.
OrthonormalFamily orthonormalize_errors(const QuantumCode &code, double tol = kDefaultTol);

// The orthogonal direct sum of member images of the code space.
Subspace error_span_space(const QuantumCode &code, const OrthonormalFamily &fam,
                          double tol = kDefaultTol);

} // namespace paulian

#endif
