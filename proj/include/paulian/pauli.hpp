#ifndef PAULIAN_PAULI_HPP
#define PAULIAN_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "paulian/linalg.hpp"
#include "paulian/types.hpp"

namespace paulian {

// An n-qubit Pauli operator i^phase * prod_j X^{x_j} Z^{z_j} with Y = iXZ.
// Site 1 is the leftmost letter of the string form and the most significant
// bit of basis-state indices.  Bit j of xbits/zbits (from the top) is site
// j+1, i.e. site s <-> bit (n - s).
struct PauliOp {
  int n = 0;
  uint8_t phase = 0; // exponent k in i^k
  uint64_t xbits = 0;
  uint64_t zbits = 0;

  static PauliOp identity(int n) { return PauliOp{n, 0, 0, 0}; }
  bool operator==(const PauliOp &) const = default;
};

struct PauliGroup {
  int n = 0;
  std::vector<PauliOp> generators;
};

// A tuple of +-1, used both for error syndromes (t) and for simultaneous
// eigenvalues of word stabilizers.
struct Signature {
  std::vector<int8_t> comps;

  Signature() = default;
  explicit Signature(std::vector<int8_t> c) : comps(std::move(c)) {}
  std::size_t size() const { return comps.size(); }
  int8_t operator[](std::size_t i) const { return comps[i]; }
  bool operator==(const Signature &) const = default;
  auto operator<=>(const Signature &) const = default;
};

// Encoding between signatures and integer indices: component 1 is the most
// significant bit, +1 <-> 0 and -1 <-> 1.
uint32_t signature_index(const Signature &s);
Signature index_signature(uint32_t v, int m);
Signature all_plus(int m);
std::string signature_str(const Signature &s);

Signature signature_product(const Signature &a, const Signature &b);

// Grammar: optional prefix in {+, -, +i, -i}, then letters {I,X,Y,Z}.
PauliOp parse_pauli(const std::string &text);
std::string format_pauli(const PauliOp &p);

PauliOp mul(const PauliOp &p, const PauliOp &q);
int weight(const PauliOp &p);
bool commutes(const PauliOp &p, const PauliOp &q);

// Component j: +1 if p commutes with gens[j], -1 if it anticommutes.
Signature comm_signature(const PauliOp &p, const std::vector<PauliOp> &gens);

// Dense realization on (C^2)^{tensor n}; |+1> = e0 per site.
Matrix pauli_matrix(const PauliOp &p);
Vector apply_pauli(const PauliOp &p, const Vector &v);

// Recognize a dense matrix as i^k X^x Z^z; returns nothing if it is not a
// Pauli operator within tol.
std::optional<PauliOp> pauli_from_matrix(const Matrix &m, int n, double tol = kDefaultTol);

struct SubgroupReport {
  bool contains_minus_i = false;
  bool linearly_independent = false;
  bool abelian = false;
  uint64_t phaseless_order = 0;
};

// -I membership decided over GF(2) with exact phase tracking (no dense
// matrices); reports the equivalences of the commutativity lemma and the
// order of the phaseless quotient group.
SubgroupReport subgroup_analysis(const std::vector<PauliOp> &gens);

// Unique simultaneous +1-eigenvector of a maximal linearly independent
// abelian group given by n commuting generators.  Deterministic: projectors
// (I+g)/2 applied to standard basis seeds in ascending order until the image
// norm reaches 1e-6; global phase fixed by the first nonzero amplitude.
Vector stabilized_state(const std::vector<PauliOp> &gens);

} // namespace paulian

#endif
