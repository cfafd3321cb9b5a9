#ifndef PAULIAN_SYNTHESIS_HPP
#define PAULIAN_SYNTHESIS_HPP

#include <optional>
#include <vector>

#include "paulian/code.hpp"
#include "paulian/pauli.hpp"

namespace paulian {

struct CapacityPlan {
  std::size_t family_size = 0;
  int m = 0;
  enum class Mode { floor_log, ceil_log } mode = Mode::floor_log;
  bool feasible_full = false;                // 2^ceil(log2 |F|) k <= dim H
  std::optional<long long> bound_fcos;       // sum_j C(n,j) 3^j when n, d known
};

// Generator-count arithmetic.  dim_ambient = nullopt means the ambient space
// is treated as infinite-dimensional (truncated bosonic inputs).
CapacityPlan capacity_plan(std::size_t family_size, std::optional<Eigen::Index> dim_ambient,
                           Eigen::Index dim_code, std::optional<int> n = std::nullopt,
                           std::optional<int> d = std::nullopt);

// Injective syndrome map: family index -> tuple.  Identity (index 0) gets
// (1,...,1); the rest follow binary counting (+1 <-> 0, component 1 most
// significant), skipping the all-plus tuple.
std::vector<Signature> assign_syndromes(std::size_t family_size, int m);

// Same shape, but with an explicit assignment (validated: right length,
// injective, identity -> all-plus).
std::vector<Signature> assign_syndromes(std::size_t family_size, int m,
                                        const std::vector<Signature> &explicit_map);

struct SyndromeTable {
  int m = 0;
  Eigen::Index ambient_dim = 0;
  Eigen::Index space_dim = 0;                 // k', equal for all 2^m spaces
  std::vector<Subspace> spaces;               // indexed by signature_index
  std::vector<std::optional<std::size_t>> error_index; // family member per tuple
  std::vector<Signature> syndrome_of_member;  // family index -> tuple

  const Subspace &space(const Signature &t) const { return spaces[signature_index(t)]; }
  std::optional<std::size_t> assigned_error(const Signature &t) const {
    return error_index[signature_index(t)];
  }
};

enum class TableMode { minimal, extended_full };

struct TableOptions {
  double tol = kDefaultTol;
  // Declared commuting +-1 observables (e.g. bosonic parities), one per
  // generator slot.  When present, padding for each syndrome space is drawn
  // ascending-basis *within* the tuple's joint eigensector so the derived
  // generators restrict the declared observables.
  std::vector<Matrix> sector_ops;
};

// Syndrome spaces per the table mode.  minimal: assigned tuples carry
// F_(t) H_C and excess tuples get dim(H_C) directions from the complement of
// the family span; extended_full: every space is padded to dim_ambient/2^m.
SyndromeTable build_syndrome_table(const QuantumCode &code, const OrthonormalFamily &fam,
                                   const std::vector<Signature> &syndrome_map, TableMode mode,
                                   const TableOptions &options = {});

void validate_syndrome_table(const QuantumCode &code, const OrthonormalFamily &fam,
                             const SyndromeTable &table, double tol = kDefaultTol);

// The unitary H' -> H_ref (x) (C^2)^m of the syndrome-space factorization,
// returned as a (k' 2^m) x N isometry whose rows are H_B coordinates; flat
// index = ref * 2^m + signature_index(t).  V_(t) is the adjoint of the
// isometry F_(t) Pi_C on assigned images and matches padding directions in
// order, so V_(I) is the identity on the reference space H_(I).
Matrix build_encoder(const SyndromeTable &table, const QuantumCode &code,
                     const OrthonormalFamily &fam, double tol = kDefaultTol);

struct PaulianReport {
  enum class Kind { involution, counterinvolution, neither } kind = Kind::neither;
  bool unitary = false;
  Eigen::Index dim_plus = 0;
  Eigen::Index dim_minus = 0;
  bool isomorphic = false; // d+ == d- or a single eigenspace
  bool paulian = false;
  bool truncation_proxy = false; // bosonic result reported on a finite truncation
};

// Checks P restricted to the domain: (counter)involution, unitarity, and
// eigenspace dimensions.
PaulianReport verify_paulian(const Matrix &P, const Subspace &domain, double tol = kDefaultTol);

struct PaulianGroup {
  Subspace domain; // H'
  std::vector<Matrix> z_gens;
  std::vector<Matrix> x_gens;
  Matrix encoder; // the isometry of build_encoder
  std::vector<PaulianReport> certification;
  double cross_check_deviation = 0.0; // conjugation form vs projector form
  // per-generator +-1 eigenspace frames on H', cached for measurements
  std::vector<Subspace> plus_spaces;
  std::vector<Subspace> minus_spaces;
};

// Generators via conjugation Z_i^S = U^-1 Z_i U; the signed-projector-sum
// construction over syndrome spaces must agree within tol.
PaulianGroup derive_generators(const Matrix &encoder, const SyndromeTable &table,
                               double tol = kDefaultTol);

} // namespace paulian

#endif
