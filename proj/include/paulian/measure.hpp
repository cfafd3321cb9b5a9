#ifndef PAULIAN_MEASURE_HPP
#define PAULIAN_MEASURE_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "paulian/synthesis.hpp"

namespace paulian {

// Ancilla coupling for measuring a self-adjoint Paulian observable; the
// ancilla qubit is the least significant tensor factor, |+1>_A = e0.
struct AncillaCircuit {
  Eigen::Index system_dim = 0;
  Matrix coupling; // 2N x 2N unitary
  Vector ancilla_init;
  enum class Readout { z_after_gcnot, x_after_cz } readout = Readout::z_after_gcnot;
};

// GCNOT = Pi_- (x) X_A + Pi_+ (x) I_A, completed by identity off the domain.
AncillaCircuit gcnot_build(const Matrix &P, const Subspace &domain, double tol = kDefaultTol);

// Controlled stabilizer P (x) |-1><-1| + I (x) |1><1|; Hadamard conjugation
// on the ancilla turns it into the GCNOT.
AncillaCircuit controlled_stabilizer(const Matrix &P, const Subspace &domain,
                                     double tol = kDefaultTol);

struct MeasureOutcome {
  int outcome = 0; // +1 or -1
  Vector post_state;
  double prob_plus = 0.0;
};

// Full ancilla protocol: init |1>_A, couple with the GCNOT, Born-sample the
// ancilla Z readout, return the renormalized system component.
MeasureOutcome measure_stabilizer(const Vector &state, const Matrix &P, const Subspace &domain,
                                  uint64_t rng_seed, double tol = kDefaultTol);
MeasureOutcome measure_stabilizer(const Vector &state, const Matrix &P, const Subspace &domain,
                                  std::mt19937_64 &rng, double tol = kDefaultTol);

// Sequential generator measurement; deterministic branches (projector norm
// > 1 - tol) are taken analytically.  Distribution equals measuring each
// Z_i^S projectively, which equals the ancilla protocol.
Signature extract_syndrome(const Vector &state, const PaulianGroup &group, uint64_t rng_seed,
                           double tol = kDefaultTol);
Signature extract_syndrome(Vector &state /*in-out*/, const PaulianGroup &group,
                           std::mt19937_64 &rng, double tol = kDefaultTol);

// Recovery isometries (F_(t) Pi_C polar isometry, adjoint, deterministically
// completed) cached per syndrome tuple.
class RecoveryPlan {
public:
  RecoveryPlan(const SyndromeTable &table, const OrthonormalFamily &fam,
               const QuantumCode &code, double tol = kDefaultTol);
  // Throws UncorrectableSyndrome for excess tuples.
  const Matrix &recovery(const Signature &syndrome) const;

private:
  std::vector<std::optional<Matrix>> ops_;
  int m_ = 0;
};

Vector recover(const Vector &state, const Signature &syndrome, const SyndromeTable &table,
               const OrthonormalFamily &fam, const QuantumCode &code, double tol = kDefaultTol);

struct ChannelEntry {
  Matrix op;
  double weight = 0.0;
  std::string name;
};

struct TrialRecord {
  std::size_t trial_index = 0;
  std::size_t injected_error = 0;
  Signature syndrome;
  double recovered_fidelity = 0.0;
  bool success = false;
};

struct MonteCarloStats {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t sampling_failures = 0;     // zero-amplitude branches of non-unitary errors
  std::size_t uncorrectable_syndromes = 0;
  double success_rate = 0.0;
  double mean_fidelity = 0.0;
  std::map<uint32_t, std::size_t> per_syndrome_counts;
  std::vector<TrialRecord> failures; // every non-success trial, for reports
};

// Round-trip experiment: per trial, draw a logical state, sample an error,
// apply it (renormalizing; zero-norm branches count as sampling failures),
// extract the syndrome, recover, and record the fidelity.  Each trial's
// randomness derives only from (seed, trial_index).
MonteCarloStats monte_carlo(const QuantumCode &code, const PaulianGroup &group,
                            const SyndromeTable &table, const OrthonormalFamily &fam,
                            const std::vector<ChannelEntry> &channel, std::size_t trials,
                            uint64_t seed, double tol = kDefaultTol);

} // namespace paulian

#endif
