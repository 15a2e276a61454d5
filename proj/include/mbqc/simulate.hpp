#pragma once

#include <cstdint>
#include <map>

#include "mbqc/angle.hpp"
#include "mbqc/matrix.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

// Measurement results per measured qubit. 0 collapses onto |+_a>, 1 onto
// |-_a>; qubits missing from the map default to 0.
using BranchOutcome = std::map<QubitId, int>;

// Runs one measurement branch. Projectors <+-_a| are applied without
// renormalization, so the result carries the branch weight. The returned
// state holds the output qubits in declared output order.
StateVector run_branch(const Pattern& p, const StateVector& input,
                       const BranchOutcome& outcome);

// The linear map the branch applies to the input space, column by column.
// Requires equally many inputs and outputs.
Matrix extract_map(const Pattern& p, const BranchOutcome& outcome);

struct BranchReport {
  BranchOutcome outcome;
  Matrix map;        // raw branch map, weight included
  double norm = 0.0; // |map|_F / 2^{|inputs|/2}; 2^{-m/2} for uniform branches
  Angle phase;       // phase relative to the reference branch
  double deviation = 0.0;  // gp_distance to the reference branch map
};

struct VerifyOptions {
  enum class Strategy { AllBranches, Random };
  Strategy strategy = Strategy::AllBranches;
  std::size_t samples = 256;  // Random only
  std::uint64_t seed = 0;
  double tol = 1e-9;
  // AllBranches walks 2^m branches; refuse beyond these limits.
  std::size_t max_all_branch_measurements = 12;
  std::size_t max_all_branch_inputs = 4;
};

struct VerificationReport {
  bool deterministic = false;        // branch maps agree up to phase
  bool strict_deterministic = false; // branch maps agree exactly
  bool uniform = false;              // every branch norm is 2^{-m/2}
  Matrix implemented;     // reference map * 2^{m/2}, phase-normalized
  Matrix reference_map;   // reference map * 2^{m/2}, phase untouched
  double max_branch_deviation = 0.0;
  double max_norm_deviation = 0.0;
  std::size_t measured_count = 0;
  std::size_t branches_checked = 0;
  std::vector<BranchReport> branches;  // reference branch first
};

// Compares every sampled branch against the all-zero-outcome reference
// branch. For a deterministic uniform pattern `implemented` is the unitary
// the pattern realizes.
VerificationReport verify_pattern(const Pattern& p,
                                  const VerifyOptions& options = {});

// Divides out the phase of the largest-magnitude entry (ties: lowest
// row-major index), making that entry positive real.
Matrix phase_normalize(const Matrix& m);

}  // namespace mbqc
