#include "mbqc/simulate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mbqc {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_valid(const Pattern& p) {
  ValidationReport report = validate(p);
  if (!report.ok()) {
    throw std::invalid_argument("invalid pattern: " +
                                report.issues.front().message);
  }
}

// Simulates one branch, keeping only live qubits in the state. Non-input
// qubits materialize as |+> on first touch, measured qubits drop out, so the
// working register stays small even for long patterns.
class BranchSim {
 public:
  BranchSim(const Pattern& p, const BranchOutcome& outcome)
      : pattern_(p), outcome_(outcome) {}

  void load(const StateVector& input) {
    if (input.num_qubits() != pattern_.inputs.size()) {
      throw std::invalid_argument("input state size does not match inputs");
    }
    live_ = pattern_.inputs;
    for (std::size_t i = 0; i < live_.size(); ++i) {
      position_[live_[i]] = i;
    }
    amps_.assign(input.amplitudes().begin(), input.amplitudes().end());
  }

  void run() {
    for (const Command& cmd : pattern_.commands) {
      if (const auto* e = std::get_if<EntangleCmd>(&cmd)) {
        entangle(e->a, e->b);
      } else if (const auto* m = std::get_if<MeasureCmd>(&cmd)) {
        measure(m->qubit, m->angle);
      } else {
        correct(std::get<CorrectCmd>(cmd));
      }
    }
  }

  StateVector finish() {
    for (const QubitId& q : pattern_.outputs) {
      ensure_live(q);
    }
    std::size_t n = live_.size();
    if (n != pattern_.outputs.size()) {
      throw std::runtime_error("pattern left unmeasured non-output qubits");
    }
    std::vector<std::size_t> src_shift(n);
    for (std::size_t k = 0; k < n; ++k) {
      src_shift[k] = n - 1 - position_.at(pattern_.outputs[k]);
    }
    std::vector<Complex> out(amps_.size());
    for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
      std::size_t dst = 0;
      for (std::size_t k = 0; k < n; ++k) {
        dst |= ((idx >> src_shift[k]) & 1u) << (n - 1 - k);
      }
      out[dst] = amps_[idx];
    }
    return StateVector(n, std::move(out));
  }

 private:
  std::size_t shift_of(const QubitId& q) const {
    return live_.size() - 1 - position_.at(q);
  }

  void ensure_live(const QubitId& q) {
    if (position_.count(q)) return;
    if (measured_.count(q)) {
      throw std::runtime_error("command touches measured qubit " + q);
    }
    if (live_.size() >= kMaxQubits) {
      throw std::runtime_error("more than 20 live qubits");
    }
    position_[q] = live_.size();
    live_.push_back(q);
    std::vector<Complex> grown(amps_.size() * 2);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      Complex half = amps_[i] * kInvSqrt2;
      grown[2 * i] = half;
      grown[2 * i + 1] = half;
    }
    amps_ = std::move(grown);
  }

  void entangle(const QubitId& a, const QubitId& b) {
    ensure_live(a);
    ensure_live(b);
    std::size_t sa = shift_of(a);
    std::size_t sb = shift_of(b);
    std::size_t mask = (std::size_t{1} << sa) | (std::size_t{1} << sb);
    for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
      if ((idx & mask) == mask) amps_[idx] = -amps_[idx];
    }
  }

  void measure(const QubitId& q, Angle angle) {
    ensure_live(q);
    int bit = 0;
    if (auto it = outcome_.find(q); it != outcome_.end()) bit = it->second;
    std::size_t shift = shift_of(q);
    Complex rotated = std::polar(1.0, -angle.radians());
    if (bit) rotated = -rotated;
    std::size_t low_mask = (std::size_t{1} << shift) - 1;
    std::vector<Complex> shrunk(amps_.size() / 2);
    for (std::size_t r = 0; r < shrunk.size(); ++r) {
      std::size_t low = r & low_mask;
      std::size_t high = r >> shift;
      std::size_t idx0 = (high << (shift + 1)) | low;
      std::size_t idx1 = idx0 | (std::size_t{1} << shift);
      shrunk[r] = (amps_[idx0] + rotated * amps_[idx1]) * kInvSqrt2;
    }
    amps_ = std::move(shrunk);
    std::size_t gone = position_.at(q);
    position_.erase(q);
    live_.erase(live_.begin() + static_cast<std::ptrdiff_t>(gone));
    for (auto& [id, pos] : position_) {
      if (pos > gone) --pos;
    }
    measured_.insert(q);
  }

  void correct(const CorrectCmd& c) {
    ensure_live(c.qubit);
    int parity = 0;
    for (const QubitId& s : c.signal.sources) {
      if (auto it = outcome_.find(s); it != outcome_.end()) parity ^= it->second;
    }
    if (!parity) return;
    std::size_t shift = shift_of(c.qubit);
    std::size_t bit = std::size_t{1} << shift;
    if (c.axis == PauliAxis::X) {
      for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
        if (!(idx & bit)) std::swap(amps_[idx], amps_[idx | bit]);
      }
    } else {
      for (std::size_t idx = 0; idx < amps_.size(); ++idx) {
        if (idx & bit) amps_[idx] = -amps_[idx];
      }
    }
  }

  const Pattern& pattern_;
  const BranchOutcome& outcome_;
  std::vector<QubitId> live_;
  std::unordered_map<QubitId, std::size_t> position_;
  std::unordered_set<QubitId> measured_;
  std::vector<Complex> amps_;
};

StateVector run_branch_unchecked(const Pattern& p, const StateVector& input,
                                 const BranchOutcome& outcome) {
  BranchSim sim(p, outcome);
  sim.load(input);
  sim.run();
  return sim.finish();
}

Matrix extract_map_unchecked(const Pattern& p, const BranchOutcome& outcome) {
  std::size_t nin = p.inputs.size();
  std::size_t dim = std::size_t{1} << nin;
  Matrix m(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    StateVector column =
        run_branch_unchecked(p, StateVector::basis(nin, c), outcome);
    for (std::size_t r = 0; r < dim; ++r) {
      m(r, c) = column[r];
    }
  }
  return m;
}

}  // namespace

StateVector run_branch(const Pattern& p, const StateVector& input,
                       const BranchOutcome& outcome) {
  require_valid(p);
  return run_branch_unchecked(p, input, outcome);
}

Matrix extract_map(const Pattern& p, const BranchOutcome& outcome) {
  require_valid(p);
  if (p.inputs.size() != p.outputs.size()) {
    throw std::invalid_argument(
        "extract_map needs as many outputs as inputs");
  }
  return extract_map_unchecked(p, outcome);
}

Matrix phase_normalize(const Matrix& m) {
  Complex best(0.0, 0.0);
  double best_abs = 0.0;
  for (const Complex& e : m.entries()) {
    double a = std::abs(e);
    if (a > best_abs) {
      best_abs = a;
      best = e;
    }
  }
  if (best_abs == 0.0) return m;
  Matrix out = m;
  out *= std::conj(best) / best_abs;
  return out;
}

VerificationReport verify_pattern(const Pattern& p,
                                  const VerifyOptions& options) {
  require_valid(p);
  if (p.inputs.size() != p.outputs.size()) {
    throw std::invalid_argument(
        "verification needs as many outputs as inputs");
  }

  std::vector<QubitId> measured;
  for (const Command& cmd : p.commands) {
    if (const auto* m = std::get_if<MeasureCmd>(&cmd)) {
      measured.push_back(m->qubit);
    }
  }
  std::size_t m = measured.size();
  std::size_t nin = p.inputs.size();

  if (options.strategy == VerifyOptions::Strategy::AllBranches &&
      (m > options.max_all_branch_measurements ||
       nin > options.max_all_branch_inputs)) {
    throw std::invalid_argument(
        "all-branches verification limited to " +
        std::to_string(options.max_all_branch_measurements) +
        " measurements and " +
        std::to_string(options.max_all_branch_inputs) +
        " inputs; use random sampling");
  }

  VerificationReport report;
  report.measured_count = m;

  Matrix reference = extract_map_unchecked(p, BranchOutcome{});
  report.reference_map = reference;
  report.reference_map *= std::exp2(0.5 * static_cast<double>(m));
  report.implemented = phase_normalize(report.reference_map);

  double input_scale = std::exp2(0.5 * static_cast<double>(nin));
  double target_norm = std::exp2(-0.5 * static_cast<double>(m));
  double max_strict = 0.0;

  auto consider = [&](BranchOutcome outcome) {
    Matrix branch = extract_map_unchecked(p, outcome);
    BranchReport br;
    br.outcome = std::move(outcome);
    br.map = branch;
    br.norm = branch.frobenius_norm() / input_scale;
    br.deviation = gp_distance(branch, reference);
    Complex overlap = (reference.dagger() * branch).trace();
    br.phase = std::abs(overlap) > 0.0 ? Angle(std::arg(overlap)) : Angle(0.0);
    report.max_branch_deviation =
        std::max(report.max_branch_deviation, br.deviation);
    report.max_norm_deviation =
        std::max(report.max_norm_deviation, std::abs(br.norm - target_norm));
    max_strict = std::max(max_strict, (branch - reference).frobenius_norm());
    report.branches.push_back(std::move(br));
    ++report.branches_checked;
  };

  if (options.strategy == VerifyOptions::Strategy::AllBranches) {
    std::size_t total = std::size_t{1} << m;
    for (std::size_t mask = 0; mask < total; ++mask) {
      BranchOutcome outcome;
      for (std::size_t i = 0; i < m; ++i) {
        outcome[measured[i]] = static_cast<int>((mask >> i) & 1u);
      }
      consider(std::move(outcome));
    }
  } else {
    std::mt19937_64 engine(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
      BranchOutcome outcome;
      for (std::size_t i = 0; i < m; ++i) {
        outcome[measured[i]] = static_cast<int>(engine() & 1u);
      }
      consider(std::move(outcome));
    }
  }

  report.deterministic = report.max_branch_deviation <= options.tol;
  report.strict_deterministic = max_strict <= options.tol;
  report.uniform = report.max_norm_deviation <= options.tol;
  return report;
}

}  // namespace mbqc
