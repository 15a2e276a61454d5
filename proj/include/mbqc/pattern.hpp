#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/decompose.hpp"
#include "mbqc/matrix.hpp"

namespace mbqc {

using QubitId = std::string;

// Mod-2 sum of measurement outcomes of the listed qubits.
struct Signal {
  std::vector<QubitId> sources;
};

struct EntangleCmd {
  QubitId a;
  QubitId b;
};

struct MeasureCmd {
  QubitId qubit;
  Angle angle;  // measurement basis |+-_angle> = (|0> +- e^{i angle}|1>)/sqrt(2)
};

enum class PauliAxis { X, Z };

struct CorrectCmd {
  PauliAxis axis;
  QubitId qubit;
  Signal signal;
};

using Command = std::variant<EntangleCmd, MeasureCmd, CorrectCmd>;

// A one-way-model program. Non-input qubits start in |+>. Commands are
// stored in application order: commands.front() runs first.
struct Pattern {
  std::string name;
  std::vector<QubitId> qubits;   // declaration order, unique
  std::vector<QubitId> inputs;   // ordered, subset of qubits
  std::vector<QubitId> outputs;  // ordered, subset of qubits
  std::vector<Command> commands;
};

struct ValidationIssue {
  std::string message;
  int command_index;  // -1 for structural problems
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Checks definiteness: every qubit measured exactly once or kept as output,
// commands touch declared qubits, nothing acts on a consumed qubit, signals
// only reference already-measured qubits, entangling is symmetric-safe.
ValidationReport validate(const Pattern& p);

// Measures the input at -alpha: E(in,out), M(in, -alpha), X(out, [in]).
Pattern j_pattern(Angle alpha, const QubitId& in = "1", const QubitId& out = "2");

// Both qubits are inputs and outputs; single E command.
Pattern cz_pattern(const QubitId& a = "1", const QubitId& b = "2");

// No commands; routes inputs to outputs (both lists hold the same ids).
Pattern permutation_pattern(std::vector<QubitId> inputs,
                            std::vector<QubitId> outputs);

// Disjoint union; qubits of p1 get the prefix "L/", qubits of p2 "R/".
// Inputs and outputs concatenate (p1 first).
Pattern tensor(const Pattern& p1, const Pattern& p2);

// Runs first, then second: second.inputs[k] is identified with
// first.outputs[k]. first keeps the "L/" prefix, second "R/"; identified
// qubits keep their "L/" name.
Pattern compose(const Pattern& second, const Pattern& first);

using Circuit = GateWord;

// Names the qubit created as step `index` on `wire` (index 0 is the wire's
// input).
using WireLabeller =
    std::function<QubitId(std::size_t wire, std::size_t index)>;

// Teleportation-style compilation: J(a) on a wire appends a fresh qubit q'
// to the wire's frontier q and emits E(q,q'), M(q,-a), X(q',[q]); CZ entangles
// the two frontiers. The default labeller numbers qubits "1", "2", ... in
// creation order, inputs first.
Pattern compile_circuit(const Circuit& circuit);
Pattern compile_circuit(const Circuit& circuit, const WireLabeller& label);

// compile_circuit(controlled_u_decompose(u)) with the control wire labelled
// A, B, C and the target wire a..k.
Pattern controlled_u_pattern(const Matrix& u);

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           message),
        line(line_number) {}
  int line;
};

// Text format, '#' starts a comment:
//   pattern <name>
//   qubits: 1, 2
//   inputs: 1
//   outputs: 2
//   E 1 2
//   M 1 -1/2pi
//   X 2 [1]
Pattern parse_pattern(const std::string& text);
std::string serialize_pattern(const Pattern& p);

// Structural equality; names are ignored. angle_tol 0 compares bit-exact.
bool patterns_equal(const Pattern& a, const Pattern& b, double angle_tol = 0.0);

}  // namespace mbqc
