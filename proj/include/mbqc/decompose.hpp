#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/matrix.hpp"

namespace mbqc {

struct JGate {
  std::size_t wire;
  Angle angle;
};

struct CzGate {
  std::size_t wire_a;
  std::size_t wire_b;
};

using Gate = std::variant<JGate, CzGate>;

// A circuit over the {J(a), CZ} generators. Gates are stored in operator
// order: the first element is the leftmost factor, so it is applied last.
struct GateWord {
  std::size_t wires = 0;
  std::vector<Gate> gates;
};

// Multiplies the word out into a 2^wires matrix.
Matrix evaluate_word(const GateWord& word);

// JSON wire format:
//   {"wires": n, "gates": [{"kind": "J", "wire": w, "angle": "1/2pi"},
//                          {"kind": "CZ", "wires": [a, b]}, ...]}
GateWord word_from_json(const std::string& text);
std::string word_to_json(const GateWord& word);

// u = e^{i alpha} Rz(beta) Rx(gamma) Rz(delta), gamma in [0, pi].
// When gamma is 0 or pi the split between beta and delta is not unique;
// delta is set to 0.
struct ZXDecomposition {
  Angle alpha, beta, gamma, delta;
};

// u = e^{i alpha} J(0) J(beta) J(gamma) J(delta), same beta/gamma/delta as
// the ZX form; alpha differs by -(beta+gamma+delta)/2.
struct JDecomposition {
  Angle alpha, beta, gamma, delta;
};

ZXDecomposition zx_decompose(const Matrix& u);
JDecomposition j_decompose(const Matrix& u);

Matrix zx_reconstruct(const ZXDecomposition& d);
Matrix j_reconstruct(const JDecomposition& d);

// The three J products
//   A = J(0) J(beta+pi) J(-gamma/2) J(-pi/2)
//   B = J(0) J(pi/2) J(gamma/2) J(-(pi+delta+beta)/2)
//   C = J(0) J((delta-beta-pi)/2)
// satisfying A B C = I and phase * A X B X C = u, with
// phase = e^{i(2 alpha + beta + gamma + delta)/2}.
struct AbcOperators {
  Matrix a;
  Matrix b;
  Matrix c;
  Complex phase;
};

AbcOperators abc_operators(const JDecomposition& d);

// Two-wire word for controlled-u (wire 0 controls, wire 1 is the target):
//   J1(0) J1(a') J2(0) J2(b+pi) J2(-g/2) J2(-pi/2) J2(0) CZ
//   J2(pi/2) J2(g/2) J2(-(pi+d+b)/2) J2(0) CZ J2((d-b-pi)/2)
// with a' = a + (b+g+d)/2 from j_decompose(u). Evaluates to
// controlled_matrix(u) exactly, global phase included.
GateWord controlled_u_decompose(const Matrix& u);

// Block matrix [[I, 0], [0, u]]; the first qubit controls.
Matrix controlled_matrix(const Matrix& u);

}  // namespace mbqc
