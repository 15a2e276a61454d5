#pragma once

#include "mbqc/angle.hpp"
#include "mbqc/matrix.hpp"

namespace mbqc {

// J(a) = 1/sqrt(2) * [[1, e^{ia}], [1, -e^{ia}]]. J(0) is the Hadamard.
Matrix j_matrix(Angle alpha);

// Controlled-Z on two qubits, diag(1, 1, 1, -1).
Matrix cz_matrix();

// Textbook forms, written out entry by entry. These are the comparison
// targets for the J-product constructions below and must stay independent
// of j_matrix.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();
Matrix phase_gate(Angle alpha);  // diag(1, e^{ia})

enum class NamedGate { X, Z, H };

// Gates expressed as products of J matrices:
//   H = J(0), X = J(pi) J(0), Z = J(0) J(pi), P(a) = J(0) J(a).
Matrix derived_gate(NamedGate gate);
Matrix derived_phase(Angle alpha);

enum class Axis { X, Y, Z };

// Bloch rotations as phased J products:
//   Rx(a) = e^{-ia/2} J(a) J(0)
//   Ry(a) = e^{-ia/2} J(0) J(pi/2) J(a) J(-pi/2)
//   Rz(a) = e^{-ia/2} J(0) J(a)
Matrix rotation_matrix(Axis axis, Angle alpha);

// Same rotations in cos/sin form, for cross-checking.
Matrix rotation_canonical(Axis axis, Angle alpha);

}  // namespace mbqc
