#include "mbqc/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mbqc {

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Complex expi(double theta) {
  return Complex(std::cos(theta), std::sin(theta));
}
}  // namespace

Matrix j_matrix(Angle alpha) {
  Complex phase = expi(alpha.radians());
  return Matrix{{kInvSqrt2, kInvSqrt2 * phase},
                {kInvSqrt2, -kInvSqrt2 * phase}};
}

Matrix cz_matrix() {
  Matrix m = Matrix::identity(4);
  m(3, 3) = Complex(-1.0, 0.0);
  return m;
}

Matrix pauli_x() {
  return Matrix{{0.0, 1.0}, {1.0, 0.0}};
}

Matrix pauli_y() {
  return Matrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
}

Matrix pauli_z() {
  return Matrix{{1.0, 0.0}, {0.0, -1.0}};
}

Matrix hadamard() {
  return Matrix{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
}

Matrix phase_gate(Angle alpha) {
  return Matrix{{1.0, 0.0}, {0.0, expi(alpha.radians())}};
}

Matrix derived_gate(NamedGate gate) {
  switch (gate) {
    case NamedGate::H:
      return j_matrix(Angle(0.0));
    case NamedGate::X:
      return j_matrix(Angle(kPi)) * j_matrix(Angle(0.0));
    case NamedGate::Z:
      return j_matrix(Angle(0.0)) * j_matrix(Angle(kPi));
  }
  throw std::invalid_argument("unknown gate");
}

Matrix derived_phase(Angle alpha) {
  return j_matrix(Angle(0.0)) * j_matrix(alpha);
}

Matrix rotation_matrix(Axis axis, Angle alpha) {
  double a = alpha.radians();
  Complex prefactor = expi(-a / 2.0);
  Matrix product(2);
  switch (axis) {
    case Axis::X:
      product = j_matrix(alpha) * j_matrix(Angle(0.0));
      break;
    case Axis::Y:
      product = j_matrix(Angle(0.0)) * j_matrix(Angle(kPi / 2.0)) *
                j_matrix(alpha) * j_matrix(Angle(-kPi / 2.0));
      break;
    case Axis::Z:
      product = j_matrix(Angle(0.0)) * j_matrix(alpha);
      break;
  }
  return prefactor * product;
}

Matrix rotation_canonical(Axis axis, Angle alpha) {
  double half = alpha.radians() / 2.0;
  double c = std::cos(half);
  double s = std::sin(half);
  switch (axis) {
    case Axis::X:
      return Matrix{{c, Complex(0.0, -s)}, {Complex(0.0, -s), c}};
    case Axis::Y:
      return Matrix{{c, -s}, {s, c}};
    case Axis::Z:
      return Matrix{{expi(-half), 0.0}, {0.0, expi(half)}};
  }
  throw std::invalid_argument("unknown axis");
}

}  // namespace mbqc
