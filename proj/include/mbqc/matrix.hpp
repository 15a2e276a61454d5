#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mbqc {

using Complex = std::complex<double>;

// Hard cap on qubit counts; every dense object stays at or below 2^20 entries
// per axis.
inline constexpr std::size_t kMaxQubits = 20;

// Dense square complex matrix, row-major. All entries are kept finite.
class Matrix {
 public:
  Matrix() : Matrix(1) {}
  explicit Matrix(std::size_t dim);
  Matrix(std::size_t dim, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const { return entries_; }

  Matrix dagger() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix& operator*=(Complex scale);
  friend Matrix operator*(Complex scale, Matrix m) {
    m *= scale;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

// Column vector of 2^n amplitudes; qubit 0 is the most significant index bit.
class StateVector {
 public:
  explicit StateVector(std::size_t num_qubits);
  StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);

  static StateVector basis(std::size_t num_qubits, std::size_t index);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }

  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }

  std::span<const Complex> amplitudes() const { return amplitudes_; }

  double squared_norm() const;
  double norm() const;

 private:
  std::size_t num_qubits_;
  std::vector<Complex> amplitudes_;
};

// Kronecker product; throws if the result would exceed 2^kMaxQubits per axis.
Matrix kron(const Matrix& a, const Matrix& b);

// Distance between a and b minimized over a global phase on b:
// sqrt(max(0, |a|_F^2 + |b|_F^2 - 2*|tr(a^dagger b)|)).
double gp_distance(const Matrix& a, const Matrix& b);

bool is_unitary(const Matrix& a, double tol = 1e-9);

// Applies op to the given qubits of an n-qubit state. targets are qubit
// positions (0 = most significant); op.dim() must be 2^targets.size().
StateVector apply_local(const Matrix& op, std::span<const std::size_t> targets,
                        const StateVector& state);
StateVector apply_local(const Matrix& op,
                        std::initializer_list<std::size_t> targets,
                        const StateVector& state);

// JSON wire format: {"dim": n, "entries": [[re, im], ...]} row-major.
Matrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const Matrix& m);

}  // namespace mbqc
