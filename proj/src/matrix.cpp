#include "mbqc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace mbqc {

namespace {

constexpr std::size_t kMaxDim = std::size_t{1} << kMaxQubits;

void check_dim(std::size_t dim) {
  if (dim == 0) {
    throw std::invalid_argument("matrix dimension must be positive");
  }
  if (dim > kMaxDim) {
    throw std::invalid_argument("matrix dimension exceeds 2^20");
  }
}

void check_finite(const std::vector<Complex>& entries) {
  for (const Complex& e : entries) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim) {
  check_dim(dim);
  entries_.assign(dim * dim, Complex(0.0, 0.0));
}

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim) {
  check_dim(dim);
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("entry count does not match dimension");
  }
  check_finite(entries);
  entries_ = std::move(entries);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  check_dim(dim_);
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  check_finite(entries_);
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = Complex(1.0, 0.0);
  }
  return m;
}

Matrix Matrix::dagger() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

Complex Matrix::trace() const {
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& e : entries_) {
    s += std::norm(e);
  }
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Complex& e : entries_) {
    m = std::max(m, std::abs(e));
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (dim_ != rhs.dim_) {
    throw std::invalid_argument("matrix dimensions do not match");
  }
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      Complex a = (*this)(r, k);
      if (a == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < dim_; ++c) {
        out(r, c) += a * rhs(k, c);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (dim_ != rhs.dim_) {
    throw std::invalid_argument("matrix dimensions do not match");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] += rhs.entries_[i];
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (dim_ != rhs.dim_) {
    throw std::invalid_argument("matrix dimensions do not match");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] -= rhs.entries_[i];
  }
  return out;
}

Matrix& Matrix::operator*=(Complex scale) {
  for (Complex& e : entries_) {
    e *= scale;
  }
  return *this;
}

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count exceeds 20");
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex(0.0, 0.0));
  amplitudes_[0] = Complex(1.0, 0.0);
}

StateVector::StateVector(std::size_t num_qubits,
                         std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count exceeds 20");
  }
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude count does not match qubit count");
  }
  for (const Complex& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("amplitudes must be finite");
    }
  }
  amplitudes_ = std::move(amplitudes);
}

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
  StateVector s(num_qubits);
  if (index >= s.size()) {
    throw std::invalid_argument("basis index out of range");
  }
  s[0] = Complex(0.0, 0.0);
  s[index] = Complex(1.0, 0.0);
  return s;
}

double StateVector::squared_norm() const {
  double s = 0.0;
  for (const Complex& a : amplitudes_) {
    s += std::norm(a);
  }
  return s;
}

double StateVector::norm() const { return std::sqrt(squared_norm()); }

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.dim() > kMaxDim / b.dim()) {
    throw std::invalid_argument("kron result exceeds 2^20 per axis");
  }
  std::size_t dim = a.dim() * b.dim();
  Matrix out(dim);
  for (std::size_t ar = 0; ar < a.dim(); ++ar) {
    for (std::size_t ac = 0; ac < a.dim(); ++ac) {
      Complex scale = a(ar, ac);
      if (scale == Complex(0.0, 0.0)) continue;
      for (std::size_t br = 0; br < b.dim(); ++br) {
        for (std::size_t bc = 0; bc < b.dim(); ++bc) {
          out(ar * b.dim() + br, ac * b.dim() + bc) = scale * b(br, bc);
        }
      }
    }
  }
  return out;
}

double gp_distance(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matrix dimensions do not match");
  }
  Complex overlap(0.0, 0.0);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      overlap += std::conj(a(r, c)) * b(r, c);
    }
  }
  // min_theta |a - e^{i theta} b| is attained at the phase of the overlap.
  // Rotating b and subtracting directly evaluates the closed form
  // sqrt(|a|^2 + |b|^2 - 2|tr(a^dagger b)|) without its cancellation error
  // near zero.
  Complex phase = overlap == Complex(0.0, 0.0)
                      ? Complex(1.0, 0.0)
                      : std::conj(overlap) / std::abs(overlap);
  double squared = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      squared += std::norm(a(r, c) - phase * b(r, c));
    }
  }
  return std::sqrt(squared);
}

bool is_unitary(const Matrix& a, double tol) {
  Matrix residual = a.dagger() * a - Matrix::identity(a.dim());
  return residual.max_abs() <= tol;
}

StateVector apply_local(const Matrix& op, std::span<const std::size_t> targets,
                        const StateVector& state) {
  std::size_t n = state.num_qubits();
  std::size_t k = targets.size();
  if (k > n) {
    throw std::invalid_argument("more targets than qubits");
  }
  if (op.dim() != (std::size_t{1} << k)) {
    throw std::invalid_argument("operator dimension does not match targets");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t t : targets) {
    if (t >= n || seen[t]) {
      throw std::invalid_argument("targets must be distinct qubit positions");
    }
    seen[t] = true;
  }

  // Bit shift for qubit position t within a flat index (qubit 0 = MSB).
  std::vector<std::size_t> target_shift(k);
  for (std::size_t j = 0; j < k; ++j) {
    target_shift[j] = n - 1 - targets[j];
  }
  std::vector<std::size_t> rest_shift;
  rest_shift.reserve(n - k);
  for (std::size_t q = 0; q < n; ++q) {
    if (!seen[q]) {
      rest_shift.push_back(n - 1 - q);
    }
  }

  StateVector out(n, std::vector<Complex>(state.size(), Complex(0.0, 0.0)));
  std::size_t sub_dim = std::size_t{1} << k;
  std::vector<Complex> gathered(sub_dim);
  for (std::size_t r = 0; r < (std::size_t{1} << (n - k)); ++r) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < rest_shift.size(); ++i) {
      base |= ((r >> (rest_shift.size() - 1 - i)) & 1u) << rest_shift[i];
    }
    for (std::size_t s = 0; s < sub_dim; ++s) {
      std::size_t idx = base;
      for (std::size_t j = 0; j < k; ++j) {
        idx |= ((s >> (k - 1 - j)) & 1u) << target_shift[j];
      }
      gathered[s] = state[idx];
    }
    for (std::size_t row = 0; row < sub_dim; ++row) {
      Complex acc(0.0, 0.0);
      for (std::size_t col = 0; col < sub_dim; ++col) {
        acc += op(row, col) * gathered[col];
      }
      std::size_t idx = base;
      for (std::size_t j = 0; j < k; ++j) {
        idx |= ((row >> (k - 1 - j)) & 1u) << target_shift[j];
      }
      out[idx] = acc;
    }
  }
  return out;
}

StateVector apply_local(const Matrix& op,
                        std::initializer_list<std::size_t> targets,
                        const StateVector& state) {
  std::vector<std::size_t> t(targets);
  return apply_local(op, std::span<const std::size_t>(t), state);
}

Matrix matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw std::invalid_argument(
        "matrix JSON must be an object with dim and entries");
  }
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0) {
    throw std::invalid_argument("matrix JSON dim must be a positive integer");
  }
  std::size_t dim = j["dim"].get<std::size_t>();
  if (dim > kMaxDim) {
    throw std::invalid_argument("matrix dimension exceeds 2^20");
  }
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != dim * dim) {
    throw std::invalid_argument("matrix JSON entries must hold dim^2 pairs");
  }
  std::vector<Complex> out;
  out.reserve(dim * dim);
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw std::invalid_argument(
          "matrix JSON entries must be [re, im] number pairs");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return Matrix(dim, std::move(out));
}

std::string matrix_to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const Complex& e : m.entries()) {
    entries.push_back({e.real(), e.imag()});
  }
  nlohmann::json j;
  j["dim"] = m.dim();
  j["entries"] = std::move(entries);
  return j.dump();
}

}  // namespace mbqc
