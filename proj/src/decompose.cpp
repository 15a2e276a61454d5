#include "mbqc/decompose.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "mbqc/gates.hpp"

namespace mbqc {

namespace {

constexpr double kPi = std::numbers::pi;

Complex expi(double theta) {
  return Complex(std::cos(theta), std::sin(theta));
}

void check_word(const GateWord& word) {
  if (word.wires > kMaxQubits) {
    throw std::invalid_argument("word exceeds 20 wires");
  }
  for (const Gate& gate : word.gates) {
    if (const auto* j = std::get_if<JGate>(&gate)) {
      if (j->wire >= word.wires) {
        throw std::invalid_argument("J gate wire out of range");
      }
    } else {
      const auto& cz = std::get<CzGate>(gate);
      if (cz.wire_a >= word.wires || cz.wire_b >= word.wires ||
          cz.wire_a == cz.wire_b) {
        throw std::invalid_argument("CZ wires must be distinct and in range");
      }
    }
  }
}

void check_single_qubit_unitary(const Matrix& u) {
  if (u.dim() != 2) {
    throw std::invalid_argument("decomposition needs a 2x2 matrix");
  }
  if (!is_unitary(u, 1e-9)) {
    throw std::invalid_argument("decomposition needs a unitary matrix");
  }
}

}  // namespace

Matrix evaluate_word(const GateWord& word) {
  check_word(word);
  std::size_t dim = std::size_t{1} << word.wires;
  std::vector<StateVector> columns;
  columns.reserve(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    columns.push_back(StateVector::basis(word.wires, c));
  }
  Matrix cz = cz_matrix();
  for (auto it = word.gates.rbegin(); it != word.gates.rend(); ++it) {
    if (const auto* j = std::get_if<JGate>(&*it)) {
      Matrix op = j_matrix(j->angle);
      for (StateVector& col : columns) {
        col = apply_local(op, {j->wire}, col);
      }
    } else {
      const auto& g = std::get<CzGate>(*it);
      for (StateVector& col : columns) {
        col = apply_local(cz, {g.wire_a, g.wire_b}, col);
      }
    }
  }
  Matrix out(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) {
      out(r, c) = columns[c][r];
    }
  }
  return out;
}

GateWord word_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad word JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("wires") || !j.contains("gates")) {
    throw std::invalid_argument(
        "word JSON must be an object with wires and gates");
  }
  if (!j["wires"].is_number_unsigned()) {
    throw std::invalid_argument("word JSON wires must be a non-negative integer");
  }
  GateWord word;
  word.wires = j["wires"].get<std::size_t>();
  if (!j["gates"].is_array()) {
    throw std::invalid_argument("word JSON gates must be an array");
  }
  for (const auto& g : j["gates"]) {
    if (!g.is_object() || !g.contains("kind") || !g["kind"].is_string()) {
      throw std::invalid_argument("word JSON gate entries need a kind");
    }
    std::string kind = g["kind"].get<std::string>();
    if (kind == "J") {
      if (!g.contains("wire") || !g["wire"].is_number_unsigned()) {
        throw std::invalid_argument("J gate needs an unsigned wire");
      }
      if (!g.contains("angle")) {
        throw std::invalid_argument("J gate needs an angle");
      }
      Angle angle;
      if (g["angle"].is_string()) {
        angle = parse_angle(g["angle"].get<std::string>());
      } else if (g["angle"].is_number()) {
        angle = Angle(g["angle"].get<double>());
      } else {
        throw std::invalid_argument("J gate angle must be a string or number");
      }
      word.gates.push_back(JGate{g["wire"].get<std::size_t>(), angle});
    } else if (kind == "CZ") {
      if (!g.contains("wires") || !g["wires"].is_array() ||
          g["wires"].size() != 2 || !g["wires"][0].is_number_unsigned() ||
          !g["wires"][1].is_number_unsigned()) {
        throw std::invalid_argument("CZ gate needs a two-entry wires array");
      }
      word.gates.push_back(CzGate{g["wires"][0].get<std::size_t>(),
                                  g["wires"][1].get<std::size_t>()});
    } else {
      throw std::invalid_argument("unknown gate kind: " + kind);
    }
  }
  check_word(word);
  return word;
}

std::string word_to_json(const GateWord& word) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& gate : word.gates) {
    nlohmann::json g;
    if (const auto* j = std::get_if<JGate>(&gate)) {
      g["kind"] = "J";
      g["wire"] = j->wire;
      g["angle"] = j->angle.to_string();
    } else {
      const auto& cz = std::get<CzGate>(gate);
      g["kind"] = "CZ";
      g["wires"] = {cz.wire_a, cz.wire_b};
    }
    gates.push_back(std::move(g));
  }
  nlohmann::json j;
  j["wires"] = word.wires;
  j["gates"] = std::move(gates);
  return j.dump();
}

ZXDecomposition zx_decompose(const Matrix& u) {
  check_single_qubit_unitary(u);

  // Strip the determinant phase so the residue is special unitary.
  Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  Complex root = expi(std::arg(det) / 2.0) * std::sqrt(std::abs(det));
  Complex a = u(0, 0) / root;
  Complex b = u(0, 1) / root;

  double gamma = 2.0 * std::atan2(std::abs(b), std::abs(a));
  double beta;
  double delta;
  constexpr double kTieEps = 1e-12;
  if (std::abs(b) <= kTieEps) {
    beta = -2.0 * std::arg(a);
    delta = 0.0;
  } else if (std::abs(a) <= kTieEps) {
    beta = -2.0 * std::arg(b) - kPi;
    delta = 0.0;
  } else {
    beta = -std::arg(a) - std::arg(b) - kPi / 2.0;
    delta = -std::arg(a) + std::arg(b) + kPi / 2.0;
  }

  ZXDecomposition d;
  d.beta = Angle(beta);
  d.gamma = Angle(gamma);
  d.delta = Angle(delta);

  // Wrapping beta/delta flips Rz signs, so recover alpha against the matrix
  // actually built from the canonical angles.
  d.alpha = Angle(0.0);
  Matrix m = zx_reconstruct(d);
  Complex overlap = (m.dagger() * u).trace();
  d.alpha = Angle(std::arg(overlap));
  return d;
}

JDecomposition j_decompose(const Matrix& u) {
  ZXDecomposition zx = zx_decompose(u);
  JDecomposition d;
  d.beta = zx.beta;
  d.gamma = zx.gamma;
  d.delta = zx.delta;
  double shift = (zx.beta.radians() + zx.gamma.radians() + zx.delta.radians()) / 2.0;
  d.alpha = Angle(zx.alpha.radians() - shift);
  return d;
}

Matrix zx_reconstruct(const ZXDecomposition& d) {
  Matrix m = rotation_canonical(Axis::Z, d.beta) *
             rotation_canonical(Axis::X, d.gamma) *
             rotation_canonical(Axis::Z, d.delta);
  return expi(d.alpha.radians()) * m;
}

Matrix j_reconstruct(const JDecomposition& d) {
  Matrix m = j_matrix(Angle(0.0)) * j_matrix(d.beta) * j_matrix(d.gamma) *
             j_matrix(d.delta);
  return expi(d.alpha.radians()) * m;
}

AbcOperators abc_operators(const JDecomposition& d) {
  double beta = d.beta.radians();
  double gamma = d.gamma.radians();
  double delta = d.delta.radians();

  AbcOperators ops{Matrix(2), Matrix(2), Matrix(2), Complex(0.0, 0.0)};
  ops.a = j_matrix(Angle(0.0)) * j_matrix(Angle(beta + kPi)) *
          j_matrix(Angle(-gamma / 2.0)) * j_matrix(Angle(-kPi / 2.0));
  ops.b = j_matrix(Angle(0.0)) * j_matrix(Angle(kPi / 2.0)) *
          j_matrix(Angle(gamma / 2.0)) *
          j_matrix(Angle(-(kPi + delta + beta) / 2.0));
  ops.c = j_matrix(Angle(0.0)) * j_matrix(Angle((delta - beta - kPi) / 2.0));
  ops.phase = expi(d.alpha.radians() + (beta + gamma + delta) / 2.0);
  return ops;
}

GateWord controlled_u_decompose(const Matrix& u) {
  JDecomposition d = j_decompose(u);
  double alpha = d.alpha.radians();
  double beta = d.beta.radians();
  double gamma = d.gamma.radians();
  double delta = d.delta.radians();
  double alpha_prime = alpha + (beta + gamma + delta) / 2.0;

  GateWord word;
  word.wires = 2;
  word.gates = {
      JGate{0, Angle(0.0)},
      JGate{0, Angle(alpha_prime)},
      JGate{1, Angle(0.0)},
      JGate{1, Angle(beta + kPi)},
      JGate{1, Angle(-gamma / 2.0)},
      JGate{1, Angle(-kPi / 2.0)},
      JGate{1, Angle(0.0)},
      CzGate{0, 1},
      JGate{1, Angle(kPi / 2.0)},
      JGate{1, Angle(gamma / 2.0)},
      JGate{1, Angle(-(kPi + delta + beta) / 2.0)},
      JGate{1, Angle(0.0)},
      CzGate{0, 1},
      JGate{1, Angle((delta - beta - kPi) / 2.0)},
  };
  return word;
}

Matrix controlled_matrix(const Matrix& u) {
  if (u.dim() > (std::size_t{1} << (kMaxQubits - 1))) {
    throw std::invalid_argument("controlled matrix exceeds 2^20 per axis");
  }
  std::size_t dim = 2 * u.dim();
  Matrix out(dim);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    out(i, i) = Complex(1.0, 0.0);
  }
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) {
      out(u.dim() + r, u.dim() + c) = u(r, c);
    }
  }
  return out;
}

}  // namespace mbqc
