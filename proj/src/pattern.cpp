#include "mbqc/pattern.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace mbqc {

namespace {

bool valid_id(const QubitId& id) {
  if (id.empty()) return false;
  return id.find_first_of(" \t,#[]+:") == std::string::npos;
}

Pattern rewrite_ids(const Pattern& p,
                    const std::function<QubitId(const QubitId&)>& rename) {
  Pattern out;
  out.name = p.name;
  for (const QubitId& q : p.qubits) out.qubits.push_back(rename(q));
  for (const QubitId& q : p.inputs) out.inputs.push_back(rename(q));
  for (const QubitId& q : p.outputs) out.outputs.push_back(rename(q));
  out.commands.reserve(p.commands.size());
  for (const Command& cmd : p.commands) {
    if (const auto* e = std::get_if<EntangleCmd>(&cmd)) {
      out.commands.push_back(EntangleCmd{rename(e->a), rename(e->b)});
    } else if (const auto* m = std::get_if<MeasureCmd>(&cmd)) {
      out.commands.push_back(MeasureCmd{rename(m->qubit), m->angle});
    } else {
      const auto& c = std::get<CorrectCmd>(cmd);
      Signal signal;
      for (const QubitId& s : c.signal.sources) {
        signal.sources.push_back(rename(s));
      }
      out.commands.push_back(CorrectCmd{c.axis, rename(c.qubit), signal});
    }
  }
  return out;
}

void require_valid(const Pattern& p, const char* what) {
  ValidationReport report = validate(p);
  if (!report.ok()) {
    throw std::invalid_argument(std::string(what) + ": invalid pattern: " +
                                report.issues.front().message);
  }
}

std::string join_ids(const std::vector<QubitId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ", ";
    out += ids[i];
  }
  return out;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

ValidationReport validate(const Pattern& p) {
  ValidationReport report;
  auto structural = [&](const std::string& message) {
    report.issues.push_back({message, -1});
  };

  std::unordered_set<QubitId> declared;
  for (const QubitId& q : p.qubits) {
    if (!valid_id(q)) {
      structural("bad qubit id: '" + q + "'");
    } else if (!declared.insert(q).second) {
      structural("duplicate qubit id: " + q);
    }
  }
  std::unordered_set<QubitId> inputs;
  for (const QubitId& q : p.inputs) {
    if (!declared.count(q)) structural("input not declared: " + q);
    if (!inputs.insert(q).second) structural("duplicate input: " + q);
  }
  std::unordered_set<QubitId> outputs;
  for (const QubitId& q : p.outputs) {
    if (!declared.count(q)) structural("output not declared: " + q);
    if (!outputs.insert(q).second) structural("duplicate output: " + q);
  }

  std::unordered_set<QubitId> measured;
  auto alive = [&](const QubitId& q, int index, const char* role) {
    if (!declared.count(q)) {
      report.issues.push_back(
          {std::string(role) + " references undeclared qubit " + q, index});
      return false;
    }
    if (measured.count(q)) {
      report.issues.push_back(
          {std::string(role) + " acts on already measured qubit " + q, index});
      return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < p.commands.size(); ++i) {
    int index = static_cast<int>(i);
    const Command& cmd = p.commands[i];
    if (const auto* e = std::get_if<EntangleCmd>(&cmd)) {
      if (e->a == e->b) {
        report.issues.push_back({"E needs two distinct qubits", index});
      }
      alive(e->a, index, "E");
      alive(e->b, index, "E");
    } else if (const auto* m = std::get_if<MeasureCmd>(&cmd)) {
      if (alive(m->qubit, index, "M")) {
        if (outputs.count(m->qubit)) {
          report.issues.push_back(
              {"M consumes output qubit " + m->qubit, index});
        }
        measured.insert(m->qubit);
      }
    } else {
      const auto& c = std::get<CorrectCmd>(cmd);
      alive(c.qubit, index, "correction");
      for (const QubitId& s : c.signal.sources) {
        if (!declared.count(s)) {
          report.issues.push_back(
              {"signal references undeclared qubit " + s, index});
        } else if (!measured.count(s)) {
          report.issues.push_back(
              {"signal reads qubit " + s + " before it is measured", index});
        }
      }
    }
  }

  for (const QubitId& q : p.qubits) {
    if (!measured.count(q) && !outputs.count(q)) {
      structural("qubit " + q + " is neither measured nor an output");
    }
  }
  return report;
}

Pattern j_pattern(Angle alpha, const QubitId& in, const QubitId& out) {
  Pattern p;
  p.name = "J";
  p.qubits = {in, out};
  p.inputs = {in};
  p.outputs = {out};
  p.commands = {EntangleCmd{in, out}, MeasureCmd{in, -alpha},
                CorrectCmd{PauliAxis::X, out, Signal{{in}}}};
  require_valid(p, "j_pattern");
  return p;
}

Pattern cz_pattern(const QubitId& a, const QubitId& b) {
  Pattern p;
  p.name = "CZ";
  p.qubits = {a, b};
  p.inputs = {a, b};
  p.outputs = {a, b};
  p.commands = {EntangleCmd{a, b}};
  require_valid(p, "cz_pattern");
  return p;
}

Pattern permutation_pattern(std::vector<QubitId> inputs,
                            std::vector<QubitId> outputs) {
  Pattern p;
  p.name = "perm";
  p.qubits = inputs;
  p.inputs = std::move(inputs);
  p.outputs = std::move(outputs);
  std::vector<QubitId> in_sorted = p.inputs;
  std::vector<QubitId> out_sorted = p.outputs;
  std::sort(in_sorted.begin(), in_sorted.end());
  std::sort(out_sorted.begin(), out_sorted.end());
  if (in_sorted != out_sorted) {
    throw std::invalid_argument(
        "permutation_pattern: outputs must be a permutation of inputs");
  }
  require_valid(p, "permutation_pattern");
  return p;
}

Pattern tensor(const Pattern& p1, const Pattern& p2) {
  require_valid(p1, "tensor");
  require_valid(p2, "tensor");
  Pattern a = rewrite_ids(p1, [](const QubitId& q) { return "L/" + q; });
  Pattern b = rewrite_ids(p2, [](const QubitId& q) { return "R/" + q; });
  Pattern out;
  out.name = "tensor";
  out.qubits = a.qubits;
  out.qubits.insert(out.qubits.end(), b.qubits.begin(), b.qubits.end());
  out.inputs = a.inputs;
  out.inputs.insert(out.inputs.end(), b.inputs.begin(), b.inputs.end());
  out.outputs = a.outputs;
  out.outputs.insert(out.outputs.end(), b.outputs.begin(), b.outputs.end());
  out.commands = a.commands;
  out.commands.insert(out.commands.end(), b.commands.begin(), b.commands.end());
  return out;
}

Pattern compose(const Pattern& second, const Pattern& first) {
  require_valid(first, "compose");
  require_valid(second, "compose");
  if (first.outputs.size() != second.inputs.size()) {
    throw std::invalid_argument(
        "compose: output arity of the first pattern must match input arity "
        "of the second");
  }
  Pattern f = rewrite_ids(first, [](const QubitId& q) { return "L/" + q; });
  std::unordered_map<QubitId, QubitId> identify;
  for (std::size_t k = 0; k < second.inputs.size(); ++k) {
    identify["R/" + second.inputs[k]] = f.outputs[k];
  }
  Pattern s = rewrite_ids(second, [&](const QubitId& q) {
    QubitId renamed = "R/" + q;
    auto it = identify.find(renamed);
    return it == identify.end() ? renamed : it->second;
  });

  Pattern out;
  out.name = "compose";
  out.qubits = f.qubits;
  std::unordered_set<QubitId> present(f.qubits.begin(), f.qubits.end());
  for (const QubitId& q : s.qubits) {
    if (present.insert(q).second) out.qubits.push_back(q);
  }
  out.inputs = f.inputs;
  out.outputs = s.outputs;
  out.commands = f.commands;
  out.commands.insert(out.commands.end(), s.commands.begin(), s.commands.end());
  return out;
}

Pattern compile_circuit(const Circuit& circuit, const WireLabeller& label) {
  if (circuit.wires > kMaxQubits) {
    throw std::invalid_argument("circuit exceeds 20 wires");
  }
  for (const Gate& gate : circuit.gates) {
    if (const auto* j = std::get_if<JGate>(&gate)) {
      if (j->wire >= circuit.wires) {
        throw std::invalid_argument("J gate wire out of range");
      }
    } else {
      const auto& cz = std::get<CzGate>(gate);
      if (cz.wire_a >= circuit.wires || cz.wire_b >= circuit.wires ||
          cz.wire_a == cz.wire_b) {
        throw std::invalid_argument("CZ wires must be distinct and in range");
      }
    }
  }

  Pattern p;
  p.name = "compiled";
  std::vector<QubitId> frontier(circuit.wires);
  std::vector<std::size_t> next_index(circuit.wires, 0);
  std::unordered_set<QubitId> seen;
  auto fresh = [&](std::size_t wire) {
    QubitId id = label(wire, next_index[wire]++);
    if (!valid_id(id)) {
      throw std::invalid_argument("labeller produced bad id: '" + id + "'");
    }
    if (!seen.insert(id).second) {
      throw std::invalid_argument("labeller produced duplicate id: " + id);
    }
    p.qubits.push_back(id);
    return id;
  };

  for (std::size_t w = 0; w < circuit.wires; ++w) {
    frontier[w] = fresh(w);
    p.inputs.push_back(frontier[w]);
  }
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    if (const auto* j = std::get_if<JGate>(&*it)) {
      QubitId from = frontier[j->wire];
      QubitId to = fresh(j->wire);
      p.commands.push_back(EntangleCmd{from, to});
      p.commands.push_back(MeasureCmd{from, -j->angle});
      p.commands.push_back(CorrectCmd{PauliAxis::X, to, Signal{{from}}});
      frontier[j->wire] = to;
    } else {
      const auto& cz = std::get<CzGate>(*it);
      p.commands.push_back(EntangleCmd{frontier[cz.wire_a], frontier[cz.wire_b]});
    }
  }
  p.outputs = frontier;
  return p;
}

Pattern compile_circuit(const Circuit& circuit) {
  auto counter = std::make_shared<std::size_t>(0);
  return compile_circuit(circuit, [counter](std::size_t, std::size_t) {
    return std::to_string(++*counter);
  });
}

Pattern controlled_u_pattern(const Matrix& u) {
  GateWord word = controlled_u_decompose(u);
  Pattern p = compile_circuit(word, [](std::size_t wire, std::size_t index) {
    if (wire == 0) {
      if (index > 2) throw std::logic_error("control chain longer than A..C");
      return QubitId(1, "ABC"[index]);
    }
    if (index > 10) throw std::logic_error("target chain longer than a..k");
    return QubitId(1, static_cast<char>('a' + index));
  });
  p.name = "CU";
  return p;
}

std::string serialize_pattern(const Pattern& p) {
  for (const QubitId& q : p.qubits) {
    if (!valid_id(q)) {
      throw std::invalid_argument("qubit id not serializable: '" + q + "'");
    }
  }
  std::string out = "pattern";
  if (!p.name.empty()) out += " " + p.name;
  out += "\n";
  auto header = [&](const char* key, const std::vector<QubitId>& ids) {
    out += key;
    if (!ids.empty()) {
      out += " ";
      out += join_ids(ids);
    }
    out += "\n";
  };
  header("qubits:", p.qubits);
  header("inputs:", p.inputs);
  header("outputs:", p.outputs);
  for (const Command& cmd : p.commands) {
    if (const auto* e = std::get_if<EntangleCmd>(&cmd)) {
      out += "E " + e->a + " " + e->b + "\n";
    } else if (const auto* m = std::get_if<MeasureCmd>(&cmd)) {
      out += "M " + m->qubit + " " + m->angle.to_string() + "\n";
    } else {
      const auto& c = std::get<CorrectCmd>(cmd);
      out += (c.axis == PauliAxis::X ? "X " : "Z ") + c.qubit + " [";
      for (std::size_t i = 0; i < c.signal.sources.size(); ++i) {
        if (i > 0) out += "+";
        out += c.signal.sources[i];
      }
      out += "]\n";
    }
  }
  return out;
}

Pattern parse_pattern(const std::string& text) {
  Pattern p;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int stage = 0;  // 0: pattern, 1: qubits, 2: inputs, 3: outputs, 4: commands

  auto parse_id = [&](const std::string& token) {
    if (!valid_id(token)) {
      throw ParseError(line_no, "bad qubit id: '" + token + "'");
    }
    return token;
  };
  auto parse_id_list = [&](const std::string& rest) {
    std::vector<QubitId> ids;
    std::string trimmed = trim(rest);
    if (trimmed.empty()) return ids;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = trimmed.find(',', start);
      std::string token = trim(trimmed.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start));
      ids.push_back(parse_id(token));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return ids;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (stage == 0) {
      if (line.compare(0, 7, "pattern") != 0 ||
          (line.size() > 7 && line[7] != ' ' && line[7] != '\t')) {
        throw ParseError(line_no, "expected 'pattern <name>'");
      }
      p.name = line.size() > 7 ? trim(line.substr(8)) : "";
      stage = 1;
      continue;
    }
    if (stage >= 1 && stage <= 3) {
      const char* keys[] = {"qubits:", "inputs:", "outputs:"};
      const char* key = keys[stage - 1];
      std::size_t len = std::string(key).size();
      if (line.compare(0, len, key) != 0) {
        throw ParseError(line_no, std::string("expected '") + key + "' header");
      }
      std::vector<QubitId> ids = parse_id_list(line.substr(len));
      if (stage == 1) {
        p.qubits = std::move(ids);
      } else if (stage == 2) {
        p.inputs = std::move(ids);
      } else {
        p.outputs = std::move(ids);
      }
      ++stage;
      continue;
    }

    std::vector<std::string> tokens = split_tokens(line);
    const std::string& kind = tokens[0];
    if (kind == "E") {
      if (tokens.size() != 3) {
        throw ParseError(line_no, "E takes two qubits");
      }
      p.commands.push_back(
          EntangleCmd{parse_id(tokens[1]), parse_id(tokens[2])});
    } else if (kind == "M") {
      if (tokens.size() != 3) {
        throw ParseError(line_no, "M takes a qubit and an angle");
      }
      Angle angle;
      try {
        angle = parse_angle(tokens[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      p.commands.push_back(MeasureCmd{parse_id(tokens[1]), angle});
    } else if (kind == "X" || kind == "Z") {
      if (tokens.size() != 3) {
        throw ParseError(line_no, kind + " takes a qubit and a signal");
      }
      const std::string& sig = tokens[2];
      if (sig.size() < 2 || sig.front() != '[' || sig.back() != ']') {
        throw ParseError(line_no, "signal must be bracketed, e.g. [1+2]");
      }
      Signal signal;
      std::string inner = sig.substr(1, sig.size() - 2);
      if (!inner.empty()) {
        std::size_t start = 0;
        while (true) {
          std::size_t plus = inner.find('+', start);
          std::string token = inner.substr(
              start, plus == std::string::npos ? std::string::npos
                                               : plus - start);
          signal.sources.push_back(parse_id(token));
          if (plus == std::string::npos) break;
          start = plus + 1;
        }
      }
      p.commands.push_back(
          CorrectCmd{kind == "X" ? PauliAxis::X : PauliAxis::Z,
                     parse_id(tokens[1]), std::move(signal)});
    } else {
      throw ParseError(line_no, "unknown command: " + kind);
    }
  }
  if (stage < 4) {
    throw ParseError(line_no, "truncated pattern: missing headers");
  }
  return p;
}

bool patterns_equal(const Pattern& a, const Pattern& b, double angle_tol) {
  if (a.qubits != b.qubits || a.inputs != b.inputs || a.outputs != b.outputs) {
    return false;
  }
  if (a.commands.size() != b.commands.size()) return false;
  for (std::size_t i = 0; i < a.commands.size(); ++i) {
    const Command& ca = a.commands[i];
    const Command& cb = b.commands[i];
    if (ca.index() != cb.index()) return false;
    if (const auto* ea = std::get_if<EntangleCmd>(&ca)) {
      const auto& eb = std::get<EntangleCmd>(cb);
      bool same = (ea->a == eb.a && ea->b == eb.b) ||
                  (ea->a == eb.b && ea->b == eb.a);
      if (!same) return false;
    } else if (const auto* ma = std::get_if<MeasureCmd>(&ca)) {
      const auto& mb = std::get<MeasureCmd>(cb);
      if (ma->qubit != mb.qubit) return false;
      if (angle_tol == 0.0) {
        if (ma->angle.radians() != mb.angle.radians()) return false;
      } else if (ma->angle.distance(mb.angle) > angle_tol) {
        return false;
      }
    } else {
      const auto& xa = std::get<CorrectCmd>(ca);
      const auto& xb = std::get<CorrectCmd>(cb);
      if (xa.axis != xb.axis || xa.qubit != xb.qubit) return false;
      std::vector<QubitId> sa = xa.signal.sources;
      std::vector<QubitId> sb = xb.signal.sources;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return false;
    }
  }
  return true;
}

}  // namespace mbqc
