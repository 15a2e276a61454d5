#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mbqc/pattern.hpp"
#include "test_support.hpp"

using mbqc::Angle;
using mbqc::Command;
using mbqc::CorrectCmd;
using mbqc::CzGate;
using mbqc::EntangleCmd;
using mbqc::GateWord;
using mbqc::JGate;
using mbqc::MeasureCmd;
using mbqc::ParseError;
using mbqc::Pattern;
using mbqc::PauliAxis;
using mbqc::QubitId;
using mbqc::Signal;
using support::kPi;

namespace {

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("j_pattern holds the three defining commands") {
  Pattern p = mbqc::j_pattern(Angle(kPi / 3));
  CHECK(p.qubits == std::vector<QubitId>{"1", "2"});
  CHECK(p.inputs == std::vector<QubitId>{"1"});
  CHECK(p.outputs == std::vector<QubitId>{"2"});
  REQUIRE(p.commands.size() == 3);
  const auto& e = std::get<EntangleCmd>(p.commands[0]);
  CHECK(e.a == "1");
  CHECK(e.b == "2");
  const auto& m = std::get<MeasureCmd>(p.commands[1]);
  CHECK(m.qubit == "1");
  CHECK(m.angle.distance(Angle(-kPi / 3)) == 0.0);
  const auto& x = std::get<CorrectCmd>(p.commands[2]);
  CHECK(x.axis == PauliAxis::X);
  CHECK(x.qubit == "2");
  CHECK(x.signal.sources == std::vector<QubitId>{"1"});
  CHECK(mbqc::validate(p).ok());
}

TEST_CASE("cz_pattern entangles two input-output qubits") {
  Pattern p = mbqc::cz_pattern("a", "b");
  CHECK(p.inputs == std::vector<QubitId>{"a", "b"});
  CHECK(p.outputs == std::vector<QubitId>{"a", "b"});
  REQUIRE(p.commands.size() == 1);
  CHECK(std::get<EntangleCmd>(p.commands[0]).a == "a");
  CHECK(mbqc::validate(p).ok());
}

TEST_CASE("permutation_pattern routes without commands") {
  Pattern p = mbqc::permutation_pattern({"x", "y"}, {"y", "x"});
  CHECK(p.commands.empty());
  CHECK(mbqc::validate(p).ok());
  CHECK_THROWS_AS(mbqc::permutation_pattern({"x"}, {"y"}),
                  std::invalid_argument);
}

TEST_CASE("validate catches structural problems") {
  Pattern p;
  p.qubits = {"1", "1"};
  p.inputs = {"2"};
  p.outputs = {"1"};
  auto report = mbqc::validate(p);
  CHECK(!report.ok());
  bool saw_duplicate = false;
  bool saw_undeclared_input = false;
  for (const auto& issue : report.issues) {
    if (issue.message.find("duplicate qubit") != std::string::npos) {
      saw_duplicate = true;
    }
    if (issue.message.find("input not declared") != std::string::npos) {
      saw_undeclared_input = true;
    }
  }
  CHECK(saw_duplicate);
  CHECK(saw_undeclared_input);
}

TEST_CASE("validate enforces measurement discipline") {
  Pattern p = mbqc::j_pattern(Angle(0.0));

  SUBCASE("valid as built") { CHECK(mbqc::validate(p).ok()); }

  SUBCASE("acting on a measured qubit") {
    p.commands.push_back(EntangleCmd{"1", "2"});
    auto report = mbqc::validate(p);
    REQUIRE(!report.ok());
    CHECK(report.issues[0].command_index == 3);
    CHECK(report.issues[0].message.find("already measured") !=
          std::string::npos);
  }

  SUBCASE("measuring an output") {
    p.commands.push_back(MeasureCmd{"2", Angle(0.0)});
    auto report = mbqc::validate(p);
    REQUIRE(!report.ok());
    CHECK(report.issues[0].message.find("output") != std::string::npos);
  }

  SUBCASE("signal before measurement") {
    Pattern q;
    q.qubits = {"1", "2"};
    q.inputs = {"1", "2"};
    q.outputs = {"1", "2"};
    q.commands = {CorrectCmd{PauliAxis::Z, "1", Signal{{"2"}}}};
    auto report = mbqc::validate(q);
    REQUIRE(!report.ok());
    CHECK(report.issues[0].message.find("before it is measured") !=
          std::string::npos);
  }

  SUBCASE("dangling non-output qubit") {
    Pattern q;
    q.qubits = {"1", "2"};
    q.inputs = {"1"};
    q.outputs = {"1"};
    auto report = mbqc::validate(q);
    REQUIRE(!report.ok());
    CHECK(report.issues[0].message.find("neither measured nor an output") !=
          std::string::npos);
  }

  SUBCASE("self entanglement") {
    Pattern q = mbqc::cz_pattern();
    q.commands.push_back(EntangleCmd{"1", "1"});
    auto report = mbqc::validate(q);
    REQUIRE(!report.ok());
    CHECK(report.issues[0].message.find("distinct") != std::string::npos);
  }
}

TEST_CASE("tensor prefixes both operands") {
  Pattern t = mbqc::tensor(mbqc::j_pattern(Angle(0.1)), mbqc::cz_pattern());
  CHECK(t.qubits ==
        std::vector<QubitId>{"L/1", "L/2", "R/1", "R/2"});
  CHECK(t.inputs == std::vector<QubitId>{"L/1", "R/1", "R/2"});
  CHECK(t.outputs == std::vector<QubitId>{"L/2", "R/1", "R/2"});
  CHECK(mbqc::validate(t).ok());
}

TEST_CASE("tensor nests without label collisions") {
  Pattern a = mbqc::j_pattern(Angle(0.2));
  Pattern nested = mbqc::tensor(mbqc::tensor(a, a), mbqc::tensor(a, a));
  CHECK(mbqc::validate(nested).ok());
  CHECK(nested.qubits.size() == 8);
  CHECK(nested.qubits[0] == "L/L/1");
  CHECK(nested.qubits.back() == "R/R/2");
}

TEST_CASE("compose identifies outputs with inputs positionally") {
  Pattern second = mbqc::j_pattern(Angle(0.4));
  Pattern first = mbqc::j_pattern(Angle(0.3));
  Pattern c = mbqc::compose(second, first);
  // first's output L/2 doubles as second's input
  CHECK(c.qubits == std::vector<QubitId>{"L/1", "L/2", "R/2"});
  CHECK(c.inputs == std::vector<QubitId>{"L/1"});
  CHECK(c.outputs == std::vector<QubitId>{"R/2"});
  REQUIRE(c.commands.size() == 6);
  const auto& bridge = std::get<EntangleCmd>(c.commands[3]);
  CHECK(bridge.a == "L/2");
  CHECK(bridge.b == "R/2");
  CHECK(mbqc::validate(c).ok());

  CHECK_THROWS_AS(mbqc::compose(mbqc::cz_pattern(), mbqc::j_pattern(Angle(0))),
                  std::invalid_argument);
}

TEST_CASE("compose rejects invalid operands") {
  Pattern broken;
  broken.qubits = {"1"};
  broken.inputs = {"1"};
  broken.outputs = {};
  CHECK_THROWS_AS(mbqc::compose(mbqc::j_pattern(Angle(0)), broken),
                  std::invalid_argument);
}

TEST_CASE("compile_circuit of a single J gate is the generator pattern") {
  GateWord circuit;
  circuit.wires = 1;
  circuit.gates = {JGate{0, Angle(0.9)}};
  Pattern compiled = mbqc::compile_circuit(circuit);
  CHECK(mbqc::patterns_equal(compiled, mbqc::j_pattern(Angle(0.9))));
}

TEST_CASE("compile_circuit walks gates from the right") {
  // word J0(a) CZ J1(b): J1(b) runs first
  GateWord circuit;
  circuit.wires = 2;
  circuit.gates = {JGate{0, Angle(0.5)}, CzGate{0, 1}, JGate{1, Angle(0.25)}};
  Pattern p = mbqc::compile_circuit(circuit);
  CHECK(p.qubits == std::vector<QubitId>{"1", "2", "3", "4"});
  CHECK(p.inputs == std::vector<QubitId>{"1", "2"});
  CHECK(p.outputs == std::vector<QubitId>{"4", "3"});
  REQUIRE(p.commands.size() == 7);
  // J1(b): fresh qubit 3 on wire 1
  CHECK(std::get<EntangleCmd>(p.commands[0]).a == "2");
  CHECK(std::get<EntangleCmd>(p.commands[0]).b == "3");
  CHECK(std::get<MeasureCmd>(p.commands[1]).qubit == "2");
  CHECK(std::get<MeasureCmd>(p.commands[1]).angle.distance(Angle(-0.25)) ==
        0.0);
  // CZ on the current frontiers 1 and 3
  const auto& cz = std::get<EntangleCmd>(p.commands[3]);
  CHECK(cz.a == "1");
  CHECK(cz.b == "3");
  // J0(a): fresh qubit 4 on wire 0
  CHECK(std::get<EntangleCmd>(p.commands[4]).b == "4");
  CHECK(mbqc::validate(p).ok());
}

TEST_CASE("compile_circuit is deterministic") {
  GateWord circuit;
  circuit.wires = 2;
  circuit.gates = {JGate{1, Angle(1.0)}, CzGate{1, 0}, JGate{0, Angle(-2.0)}};
  Pattern a = mbqc::compile_circuit(circuit);
  Pattern b = mbqc::compile_circuit(circuit);
  CHECK(mbqc::patterns_equal(a, b));
  CHECK(mbqc::serialize_pattern(a) == mbqc::serialize_pattern(b));
}

TEST_CASE("controlled_u_pattern lays out the two labelled chains") {
  mbqc::Matrix u = support::mat_h();
  Pattern p = mbqc::controlled_u_pattern(u);
  CHECK(p.name == "CU");
  CHECK(p.qubits.size() == 14);
  CHECK(p.inputs == std::vector<QubitId>{"A", "a"});
  CHECK(p.outputs == std::vector<QubitId>{"C", "k"});
  CHECK(mbqc::validate(p).ok());

  mbqc::JDecomposition d = mbqc::j_decompose(u);
  double alpha = d.alpha.radians();
  double beta = d.beta.radians();
  double gamma = d.gamma.radians();
  double delta = d.delta.radians();
  double alpha_prime = alpha + (beta + gamma + delta) / 2.0;

  Pattern expected;
  expected.qubits = {"A", "a", "b", "c", "d", "e", "f",
                     "g", "h", "i", "j", "k", "B", "C"};
  expected.inputs = {"A", "a"};
  expected.outputs = {"C", "k"};
  auto j_step = [&](const QubitId& from, const QubitId& to, double measure) {
    expected.commands.push_back(EntangleCmd{from, to});
    expected.commands.push_back(MeasureCmd{from, Angle(measure)});
    expected.commands.push_back(CorrectCmd{PauliAxis::X, to, Signal{{from}}});
  };
  j_step("a", "b", (beta - delta + kPi) / 2.0);
  expected.commands.push_back(EntangleCmd{"A", "b"});
  j_step("b", "c", 0.0);
  j_step("c", "d", (kPi + delta + beta) / 2.0);
  j_step("d", "e", -gamma / 2.0);
  j_step("e", "f", -kPi / 2.0);
  expected.commands.push_back(EntangleCmd{"A", "f"});
  j_step("f", "g", 0.0);
  j_step("g", "h", kPi / 2.0);
  j_step("h", "i", gamma / 2.0);
  j_step("i", "j", -beta - kPi);
  j_step("j", "k", 0.0);
  j_step("A", "B", -alpha_prime);
  j_step("B", "C", 0.0);

  CHECK(mbqc::patterns_equal(p, expected, 1e-12));
}

TEST_CASE("serialize then parse round-trips") {
  mbqc::Matrix u = support::mat_h();
  Pattern p = mbqc::controlled_u_pattern(u);
  std::string text = mbqc::serialize_pattern(p);
  Pattern back = mbqc::parse_pattern(text);
  CHECK(back.name == p.name);
  CHECK(mbqc::patterns_equal(back, p, 1e-9));
  CHECK(mbqc::serialize_pattern(back) == text);
}

TEST_CASE("parser accepts comments, blank lines and empty signals") {
  std::string text =
      "# leading comment\n"
      "pattern demo\n"
      "\n"
      "qubits: 1, 2   # trailing comment\n"
      "inputs: 1\n"
      "outputs: 2\n"
      "E 1 2\n"
      "M 1 -1/2pi\n"
      "X 2 []\n";
  Pattern p = mbqc::parse_pattern(text);
  CHECK(p.name == "demo");
  CHECK(p.qubits == std::vector<QubitId>{"1", "2"});
  REQUIRE(p.commands.size() == 3);
  CHECK(std::get<MeasureCmd>(p.commands[1]).angle.radians() == -kPi / 2);
  CHECK(std::get<CorrectCmd>(p.commands[2]).signal.sources.empty());
}

TEST_CASE("parser reports line numbers") {
  std::string text =
      "pattern bad\n"
      "qubits: 1, 2\n"
      "inputs: 1\n"
      "outputs: 2\n"
      "E 1 2\n"
      "M 1 nonsense\n";
  try {
    mbqc::parse_pattern(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 6);
  }

  CHECK_THROWS_AS(mbqc::parse_pattern(""), ParseError);
  CHECK_THROWS_AS(mbqc::parse_pattern("pattern x\nqubits: 1\n"), ParseError);
  CHECK_THROWS_AS(
      mbqc::parse_pattern(
          "pattern x\nqubits: 1\ninputs: 1\noutputs: 1\nQ 1\n"),
      ParseError);
  CHECK_THROWS_AS(
      mbqc::parse_pattern(
          "pattern x\nqubits: 1\ninputs: 1\noutputs: 1\nX 1 1\n"),
      ParseError);
  CHECK_THROWS_AS(
      mbqc::parse_pattern(
          "wrong x\nqubits: 1\ninputs: 1\noutputs: 1\n"),
      ParseError);
}

TEST_CASE("patterns_equal compares structure, not names") {
  Pattern a = mbqc::j_pattern(Angle(0.5));
  Pattern b = a;
  b.name = "other";
  CHECK(mbqc::patterns_equal(a, b));
  b.commands[1] = MeasureCmd{"1", Angle(-0.5 + 1e-13)};
  CHECK(!mbqc::patterns_equal(a, b));
  CHECK(mbqc::patterns_equal(a, b, 1e-12));
}

TEST_CASE("golden controlled-X pattern file") {
  Pattern p = mbqc::controlled_u_pattern(support::mat_x());
  std::string expected = read_all(std::string(TEST_DATA_DIR) +
                                  "/cu_x.pattern");
  CHECK(mbqc::serialize_pattern(p) == expected);
}
