#include <doctest.h>

#include <algorithm>

#include "mbqc/graph.hpp"
#include "test_support.hpp"

using mbqc::Angle;
using mbqc::EntangleCmd;
using mbqc::EntanglementGraph;
using mbqc::GateWord;
using mbqc::JGate;
using mbqc::MeasureCmd;
using mbqc::Pattern;
using mbqc::QubitId;

namespace {

Pattern j_chain(int gates) {
  GateWord word;
  word.wires = 1;
  for (int i = 0; i < gates; ++i) {
    word.gates.push_back(JGate{0, Angle(0.1 * (i + 1))});
  }
  return mbqc::compile_circuit(word);
}

Pattern closed_triangle() {
  Pattern p;
  p.qubits = {"a", "b", "c"};
  p.commands = {EntangleCmd{"a", "b"}, EntangleCmd{"b", "c"},
                EntangleCmd{"a", "c"}, MeasureCmd{"a", Angle(0.0)},
                MeasureCmd{"b", Angle(0.0)}, MeasureCmd{"c", Angle(0.0)}};
  return p;
}

}  // namespace

TEST_CASE("build_graph deduplicates edges and records roles") {
  Pattern p = mbqc::cz_pattern("x", "y");
  p.commands.push_back(EntangleCmd{"y", "x"});  // same edge again
  EntanglementGraph g = mbqc::build_graph(p);
  CHECK(g.vertices == std::vector<QubitId>{"x", "y"});
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0] == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(g.is_input[0]);
  CHECK(g.is_output[0]);
  CHECK(g.boundary(1));
  CHECK(g.index_of("y") == 1);
  CHECK_THROWS_AS(g.index_of("z"), std::invalid_argument);
}

TEST_CASE("build_graph rejects self loops and unknown qubits") {
  Pattern p;
  p.qubits = {"a"};
  p.commands = {EntangleCmd{"a", "a"}};
  CHECK_THROWS_AS(mbqc::build_graph(p), std::invalid_argument);
  Pattern q;
  q.qubits = {"a"};
  q.commands = {EntangleCmd{"a", "b"}};
  CHECK_THROWS_AS(mbqc::build_graph(q), std::invalid_argument);
}

TEST_CASE("cycle_lengths on forests and simple cycles") {
  CHECK(mbqc::cycle_lengths(mbqc::build_graph(j_chain(4))).empty());
  CHECK(mbqc::cycle_lengths(mbqc::build_graph(closed_triangle())) ==
        std::vector<std::size_t>{3});

  // two triangles sharing vertex b
  Pattern p = closed_triangle();
  p.qubits.push_back("d");
  p.qubits.push_back("e");
  p.commands.insert(p.commands.begin() + 3,
                    {EntangleCmd{"b", "d"}, EntangleCmd{"d", "e"},
                     EntangleCmd{"b", "e"}});
  p.commands.push_back(MeasureCmd{"d", Angle(0.0)});
  p.commands.push_back(MeasureCmd{"e", Angle(0.0)});
  CHECK(mbqc::cycle_lengths(mbqc::build_graph(p)) ==
        std::vector<std::size_t>{3, 3});
}

TEST_CASE("two_colour finds colourings and odd-cycle witnesses") {
  EntanglementGraph chain = mbqc::build_graph(j_chain(3));
  mbqc::TwoColouring colouring = mbqc::two_colour(chain);
  REQUIRE(colouring.bipartite());
  const auto& colours = *colouring.colours;
  REQUIRE(colours.size() == 4);
  for (const auto& [a, b] : chain.edges) {
    CHECK(colours[a] != colours[b]);
  }

  EntanglementGraph tri = mbqc::build_graph(closed_triangle());
  mbqc::TwoColouring odd = mbqc::two_colour(tri);
  CHECK(!odd.bipartite());
  REQUIRE(odd.odd_cycle.size() % 2 == 1);
  auto adjacent = [&](std::size_t u, std::size_t v) {
    return std::find(tri.edges.begin(), tri.edges.end(),
                     std::make_pair(std::min(u, v), std::max(u, v))) !=
           tri.edges.end();
  };
  for (std::size_t i = 0; i + 1 < odd.odd_cycle.size(); ++i) {
    CHECK(adjacent(odd.odd_cycle[i], odd.odd_cycle[i + 1]));
  }
  CHECK(adjacent(odd.odd_cycle.back(), odd.odd_cycle.front()));
}

TEST_CASE("evenness follows boundary walk parity") {
  // single CZ: the two boundary vertices sit one step apart
  CHECK(!mbqc::is_even(mbqc::cz_pattern()).even);
  // one J step: input and output are adjacent
  CHECK(!mbqc::is_even(mbqc::j_pattern(Angle(0.2))).even);
  // two J steps: boundary vertices at distance two
  CHECK(mbqc::is_even(j_chain(2)).even);
  CHECK(!mbqc::is_even(j_chain(3)).even);
  CHECK(mbqc::is_even(j_chain(4)).even);
}

TEST_CASE("boundary-free odd components are flagged but do not veto") {
  Pattern even_part = j_chain(2);
  Pattern p = even_part;
  Pattern tri = closed_triangle();
  for (const QubitId& q : tri.qubits) p.qubits.push_back("t" + q);
  for (const auto& cmd : tri.commands) {
    if (const auto* e = std::get_if<EntangleCmd>(&cmd)) {
      p.commands.push_back(EntangleCmd{"t" + e->a, "t" + e->b});
    } else {
      const auto& m = std::get<MeasureCmd>(cmd);
      p.commands.push_back(MeasureCmd{"t" + m.qubit, m.angle});
    }
  }
  mbqc::EvennessReport report = mbqc::is_even(p);
  CHECK(report.even);
  REQUIRE(report.components.size() == 2);
  bool flagged = false;
  for (const auto& diag : report.components) {
    if (!diag.has_boundary) {
      CHECK(!diag.bipartite);
      CHECK(!diag.odd_cycle.empty());
      flagged = true;
    }
  }
  CHECK(flagged);
}

TEST_CASE("odd boundary pairs come with a witness path") {
  mbqc::EvennessReport report = mbqc::is_even(j_chain(3));
  REQUIRE(!report.even);
  REQUIRE(report.components.size() == 1);
  const auto& diag = report.components[0];
  CHECK(diag.bipartite);
  CHECK(!diag.boundary_monochromatic);
  REQUIRE(diag.odd_path.size() >= 2);
  CHECK(diag.odd_path.size() % 2 == 0);  // even vertex count = odd edges
}

TEST_CASE("extreme path lengths on the worked examples") {
  // no commands, one qubit in both roles: only the trivial path
  Pattern trivial;
  trivial.qubits = {"q"};
  trivial.inputs = {"q"};
  trivial.outputs = {"q"};
  CHECK(mbqc::extreme_path_lengths(mbqc::build_graph(trivial)) ==
        std::vector<std::size_t>{0});

  CHECK(mbqc::extreme_path_lengths(mbqc::build_graph(mbqc::cz_pattern())) ==
        std::vector<std::size_t>{1});

  CHECK(mbqc::extreme_path_lengths(mbqc::build_graph(j_chain(2))) ==
        std::vector<std::size_t>{2});
}

TEST_CASE("extreme path enumeration stops at the vertex cap") {
  Pattern big = j_chain(20);  // 21 qubits
  EntanglementGraph g = mbqc::build_graph(big);
  CHECK_THROWS_AS(mbqc::extreme_path_lengths(g), std::invalid_argument);
  CHECK(mbqc::extreme_path_lengths(g, 25) == std::vector<std::size_t>{20});
}

TEST_CASE("controlled-U graph shape") {
  Pattern p = mbqc::controlled_u_pattern(support::mat_h());
  EntanglementGraph g = mbqc::build_graph(p);
  CHECK(g.vertices.size() == 14);
  CHECK(g.edges.size() == 14);
  CHECK(mbqc::cycle_lengths(g) == std::vector<std::size_t>{6});
  CHECK(mbqc::two_colour(g).bipartite());
  CHECK(mbqc::evenness(g).even);
  CHECK(mbqc::extreme_path_lengths(g) ==
        std::vector<std::size_t>{2, 4, 6, 8, 10, 12});
}

TEST_CASE("edge list export carries roles and edges") {
  Pattern p = mbqc::controlled_u_pattern(support::mat_x());
  EntanglementGraph g = mbqc::build_graph(p);
  std::string text = mbqc::export_edge_list(g);
  CHECK(text.find("# entanglement graph: 14 vertices, 14 edges\n") !=
        std::string::npos);
  CHECK(text.find("# inputs: A a\n") != std::string::npos);
  CHECK(text.find("# outputs: k C\n") != std::string::npos);
  CHECK(text.find("\nA b\n") != std::string::npos);
  CHECK(text.find("\nA f\n") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4 + 14);
  CHECK(mbqc::export_edge_list(g) == text);
}
