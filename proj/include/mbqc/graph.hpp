#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbqc/pattern.hpp"

namespace mbqc {

// Undirected simple graph over the pattern's qubits: one edge per distinct
// entangled pair. Boundary vertices are the inputs and outputs.
struct EntanglementGraph {
  std::vector<QubitId> vertices;  // pattern declaration order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // a < b, unique
  std::vector<char> is_input;
  std::vector<char> is_output;

  bool boundary(std::size_t v) const {
    return is_input[v] != 0 || is_output[v] != 0;
  }
  std::size_t index_of(const QubitId& q) const;  // throws if absent

  // Sorted neighbour lists; the traversals below all use this order.
  std::vector<std::vector<std::size_t>> adjacency() const;
};

EntanglementGraph build_graph(const Pattern& p);

// Lengths of the fundamental cycles induced by a breadth-first spanning
// forest (roots and neighbours in index order), sorted ascending. One entry
// per non-tree edge; empty for a forest.
std::vector<std::size_t> cycle_lengths(const EntanglementGraph& g);

struct TwoColouring {
  // Per-vertex colours 0/1 when bipartite.
  std::optional<std::vector<int>> colours;
  // Otherwise a closed odd walk as a vertex sequence (last connects to first).
  std::vector<std::size_t> odd_cycle;

  bool bipartite() const { return colours.has_value(); }
};

TwoColouring two_colour(const EntanglementGraph& g);

struct ComponentDiagnosis {
  std::vector<std::size_t> members;  // ascending vertex indices
  bool has_boundary = false;
  bool bipartite = false;
  bool boundary_monochromatic = false;  // meaningful when bipartite
  std::vector<std::size_t> odd_cycle;   // witness when not bipartite
  std::vector<std::size_t> odd_path;    // odd boundary-to-boundary walk
};

struct EvennessReport {
  // True when every boundary-to-boundary walk has even length: each
  // component containing boundary vertices is bipartite with all its
  // boundary vertices on one side. Components without boundary vertices
  // cannot host such walks and do not affect the verdict, but their
  // diagnosis entries still flag odd cycles.
  bool even = false;
  std::vector<ComponentDiagnosis> components;
};

EvennessReport evenness(const EntanglementGraph& g);
EvennessReport is_even(const Pattern& p);

// Lengths of simple paths between distinct boundary vertices, plus 0 for
// every isolated boundary vertex; sorted ascending, duplicates removed.
// Exhaustive, so the graph may hold at most max_vertices vertices.
std::vector<std::size_t> extreme_path_lengths(const EntanglementGraph& g,
                                              std::size_t max_vertices = 20);

// One "a b" line per edge, with vertex roles in leading comments.
std::string export_edge_list(const EntanglementGraph& g);

}  // namespace mbqc
