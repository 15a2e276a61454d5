#include "mbqc/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace mbqc {

namespace {

constexpr std::size_t kNoVertex = static_cast<std::size_t>(-1);

// BFS-colours the component containing root (neighbours in ascending index
// order). Returns the first conflicting edge if the component is odd.
std::optional<std::pair<std::size_t, std::size_t>> colour_component(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t root,
    std::vector<int>& colour, std::vector<std::size_t>& parent,
    std::vector<std::size_t>& members) {
  colour[root] = 0;
  parent[root] = kNoVertex;
  std::deque<std::size_t> queue{root};
  members.push_back(root);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u]) {
      if (colour[v] == -1) {
        colour[v] = 1 - colour[u];
        parent[v] = u;
        members.push_back(v);
        queue.push_back(v);
      } else if (colour[v] == colour[u]) {
        return std::make_pair(u, v);
      }
    }
  }
  return std::nullopt;
}

// Closed odd walk through the conflict edge (u,v): u up to the lowest common
// ancestor, then back down to v.
std::vector<std::size_t> odd_cycle_witness(
    const std::vector<std::size_t>& parent, std::size_t u, std::size_t v) {
  std::vector<std::size_t> up;
  for (std::size_t x = u; x != kNoVertex; x = parent[x]) up.push_back(x);
  std::vector<std::size_t> down;
  std::size_t lca = kNoVertex;
  for (std::size_t x = v; x != kNoVertex; x = parent[x]) {
    auto it = std::find(up.begin(), up.end(), x);
    if (it != up.end()) {
      lca = x;
      break;
    }
    down.push_back(x);
  }
  std::vector<std::size_t> cycle;
  for (std::size_t x : up) {
    cycle.push_back(x);
    if (x == lca) break;
  }
  cycle.insert(cycle.end(), down.rbegin(), down.rend());
  return cycle;
}

// Shortest path between two vertices of one component, as a vertex sequence.
std::vector<std::size_t> bfs_path(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
    std::size_t to) {
  std::vector<std::size_t> parent(adj.size(), kNoVertex);
  std::vector<char> seen(adj.size(), 0);
  std::deque<std::size_t> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (std::size_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t x = to; x != kNoVertex; x = parent[x]) path.push_back(x);
  if (path.empty() || path.back() != from) {
    if (from == to) return {from};
    return {};
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::size_t EntanglementGraph::index_of(const QubitId& q) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == q) return i;
  }
  throw std::invalid_argument("vertex not in graph: " + q);
}

std::vector<std::vector<std::size_t>> EntanglementGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
  }
  return adj;
}

EntanglementGraph build_graph(const Pattern& p) {
  EntanglementGraph g;
  g.vertices = p.qubits;
  std::unordered_map<QubitId, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!index.emplace(g.vertices[i], i).second) {
      throw std::invalid_argument("duplicate qubit id: " + g.vertices[i]);
    }
  }
  auto lookup = [&](const QubitId& q) {
    auto it = index.find(q);
    if (it == index.end()) {
      throw std::invalid_argument("command references undeclared qubit " + q);
    }
    return it->second;
  };

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const Command& cmd : p.commands) {
    if (const auto* e = std::get_if<EntangleCmd>(&cmd)) {
      std::size_t a = lookup(e->a);
      std::size_t b = lookup(e->b);
      if (a == b) {
        throw std::invalid_argument("self-entanglement on qubit " + e->a);
      }
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  g.edges.assign(edges.begin(), edges.end());

  g.is_input.assign(g.vertices.size(), 0);
  g.is_output.assign(g.vertices.size(), 0);
  for (const QubitId& q : p.inputs) g.is_input[lookup(q)] = 1;
  for (const QubitId& q : p.outputs) g.is_output[lookup(q)] = 1;
  return g;
}

std::vector<std::size_t> cycle_lengths(const EntanglementGraph& g) {
  auto adj = g.adjacency();
  std::size_t n = g.vertices.size();
  std::vector<std::size_t> parent(n, kNoVertex);
  std::vector<std::size_t> depth(n, 0);
  std::vector<char> visited(n, 0);

  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (!visited[v]) {
          visited[v] = 1;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }

  std::vector<std::size_t> lengths;
  for (const auto& [a, b] : g.edges) {
    if (parent[a] == b || parent[b] == a) continue;  // tree edge
    std::size_t x = a;
    std::size_t y = b;
    std::size_t steps = 0;
    while (depth[x] > depth[y]) {
      x = parent[x];
      ++steps;
    }
    while (depth[y] > depth[x]) {
      y = parent[y];
      ++steps;
    }
    while (x != y) {
      x = parent[x];
      y = parent[y];
      steps += 2;
    }
    lengths.push_back(steps + 1);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

TwoColouring two_colour(const EntanglementGraph& g) {
  auto adj = g.adjacency();
  std::size_t n = g.vertices.size();
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> parent(n, kNoVertex);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    std::vector<std::size_t> members;
    if (auto conflict = colour_component(adj, root, colour, parent, members)) {
      TwoColouring out;
      out.odd_cycle = odd_cycle_witness(parent, conflict->first,
                                        conflict->second);
      return out;
    }
  }
  TwoColouring out;
  out.colours = std::move(colour);
  return out;
}

EvennessReport evenness(const EntanglementGraph& g) {
  auto adj = g.adjacency();
  std::size_t n = g.vertices.size();
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> parent(n, kNoVertex);

  EvennessReport report;
  report.even = true;
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    ComponentDiagnosis diag;
    auto conflict =
        colour_component(adj, root, colour, parent, diag.members);
    std::sort(diag.members.begin(), diag.members.end());
    diag.bipartite = !conflict.has_value();
    if (conflict) {
      diag.odd_cycle =
          odd_cycle_witness(parent, conflict->first, conflict->second);
    }
    for (std::size_t v : diag.members) {
      if (g.boundary(v)) diag.has_boundary = true;
    }
    if (diag.bipartite) {
      std::size_t first_boundary = kNoVertex;
      std::size_t other_side = kNoVertex;
      bool mono = true;
      for (std::size_t v : diag.members) {
        if (!g.boundary(v)) continue;
        if (first_boundary == kNoVertex) {
          first_boundary = v;
        } else if (colour[v] != colour[first_boundary]) {
          mono = false;
          if (other_side == kNoVertex) other_side = v;
        }
      }
      diag.boundary_monochromatic = mono;
      if (!mono) {
        diag.odd_path = bfs_path(adj, first_boundary, other_side);
      }
    }
    if (diag.has_boundary &&
        !(diag.bipartite && diag.boundary_monochromatic)) {
      report.even = false;
    }
    report.components.push_back(std::move(diag));
  }
  return report;
}

EvennessReport is_even(const Pattern& p) { return evenness(build_graph(p)); }

std::vector<std::size_t> extreme_path_lengths(const EntanglementGraph& g,
                                              std::size_t max_vertices) {
  std::size_t n = g.vertices.size();
  if (n > max_vertices) {
    throw std::invalid_argument(
        "graph too large for exhaustive path enumeration");
  }
  auto adj = g.adjacency();
  std::set<std::size_t> lengths;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.boundary(v) && adj[v].empty()) lengths.insert(0);
  }

  std::vector<char> on_path(n, 0);
  // Simple paths from u to any later boundary vertex; paths may pass
  // through boundary vertices, every boundary hit is recorded.
  auto dfs = [&](auto&& self, std::size_t u, std::size_t v,
                 std::size_t len) -> void {
    if (v != u && v > u && g.boundary(v)) lengths.insert(len);
    for (std::size_t w : adj[v]) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      self(self, u, w, len + 1);
      on_path[w] = 0;
    }
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (!g.boundary(u)) continue;
    on_path[u] = 1;
    dfs(dfs, u, u, 0);
    on_path[u] = 0;
  }
  return {lengths.begin(), lengths.end()};
}

std::string export_edge_list(const EntanglementGraph& g) {
  std::string out = "# entanglement graph: " +
                    std::to_string(g.vertices.size()) + " vertices, " +
                    std::to_string(g.edges.size()) + " edges\n";
  auto role_line = [&](const char* role, const std::vector<char>& flags) {
    std::string line = std::string("# ") + role + ":";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (flags[v]) line += " " + g.vertices[v];
    }
    return line + "\n";
  };
  out += role_line("inputs", g.is_input);
  out += role_line("outputs", g.is_output);
  std::string vertices = "# vertices:";
  for (const QubitId& v : g.vertices) vertices += " " + v;
  out += vertices + "\n";
  for (const auto& [a, b] : g.edges) {
    out += g.vertices[a] + " " + g.vertices[b] + "\n";
  }
  return out;
}

}  // namespace mbqc
