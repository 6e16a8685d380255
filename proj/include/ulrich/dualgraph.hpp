#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ulrich {

struct GraphVertex {
  std::string id;
  /// E_i^2 = weight = -b with b >= 2.
  int weight = -2;
};

/// Weighted dual graph of a minimal resolution. Construction rejects loops,
/// multi-edges, b < 2, disconnected graphs and intersection matrices that
/// are not negative definite (InvariantViolation).
class DualGraph {
 public:
  DualGraph(std::vector<GraphVertex> vertices, const std::vector<std::pair<std::string, std::string>>& edges);

  /// `{"vertices":[{"id":"E0","weight":-3}],"edges":[["E0","E1"]]}`.
  static DualGraph from_json(const std::string& text);
  std::string to_json() const;

  std::size_t size() const { return vertices_.size(); }
  const std::string& id(std::size_t i) const { return vertices_[i].id; }
  int weight(std::size_t i) const { return vertices_[i].weight; }
  int b(std::size_t i) const { return -vertices_[i].weight; }
  std::size_t index_of(const std::string& id) const;
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_[i]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// E_i . E_j.
  int intersection(std::size_t i, std::size_t j) const;

  /// Same graph with vertices listed in the order perm[0], perm[1], ...
  DualGraph permuted(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// Coefficients indexed like the graph's vertices.
using Cycle = std::vector<int>;

Cycle cycle_from_json(const DualGraph& G, const std::string& text);
/// Keys in vertex order.
std::string cycle_to_json(const DualGraph& G, const Cycle& Z);

int intersection_pairing(const DualGraph& G, const Cycle& Y, const Cycle& Z);
/// Z . E_i for every i.
std::vector<int> pairing_with_vertices(const DualGraph& G, const Cycle& Z);

/// Laufer's sequence from the reduced cycle, always raising the smallest
/// index with Z . E_i > 0.
Cycle fundamental_cycle(const DualGraph& G);
/// Z . E_i <= 0 for all i.
bool is_antinef(const DualGraph& G, const Cycle& Z);
/// K . E_i = b_i - 2.
std::vector<int> canonical_numbers(const DualGraph& G);
int canonical_pairing(const DualGraph& G, const Cycle& Y);
int arithmetic_genus(const DualGraph& G, const Cycle& Y);
/// p_a(Z_0) = 0.
bool rationality_check(const DualGraph& G);

/// -Z_0^2.
int graph_multiplicity(const DualGraph& G);
/// -(Z^2 + K.Z) / 2 for an anti-nef Z on a rational graph.
int cycle_length(const DualGraph& G, const Cycle& Z);
/// -Z.Z_0 + 1 for an anti-nef Z on a rational graph.
int cycle_mu(const DualGraph& G, const Cycle& Z);

/// Some b_j >= 3 with Z_0 . E_j < 0.
bool unique_ulrich_filter(const DualGraph& G);

/// Connected vertex sets S with {b >= 3} inside S inside {Z_0 . E = 0}.
std::vector<std::vector<std::size_t>> ulrich_support_candidates(const DualGraph& G);

struct UlrichChain {
  /// Z_0, Z_1, ..., Z_s.
  std::vector<Cycle> cycles;
  /// Y_1, ..., Y_s.
  std::vector<Cycle> steps;
};

struct ChainEnumeration {
  /// One chain per distinct final cycle; the first is the empty chain (Z_0).
  std::vector<UlrichChain> chains;
  /// Extensions satisfying the three vanishings whose sum was not anti-nef.
  std::size_t antinef_pruned = 0;
  /// Some chain reached max_steps with extensions left.
  bool truncated = false;

  std::vector<Cycle> cycles() const;
};

/// Depth-first search over chains Z_k = Z_{k-1} + Y_k with
/// Y_k <= Y_{k-1} <= Z_0, Y_k . Z_{k-1} = p_a(Y_k) = K.(Z_0 - Y_k) = 0 and
/// every Z_k anti-nef.
ChainEnumeration enumerate_ulrich_chains(const DualGraph& G, int max_steps = 16);

}  // namespace ulrich
