#include "ulrich/dualgraph.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

using ordered_json = nlohmann::ordered_json;

// Sylvester's criterion on -M, with fraction-free elimination.
bool negative_definite(const DualGraph& G) {
  std::size_t n = G.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -G.intersection(i, j);
  }
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // a[k][k] is the (k+1)-th leading principal minor.
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return true;
}

bool connected_subset(const DualGraph& G, const std::vector<bool>& in) {
  std::size_t start = G.size();
  std::size_t total = 0;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (in[i]) {
      ++total;
      if (start == G.size()) start = i;
    }
  }
  if (total == 0) return false;
  std::vector<bool> seen(G.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t w : G.neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == total;
}

void require_size(const DualGraph& G, const Cycle& Z) {
  if (Z.size() != G.size()) {
    throw ShapeError("cycle has " + std::to_string(Z.size()) + " coefficients, graph has " +
                     std::to_string(G.size()) + " vertices");
  }
}

void require_positive(const DualGraph& G, const Cycle& Z) {
  require_size(G, Z);
  bool some = false;
  for (int c : Z) {
    if (c < 0) throw PreconditionError("cycle has a negative coefficient");
    some = some || c > 0;
  }
  if (!some) throw PreconditionError("cycle is zero");
}

void require_rational_antinef(const DualGraph& G, const Cycle& Z) {
  require_positive(G, Z);
  if (!is_antinef(G, Z)) throw PreconditionError("cycle is not anti-nef");
  if (!rationality_check(G)) throw PreconditionError("graph is not rational");
}

}  // namespace

DualGraph::DualGraph(std::vector<GraphVertex> vertices, const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)), adj_(vertices_.size()) {
  if (vertices_.empty()) throw InvariantViolation("graph has no vertices");
  std::set<std::string> ids;
  for (const auto& v : vertices_) {
    if (!ids.insert(v.id).second) throw InvariantViolation("duplicate vertex id '" + v.id + "'");
    if (v.weight > -2) throw InvariantViolation("vertex '" + v.id + "' has weight " + std::to_string(v.weight));
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : edges) {
    std::size_t i = index_of(a);
    std::size_t j = index_of(b);
    if (i == j) throw InvariantViolation("loop at '" + a + "'");
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second) throw InvariantViolation("repeated edge " + a + " - " + b);
    edges_.emplace_back(key.first, key.second);
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  for (auto& n : adj_) std::sort(n.begin(), n.end());
  if (!connected_subset(*this, std::vector<bool>(size(), true))) throw InvariantViolation("graph is not connected");
  if (!negative_definite(*this)) throw InvariantViolation("intersection matrix is not negative definite");
}

std::size_t DualGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  throw InvariantViolation("unknown vertex '" + id + "'");
}

int DualGraph::intersection(std::size_t i, std::size_t j) const {
  if (i == j) return vertices_[i].weight;
  return std::binary_search(adj_[i].begin(), adj_[i].end(), j) ? 1 : 0;
}

DualGraph DualGraph::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != size()) throw ShapeError("permutation size mismatch");
  std::vector<GraphVertex> vs;
  for (std::size_t p : perm) vs.push_back(vertices_.at(p));
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& [i, j] : edges_) es.emplace_back(vertices_[i].id, vertices_[j].id);
  return DualGraph(std::move(vs), es);
}

DualGraph DualGraph::from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  try {
    std::vector<GraphVertex> vs;
    for (const auto& v : doc.at("vertices")) vs.push_back({v.at("id").get<std::string>(), v.at("weight").get<int>()});
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: an edge must list two ids");
      es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return DualGraph(std::move(vs), es);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

std::string DualGraph::to_json() const {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (const auto& v : vertices_) doc["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
  doc["edges"] = ordered_json::array();
  for (const auto& [i, j] : edges_) doc["edges"].push_back({vertices_[i].id, vertices_[j].id});
  return doc.dump();
}

Cycle cycle_from_json(const DualGraph& G, const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cycle JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("cycle JSON must be an object");
  Cycle Z(G.size(), 0);
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number_integer()) throw ParseError("cycle coefficient of '" + key + "' is not an integer");
    Z[G.index_of(key)] = value.get<int>();
  }
  return Z;
}

std::string cycle_to_json(const DualGraph& G, const Cycle& Z) {
  require_size(G, Z);
  ordered_json doc = ordered_json::object();
  for (std::size_t i = 0; i < G.size(); ++i) doc[G.id(i)] = Z[i];
  return doc.dump();
}

int intersection_pairing(const DualGraph& G, const Cycle& Y, const Cycle& Z) {
  require_size(G, Y);
  require_size(G, Z);
  int total = 0;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (Y[i] == 0) continue;
    int row = G.weight(i) * Z[i];
    for (std::size_t j : G.neighbors(i)) row += Z[j];
    total += Y[i] * row;
  }
  return total;
}

std::vector<int> pairing_with_vertices(const DualGraph& G, const Cycle& Z) {
  require_size(G, Z);
  std::vector<int> out(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) {
    int row = G.weight(i) * Z[i];
    for (std::size_t j : G.neighbors(i)) row += Z[j];
    out[i] = row;
  }
  return out;
}

Cycle fundamental_cycle(const DualGraph& G) {
  Cycle Z(G.size(), 1);
  while (true) {
    auto p = pairing_with_vertices(G, Z);
    auto it = std::find_if(p.begin(), p.end(), [](int v) { return v > 0; });
    if (it == p.end()) return Z;
    ++Z[static_cast<std::size_t>(it - p.begin())];
  }
}

bool is_antinef(const DualGraph& G, const Cycle& Z) {
  auto p = pairing_with_vertices(G, Z);
  return std::all_of(p.begin(), p.end(), [](int v) { return v <= 0; });
}

std::vector<int> canonical_numbers(const DualGraph& G) {
  std::vector<int> out(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) out[i] = G.b(i) - 2;
  return out;
}

int canonical_pairing(const DualGraph& G, const Cycle& Y) {
  require_size(G, Y);
  int total = 0;
  for (std::size_t i = 0; i < G.size(); ++i) total += Y[i] * (G.b(i) - 2);
  return total;
}

int arithmetic_genus(const DualGraph& G, const Cycle& Y) {
  require_positive(G, Y);
  int s = intersection_pairing(G, Y, Y) + canonical_pairing(G, Y);
  if (s % 2 != 0) throw InvariantViolation("Y^2 + K.Y is odd");
  return s / 2 + 1;
}

bool rationality_check(const DualGraph& G) { return arithmetic_genus(G, fundamental_cycle(G)) == 0; }

int graph_multiplicity(const DualGraph& G) {
  if (!rationality_check(G)) throw PreconditionError("graph is not rational");
  Cycle Z0 = fundamental_cycle(G);
  return -intersection_pairing(G, Z0, Z0);
}

int cycle_length(const DualGraph& G, const Cycle& Z) {
  require_rational_antinef(G, Z);
  int s = intersection_pairing(G, Z, Z) + canonical_pairing(G, Z);
  if (s % 2 != 0) throw InvariantViolation("Z^2 + K.Z is odd");
  return -s / 2;
}

int cycle_mu(const DualGraph& G, const Cycle& Z) {
  require_rational_antinef(G, Z);
  return -intersection_pairing(G, Z, fundamental_cycle(G)) + 1;
}

bool unique_ulrich_filter(const DualGraph& G) {
  if (!rationality_check(G)) throw PreconditionError("graph is not rational");
  auto p = pairing_with_vertices(G, fundamental_cycle(G));
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G.b(i) >= 3 && p[i] < 0) return true;
  }
  return false;
}

std::vector<std::vector<std::size_t>> ulrich_support_candidates(const DualGraph& G) {
  if (!rationality_check(G)) throw PreconditionError("graph is not rational");
  auto p = pairing_with_vertices(G, fundamental_cycle(G));
  std::vector<std::size_t> forced;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool upper = p[i] == 0;
    if (G.b(i) >= 3) {
      if (!upper) return {};
      forced.push_back(i);
    } else if (upper) {
      free.push_back(i);
    }
  }
  if (free.size() > 24) throw BudgetExhausted("too many vertices orthogonal to Z_0");
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<bool> in(G.size(), false);
    for (std::size_t v : forced) in[v] = true;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (mask >> k & 1) in[free[k]] = true;
    }
    if (!connected_subset(G, in)) continue;
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (in[i]) set.push_back(i);
    }
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> ChainEnumeration::cycles() const {
  std::vector<Cycle> out;
  for (const auto& c : chains) out.push_back(c.cycles.back());
  return out;
}

namespace {

class ChainSearch {
 public:
  ChainSearch(const DualGraph& G, int max_steps) : G_(G), max_steps_(max_steps), Z0_(fundamental_cycle(G)) {}

  ChainEnumeration run() {
    UlrichChain root;
    root.cycles.push_back(Z0_);
    record(root);
    extend(root, Z0_);
    return std::move(out_);
  }

 private:
  void record(const UlrichChain& chain) {
    if (seen_.insert(chain.cycles.back()).second) out_.chains.push_back(chain);
  }

  // Every Y with 0 < Y <= bound, support inside {Z_prev . E = 0}, Y = Z_0 on
  // the b >= 3 vertices and p_a(Y) = 0.
  std::vector<Cycle> steps_after(const Cycle& Zprev, const Cycle& bound) const {
    auto p = pairing_with_vertices(G_, Zprev);
    Cycle lo(G_.size(), 0);
    Cycle hi(G_.size(), 0);
    for (std::size_t i = 0; i < G_.size(); ++i) {
      bool allowed = p[i] == 0;
      if (G_.b(i) >= 3) {
        if (!allowed || bound[i] < Z0_[i]) return {};
        lo[i] = hi[i] = Z0_[i];
      } else if (allowed) {
        hi[i] = bound[i];
      }
    }
    std::vector<Cycle> out;
    Cycle Y = lo;
    auto walk = [&](auto&& self, std::size_t i) -> void {
      if (i == G_.size()) {
        if (std::any_of(Y.begin(), Y.end(), [](int c) { return c > 0; }) && arithmetic_genus(G_, Y) == 0) {
          out.push_back(Y);
        }
        return;
      }
      for (int c = lo[i]; c <= hi[i]; ++c) {
        Y[i] = c;
        self(self, i + 1);
      }
      Y[i] = lo[i];
    };
    walk(walk, 0);
    return out;
  }

  void extend(const UlrichChain& chain, const Cycle& bound) {
    const Cycle& Zprev = chain.cycles.back();
    auto steps = steps_after(Zprev, bound);
    if (steps.empty()) return;
    if (static_cast<int>(chain.steps.size()) >= max_steps_) {
      out_.truncated = true;
      return;
    }
    for (const auto& Y : steps) {
      Cycle Z = Zprev;
      for (std::size_t i = 0; i < Z.size(); ++i) Z[i] += Y[i];
      if (!is_antinef(G_, Z)) {
        ++out_.antinef_pruned;
        continue;
      }
      UlrichChain next = chain;
      next.cycles.push_back(Z);
      next.steps.push_back(Y);
      record(next);
      extend(next, Y);
    }
  }

  const DualGraph& G_;
  int max_steps_;
  Cycle Z0_;
  std::set<Cycle> seen_;
  ChainEnumeration out_;
};

}  // namespace

ChainEnumeration enumerate_ulrich_chains(const DualGraph& G, int max_steps) {
  if (!rationality_check(G)) throw PreconditionError("graph is not rational");
  if (max_steps < 0) throw PreconditionError("max_steps must be non-negative");
  return ChainSearch(G, max_steps).run();
}

}  // namespace ulrich
