#include "ulrich/graph_catalog.hpp"

#include <map>
#include <sstream>

#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

struct Branch {
  std::size_t at;
  /// Listed outward from the attachment vertex.
  std::vector<int> weights;
  std::string first_name;
};

// Main chain left to right, each branch emitted right after its vertex.
DualGraph tree(const std::vector<int>& main, const std::vector<Branch>& branches,
               const std::map<std::size_t, std::string>& names = {}) {
  std::vector<int> weights;
  std::vector<std::string> fixed;
  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::size_t prev_main = 0;
  for (std::size_t k = 0; k < main.size(); ++k) {
    std::size_t v = weights.size();
    weights.push_back(main[k]);
    auto it = names.find(k);
    fixed.push_back(it == names.end() ? "" : it->second);
    if (k > 0) links.emplace_back(prev_main, v);
    prev_main = v;
    for (const auto& br : branches) {
      if (br.at != k) continue;
      std::size_t prev = v;
      for (std::size_t j = 0; j < br.weights.size(); ++j) {
        std::size_t w = weights.size();
        weights.push_back(br.weights[j]);
        fixed.push_back(j == 0 ? br.first_name : "");
        links.emplace_back(prev, w);
        prev = w;
      }
    }
  }
  std::vector<GraphVertex> vs;
  int counter = 1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    vs.push_back({fixed[i].empty() ? "E" + std::to_string(counter++) : fixed[i], weights[i]});
  }
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& [a, b] : links) es.emplace_back(vs[a].id, vs[b].id);
  return DualGraph(std::move(vs), es);
}

std::vector<int> twos(int n) { return std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), -2); }

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

struct Parsed {
  std::string head;
  std::vector<int> params;
  bool has_params = false;
};

Parsed split(const std::string& tag) {
  Parsed p;
  auto colon = tag.find(':');
  p.head = tag.substr(0, colon);
  if (colon == std::string::npos) return p;
  p.has_params = true;
  std::stringstream ss(tag.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 4) {
      throw ParseError("bad parameter '" + item + "' in graph tag '" + tag + "'");
    }
    p.params.push_back(std::stoi(item));
  }
  if (p.params.empty()) throw ParseError("graph tag '" + tag + "' has an empty parameter list");
  return p;
}

void need(bool ok, const std::string& tag, const std::string& why) {
  if (!ok) throw OutOfRange("graph tag '" + tag + "': " + why);
}

void arity(const Parsed& p, std::size_t n, const std::string& tag) {
  if (p.params.size() != n) throw ParseError("graph tag '" + tag + "' needs " + std::to_string(n) + " parameter(s)");
}

// Gamma_i(b): left arm (outer to inner), centre E0 with a -2 leaf, right arm
// (inner to outer) whose marked vertex is F.
DualGraph quotient_gamma(int i, int b) {
  struct Arms {
    std::vector<int> left;
    std::vector<int> right;
    int marked;
  };
  static const std::map<int, Arms> kArms = {
      {1, {{-3}, {-3}, 0}},
      {2, {{-2, -2}, {-3}, 0}},
      {3, {{-2, -2}, {-2, -2}, -1}},
      {4, {{-3}, {-4}, 0}},
      {5, {{-2, -2, -2}, {-3}, 0}},
      {6, {{-2, -2}, {-4}, 0}},
      {7, {{-2, -2, -2}, {-2, -2}, -1}},
      {8, {{-3}, {-5}, 0}},
      {9, {{-2, -2}, {-5}, 0}},
      {10, {{-2, -3}, {-3}, 0}},
      {11, {{-2, -2}, {-3, -2}, 0}},
      {12, {{-3, -2}, {-3}, 0}},
      {13, {{-2, -2}, {-2, -3}, 1}},
      {14, {{-2, -2, -2, -2}, {-3}, 0}},
      {15, {{-2, -2, -2, -2}, {-2, -2}, -1}},
  };
  auto it = kArms.find(i);
  if (it == kArms.end()) throw OutOfRange("Gamma_" + std::to_string(i) + "(b) is not in the list");
  const Arms& a = it->second;
  std::size_t c = a.left.size();
  std::map<std::size_t, std::string> names{{c, "E0"}};
  if (a.marked >= 0) names[c + 1 + static_cast<std::size_t>(a.marked)] = "F";
  return tree(cat({a.left, {-b}, a.right}), {{c, {-2}, ""}}, names);
}

DualGraph rtp_graph(const Parsed& p, const std::string& tag) {
  const auto& q = p.params;
  const std::string& h = p.head;
  if (h == "A") {
    arity(p, 3, tag);
    need(q[0] <= q[1] && q[1] <= q[2], tag, "needs l <= m <= n");
    std::size_t c = static_cast<std::size_t>(q[1]);
    return tree(cat({twos(q[1]), {-3}, twos(q[2])}), {{c, twos(q[0]), ""}}, {{c, "E0"}});
  }
  if (h == "B") {
    arity(p, 2, tag);
    need(q[1] >= 3, tag, "needs n >= 3");
    std::size_t c = static_cast<std::size_t>(q[0]);
    return tree(cat({twos(q[0]), {-3}, twos(q[1] - 2), {-2}}), {{c + 1, {-2}, ""}}, {{c, "E0"}});
  }
  if (h == "C") {
    arity(p, 2, tag);
    need(q[1] >= 4, tag, "needs n >= 4");
    std::size_t c = static_cast<std::size_t>(q[0]);
    std::size_t fork = c + static_cast<std::size_t>(q[1] - 3) + 1;
    return tree(cat({twos(q[0]), {-3}, twos(q[1] - 3), {-2, -2}}), {{fork, {-2}, ""}}, {{c, "E0"}});
  }
  if (h == "D") {
    arity(p, 1, tag);
    std::size_t c = static_cast<std::size_t>(q[0]);
    return tree(cat({twos(q[0]), {-3}, twos(4)}), {{c + 2, {-2}, ""}}, {{c, "E0"}});
  }
  if (h == "F") {
    arity(p, 1, tag);
    std::size_t c = static_cast<std::size_t>(q[0]);
    return tree(cat({twos(q[0]), {-3}, twos(5)}), {{c + 3, {-2}, ""}}, {{c, "E0"}});
  }
  if (h == "H") {
    arity(p, 1, tag);
    need(q[0] >= 5, tag, "needs n >= 5");
    // A path of n (-2)-curves with the -3 leaf on the third from the right.
    std::size_t len = static_cast<std::size_t>(q[0]);
    return tree(twos(q[0]), {{len - 3, {-3}, "E0"}});
  }
  if (h == "G1" && !p.has_params) return tree(cat({{-3}, twos(5)}), {{2, {-2}, ""}}, {{0, "E0"}});
  if (h == "G2" && !p.has_params) return tree(cat({{-3}, twos(6)}), {{2, {-2}, ""}}, {{0, "E0"}});
  if (h == "G3" && !p.has_params) return tree(cat({{-3}, twos(6)}), {{4, {-2}, ""}}, {{0, "E0"}});
  throw ParseError("unknown graph tag '" + tag + "'");
}

}  // namespace

bool is_rtp_graph_tag(const std::string& tag) {
  Parsed p = split(tag);
  if (p.head == "G1" || p.head == "G2" || p.head == "G3") return !p.has_params;
  return p.head == "A" || p.head == "B" || p.head == "C" || p.head == "D" || p.head == "F" || p.head == "H";
}

DualGraph graph_catalog(const std::string& tag) {
  Parsed p = split(tag);
  const auto& q = p.params;
  if (p.head == "EX-5.3") {
    if (p.has_params) throw ParseError("graph tag 'EX-5.3' takes no parameters");
    return quotient_gamma(10, 2);
  }
  if (p.head == "cyclic") {
    need(p.has_params, tag, "needs weights");
    std::vector<int> w;
    for (int b : q) {
      need(b >= 2, tag, "weights need b >= 2");
      w.push_back(-b);
    }
    return tree(w, {});
  }
  if (p.head == "T22") {
    need(q.size() >= 2, tag, "needs b and at least one chain weight");
    std::vector<int> main;
    for (std::size_t k = q.size() - 1; k >= 1; --k) {
      need(q[k] >= 2, tag, "weights need b >= 2");
      main.push_back(-q[k]);
    }
    need(q[0] >= 2, tag, "needs b >= 2");
    std::size_t c = main.size();
    main.push_back(-q[0]);
    main.push_back(-2);
    return tree(main, {{c, {-2}, ""}}, {{c, "E0"}});
  }
  if (p.head == "RDP-A") {
    arity(p, 1, tag);
    need(q[0] >= 1, tag, "needs n >= 1");
    return tree(twos(q[0]), {});
  }
  if (p.head == "RDP-D") {
    arity(p, 1, tag);
    need(q[0] >= 4, tag, "needs n >= 4");
    return tree(twos(q[0] - 1), {{1, {-2}, ""}});
  }
  if (p.head == "RDP-E6" || p.head == "RDP-E7" || p.head == "RDP-E8") {
    if (p.has_params) throw ParseError("graph tag '" + tag + "' takes no parameters");
    int n = p.head.back() - '0';
    std::size_t c = p.head == "RDP-E6" ? 2 : p.head == "RDP-E7" ? 3 : 4;
    return tree(twos(n - 1), {{c, {-2}, ""}});
  }
  if (p.head.size() >= 2 && p.head[0] == 'G' && p.has_params) {
    std::string digits = p.head.substr(1);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.empty()) {
      throw ParseError("unknown graph tag '" + tag + "'");
    }
    arity(p, 1, tag);
    need(q[0] >= 2, tag, "needs b >= 2");
    return quotient_gamma(std::stoi(digits), q[0]);
  }
  return rtp_graph(p, tag);
}

std::vector<std::string> quotient_sweep_tags(int b_max, int cyclic_len, int t22_len) {
  std::vector<std::string> out;
  auto keep = [&](const std::string& tag) {
    try {
      graph_catalog(tag);
      out.push_back(tag);
    } catch (const InvariantViolation&) {
    }
  };
  for (int i = 1; i <= 15; ++i) {
    for (int b = 2; b <= b_max; ++b) keep("G" + std::to_string(i) + ":" + std::to_string(b));
  }
  auto words = [&](int len, auto&& emit) {
    std::vector<int> w(static_cast<std::size_t>(len), 2);
    while (true) {
      emit(w);
      std::size_t k = 0;
      while (k < w.size() && w[k] == b_max) w[k++] = 2;
      if (k == w.size()) return;
      ++w[k];
    }
  };
  auto join = [](const std::vector<int>& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s;
  };
  for (int len = 1; len <= cyclic_len; ++len) {
    words(len, [&](const std::vector<int>& w) {
      std::vector<int> rev(w.rbegin(), w.rend());
      if (rev < w) return;
      keep("cyclic:" + join(w));
    });
  }
  for (int len = 1; len <= t22_len; ++len) {
    for (int b = 2; b <= b_max; ++b) {
      words(len, [&](const std::vector<int>& w) { keep("T22:" + std::to_string(b) + "," + join(w)); });
    }
  }
  return out;
}

}  // namespace ulrich
