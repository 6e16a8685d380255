#include "ulrich/presentations.hpp"

#include <sstream>

#include "ulrich/errors.hpp"
#include "ulrich/ulrich.hpp"

namespace ulrich {

namespace {

struct FamilyName {
  Family family;
  const char* name;
  int arity;
};

constexpr FamilyName kNames[] = {
    {Family::RdpA, "RDP-A", 1}, {Family::RdpD, "RDP-D", 1}, {Family::RdpE6, "RDP-E6", 0},
    {Family::RdpE7, "RDP-E7", 0}, {Family::RdpE8, "RDP-E8", 0}, {Family::A, "A", 3},
    {Family::B, "B", 2},          {Family::C, "C", 2},          {Family::D, "D", 1},
    {Family::F, "F", 1},          {Family::H, "H", 1},          {Family::G1, "G1", 0},
    {Family::G2, "G2", 0},        {Family::G3, "G3", 0},        {Family::Ex52, "EX-5.2", 0},
    {Family::Ex53, "EX-5.3", 0},
};

const FamilyName& name_of(Family f) {
  for (const auto& n : kNames) {
    if (n.family == f) return n;
  }
  throw PreconditionError("unknown family");
}

std::string pw(const std::string& var, int e) {
  if (e == 0) return "1";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

FamilyTag FamilyTag::parse(const std::string& text) {
  std::string head = text;
  std::string tail;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    head = text.substr(0, colon);
    tail = text.substr(colon + 1);
  }
  if (head == "Γ1") head = "G1";
  if (head == "Γ2") head = "G2";
  if (head == "Γ3") head = "G3";
  for (const auto& n : kNames) {
    if (head != n.name) continue;
    FamilyTag tag;
    tag.family = n.family;
    if (n.arity == 0) {
      if (colon != std::string::npos) throw ParseError("tag '" + text + "' takes no parameters");
    } else {
      std::stringstream ss(tail);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
          throw ParseError("bad parameter '" + item + "' in tag '" + text + "'");
        }
        tag.params.push_back(std::stoi(item));
      }
      if (static_cast<int>(tag.params.size()) != n.arity) {
        throw ParseError("tag '" + text + "' needs " + std::to_string(n.arity) + " parameter(s)");
      }
    }
    tag.validate();
    return tag;
  }
  throw ParseError("unknown family in tag '" + text + "'");
}

std::string FamilyTag::to_string() const {
  std::string out = name_of(family).name;
  for (std::size_t k = 0; k < params.size(); ++k) {
    out += (k == 0 ? ":" : ",") + std::to_string(params[k]);
  }
  return out;
}

void FamilyTag::validate() const {
  if (static_cast<int>(params.size()) != name_of(family).arity) {
    throw OutOfRange("wrong parameter count for " + std::string(name_of(family).name));
  }
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw OutOfRange(to_string() + ": " + what);
  };
  switch (family) {
    case Family::A:
      need(0 <= params[0] && params[0] <= params[1] && params[1] <= params[2], "needs 0 <= l <= m <= n");
      break;
    case Family::B:
      need(params[0] >= 0 && params[1] >= 3, "needs m >= 0, n >= 3");
      break;
    case Family::C:
      need(params[0] >= 0 && params[1] >= 4, "needs m >= 0, n >= 4");
      break;
    case Family::D:
    case Family::F:
      need(params[0] >= 0, "needs n >= 0");
      break;
    case Family::H:
      need(params[0] >= 5, "needs n >= 5");
      break;
    case Family::RdpA:
      need(params[0] >= 1, "needs n >= 1");
      break;
    case Family::RdpD:
      need(params[0] >= 4, "needs n >= 4");
      break;
    default:
      break;
  }
}

bool FamilyTag::is_rdp() const {
  return family == Family::RdpA || family == Family::RdpD || family == Family::RdpE6 ||
         family == Family::RdpE7 || family == Family::RdpE8;
}

bool FamilyTag::is_rtp() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::F:
    case Family::H:
    case Family::G1:
    case Family::G2:
    case Family::G3:
      return true;
    default:
      return false;
  }
}

namespace {

using Rows = std::vector<std::vector<std::string>>;

RingPresentation determinantal(const FamilyTag& tag, const RingPtr& ring, const Rows& rows,
                               std::vector<std::string> printed, int cm_type) {
  PolyMatrix m;
  for (const auto& row : rows) {
    std::vector<Polynomial> r;
    for (const auto& e : row) r.push_back(Polynomial::parse(ring, e));
    m.push_back(std::move(r));
  }
  Ideal a = minors(m, 2);
  return RingPresentation{tag, PresentedQuotient(a), m, cm_type, std::move(printed)};
}

RingPresentation hypersurface(const FamilyTag& tag, const std::string& f) {
  RingPtr ring = Ring::make({"x", "y", "z"});
  Ideal a = Ideal::parse(ring, {f});
  return RingPresentation{tag, PresentedQuotient(a), std::nullopt, 1, {f}};
}

}  // namespace

RingPresentation instantiate(const FamilyTag& tag) {
  tag.validate();
  const auto& p = tag.params;
  RingPtr xyzt = Ring::make({"x", "y", "z", "t"});
  auto t = [](int e) { return pw("t", e); };
  auto z = [](int e) { return pw("z", e); };

  switch (tag.family) {
    case Family::RdpA:
      return hypersurface(tag, "z^2 + x^2 + " + pw("y", p[0] + 1));
    case Family::RdpD:
      return hypersurface(tag, "z^2 + x^2*y + " + pw("y", p[0] - 1));
    case Family::RdpE6:
      return hypersurface(tag, "z^2 + x^3 + y^4");
    case Family::RdpE7:
      return hypersurface(tag, "z^2 + x^3 + x*y^3");
    case Family::RdpE8:
      return hypersurface(tag, "z^2 + x^3 + y^5");

    case Family::A: {
      int l = p[0], m = p[1], n = p[2];
      return determinantal(tag, xyzt, {{"x", t(m + 1), t(n + 1) + " + z"}, {t(l + 1), "y", "z"}},
                           {"x*y - " + t(l + m + 2), "x*z - " + t(l + n + 2) + " - z*" + t(l + 1),
                            "y*z + y*" + t(n + 1) + " - z*" + t(m + 1)},
                           2);
    }
    case Family::B: {
      int m = p[0], n = p[1];
      int k = (n + 1) / 2;
      if (n % 2 == 1) {
        return determinantal(tag, xyzt, {{"x", "y", t(k) + " + z*t"}, {t(m + 1), "z", "y"}},
                             {"x*z - y*" + t(m + 1), "x*y - " + t(m + k + 1) + " - z*" + t(m + 2),
                              "y^2 - z*" + t(k) + " - z^2*t"},
                             2);
      }
      return determinantal(tag, xyzt, {{"x", "y", "z*t"}, {t(m + 1), "z", "y + " + t(k)}},
                           {"x*z - y*" + t(m + 1), "x*y + x*" + t(k) + " - z*" + t(m + 2),
                            "y^2 + y*" + t(k) + " - z^2*t"},
                           2);
    }
    case Family::C: {
      int m = p[0], n = p[1];
      return determinantal(tag, xyzt, {{"x", "y", "t^2 + " + z(n - 1)}, {t(m + 1), "z", "y"}},
                           {"x*z - y*" + t(m + 1), "x*y - " + t(m + 3) + " - " + z(n - 1) + "*" + t(m + 1),
                            "y^2 - z*t^2 - " + z(n)},
                           2);
    }
    case Family::D: {
      int n = p[0];
      return determinantal(tag, xyzt, {{"x", "y", "z^2"}, {t(n + 1), "z", "y + t^2"}},
                           {"x*z - y*" + t(n + 1), "x*y + x*t^2 - z^2*" + t(n + 1), "y^2 + y*t^2 - z^3"}, 2);
    }
    case Family::F: {
      int n = p[0];
      return determinantal(tag, xyzt, {{"x", "y", "t^3 + z^2"}, {t(n + 1), "z", "y"}},
                           {"x*z - y*" + t(n + 1), "x*y - " + t(n + 4) + " - z^2*" + t(n + 1), "y^2 - z*t^3 - z^3"},
                           2);
    }
    case Family::H: {
      int n = p[0];
      if (n % 3 == 2) {
        int k = (n + 1) / 3;
        return determinantal(tag, xyzt, {{"x", "y", "z*t + " + t(k)}, {"y", "z", "x"}},
                             {"x^2 - y*z*t - y*" + t(k), "x*y - z^2*t - z*" + t(k), "y^2 - x*z"}, 2);
      }
      if (n % 3 == 0) {
        int k = n / 3;
        return determinantal(tag, xyzt, {{"x", "y", "z*t"}, {"y", "z", "x + " + t(k)}},
                             {"x^2 + x*" + t(k) + " - y*z*t", "x*y - z^2*t + y*" + t(k), "y^2 - x*z"}, 2);
      }
      int k = (n - 1) / 3;
      return determinantal(tag, xyzt, {{"x", "y", "z*t"}, {"y + " + t(k), "z", "x"}},
                           {"x^2 - y*z*t - z*" + t(k + 1), "x*y - z^2*t", "y^2 - x*z + y*" + t(k)}, 2);
    }
    case Family::G1:
      return determinantal(tag, xyzt, {{"x", "y", "t^2"}, {"y", "z", "x + z^2"}},
                           {"x^2 - y*t^2 + x*z^2", "x*y - z*t^2 + y*z^2", "y^2 - x*z"}, 2);
    case Family::G2:
      return determinantal(tag, xyzt, {{"x", "y", "z^2"}, {"y", "z", "x + t^2"}},
                           {"x^2 - y*z^2 + x*t^2", "x*y - z^3 + y*t^2", "y^2 - x*z"}, 2);
    case Family::G3:
      return determinantal(tag, xyzt, {{"x", "y", "t^2 + z^3"}, {"y", "z", "x"}},
                           {"x^2 - y*t^2 - y*z^3", "x*y - z*t^2 - z^4", "y^2 - x*z"}, 2);
    case Family::Ex52:
      return determinantal(tag, xyzt, {{"x", "y", "z"}, {"y", "z", "x^2 - t^3"}},
                           {}, 2);
    case Family::Ex53: {
      RingPtr ring = Ring::make({"z1", "z2", "z3", "z4", "z5"});
      return determinantal(tag, ring, {{"z1", "z4", "z2", "z3^2"}, {"z2", "z3", "z4", "z5"}}, {}, 3);
    }
  }
  throw PreconditionError("unhandled family");
}

Ideal trace_ideal(const RingPresentation& R) {
  if (R.cm_type != 2 || !R.matrix || R.matrix->size() != 2 || (*R.matrix)[0].size() != 3) {
    throw UnsupportedType(R.tag.to_string() + ": trace formula needs a 2 x 3 presentation");
  }
  Ideal entries = minors(*R.matrix, 1);
  return Ideal(R.ring(), R.quotient.lift(entries).groebner());
}

std::uint64_t residue(const RingPresentation& R) { return local_length(R.quotient, trace_ideal(R)); }

bool nearly_gorenstein(const RingPresentation& R) {
  Ideal tr = trace_ideal(R);
  for (const auto& v : R.quotient.maximal().generators()) {
    if (!tr.contains(v)) return false;
  }
  return true;
}

std::uint64_t ring_multiplicity(const RingPresentation& R) {
  ReductionSearchPolicy policy;
  if (auto seed = published_reduction(R.tag, 1)) policy.seeds.push_back(*seed);
  return ring_multiplicity(R, policy);
}

std::optional<std::vector<std::string>> published_reduction(const FamilyTag& tag, int i) {
  std::string ti = pw("t", i);
  switch (tag.family) {
    case Family::A:
      return std::vector<std::string>{ti, "x + y + z"};
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::F:
      return std::vector<std::string>{ti, "x + z"};
    case Family::H:
    case Family::G1:
    case Family::G2:
    case Family::G3:
      return std::vector<std::string>{ti, "z"};
    case Family::Ex52:
      return std::vector<std::string>{"x", ti};
    default:
      return std::nullopt;
  }
}

std::vector<FamilyTag> rtp_grid(int max_param) {
  std::vector<FamilyTag> out;
  for (int l = 0; l <= max_param; ++l) {
    for (int m = l; m <= max_param; ++m) {
      for (int n = m; n <= max_param; ++n) out.push_back({Family::A, {l, m, n}});
    }
  }
  for (int m = 0; m <= max_param; ++m) {
    for (int n = 3; n <= max_param; ++n) out.push_back({Family::B, {m, n}});
  }
  for (int m = 0; m <= max_param; ++m) {
    for (int n = 4; n <= max_param; ++n) out.push_back({Family::C, {m, n}});
  }
  for (int n = 0; n <= max_param; ++n) out.push_back({Family::D, {n}});
  for (int n = 0; n <= max_param; ++n) out.push_back({Family::F, {n}});
  for (int k = 2; k <= max_param; ++k) {
    for (int n : {3 * k - 1, 3 * k, 3 * k + 1}) out.push_back({Family::H, {n}});
  }
  out.push_back({Family::G1, {}});
  out.push_back({Family::G2, {}});
  out.push_back({Family::G3, {}});
  return out;
}

}  // namespace ulrich
