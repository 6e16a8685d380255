#include "ulrich/report.hpp"

#include <algorithm>

#include "ulrich/errors.hpp"
#include "ulrich/graph_catalog.hpp"

namespace ulrich {

namespace {

std::vector<std::string> strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.generators()) out.push_back(g.to_string());
  return out;
}

template <typename T>
void put(Json& doc, const char* key, const std::optional<T>& v) {
  if (v) doc[key] = *v;
}

std::uint64_t count_ulrich(const std::vector<UlrichCertificate>& certs) {
  return static_cast<std::uint64_t>(
      std::count_if(certs.begin(), certs.end(), [](const auto& c) { return c.verdict == Verdict::Ulrich; }));
}

}  // namespace

std::string to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Pass:
      return "pass";
    case RecordStatus::Fail:
      return "fail";
    case RecordStatus::Skip:
      return "skip";
  }
  return "skip";
}

void ReportRecord::judge() {
  bool any = chain_count_at_most.has_value();
  bool ok = true;
  auto cmp = [&](const auto& want, const auto& got) {
    if (!want) return;
    any = true;
    ok = ok && got && *got == *want;
  };
  cmp(expected.residue, computed.residue);
  cmp(expected.ulrich_count, computed.ulrich_count);
  cmp(expected.nearly_gorenstein, computed.nearly_gorenstein);
  cmp(expected.multiplicity, computed.multiplicity);
  cmp(expected.chain_count, computed.chain_count);
  if (chain_count_at_most) ok = ok && computed.chain_count && *computed.chain_count <= *chain_count_at_most;
  status = !any ? RecordStatus::Skip : ok ? RecordStatus::Pass : RecordStatus::Fail;
}

Json to_json(const ReportFields& f) {
  Json doc = Json::object();
  put(doc, "residue", f.residue);
  put(doc, "ulrichCount", f.ulrich_count);
  put(doc, "nearlyGorenstein", f.nearly_gorenstein);
  put(doc, "multiplicity", f.multiplicity);
  put(doc, "chainCount", f.chain_count);
  return doc;
}

Json to_json(const ReportRecord& r) {
  Json doc;
  doc["tag"] = r.tag;
  doc["computed"] = to_json(r.computed);
  Json expected = to_json(r.expected);
  put(expected, "chainCountAtMost", r.chain_count_at_most);
  doc["expected"] = expected;
  doc["status"] = to_string(r.status);
  if (!r.note.empty()) doc["note"] = r.note;
  return doc;
}

Json to_json(const UlrichCertificate& c, const std::string& tag) {
  Json doc;
  doc["tag"] = tag;
  doc["ideal"] = strings(c.ideal);
  doc["reduction"] = c.reduction ? Json(strings(*c.reduction)) : Json(nullptr);
  doc["verdict"] = to_string(c.verdict);
  doc["e0"] = c.e0 ? Json(*c.e0) : Json(nullptr);
  doc["mu"] = c.mu;
  doc["len"] = c.len;
  doc["stable"] = c.stable;
  doc["good"] = c.good;
  doc["freeTest"] = c.free_test;
  if (c.contains_trace) doc["containsTrace"] = *c.contains_trace;
  return doc;
}

std::optional<std::uint64_t> expected_residue(const FamilyTag& tag) {
  const auto& p = tag.params;
  auto u = [](int v) { return std::optional<std::uint64_t>(static_cast<std::uint64_t>(v)); };
  switch (tag.family) {
    case Family::A:
      return u(p[0] + 1);
    case Family::B:
      return u(std::min((p[1] + 1) / 2, p[0] + 1));
    case Family::C:
    case Family::D:
      return u(std::min(2, p[0] + 1));
    case Family::F:
      return u(std::min(3, p[0] + 1));
    case Family::H:
      return u((p[0] + 1) / 3);
    case Family::G1:
    case Family::G2:
    case Family::G3:
      return u(2);
    case Family::Ex52:
      return u(3);
    default:
      return std::nullopt;
  }
}

std::optional<bool> expected_nearly_gorenstein(const FamilyTag& tag) {
  auto res = expected_residue(tag);
  if (!res) return std::nullopt;
  return *res == 1;
}

std::optional<std::uint64_t> expected_ulrich_count(const FamilyTag& tag) {
  const auto& p = tag.params;
  switch (tag.family) {
    case Family::RdpA:
      return static_cast<std::uint64_t>((p[0] + 1) / 2);
    case Family::RdpD:
      return static_cast<std::uint64_t>(p[0] % 2 == 0 ? p[0] / 2 + 2 : (p[0] - 1) / 2 + 1);
    case Family::RdpE6:
    case Family::RdpE8:
      return 2;
    case Family::RdpE7:
      return 3;
    default:
      return expected_residue(tag);
  }
}

std::vector<ReportRecord> residue_table(int max_param) {
  std::vector<ReportRecord> out;
  for (const auto& tag : rtp_grid(max_param)) {
    ReportRecord r;
    r.tag = tag.to_string();
    r.expected.residue = expected_residue(tag);
    r.expected.nearly_gorenstein = expected_nearly_gorenstein(tag);
    try {
      auto R = instantiate(tag);
      r.computed.residue = residue(R);
      r.computed.nearly_gorenstein = nearly_gorenstein(R);
    } catch (const InvariantViolation&) {
      throw;
    } catch (const Error& e) {
      r.note = e.what();
    }
    r.judge();
    out.push_back(std::move(r));
  }
  return out;
}

ClassifyReport classify_report(const FamilyTag& tag, bool use_seeds) {
  ClassifyReport rep{ReportRecord{}, {}, {}, std::nullopt};
  ReportRecord& r = rep.record;
  r.tag = tag.to_string();
  r.expected.ulrich_count = expected_ulrich_count(tag);
  if (tag.is_rdp()) {
    auto v = verify_rdp_list(tag, true);
    rep.certificates = std::move(v.listed);
    rep.beyond = std::move(v.next);
  } else {
    auto R = instantiate(tag);
    auto cls = classify_ulrich_set(R, use_seeds, true);
    rep.trace = strings(cls.trace);
    rep.certificates = std::move(cls.certificates);
    rep.beyond = std::move(cls.beyond);
    r.computed.residue = residue(R);
    r.computed.nearly_gorenstein = nearly_gorenstein(R);
    r.expected.residue = expected_residue(tag);
    r.expected.nearly_gorenstein = expected_nearly_gorenstein(tag);
  }
  r.computed.ulrich_count = count_ulrich(rep.certificates);
  if (tag.family == Family::Ex52) r.note = "non-rational, p_g=1";
  r.judge();
  if (rep.beyond && rep.beyond->verdict == Verdict::Ulrich) {
    r.status = RecordStatus::Fail;
    r.note += std::string(r.note.empty() ? "" : "; ") + "the next candidate is also Ulrich";
  }
  return rep;
}

ReportRecord quotient_sweep_row(const std::string& graph_tag) {
  ReportRecord r;
  r.tag = graph_tag;
  auto G = graph_catalog(graph_tag);
  auto e0 = static_cast<std::uint64_t>(graph_multiplicity(G));
  bool filter = unique_ulrich_filter(G);
  auto chains = enumerate_ulrich_chains(G);
  if (filter && chains.chains.size() != 1) {
    throw InvariantViolation(graph_tag + ": the filter fires but " + std::to_string(chains.chains.size()) +
                             " chains were found");
  }
  r.computed.multiplicity = e0;
  r.computed.chain_count = chains.chains.size();
  if (e0 >= 4) {
    r.expected.chain_count = 1;
    r.note = filter ? "filter" : "enumeration";
  } else {
    r.chain_count_at_most = 2;
    if (e0 == 2) r.note = "rational double point";
  }
  if (chains.truncated) r.note += std::string(r.note.empty() ? "" : "; ") + "truncated";
  r.judge();
  return r;
}

std::vector<ReportRecord> quotient_sweep(int b_max, int cyclic_len, int t22_len) {
  std::vector<ReportRecord> out;
  for (const auto& tag : quotient_sweep_tags(b_max, cyclic_len, t22_len)) out.push_back(quotient_sweep_row(tag));
  return out;
}

CrossCheck cross_check(const std::string& algebra_tag, const std::string& graph_tag, bool use_seeds) {
  CrossCheck c;
  auto tag = FamilyTag::parse(algebra_tag);
  c.algebra_tag = tag.to_string();
  c.graph_tag = graph_tag.empty() ? c.algebra_tag : graph_tag;
  auto R = instantiate(tag);
  c.algebra.e0 = use_seeds ? ring_multiplicity(R) : ring_multiplicity(R, ReductionSearchPolicy{});
  c.algebra.mu = min_gens(R.quotient, R.quotient.maximal());
  c.algebra.residue = residue(R);
  c.algebra.ulrich_count = count_ulrich(classify_ulrich_set(R, use_seeds, false).certificates);

  auto G = graph_catalog(c.graph_tag);
  auto Z0 = fundamental_cycle(G);
  c.graph.e0 = static_cast<std::uint64_t>(graph_multiplicity(G));
  c.graph.mu = static_cast<std::uint64_t>(cycle_mu(G, Z0));
  auto chains = enumerate_ulrich_chains(G);
  c.graph.ulrich_count = chains.chains.size();
  // The trace ideal lies in every Ulrich ideal, so its cycle is the longest.
  for (const auto& ch : chains.chains) {
    c.graph.residue = std::max<std::uint64_t>(c.graph.residue, static_cast<std::uint64_t>(cycle_length(G, ch.cycles.back())));
  }
  c.agree = c.algebra.e0 == c.graph.e0 && c.algebra.mu == c.graph.mu && c.algebra.residue == c.graph.residue &&
            c.algebra.ulrich_count == c.graph.ulrich_count;
  return c;
}

Json to_json(const CrossCheck& c) {
  auto side = [](const EngineSide& s) {
    Json d;
    d["e0"] = s.e0;
    d["mu"] = s.mu;
    d["residue"] = s.residue;
    d["ulrichCount"] = s.ulrich_count;
    return d;
  };
  Json doc;
  doc["tag"] = c.algebra_tag;
  doc["graph"] = c.graph_tag;
  doc["algebra"] = side(c.algebra);
  doc["graphSide"] = side(c.graph);
  doc["status"] = c.agree ? "pass" : "fail";
  return doc;
}

Json graph_command(const DualGraph& G, const std::string& cmd, const std::string& cycle) {
  auto parsed = [&] { return cycle.empty() ? fundamental_cycle(G) : cycle_from_json(G, cycle); };
  if (cmd == "z0") return Json::parse(cycle_to_json(G, fundamental_cycle(G)));
  if (cmd == "pa") return arithmetic_genus(G, parsed());
  if (cmd == "filter") return unique_ulrich_filter(G);
  if (cmd == "stats") {
    Cycle Z = parsed();
    Json doc;
    doc["len"] = cycle_length(G, Z);
    doc["e0"] = -intersection_pairing(G, Z, Z);
    doc["mu"] = cycle_mu(G, Z);
    return doc;
  }
  if (cmd == "chains") {
    auto e = enumerate_ulrich_chains(G);
    Json list = Json::array();
    for (const auto& ch : e.chains) {
      Json item;
      item["cycle"] = Json::parse(cycle_to_json(G, ch.cycles.back()));
      Json steps = Json::array();
      for (const auto& Y : ch.steps) steps.push_back(Json::parse(cycle_to_json(G, Y)));
      item["steps"] = steps;
      item["len"] = cycle_length(G, ch.cycles.back());
      list.push_back(item);
    }
    Json doc;
    doc["chains"] = list;
    doc["antinefPruned"] = e.antinef_pruned;
    doc["truncated"] = e.truncated;
    return doc;
  }
  throw ParseError("unknown graph subcommand '" + cmd + "'");
}

}  // namespace ulrich
