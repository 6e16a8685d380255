#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/graph_catalog.hpp"
#include "ulrich/report.hpp"

using namespace ulrich;

namespace {

enum Exit { kPass = 0, kMismatch = 1, kInput = 2, kInvariant = 3 };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& os) const {
    std::vector<std::size_t> w(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      w[c] = header[c].size();
      for (const auto& r : rows) w[c] = std::max(w[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        os << cells[c];
        if (c + 1 < cells.size()) os << std::string(w[c] - cells[c].size() + 2, ' ');
      }
      os << "\n";
    };
    line(header);
    std::vector<std::string> rule;
    for (std::size_t c = 0; c < w.size(); ++c) rule.push_back(std::string(w[c], '-'));
    line(rule);
    for (const auto& r : rows) line(r);
  }
};

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "-";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "yes" : "no";
  } else {
    return std::to_string(*v);
  }
}

std::string pair(const auto& computed, const auto& expected) { return cell(computed) + "/" + cell(expected); }

int status_exit(const std::vector<ReportRecord>& records) {
  for (const auto& r : records) {
    if (r.status == RecordStatus::Fail) return kMismatch;
  }
  return kPass;
}

int emit_records(const std::vector<ReportRecord>& records, bool json) {
  if (json) {
    Json doc = Json::array();
    for (const auto& r : records) doc.push_back(to_json(r));
    std::cout << doc.dump(2) << "\n";
  } else {
    Table t{{"tag", "residue", "ulrich", "nearlyGor", "e0", "chains", "status", "note"}, {}};
    for (const auto& r : records) {
      std::string chains = pair(r.computed.chain_count, r.expected.chain_count);
      if (r.chain_count_at_most) chains = cell(r.computed.chain_count) + "/<=" + std::to_string(*r.chain_count_at_most);
      t.rows.push_back({r.tag, pair(r.computed.residue, r.expected.residue),
                        pair(r.computed.ulrich_count, r.expected.ulrich_count),
                        pair(r.computed.nearly_gorenstein, r.expected.nearly_gorenstein),
                        pair(r.computed.multiplicity, r.expected.multiplicity), chains, to_string(r.status), r.note});
    }
    t.print(std::cout);
    std::cout << "(computed/expected)\n";
  }
  return status_exit(records);
}

int emit_classify(const ClassifyReport& rep, bool json) {
  if (json) {
    Json doc;
    doc["record"] = to_json(rep.record);
    doc["trace"] = rep.trace;
    Json certs = Json::array();
    for (const auto& c : rep.certificates) certs.push_back(to_json(c, rep.record.tag));
    doc["certificates"] = certs;
    doc["beyond"] = rep.beyond ? to_json(*rep.beyond, rep.record.tag) : Json(nullptr);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "tag: " << rep.record.tag << "\n";
    if (!rep.trace.empty()) {
      std::cout << "trace:";
      for (const auto& g : rep.trace) std::cout << " " << g;
      std::cout << "\n";
    }
    Table t{{"ideal", "reduction", "verdict", "e0", "mu", "len"}, {}};
    auto row = [&](const UlrichCertificate& c) {
      std::string ideal, red = "-";
      for (const auto& g : c.ideal.generators()) ideal += (ideal.empty() ? "" : ", ") + g.to_string();
      if (c.reduction) {
        red.clear();
        for (const auto& g : c.reduction->generators()) red += (red.empty() ? "" : ", ") + g.to_string();
      }
      t.rows.push_back({"(" + ideal + ")", red == "-" ? red : "(" + red + ")", to_string(c.verdict), cell(c.e0),
                        std::to_string(c.mu), std::to_string(c.len)});
    };
    for (const auto& c : rep.certificates) row(c);
    if (rep.beyond) row(*rep.beyond);
    t.print(std::cout);
    emit_records({rep.record}, false);
  }
  return rep.record.status == RecordStatus::Fail ? kMismatch : kPass;
}

DualGraph load_graph(const std::string& tag, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot read '" + file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return DualGraph::from_json(ss.str());
  }
  if (tag.empty()) throw ParseError("graph needs --tag or --file");
  return graph_catalog(tag);
}

std::vector<std::string> default_rdp_tags() {
  std::vector<std::string> out;
  for (int n = 1; n <= 7; ++n) out.push_back("RDP-A:" + std::to_string(n));
  for (int n = 4; n <= 7; ++n) out.push_back("RDP-D:" + std::to_string(n));
  for (const char* e : {"RDP-E6", "RDP-E7", "RDP-E8"}) out.push_back(e);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ulrich ideals of rational triple points and quotient singularities"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::string seeds = "on";
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--seed-reductions", seeds, "Try the published reductions first")
      ->check(CLI::IsMember({"on", "off"}));

  std::string tag;
  std::string graph_tag;
  std::string file;
  std::string cycle;
  std::string graph_cmd;
  int max_param = 4;
  int cyclic_len = 4;
  int t22_len = 3;

  auto* classify = app.add_subcommand("classify", "Certify the Ulrich set of a catalog ring");
  classify->add_option("--tag", tag, "Family tag, e.g. A:1,2,3")->required();

  auto* residue_cmd = app.add_subcommand("residue-table", "Residues of the triple point grid");
  residue_cmd->add_option("--max-param", max_param, "Largest family parameter")->check(CLI::Range(0, 6));

  auto* sweep = app.add_subcommand("quotient-sweep", "Ulrich chains over the quotient graph catalog");
  sweep->add_option("--max-param", max_param, "Largest weight b")->check(CLI::Range(2, 5));
  sweep->add_option("--cyclic-len", cyclic_len, "Longest cyclic chain")->check(CLI::Range(1, 8));
  sweep->add_option("--t22-len", t22_len, "Longest type (2,2,n) chain")->check(CLI::Range(1, 8));

  auto* cross = app.add_subcommand("cross-check", "Compare the algebra and graph engines on one ring");
  cross->add_option("--tag", tag, "Family tag")->required();
  cross->add_option("--graph-tag", graph_tag, "Graph tag, the family tag by default");

  auto* graph = app.add_subcommand("graph", "Resolution graph computations");
  graph->add_option("--tag", tag, "Graph tag");
  graph->add_option("--file", file, "Graph JSON file");
  graph->add_option("--cycle", cycle, "Cycle JSON for pa and stats");
  graph->add_option("command", graph_cmd, "z0, pa, filter, chains or stats")
      ->required()
      ->check(CLI::IsMember({"z0", "pa", "filter", "chains", "stats"}));

  auto* rdp = app.add_subcommand("rdp-verify", "Check the published Ulrich lists of the double points");
  rdp->add_option("--tag", tag, "One RDP tag; all of A1-A7, D4-D7, E6-E8 by default");

  auto* socle = app.add_subcommand("socle-experiment", "Socle dimension of A/tr");
  socle->add_option("--tag", tag, "One family tag; the grid by default");
  socle->add_option("--max-param", max_param, "Grid bound")->check(CLI::Range(0, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }
  bool use_seeds = seeds == "on";

  try {
    if (classify->parsed()) return emit_classify(classify_report(FamilyTag::parse(tag), use_seeds), json);
    if (residue_cmd->parsed()) return emit_records(residue_table(max_param), json);
    if (sweep->parsed()) return emit_records(quotient_sweep(max_param, cyclic_len, t22_len), json);
    if (cross->parsed()) {
      auto c = cross_check(tag, graph_tag, use_seeds);
      if (json) {
        std::cout << to_json(c).dump(2) << "\n";
      } else {
        Table t{{"side", "tag", "e0", "mu", "residue", "ulrich"}, {}};
        auto row = [&](const char* side, const std::string& name, const EngineSide& s) {
          t.rows.push_back({side, name, std::to_string(s.e0), std::to_string(s.mu), std::to_string(s.residue),
                            std::to_string(s.ulrich_count)});
        };
        row("algebra", c.algebra_tag, c.algebra);
        row("graph", c.graph_tag, c.graph);
        t.print(std::cout);
        std::cout << (c.agree ? "pass" : "fail") << "\n";
      }
      return c.agree ? kPass : kMismatch;
    }
    if (graph->parsed()) {
      auto G = load_graph(tag, file);
      std::cout << graph_command(G, graph_cmd, cycle).dump() << "\n";
      return kPass;
    }
    if (rdp->parsed()) {
      std::vector<std::string> tags = tag.empty() ? default_rdp_tags() : std::vector<std::string>{tag};
      std::vector<ClassifyReport> reports;
      for (const auto& t : tags) {
        auto ft = FamilyTag::parse(t);
        if (!ft.is_rdp()) throw UnsupportedType(t + " is not a double point");
        reports.push_back(classify_report(ft, use_seeds));
      }
      if (json) {
        Json doc = Json::array();
        for (const auto& rep : reports) {
          Json item;
          item["record"] = to_json(rep.record);
          Json certs = Json::array();
          for (const auto& c : rep.certificates) certs.push_back(to_json(c, rep.record.tag));
          item["certificates"] = certs;
          item["next"] = rep.beyond ? to_json(*rep.beyond, rep.record.tag) : Json(nullptr);
          doc.push_back(item);
        }
        std::cout << doc.dump(2) << "\n";
      }
      std::vector<ReportRecord> records;
      for (auto& rep : reports) {
        if (rep.beyond) rep.record.note = "next: " + to_string(rep.beyond->verdict);
        records.push_back(rep.record);
      }
      return json ? status_exit(records) : emit_records(records, false);
    }
    if (socle->parsed()) {
      std::vector<FamilyTag> tags = tag.empty() ? rtp_grid(max_param) : std::vector<FamilyTag>{FamilyTag::parse(tag)};
      Json doc = Json::array();
      Table t{{"tag", "residue", "socle", "gorenstein"}, {}};
      for (const auto& ft : tags) {
        auto s = gorenstein_quotient_experiment(instantiate(ft));
        Json item;
        item["tag"] = ft.to_string();
        item["residue"] = s.residue;
        item["socleDim"] = s.socle_dim;
        item["gorenstein"] = s.gorenstein;
        doc.push_back(item);
        t.rows.push_back({ft.to_string(), std::to_string(s.residue), std::to_string(s.socle_dim),
                          s.gorenstein ? "yes" : "no"});
      }
      if (json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        t.print(std::cout);
      }
      return kPass;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const BudgetExhausted& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kInvariant;
  } catch (const SearchFailure& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kInvariant;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
