#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ulrich/dualgraph.hpp"
#include "ulrich/presentations.hpp"
#include "ulrich/ulrich.hpp"

namespace ulrich {

using Json = nlohmann::ordered_json;

enum class RecordStatus { Pass, Fail, Skip };
std::string to_string(RecordStatus s);

/// Unset fields are neither printed nor compared.
struct ReportFields {
  std::optional<std::uint64_t> residue;
  std::optional<std::uint64_t> ulrich_count;
  std::optional<bool> nearly_gorenstein;
  std::optional<std::uint64_t> multiplicity;
  std::optional<std::uint64_t> chain_count;
};

struct ReportRecord {
  std::string tag;
  ReportFields computed;
  ReportFields expected;
  /// Upper bound on computed.chain_count, for rows whose expectation is an
  /// inequality.
  std::optional<std::uint64_t> chain_count_at_most;
  RecordStatus status = RecordStatus::Skip;
  std::string note;

  /// Pass iff every populated expected field equals its computed value and
  /// the chain bound holds; Skip when nothing is expected.
  void judge();
};

Json to_json(const ReportFields& f);
Json to_json(const ReportRecord& r);
Json to_json(const UlrichCertificate& c, const std::string& tag);

/// Closed forms for res(A) of the triple point families and EX-5.2.
std::optional<std::uint64_t> expected_residue(const FamilyTag& tag);
std::optional<bool> expected_nearly_gorenstein(const FamilyTag& tag);
/// Size of the published Ulrich set.
std::optional<std::uint64_t> expected_ulrich_count(const FamilyTag& tag);

/// One row per grid tag with residue and nearly Gorenstein flag.
std::vector<ReportRecord> residue_table(int max_param);

struct ClassifyReport {
  ReportRecord record;
  /// Empty for the double points, which are Gorenstein.
  std::vector<std::string> trace;
  std::vector<UlrichCertificate> certificates;
  std::optional<UlrichCertificate> beyond;
};

/// Triple points and EX-5.2 go through the trace classification, double
/// points through their published lists.
ClassifyReport classify_report(const FamilyTag& tag, bool use_seeds = true);

/// Multiplicity >= 4 rows expect the single chain Z_0; multiplicity 2 and 3
/// rows expect at most two.
ReportRecord quotient_sweep_row(const std::string& graph_tag);
std::vector<ReportRecord> quotient_sweep(int b_max, int cyclic_len, int t22_len);

struct EngineSide {
  std::uint64_t e0 = 0;
  std::uint64_t mu = 0;
  std::uint64_t residue = 0;
  std::uint64_t ulrich_count = 0;
};

struct CrossCheck {
  std::string algebra_tag;
  std::string graph_tag;
  EngineSide algebra;
  /// e0 = -Z0^2, mu = -Z0.Z0 + 1, residue = length of the last chain cycle,
  /// ulrich_count = number of chains.
  EngineSide graph;
  bool agree = false;
};

/// The graph tag defaults to the algebra tag.
CrossCheck cross_check(const std::string& algebra_tag, const std::string& graph_tag = "", bool use_seeds = true);
Json to_json(const CrossCheck& c);

/// `cmd` is one of z0, pa, filter, chains, stats. `cycle` is the JSON cycle
/// for pa and stats (Z0 when empty).
Json graph_command(const DualGraph& G, const std::string& cmd, const std::string& cycle = "");

}  // namespace ulrich
