#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ulrich/ideal.hpp"

namespace ulrich {

enum class Family {
  RdpA,
  RdpD,
  RdpE6,
  RdpE7,
  RdpE8,
  A,
  B,
  C,
  D,
  F,
  H,
  G1,
  G2,
  G3,
  Ex52,
  Ex53,
};

/// Catalog key. Text form: `A:1,2,3`, `B:0,4`, `H:7`, `G2`, `RDP-D:6`,
/// `RDP-E7`, `EX-5.2`.
struct FamilyTag {
  Family family = Family::A;
  std::vector<int> params;

  static FamilyTag parse(const std::string& text);
  std::string to_string() const;
  /// Throws OutOfRange unless the parameters are admissible for the family.
  void validate() const;

  bool is_rdp() const;
  /// One of the nine rational triple point families.
  bool is_rtp() const;

  friend bool operator==(const FamilyTag& a, const FamilyTag& b) {
    return a.family == b.family && a.params == b.params;
  }
};

struct RingPresentation {
  FamilyTag tag;
  PresentedQuotient quotient;
  /// Hilbert-Burch matrix (2 x 3 for the triple points, 2 x 4 for EX-5.3).
  std::optional<PolyMatrix> matrix;
  /// 1 for the hypersurfaces, 2 for 2 x 3 presentations, 3 for EX-5.3.
  int cm_type = 1;
  /// Defining equations as printed next to the matrix.
  std::vector<std::string> printed_generators;

  const RingPtr& ring() const { return quotient.ring(); }
};

RingPresentation instantiate(const FamilyTag& tag);
inline RingPresentation instantiate(const std::string& tag) { return instantiate(FamilyTag::parse(tag)); }

/// I_1(M) + a, in reduced form. Throws UnsupportedType unless cm_type == 2.
Ideal trace_ideal(const RingPresentation& R);

/// l(A / tr(omega_A)).
std::uint64_t residue(const RingPresentation& R);

/// Every variable lies in the trace ideal.
bool nearly_gorenstein(const RingPresentation& R);

/// e_0(A) = l(A/Q) for a reduction Q of m found by the reduction search.
/// Throws SearchFailure if none is found.
std::uint64_t ring_multiplicity(const RingPresentation& R);

/// Generators of the published reduction Q_i of (x, y, z, t^i), if the
/// family comes with one.
std::optional<std::vector<std::string>> published_reduction(const FamilyTag& tag, int i);

/// Every tag of the residue grid with all parameters <= max_param.
std::vector<FamilyTag> rtp_grid(int max_param);

}  // namespace ulrich
