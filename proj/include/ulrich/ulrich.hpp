#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ulrich/ideal.hpp"
#include "ulrich/presentations.hpp"

namespace ulrich {

struct ReductionSearchPolicy {
  /// Coefficients for linear combinations of the generators of I.
  std::vector<Scalar> pool{Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar::imaginary_unit()};
  std::size_t max_candidates = 3000;
  /// Tried first, in order. Each entry lists the two generators of Q.
  std::vector<std::vector<std::string>> seeds;
};

enum class Verdict {
  Ulrich,
  GoodNotUlrich,
  NotGood,
  NoReductionFound,
  /// I misses a generator of the supplied trace ideal; no search is run.
  TraceNotContained,
  /// mu(I) = 2, so I is its own reduction. Such ideals are trivially Ulrich
  /// and are not counted in the Ulrich sets.
  ParameterIdeal,
};

std::string to_string(Verdict v);

struct UlrichCertificate {
  explicit UlrichCertificate(Ideal i) : ideal(std::move(i)) {}

  Ideal ideal;
  std::optional<Ideal> reduction;
  bool stable = false;
  bool good = false;
  bool free_test = false;
  /// Only when stable.
  std::optional<std::uint64_t> e0;
  std::uint64_t mu = 0;
  std::uint64_t len = 0;
  /// l(A/I^2), the input of the freeness test.
  std::uint64_t len_square = 0;
  /// Set when a trace ideal was supplied.
  std::optional<bool> contains_trace;
  std::size_t candidates_tried = 0;
  Verdict verdict = Verdict::NoReductionFound;

  /// e0 == (mu - 1) * len, false when e0 is unknown.
  bool numeric_criterion() const;
};

/// I^2 + a and QI + a agree near the origin. Requires Q inside I + a with
/// exactly two generators. A Q whose colength near the origin does not
/// settle within the length budget counts as unstable.
bool is_reduction_stable(const PresentedQuotient& A, const Ideal& I, const Ideal& Q);

/// First stable two-generated Q inside I in the order: policy seeds, pairs of
/// generators of I, pool combinations by increasing support. Candidates
/// whose ideal Q + a is not zero-dimensional are skipped.
std::optional<Ideal> find_reduction(const PresentedQuotient& A, const Ideal& I, const ReductionSearchPolicy& policy,
                                    std::size_t* tried = nullptr);

/// (Q + a) : (I + a) equals I + a near the origin. Throws PreconditionError
/// unless Q is a stable reduction of I.
bool good_check(const PresentedQuotient& A, const Ideal& I, const Ideal& Q);

UlrichCertificate ulrich_check(const PresentedQuotient& A, const Ideal& I, const ReductionSearchPolicy& policy,
                               const std::optional<Ideal>& trace = std::nullopt);

struct Classification {
  Ideal trace;
  /// c + 1 in a trace of the form (x_1, ..., x_{n-1}, x_n^(c+1)).
  int top_exponent = 0;
  std::vector<UlrichCertificate> certificates;
  /// The candidate one step past the trace.
  std::optional<UlrichCertificate> beyond;
};

/// Certifies (x_1, ..., x_{n-1}, x_n^i) for 1 <= i <= c+1 and checks the
/// next candidate. Throws ShapeError when the trace has another shape.
Classification classify_ulrich_set(const RingPresentation& R, bool use_seeds = true, bool check_beyond = true);

struct RdpVerification {
  std::vector<UlrichCertificate> listed;
  std::optional<UlrichCertificate> next;
};

/// Generator lists of the Ulrich ideals of an RDP and of the next ideal in
/// the pattern.
std::vector<std::vector<std::string>> rdp_ulrich_list(const FamilyTag& tag);
std::vector<std::string> rdp_next_ideal(const FamilyTag& tag);

RdpVerification verify_rdp_list(const FamilyTag& tag, bool check_next = true);

struct SocleReport {
  std::uint64_t residue = 0;
  std::uint64_t socle_dim = 0;
  bool gorenstein = false;
};

/// dim of the socle (tr : m)/tr of A/tr.
SocleReport gorenstein_quotient_experiment(const RingPresentation& R);

/// Multiplicity with an explicit search policy.
std::uint64_t ring_multiplicity(const RingPresentation& R, const ReductionSearchPolicy& policy);

}  // namespace ulrich
