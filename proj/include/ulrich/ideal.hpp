#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ulrich/polynomial.hpp"

namespace ulrich {

/// Reduced Groebner basis: monic, inter-reduced, sorted by descending
/// leading monomial. Deterministic for a fixed input list and order.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators);

/// Counters from the most recent buchberger() call on this thread.
struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};
const BuchbergerStats& last_buchberger_stats();

/// Generator list plus a lazily computed reduced Groebner basis. Copies
/// share the cache, which is filled at most once (thread-safe).
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);
  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring);
  /// (x_1, ..., x_n).
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& groebner() const;

  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  Polynomial normal_form(const Polynomial& p) const;

  std::vector<std::string> generator_strings() const;
  std::vector<std::string> groebner_strings() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool member(const Polynomial& p, const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int n);
/// I + (p_1, ..., p_k).
Ideal ideal_extend(const Ideal& I, const std::vector<Polynomial>& extra);
/// Elimination with an auxiliary variable: (u*I + (1-u)*J) restricted to
/// the original ring.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
/// {p : p*g in I} for a single nonzero g.
Ideal ideal_colon(const Ideal& I, const Polynomial& g);
/// {p : p*J in I}, the intersection of the single-generator colons.
Ideal ideal_colon(const Ideal& I, const Ideal& J);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial determinant(const PolyMatrix& m);
/// Ideal of all k x k minors.
Ideal minors(const PolyMatrix& m, int k);

/// Standard monomials of S/I, or nullopt when S/I is infinite-dimensional.
/// Throws PreconditionError when more than `cap` monomials would be listed.
std::optional<std::vector<Monomial>> standard_monomials(const Ideal& I, std::size_t cap = 1u << 20);

/// dim_k S/I, nullopt meaning infinite.
std::optional<std::uint64_t> quotient_dim(const Ideal& I);

/// A = S / a with a inside m^2.
class PresentedQuotient {
 public:
  explicit PresentedQuotient(Ideal defining);

  const RingPtr& ring() const { return defining_.ring(); }
  const Ideal& defining() const { return defining_; }
  const Ideal& maximal() const { return maximal_; }

  /// a + I.
  Ideal lift(const Ideal& I) const;
  Ideal parse_ideal(const std::vector<std::string>& generators) const;

 private:
  Ideal defining_;
  Ideal maximal_;
};

inline constexpr int kDefaultLengthBudget = 64;

/// Component of a + I at the origin, as an m-primary ideal of S.
/// Throws BudgetExhausted if the truncation does not settle.
Ideal origin_component(const PresentedQuotient& A, const Ideal& I, int budget = kDefaultLengthBudget);

/// Length of (A/I) localized at the origin.
std::uint64_t local_length(const PresentedQuotient& A, const Ideal& I, int budget = kDefaultLengthBudget);

/// Same quantity, always computed by stabilizing dim S/(a + I + m^N).
/// Much slower; kept as a cross-check.
std::uint64_t local_length_by_powers_of_m(const PresentedQuotient& A, const Ideal& I,
                                          int budget = kDefaultLengthBudget);

/// mu(I) = l(A/mI) - l(A/I).
std::uint64_t min_gens(const PresentedQuotient& A, const Ideal& I, int budget = kDefaultLengthBudget);

}  // namespace ulrich
