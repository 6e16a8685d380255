#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ulrich/scalar.hpp"

namespace ulrich {

inline constexpr int kMaxVars = 8;

/// Exponent vector. Only the first `nvars` slots are meaningful; the rest
/// stay zero so that equality and hashing can look at the whole array.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint8_t nvars = 0;
  std::uint32_t deg = 0;

  Monomial() = default;
  explicit Monomial(int n) : nvars(static_cast<std::uint8_t>(n)) {}
  static Monomial from_exponents(const std::vector<int>& e);

  int operator[](int i) const { return exp[i]; }
  void set(int i, int value);

  bool divides(const Monomial& other) const;
  bool is_one() const { return deg == 0; }
  /// No variable occurs in both.
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exp != b.exp; }
};

Monomial lcm(const Monomial& a, const Monomial& b);

enum class OrderKind { GrevLex, Lex, BlockElim };

/// Global monomial order. BlockElim(split) compares the first `split`
/// variables by grevlex first and breaks ties by grevlex on the rest, so it
/// eliminates the leading block.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  int split = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block_elim(int split) { return {OrderKind::BlockElim, split}; }

  /// -1, 0, 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.split == b.split;
  }
};

/// Ambient variables plus the active order. Shared by every polynomial
/// built over it.
class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order);

  static std::shared_ptr<const Ring> make(std::vector<std::string> names,
                                          MonomialOrder order = MonomialOrder::grevlex());

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  /// -1 when absent.
  int index_of(const std::string& name) const;

  bool same_as(const Ring& other) const {
    return this == &other || (names_ == other.names_ && order_ == other.order_);
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Sparse polynomial with terms strictly descending in its ring's order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, int index, int power = 1);
  static Polynomial variable(RingPtr ring, const std::string& name, int power = 1);
  static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& c);
  /// Takes arbitrary (unsorted, possibly duplicated) terms and canonicalizes.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  /// Grammar: sums and products of rational literals, `i`, variable names,
  /// `^` with non-negative integer exponents, parentheses, and division by
  /// nonzero constants. Example: "x*z - t^6 - z*t^2".
  static Polynomial parse(RingPtr ring, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Leading term in the ring's own order. Throws on zero.
  const Term& lead() const;
  const Monomial& lm() const { return lead().mono; }
  const Scalar& lc() const { return lead().coef; }
  int total_degree() const;

  Polynomial monic() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(int n) const;
  /// Sum of terms of total degree < bound.
  Polynomial truncated_below(int bound) const;

  /// Re-expresses the polynomial in another ring by variable name.
  Polynomial map_to(const RingPtr& target) const;
  /// Substitutes `value` for every variable (by position in this ring).
  Polynomial substitute(const std::vector<Polynomial>& values) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return scaled(Scalar(-1)); }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;

  /// Adds c*m*g into *this in one merge pass.
  void add_multiple(const Scalar& c, const Monomial& m, const Polynomial& g);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  friend Polynomial reduce(const Polynomial&, const std::vector<Polynomial>&);
};

void require_same_ring(const Ring& a, const Ring& b);

/// Order-maximal term of p under `ord` (which may differ from the ring's).
Term leading_term(const Polynomial& p, const MonomialOrder& ord);

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division with full remainder reduction. The quotients
/// satisfy p = sum q_i * d_i + remainder.
Division divide(const Polynomial& p, const std::vector<Polynomial>& divisors);

/// Remainder only; cheaper than divide().
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors);

}  // namespace ulrich
