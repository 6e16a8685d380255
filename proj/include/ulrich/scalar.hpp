#pragma once

#include <gmpxx.h>

#include <string>

namespace ulrich {

/// Exact Gaussian rational a + b*i with a, b in Q.
///
/// Both parts are kept in canonical form (lowest terms, positive
/// denominator). Purely rational values have a zero imaginary part, and the
/// arithmetic operators take a fast path for that case since nearly every
/// coefficient in the catalog is real.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& re, const mpq_class& im = 0);

  static Scalar imaginary_unit() { return Scalar(0, 1); }

  /// Parses "3", "-2/5" (rational literals only; no i).
  static Scalar from_rational_string(const std::string& text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other) { return *this *= other.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "3", "-1/2", "i", "2*i", "(1+2*i)", "(1/2-i)".
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace ulrich
