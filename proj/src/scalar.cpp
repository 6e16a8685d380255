#include "ulrich/scalar.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

Scalar::Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::from_rational_string(const std::string& text) {
  mpq_class value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw ParseError("bad rational literal '" + text + "'");
  }
  if (value.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  value.canonicalize();
  return Scalar(value);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero scalar");
  if (is_real()) return Scalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  re_ += other.re_;
  if (sgn(other.im_) != 0) im_ += other.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  re_ -= other.re_;
  if (sgn(other.im_) != 0) im_ -= other.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_real() && other.is_real()) {
    re_ *= other.re_;
    return *this;
  }
  mpq_class re = re_ * other.re_ - im_ * other.im_;
  mpq_class im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + imag + ")";
}

}  // namespace ulrich
