#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace leavitt {

/// Exact Gaussian rational re + i*im.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar i() { return Scalar(0, 1); }
  /// Parses "p/q" into a rational; throws DomainError on malformed input.
  static mpq_class parse_rational(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, exact.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }
  /// Throws DivisionByZero on zero.
  Scalar inverse() const;
  /// Integer power; negative exponents invert first.
  Scalar pow(long long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  double real_double() const { return re_.get_d(); }
  double imag_double() const { return im_.get_d(); }

  /// Expression-grammar spelling: "3/2", "3/2i", "(1/2-3i)".
  std::string to_string() const;

 private:
  void canonicalize();

  mpq_class re_;
  mpq_class im_;
};

std::string rational_to_string(const mpq_class& q);

}  // namespace leavitt
