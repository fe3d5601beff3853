#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace voroshire {

/// Exact complex scalar with arbitrary-precision rational real and imaginary
/// parts. mpq_class keeps both parts in canonical reduced form, so equality
/// is structural and every field operation is exact.
class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(long re) : re_(re), im_(0) {}           // NOLINT(google-explicit-constructor)
  GaussRational(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  GaussRational(mpq_class re) : re_(std::move(re)), im_(0) {}  // NOLINT
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussRational conj() const { return {re_, mpq_class(-im_)}; }

  /// |z|^2 = re^2 + im^2, exact.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) {
    return {mpq_class(-a.re_), mpq_class(-a.im_)};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  GaussRational inverse() const;
  GaussRational pow(unsigned long k) const;

  double re_double() const { return re_.get_d(); }
  double im_double() const { return im_.get_d(); }
  std::complex<double> to_complex() const { return {re_double(), im_double()}; }

  /// Canonical form: "a/b", "a/b+c/di", "c/di"; integer denominators omitted.
  /// parse() accepts the same grammar plus optional spaces and bare "i"/"-i".
  std::string to_string() const;
  static GaussRational parse(std::string_view text);

 private:
  mpq_class re_, im_;
};

/// (x)_k = x(x-1)...(x-k+1), with (x)_0 = 1.
GaussRational falling_factorial(const GaussRational& x, unsigned k);
GaussRational falling_factorial(long x, unsigned k);

}  // namespace voroshire
