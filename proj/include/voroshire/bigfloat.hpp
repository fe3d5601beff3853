#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace voroshire {

/// RAII wrapper over mpfr_t. New values (including arithmetic results) are
/// allocated at the thread-local default precision; copies keep the source
/// precision. Set the precision before a computation, not during it, and
/// re-set it inside worker threads: the default is per thread.
class BigFloat {
 public:
  static unsigned default_precision();
  static void set_default_precision(unsigned bits);

  /// Restores the thread's default precision on scope exit.
  class PrecisionGuard {
   public:
    explicit PrecisionGuard(unsigned bits) : saved_(default_precision()) {
      set_default_precision(bits);
    }
    ~PrecisionGuard() { set_default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

   private:
    unsigned saved_;
  };

  BigFloat();
  BigFloat(double x);  // NOLINT(google-explicit-constructor)
  BigFloat(long x);    // NOLINT(google-explicit-constructor)
  explicit BigFloat(const mpq_class& q);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  std::string to_string(size_t significant_digits = 20) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat log(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend BigFloat hypot(const BigFloat& a, const BigFloat& b);
  friend BigFloat pow_ui(const BigFloat& a, unsigned long k);
  friend void sin_cos(const BigFloat& a, BigFloat& sin_out, BigFloat& cos_out);
  friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

  static BigFloat factorial(unsigned long k);

  const mpfr_t& raw() const { return v_; }

 private:
  mpfr_t v_;
};

/// Complex number over BigFloat.
class BigComplex {
 public:
  BigComplex() = default;
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(double re, double im = 0.0) : re_(re), im_(im) {}  // NOLINT
  explicit BigComplex(const std::complex<double>& z) : re_(z.real()), im_(z.imag()) {}
  BigComplex(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  BigComplex conj() const { return {re_, -im_}; }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const { return hypot(re_, im_); }

  BigComplex& operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) {
    return {a.re_ * s, a.im_ * s};
  }
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend BigComplex exp(const BigComplex& z);
  BigComplex pow(unsigned long k) const;

 private:
  BigFloat re_, im_;
};

}  // namespace voroshire
