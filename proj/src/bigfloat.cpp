#include "voroshire/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace voroshire {

namespace {
thread_local unsigned t_default_precision = 256;
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;
}  // namespace

unsigned BigFloat::default_precision() { return t_default_precision; }

void BigFloat::set_default_precision(unsigned bits) {
  t_default_precision = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}

BigFloat::BigFloat() {
  mpfr_init2(v_, t_default_precision);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double x) {
  mpfr_init2(v_, t_default_precision);
  mpfr_set_d(v_, x, kRnd);
}

BigFloat::BigFloat(long x) {
  mpfr_init2(v_, t_default_precision);
  mpfr_set_si(v_, x, kRnd);
}

BigFloat::BigFloat(const mpq_class& q) {
  mpfr_init2(v_, t_default_precision);
  mpfr_set_q(v_, q.get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, kRnd);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(size_t significant_digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(significant_digits), v_) < 0)
    return "<mpfr format error>";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}
BigFloat operator-(const BigFloat& a) {
  BigFloat r;
  mpfr_neg(r.v_, a.v_, kRnd);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r;
  mpfr_abs(r.v_, a.v_, kRnd);
  return r;
}
BigFloat sqrt(const BigFloat& a) {
  BigFloat r;
  mpfr_sqrt(r.v_, a.v_, kRnd);
  return r;
}
BigFloat log(const BigFloat& a) {
  BigFloat r;
  mpfr_log(r.v_, a.v_, kRnd);
  return r;
}
BigFloat exp(const BigFloat& a) {
  BigFloat r;
  mpfr_exp(r.v_, a.v_, kRnd);
  return r;
}
BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_hypot(r.v_, a.v_, b.v_, kRnd);
  return r;
}
BigFloat pow_ui(const BigFloat& a, unsigned long k) {
  BigFloat r;
  mpfr_pow_ui(r.v_, a.v_, k, kRnd);
  return r;
}
void sin_cos(const BigFloat& a, BigFloat& sin_out, BigFloat& cos_out) {
  mpfr_sin_cos(sin_out.v_, cos_out.v_, a.v_, kRnd);
}

BigFloat BigFloat::factorial(unsigned long k) {
  BigFloat r;
  mpfr_fac_ui(r.v_, k, kRnd);
  return r;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re_ * o.re_ - im_ * o.im_;
  BigFloat i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigFloat n = o.norm();
  BigFloat r = (re_ * o.re_ + im_ * o.im_) / n;
  BigFloat i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

BigComplex exp(const BigComplex& z) {
  BigFloat mag = exp(z.re_);
  BigFloat s, c;
  sin_cos(z.im_, s, c);
  return {mag * c, mag * s};
}

BigComplex BigComplex::pow(unsigned long k) const {
  BigComplex acc(1.0), base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace voroshire
