#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "voroshire/gauss_rational.hpp"

namespace voroshire {

struct PolyDivRem;

/// Dense univariate polynomial over GaussRational, index = power of z.
/// Coefficients are trimmed: the highest stored entry is nonzero, and the
/// zero polynomial stores nothing (degree() == kZeroDegree).
class ExactPoly {
 public:
  static constexpr int kZeroDegree = -1;

  ExactPoly() = default;
  explicit ExactPoly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ExactPoly zero() { return {}; }
  static ExactPoly constant(GaussRational c);
  static ExactPoly monomial(GaussRational coeff, unsigned power);
  /// z - root
  static ExactPoly linear_root(const GaussRational& root);
  static ExactPoly from_roots(std::span<const GaussRational> roots);  // monic

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  size_t coefficient_count() const { return c_.size(); }
  std::span<const GaussRational> coefficients() const { return c_; }

  /// Coefficient of z^k; zero beyond the degree.
  const GaussRational& operator[](size_t k) const;
  const GaussRational& leading_coefficient() const;  // throws on the zero polynomial

  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const ExactPoly& p, const GaussRational& s);
  friend ExactPoly operator*(const GaussRational& s, const ExactPoly& p) { return p * s; }
  friend ExactPoly operator-(const ExactPoly& p) { return p * GaussRational(-1); }
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ExactPoly& a, const ExactPoly& b) { return !(a == b); }

  ExactPoly derivative() const;
  GaussRational evaluate(const GaussRational& z) const;
  ExactPoly pow(unsigned n) const;
  ExactPoly monic() const;  // throws on the zero polynomial

  /// p = quotient * d + remainder with deg(remainder) < deg(d), exact.
  static PolyDivRem divrem(const ExactPoly& p, const ExactPoly& d);  // throws d == 0

  /// Monic gcd by the Euclidean algorithm; the remainder is made monic at
  /// every step to keep coefficient sizes in check.
  static ExactPoly gcd(const ExactPoly& p, const ExactPoly& q);  // throws both zero

  std::string to_string(std::string_view var = "z") const;

 private:
  void trim();
  std::vector<GaussRational> c_;
};

struct PolyDivRem {
  ExactPoly quotient, remainder;
};

}  // namespace voroshire
