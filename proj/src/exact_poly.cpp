#include "voroshire/exact_poly.hpp"

#include <stdexcept>

namespace voroshire {

namespace {
const GaussRational kZero{};
}

void ExactPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactPoly ExactPoly::constant(GaussRational c) {
  ExactPoly p;
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

ExactPoly ExactPoly::monomial(GaussRational coeff, unsigned power) {
  ExactPoly p;
  if (!coeff.is_zero()) {
    p.c_.assign(power + 1, GaussRational());
    p.c_.back() = std::move(coeff);
  }
  return p;
}

ExactPoly ExactPoly::linear_root(const GaussRational& root) {
  return ExactPoly({-root, GaussRational(1)});
}

ExactPoly ExactPoly::from_roots(std::span<const GaussRational> roots) {
  ExactPoly p = constant(GaussRational(1));
  for (const auto& r : roots) p = p * linear_root(r);
  return p;
}

const GaussRational& ExactPoly::operator[](size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

const GaussRational& ExactPoly::leading_coefficient() const {
  if (c_.empty()) throw std::domain_error("ExactPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return ExactPoly(std::move(out));
}

ExactPoly operator*(const ExactPoly& p, const GaussRational& s) {
  if (s.is_zero()) return {};
  std::vector<GaussRational> out;
  out.reserve(p.c_.size());
  for (const auto& c : p.c_) out.push_back(c * s);
  return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussRational> out;
  out.reserve(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k)
    out.push_back(c_[k] * GaussRational(static_cast<long>(k)));
  return ExactPoly(std::move(out));
}

GaussRational ExactPoly::evaluate(const GaussRational& z) const {
  GaussRational acc;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
  return acc;
}

ExactPoly ExactPoly::pow(unsigned n) const {
  ExactPoly acc = constant(GaussRational(1));
  ExactPoly base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    if (n >>= 1) base = base * base;
  }
  return acc;
}

ExactPoly ExactPoly::monic() const {
  return *this * leading_coefficient().inverse();
}

PolyDivRem ExactPoly::divrem(const ExactPoly& p, const ExactPoly& d) {
  if (d.is_zero()) throw std::domain_error("ExactPoly: division by the zero polynomial");
  if (p.degree() < d.degree()) return {{}, p};
  std::vector<GaussRational> rem(p.c_.begin(), p.c_.end());
  std::vector<GaussRational> quot(p.c_.size() - d.c_.size() + 1);
  const GaussRational lead_inv = d.leading_coefficient().inverse();
  for (size_t k = quot.size(); k-- > 0;) {
    GaussRational factor = rem[k + d.c_.size() - 1] * lead_inv;
    if (factor.is_zero()) continue;
    quot[k] = factor;
    for (size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= factor * d.c_[j];
  }
  return {ExactPoly(std::move(quot)), ExactPoly(std::move(rem))};
}

ExactPoly ExactPoly::gcd(const ExactPoly& p, const ExactPoly& q) {
  if (p.is_zero() && q.is_zero())
    throw std::domain_error("ExactPoly: gcd of two zero polynomials");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  ExactPoly a = p.monic(), b = q.monic();
  while (!b.is_zero()) {
    ExactPoly r = divrem(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? ExactPoly{} : r.monic();
  }
  return a;
}

std::string ExactPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[k].to_string() + ")";
    if (k >= 1) {
      out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace voroshire
