#include "voroshire/gauss_rational.hpp"

#include <cctype>
#include <stdexcept>

namespace voroshire {

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussRational: division by zero");
  mpq_class n2 = norm2();
  return {mpq_class(re_ / n2), mpq_class(-im_ / n2)};
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  return *this *= o.inverse();
}

GaussRational GaussRational::pow(unsigned long k) const {
  GaussRational acc(1), base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

namespace {

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// One signed rational token: [+-]?digits[/digits]. Advances pos past it.
mpq_class parse_rational_at(std::string_view s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits_begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == digits_begin) throw std::invalid_argument("GaussRational: expected digits");
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == den_begin) throw std::invalid_argument("GaussRational: expected denominator");
  }
  mpq_class q(std::string(s.substr(start, pos - start)), 10);
  if (q.get_den() == 0) throw std::invalid_argument("GaussRational: zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

std::string GaussRational::to_string() const {
  if (im_ == 0) return rational_str(re_);
  std::string imag = rational_str(im_) + "i";
  if (re_ == 0) return imag;
  if (im_ > 0) return rational_str(re_) + "+" + imag;
  return rational_str(re_) + imag;  // sign carried by the numerator
}

GaussRational GaussRational::parse(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw std::invalid_argument("GaussRational: empty string");

  std::string_view s = compact;
  size_t pos = 0;
  auto parse_term = [&](mpq_class& re, mpq_class& im) {
    // bare i with optional sign
    if (s[pos] == 'i' || ((s[pos] == '+' || s[pos] == '-') && pos + 1 < s.size() && s[pos + 1] == 'i')) {
      int sign = (s[pos] == '-') ? -1 : 1;
      pos += (s[pos] == 'i') ? 1 : 2;
      im += sign;
      return;
    }
    mpq_class v = parse_rational_at(s, pos);
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      im += v;
    } else {
      re += v;
    }
  };

  mpq_class re(0), im(0);
  parse_term(re, im);
  if (pos < s.size()) {
    if (s[pos] != '+' && s[pos] != '-')
      throw std::invalid_argument("GaussRational: malformed value '" + compact + "'");
    parse_term(re, im);
  }
  if (pos != s.size())
    throw std::invalid_argument("GaussRational: trailing characters in '" + compact + "'");
  return {std::move(re), std::move(im)};
}

GaussRational falling_factorial(const GaussRational& x, unsigned k) {
  GaussRational acc(1);
  for (unsigned i = 0; i < k; ++i) acc *= x - GaussRational(static_cast<long>(i));
  return acc;
}

GaussRational falling_factorial(long x, unsigned k) {
  return falling_factorial(GaussRational(x), k);
}

}  // namespace voroshire
