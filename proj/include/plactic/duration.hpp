#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "plactic/error.hpp"

namespace plactic {

// Exact rational quantity: a segment length, a matrix entry, a shape part.
// Arithmetic never rounds.  The type itself admits negative values so that
// differences can be formed; words, partitions and matrices reject them.
class Duration {
 public:
  Duration() = default;
  Duration(long value) : value_(value) {}  // NOLINT: integers convert freely
  Duration(long num, long den) : value_(num, den) {
    if (den == 0) throw domain_error("zero denominator");
    value_.canonicalize();
  }
  explicit Duration(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  // Decimal numeral ("0.7", "12", "3.") or fraction ("7/10"), parsed
  // exactly.  `offset` shifts the position reported in parse errors.
  static Duration parse(std::string_view text, std::size_t offset = 0);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  // Exact text: a terminating decimal when the denominator has only the
  // prime factors 2 and 5, otherwise "p/q".
  std::string str() const;

  Duration& operator+=(const Duration& o) { value_ += o.value_; return *this; }
  Duration& operator-=(const Duration& o) { value_ -= o.value_; return *this; }
  Duration& operator*=(const Duration& o) { value_ *= o.value_; return *this; }
  Duration& operator/=(const Duration& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Duration operator+(Duration a, const Duration& b) { return a += b; }
  friend Duration operator-(Duration a, const Duration& b) { return a -= b; }
  friend Duration operator*(Duration a, const Duration& b) { return a *= b; }
  friend Duration operator/(Duration a, const Duration& b) { return a /= b; }
  friend Duration operator-(const Duration& a) { return Duration(mpq_class(-a.value_)); }

  friend bool operator==(const Duration& a, const Duration& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Duration& a, const Duration& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Duration& d) {
    return os << d.str();
  }

 private:
  mpq_class value_{0};
};

inline Duration min(const Duration& a, const Duration& b) { return b < a ? b : a; }
inline Duration max(const Duration& a, const Duration& b) { return a < b ? b : a; }

inline Duration Duration::parse(std::string_view text, std::size_t offset) {
  if (text.empty()) throw parse_error(offset, "empty duration");
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from == to) throw parse_error(offset + from, "expected digits");
    for (std::size_t i = from; i < to; ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw parse_error(offset + i, std::string("unexpected character '") + text[i] + "'");
      }
    }
    return mpz_class(std::string(text.substr(from, to - from)));
  };

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = digits(0, slash);
    mpz_class den = digits(slash + 1, text.size());
    if (den == 0) throw parse_error(offset + slash + 1, "zero denominator");
    return Duration(mpq_class(num, den));
  }

  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Duration(mpq_class(digits(0, text.size())));

  // Either side of the point may be empty, but not both.
  mpz_class whole = dot == 0 ? mpz_class(0) : digits(0, dot);
  const std::size_t frac_len = text.size() - dot - 1;
  if (dot == 0 && frac_len == 0) throw parse_error(offset, "expected digits");
  mpz_class frac = frac_len == 0 ? mpz_class(0) : digits(dot + 1, text.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_len);
  return Duration(mpq_class(whole * scale + frac, scale));
}

inline std::string Duration::str() const {
  mpz_class den = value_.get_den();
  if (den == 1) return value_.get_num().get_str();

  unsigned twos = 0, fives = 0;
  mpz_class rest = den;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) { rest /= 2; ++twos; }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) { rest /= 5; ++fives; }
  if (rest != 1) return value_.get_num().get_str() + "/" + den.get_str();

  const unsigned places = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = value_.get_num() * (scale / den);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
  s.insert(s.size() - places, 1, '.');
  return negative ? "-" + s : s;
}

namespace literals {
inline Duration operator""_d(const char* text, std::size_t len) {
  return Duration::parse(std::string_view(text, len));
}
}  // namespace literals

}  // namespace plactic
