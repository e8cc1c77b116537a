#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace fibcl {

using Int = mpz_class;

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1 and
/// den > 0. Every constructor canonicalizes, so structural equality of the
/// stored pair is numeric equality.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : v_(static_cast<long>(value)) {}  // NOLINT
  Rat(const Int& value) : v_(value) {}  // NOLINT
  Rat(const Int& num, const Int& den);

  /// Grammar: optional '-', decimal digits, optional '/' and a positive
  /// decimal denominator. No whitespace, no '+', no decimal point.
  static Rat parse(std::string_view text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  /// True when the value is the square of a rational.
  bool is_perfect_square() const;
  /// Exact square root; only defined for perfect squares.
  Rat sqrt_exact() const;

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat inverse() const;
  Rat pow(unsigned exponent) const;

  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  mpq_class v_;
};

/// Parses a signed decimal integer with the same digit rules as Rat::parse.
Int parse_int(std::string_view text);

}  // namespace fibcl

template <>
struct std::hash<fibcl::Rat> {
  std::size_t operator()(const fibcl::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
