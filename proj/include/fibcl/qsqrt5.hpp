#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "fibcl/rational.hpp"

namespace fibcl {

/// Exact element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
///
/// The pair (a, b) is unique for every real value because sqrt(5) is
/// irrational, so componentwise equality is numeric equality. Division goes
/// through the conjugate a - b*sqrt(5), whose product with the element is the
/// rational field norm a^2 - 5b^2.
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt5(long a) : a_(a) {}            // NOLINT
  QSqrt5(int a) : a_(a) {}             // NOLINT
  QSqrt5(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt5 sqrt5() { return {Rat(0), Rat(1)}; }
  /// Golden ratio (1 + sqrt 5) / 2.
  static QSqrt5 alpha();
  /// Its conjugate (1 - sqrt 5) / 2.
  static QSqrt5 beta();

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QSqrt5 conj() const { return {a_, -b_}; }
  /// a^2 - 5 b^2; zero only for the zero element.
  Rat field_norm() const { return a_ * a_ - Rat(5) * b_ * b_; }

  /// Exact sign of the real number a + b sqrt(5).
  int sign() const;
  QSqrt5 abs() const { return sign() < 0 ? -*this : *this; }
  QSqrt5 inverse() const;

  QSqrt5 operator-() const { return {-a_, -b_}; }
  QSqrt5& operator+=(const QSqrt5& o);
  QSqrt5& operator-=(const QSqrt5& o);
  QSqrt5& operator*=(const QSqrt5& o);
  QSqrt5& operator/=(const QSqrt5& o);

  friend QSqrt5 operator+(QSqrt5 x, const QSqrt5& y) { return x += y; }
  friend QSqrt5 operator-(QSqrt5 x, const QSqrt5& y) { return x -= y; }
  friend QSqrt5 operator*(QSqrt5 x, const QSqrt5& y) { return x *= y; }
  friend QSqrt5 operator/(QSqrt5 x, const QSqrt5& y) { return x /= y; }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  /// Real-number ordering, decided exactly through sign(x - y).
  friend bool less(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() < 0; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QSqrt5& x) { return os << x.str(); }

 private:
  Rat a_;
  Rat b_;
};

enum class ArithOp { Add, Sub, Mul, Div };

QSqrt5 arith(ArithOp op, const QSqrt5& x, const QSqrt5& y);

/// alpha^n by square-and-multiply inside Q(sqrt 5).
QSqrt5 alpha_pow(std::uint64_t n);

}  // namespace fibcl
