#include "fibcl/qsqrt5.hpp"

#include "fibcl/error.hpp"

namespace fibcl {

QSqrt5 QSqrt5::alpha() { return {Rat(1, 2), Rat(1, 2)}; }
QSqrt5 QSqrt5::beta() { return {Rat(1, 2), Rat(-1, 2)}; }

int QSqrt5::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the term with larger square wins.
  const Rat lhs = a_ * a_;
  const Rat rhs = Rat(5) * b_ * b_;
  if (lhs == rhs) return 0;  // unreachable for rational a, b; kept exact
  return lhs > rhs ? sa : sb;
}

QSqrt5 QSqrt5::inverse() const {
  if (is_zero()) throw Error(Errc::DivByZero, "inverse of 0 in Q(sqrt5)");
  const Rat n = field_norm();
  return {a_ / n, -b_ / n};
}

QSqrt5& QSqrt5::operator+=(const QSqrt5& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt5& QSqrt5::operator-=(const QSqrt5& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  Rat a = a_ * o.a_ + Rat(5) * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) {
  if (o.is_zero()) throw Error(Errc::DivByZero, str() + " / 0");
  return *this *= o.inverse();
}

std::string QSqrt5::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out = a_.is_zero() ? std::string{} : a_.str();
  if (b_.sign() < 0) {
    out += a_.is_zero() ? "-" : " - ";
  } else if (!a_.is_zero()) {
    out += " + ";
  }
  const Rat mag = b_.abs();
  if (mag != Rat(1)) out += mag.str() + "*";
  out += "sqrt5";
  return out;
}

QSqrt5 arith(ArithOp op, const QSqrt5& x, const QSqrt5& y) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  throw Error(Errc::Internal, "unknown arithmetic op");
}

QSqrt5 alpha_pow(std::uint64_t n) {
  QSqrt5 result(1);
  QSqrt5 base = QSqrt5::alpha();
  while (n != 0) {
    if (n & 1U) result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

}  // namespace fibcl
