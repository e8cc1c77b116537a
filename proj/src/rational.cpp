#include "fibcl/rational.hpp"

#include <cctype>

#include "fibcl/error.hpp"

namespace fibcl {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::DivByZero, num.get_str() + "/0");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(Errc::Parse, "not a rational: '" + std::string(text) + "'");
  }
  Int num(std::string(num_text), 10);
  Int den(std::string(den_text), 10);
  if (den == 0) throw Error(Errc::Parse, "zero denominator: '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rat(num, den);
}

bool Rat::is_perfect_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(v_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(v_.get_den_mpz_t()) != 0;
}

Rat Rat::sqrt_exact() const {
  if (!is_perfect_square()) throw Error(Errc::Internal, "sqrt of non-square " + str());
  return Rat(Int(sqrt(v_.get_num())), Int(sqrt(v_.get_den())));
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(Errc::DivByZero, "inverse of 0");
  return Rat(mpq_class(1 / v_));
}

Rat Rat::pow(unsigned exponent) const {
  Rat result(1);
  Rat base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::DivByZero, str() + " / 0");
  v_ /= o.v_;
  return *this;
}

Int parse_int(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw Error(Errc::Parse, "not an integer: '" + std::string(text) + "'");
  Int value(std::string(body), 10);
  return negative ? Int(-value) : value;
}

}  // namespace fibcl
