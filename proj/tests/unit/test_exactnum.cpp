#include <doctest.h>

#include <random>

#include "fibcl/error.hpp"
#include "fibcl/qsqrt5.hpp"
#include "fibcl/rational.hpp"
#include "support/oracles.hpp"

using namespace fibcl;

namespace {

QSqrt5 random_q(std::mt19937_64& rng) { return {oracle::random_rat(rng), oracle::random_rat(rng)}; }

}  // namespace

TEST_SUITE("exactnum") {

TEST_CASE("rationals are canonical") {
  const Rat r(Int(6), Int(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r == Rat::parse("-3/2"));
  CHECK(Rat::parse("10/5") == Rat(2));
  CHECK(Rat::parse("-0") == Rat(0));
  CHECK(Rat(0).str() == "0");
  CHECK(Rat(Int(-7), Int(21)).str() == "-1/3");
}

TEST_CASE("rational text grammar") {
  CHECK(Rat::parse("123456789012345678901234567890").num() ==
        Int("123456789012345678901234567890"));
  for (const char* bad : {"", "-", "+1", "1/", "/2", "1/0", "1.5", " 1", "1/-2", "--1", "a"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rat::parse(bad), Error);
  }
  CHECK(parse_int("-42") == -42);
  CHECK_THROWS_AS(parse_int("4/2"), Error);
}

TEST_CASE("rational division by zero") {
  try {
    (void)(Rat(1) / Rat(0));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivByZero);
  }
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), Error);
}

TEST_CASE("perfect squares") {
  CHECK(Rat(Int(9), Int(4)).is_perfect_square());
  CHECK(Rat(Int(9), Int(4)).sqrt_exact() == Rat(Int(3), Int(2)));
  CHECK_FALSE(Rat(2).is_perfect_square());
  CHECK_FALSE(Rat(-4).is_perfect_square());
  CHECK(Rat(0).is_perfect_square());
}

TEST_CASE("arith examples") {
  const QSqrt5 a = QSqrt5::alpha();
  const QSqrt5 b = QSqrt5::beta();
  CHECK(arith(ArithOp::Mul, a, b) == QSqrt5(-1));
  CHECK(arith(ArithOp::Mul, a, a) == QSqrt5(Rat(3, 2), Rat(1, 2)));
  CHECK(arith(ArithOp::Mul, a, a) == a + QSqrt5(1));
  const QSqrt5 inv = arith(ArithOp::Div, QSqrt5(1), a);
  CHECK(inv == QSqrt5(Rat(-1, 2), Rat(1, 2)));
  CHECK(inv == a - QSqrt5(1));
  CHECK(a * inv == QSqrt5(1));
  CHECK(arith(ArithOp::Add, a, b) == QSqrt5(1));
  CHECK(arith(ArithOp::Sub, a, b) == QSqrt5::sqrt5());
}

TEST_CASE("division by zero in Q(sqrt5)") {
  try {
    (void)arith(ArithOp::Div, QSqrt5::alpha(), QSqrt5());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivByZero);
    CHECK(e.name() == "EDivByZero");
  }
}

TEST_CASE("sign examples") {
  CHECK(QSqrt5().sign() == 0);
  CHECK(QSqrt5(1, -1).sign() == -1);
  CHECK(QSqrt5(-10, -5).sign() == -1);
  // (-5 - 10 alpha) expressed over sqrt5: -10 - 5 sqrt5.
  CHECK(QSqrt5(-5) - QSqrt5(10) * QSqrt5::alpha() == QSqrt5(-10, -5));
  CHECK(QSqrt5(3, -1).sign() == 1);   // 9 > 5
  CHECK(QSqrt5(-2, 1).sign() == 1);   // 4 < 5
  CHECK(QSqrt5(0, -2).sign() == -1);
  CHECK(QSqrt5::beta().sign() == -1);
}

TEST_CASE("sign agrees with interval enclosure oracle") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 1000) {
    const QSqrt5 x = random_q(rng);
    if (x.is_zero()) continue;
    CAPTURE(x.str());
    CHECK(x.sign() == oracle::interval_sign(x.a(), x.b()));
    ++checked;
  }
  // Near-cancelling pairs from convergents of sqrt5: 161/72, 682/305.
  CHECK(QSqrt5(161, -72).sign() == oracle::interval_sign(Rat(161), Rat(-72)));
  CHECK(QSqrt5(-682, 305).sign() == oracle::interval_sign(Rat(-682), Rat(305)));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const QSqrt5 x = random_q(rng);
    const QSqrt5 y = random_q(rng);
    const QSqrt5 z = random_q(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == QSqrt5());
    if (!x.is_zero()) {
      CHECK(x * arith(ArithOp::Div, QSqrt5(1), x) == QSqrt5(1));
      CHECK((y / x) * x == y);
    }
  }
}

TEST_CASE("alpha_pow examples") {
  CHECK(alpha_pow(0) == QSqrt5(1));
  CHECK(alpha_pow(1) == QSqrt5::alpha());
  CHECK(alpha_pow(2) == QSqrt5(Rat(3, 2), Rat(1, 2)));
  // Recurrence oracle: L_10 = 123, f_10 = 55.
  const auto L = oracle::lucas_table(11);
  const auto f = oracle::fib_table(11);
  REQUIRE(L[10] == 123);
  REQUIRE(f[10] == 55);
  CHECK(alpha_pow(10) == QSqrt5(Rat(Int(123), Int(2)), Rat(Int(55), Int(2))));
}

TEST_CASE("alpha_pow against repeated multiplication and exponent addition") {
  QSqrt5 acc(1);
  for (std::uint64_t n = 0; n <= 128; ++n) {
    CHECK(alpha_pow(n) == acc);
    acc *= QSqrt5::alpha();
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> d(0, 64);
  for (int t = 0; t < 200; ++t) {
    const auto m = d(rng);
    const auto n = d(rng);
    CHECK(alpha_pow(m + n) == alpha_pow(m) * alpha_pow(n));
  }
}

TEST_CASE("text rendering") {
  CHECK(QSqrt5(Rat(3, 20)).str() == "3/20");
  CHECK(QSqrt5(-1, -2).str() == "-1 - 2*sqrt5");
  CHECK(QSqrt5(0, 1).str() == "sqrt5");
  CHECK(QSqrt5(0, -1).str() == "-sqrt5");
  CHECK(QSqrt5(Rat(1, 2), Rat(1, 2)).str() == "1/2 + 1/2*sqrt5");
}

}  // TEST_SUITE
