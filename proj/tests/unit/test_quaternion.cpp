#include <doctest.h>

#include <functional>
#include <random>

#include "fibcl/error.hpp"
#include "fibcl/quaternion.hpp"
#include "support/oracles.hpp"

using namespace fibcl;

namespace {

Quaternion q(const AlgebraParams& p, Rat a, Rat b, Rat c, Rat d) {
  return {p, {std::move(a), std::move(b), std::move(c), std::move(d)}};
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::Internal;
}

}  // namespace

TEST_SUITE("quat") {

TEST_CASE("degenerate parameters are rejected") {
  CHECK(code_of([] { AlgebraParams(0, 1); }) == Errc::InvalidParams);
  CHECK(code_of([] { AlgebraParams(1, 0); }) == Errc::InvalidParams);
}

TEST_CASE("multiplication table examples in H(1,1)") {
  const AlgebraParams h(1, 1);
  const auto e2 = Quaternion::basis(h, 1);
  const auto e3 = Quaternion::basis(h, 2);
  const auto e4 = Quaternion::basis(h, 3);
  CHECK(qmul(e2, e3) == e4);
  CHECK(qmul(e3, e2) == -e4);
  const auto one = Quaternion::one(h);
  CHECK(qmul(one + e2, one + e3) == q(h, 1, 1, 1, 1));
}

TEST_CASE("full table in a generic algebra") {
  const Rat b1(Int(2), Int(3));
  const Rat b2(-5);
  const AlgebraParams h(b1, b2);
  auto E = [&](std::size_t i) { return Quaternion::basis(h, i); };
  CHECK(qmul(E(1), E(1)) == E(0) * -b1);
  CHECK(qmul(E(2), E(2)) == E(0) * -b2);
  CHECK(qmul(E(3), E(3)) == E(0) * -(b1 * b2));
  CHECK(qmul(E(1), E(3)) == E(2) * -b1);
  CHECK(qmul(E(3), E(1)) == E(2) * b1);
  CHECK(qmul(E(2), E(3)) == E(1) * b2);
  CHECK(qmul(E(3), E(2)) == E(1) * -b2);
  CHECK_FALSE(qmul(E(1), E(2)) == qmul(E(2), E(1)));
}

TEST_CASE("mixed algebras") {
  const auto x = Quaternion::one(AlgebraParams(1, 1));
  const auto y = Quaternion::one(AlgebraParams(1, -1));
  CHECK(code_of([&] { (void)qmul(x, y); }) == Errc::MixedAlgebras);
  CHECK(code_of([&] { (void)(x + y); }) == Errc::MixedAlgebras);
}

TEST_CASE("conjugate and norm examples") {
  const AlgebraParams h(1, 1);
  CHECK(qconj(Quaternion::one(h)) == Quaternion::one(h));
  CHECK(qconj(Quaternion::basis(h, 1)) == -Quaternion::basis(h, 1));
  const auto x = q(h, 1, 1, 0, 0);
  CHECK(qmul(x, qconj(x)) == Quaternion::one(h) * Rat(2));
  CHECK(qnorm(x) == 2);

  // F_1 = (1,1,2,3) in H(1,-1) and F_0 = (0,1,1,2) in H(-2,-3).
  CHECK(qnorm(q(AlgebraParams(1, -1), 1, 1, 2, 3)) == -11);
  CHECK(qnorm(q(AlgebraParams(-2, -3), 0, 1, 1, 2)) == 19);
}

TEST_CASE("inverse examples") {
  const AlgebraParams h(1, 1);
  CHECK(qinv(Quaternion::one(h)) == Quaternion::one(h));
  CHECK(qinv(Quaternion::basis(h, 1)) == -Quaternion::basis(h, 1));
  const AlgebraParams s(1, -1);
  CHECK(code_of([&] { (void)qinv(q(s, 1, 0, 1, 0)); }) == Errc::NotInvertible);
}

TEST_CASE("division classification over R") {
  CHECK(is_division_over_R(AlgebraParams(1, 1)));
  CHECK_FALSE(is_division_over_R(AlgebraParams(1, -1)));
  CHECK_FALSE(is_division_over_R(AlgebraParams(-2, -3)));
  CHECK(is_division_over_R(AlgebraParams(Rat(1, 7), 3)));
}

TEST_CASE("norm multiplicativity, associativity, inverses") {
  std::mt19937_64 rng(99);
  for (const auto& p : oracle::fixture_algebras()) {
    for (int t = 0; t < 250; ++t) {
      const auto x = oracle::random_quaternion(rng, p);
      const auto y = oracle::random_quaternion(rng, p);
      const auto z = oracle::random_quaternion(rng, p);
      REQUIRE(qnorm(qmul(x, y)) == qnorm(x) * qnorm(y));
      REQUIRE(qmul(qmul(x, y), z) == qmul(x, qmul(y, z)));
      REQUIRE(qmul(x, qconj(x)) == Quaternion::one(p) * qnorm(x));
      if (!qnorm(x).is_zero()) {
        const auto xi = qinv(x);
        REQUIRE(qmul(x, xi) == Quaternion::one(p));
        REQUIRE(qmul(xi, x) == Quaternion::one(p));
        REQUIRE(xi == qconj(x) * qnorm(x).inverse());
      }
    }
  }
}

TEST_CASE("scale_iso examples") {
  const auto id = scale_iso(AlgebraParams(1, 1), 1, 1);
  CHECK(id.target == AlgebraParams(1, 1));
  CHECK(id.map == identity_map());

  const AlgebraParams src(1, -1);
  const auto s = scale_iso(src, 2, 1);
  CHECK(s.target == AlgebraParams(4, -1));
  CHECK(s.map[1][1] == Rat(1, 2));
  CHECK(s.map[2][2] == 1);
  CHECK(s.map[3][3] == Rat(1, 2));
  CHECK(is_homomorphism(s.map, src, s.target));

  const AlgebraParams half(Rat(-1, 2), Rat(-1, 2));
  const auto h = scale_iso(half, 2, 2);
  CHECK(h.target == AlgebraParams(-2, -2));
  CHECK(is_homomorphism(h.map, half, h.target));

  CHECK(code_of([&] { (void)scale_iso(src, 0, 1); }) == Errc::ZeroScale);
}

TEST_CASE("scale_iso is a homomorphism and inverts") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const AlgebraParams p(oracle::random_nonzero_rat(rng), oracle::random_nonzero_rat(rng));
    const Rat x = oracle::random_nonzero_rat(rng, 9, 5);
    const Rat y = oracle::random_nonzero_rat(rng, 9, 5);
    const auto fwd = scale_iso(p, x, y);
    REQUIRE(is_homomorphism(fwd.map, p, fwd.target));
    const auto back = scale_iso(fwd.target, x.inverse(), y.inverse());
    REQUIRE(back.target == p);
    REQUIRE(compose(back.map, fwd.map) == identity_map());
    const auto v = oracle::random_quaternion(rng, p);
    REQUIRE(apply_map(back.map, apply_map(fwd.map, v, fwd.target), p) == v);
  }
}

TEST_CASE("a wrong map is not a homomorphism") {
  const AlgebraParams p(1, -1);
  BasisMap m = identity_map();
  m[1][1] = Rat(2);
  CHECK_FALSE(is_homomorphism(m, p, p));
}

TEST_CASE("no zero divisors in division algebras") {
  std::mt19937_64 rng(17);
  for (const AlgebraParams& p : {AlgebraParams(1, 1), AlgebraParams(2, 2), AlgebraParams(Rat(1, 3), 5)}) {
    CHECK_FALSE(isotropy_witness(p).has_value());
    for (int t = 0; t < 500; ++t) {
      const auto x = oracle::random_quaternion(rng, p);
      if (!x.is_zero()) REQUIRE(qnorm(x).sign() > 0);
    }
  }
}

TEST_CASE("split algebras yield an isotropy witness") {
  const AlgebraParams s(1, -1);
  const auto w = isotropy_witness(s);
  REQUIRE(w.has_value());
  REQUIRE(w->rational().has_value());
  CHECK(*w->rational() == q(s, 1, 0, 1, 0));  // 1 + e3
  CHECK(w->has_zero_norm());

  std::mt19937_64 rng(23);
  std::vector<AlgebraParams> split = {{-2, -3}, {Rat(-1, 2), Rat(-1, 2)}, {2, -3}, {-1, 5}};
  for (int t = 0; t < 40; ++t) {
    Rat b1 = oracle::random_nonzero_rat(rng);
    const Rat b2 = oracle::random_nonzero_rat(rng);
    if (b1.sign() > 0 && b2.sign() > 0) b1 = -b1;
    split.emplace_back(b1, b2);
  }
  for (const auto& p : split) {
    CAPTURE(p.str());
    const auto wit = isotropy_witness(p);
    REQUIRE(wit.has_value());
    CHECK(wit->has_zero_norm());
    if (auto r = wit->rational()) {
      CHECK_FALSE(r->is_zero());
      CHECK(qnorm(*r) == 0);
      CHECK(qmul(*r, qconj(*r)).is_zero());  // zero divisor
    }
  }
}

TEST_CASE("H(-1/2,-1/2) has a rational zero divisor") {
  const auto w = isotropy_witness(AlgebraParams(Rat(-1, 2), Rat(-1, 2)));
  REQUIRE(w);
  REQUIRE(w->rational());
  CHECK(qnorm(*w->rational()) == 0);
}

}  // TEST_SUITE
