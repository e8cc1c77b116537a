#include "fibcl/selftest.hpp"

#include <algorithm>
#include <random>

#include "fibcl/clifford.hpp"
#include "fibcl/error.hpp"
#include "fibcl/fib.hpp"
#include "fibcl/fibquat.hpp"

namespace fibcl {

namespace {

const std::vector<AlgebraParams>& fixture_algebras() {
  static const std::vector<AlgebraParams> kAlgebras = {
      {1, 1}, {1, -1}, {-2, -3}, {Rat(-1, 2), Rat(-1, 2)}, {2, -3}};
  return kAlgebras;
}

Rat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 6);
  return Rat(Int(num(rng)), Int(den(rng)));
}

Quaternion random_quat(std::mt19937_64& rng, const AlgebraParams& p) {
  return {p, {small_rat(rng), small_rat(rng), small_rat(rng), small_rat(rng)}};
}

struct Check {
  bool ok = true;
  std::string detail;
  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

Check table_group(const SelftestOptions& opt) {
  Check c;
  std::mt19937_64 rng(0x7ab1e);
  for (const auto& p : fixture_algebras()) {
    const StructureTable table = opt.table(p);
    const auto mul = [&](const Quaternion& x, const Quaternion& y) {
      return multiply_with_table(table, x, y);
    };
    // Clifford route: C(diag(-b1, -b2)) carries the same structure constants.
    const DiagonalForm form({-p.beta1(), -p.beta2()});
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const BladeProduct bp = blade_mul(static_cast<Blade>(i), static_cast<Blade>(j), form);
        const Quaternion expect = Quaternion::basis(p, bp.blade) * bp.coeff;
        if (!(mul(Quaternion::basis(p, i), Quaternion::basis(p, j)) == expect)) {
          c.fail("table entry (" + std::to_string(i) + "," + std::to_string(j) +
                 ") disagrees with blade product in " + p.str());
        }
        for (std::size_t k = 0; k < 4; ++k) {
          const auto bi = Quaternion::basis(p, i);
          const auto bj = Quaternion::basis(p, j);
          const auto bk = Quaternion::basis(p, k);
          if (!(mul(mul(bi, bj), bk) == mul(bi, mul(bj, bk)))) {
            c.fail("basis triple not associative in " + p.str());
          }
        }
      }
    }
    for (int t = 0; t < 50; ++t) {
      const Quaternion x = random_quat(rng, p);
      if (!(mul(x, qconj(x)) == Quaternion::one(p) * qnorm(x))) {
        c.fail("x * conj(x) != n(x) in " + p.str());
      }
    }
  }
  return c;
}

Check norm_group() {
  Check c;
  std::mt19937_64 rng(0x4e0);
  for (const auto& p : fixture_algebras()) {
    for (int t = 0; t < 200; ++t) {
      const Quaternion x = random_quat(rng, p);
      const Quaternion y = random_quat(rng, p);
      if (qnorm(qmul(x, y)) != qnorm(x) * qnorm(y)) c.fail("n(xy) != n(x)n(y) in " + p.str());
    }
  }
  return c;
}

Check binet_group() {
  Check c;
  for (std::uint64_t n = 0; n <= 300; ++n) {
    if (!(binet(n) == QSqrt5(Rat(fib(n))))) c.fail("binet(" + std::to_string(n) + ") != fib");
    const QSqrt5 lucas_form(Rat(lucas(n), 2), Rat(fib(n), 2));
    if (!(alpha_pow(n) == lucas_form)) c.fail("alpha^" + std::to_string(n) + " != (L + f sqrt5)/2");
  }
  return c;
}

Check horadam_group() {
  Check c;
  std::mt19937_64 rng(0x40ada);
  std::uniform_int_distribution<long> seed(-1000000, 1000000);
  for (int t = 0; t < 20; ++t) {
    const HoradamParams hp{Int(seed(rng)), Int(seed(rng))};
    for (std::uint64_t n = 0; n <= 200; ++n) {
      if (horadam(n + 1, hp) != hp.p * fib(n) + hp.q * fib(n + 1)) {
        c.fail("h_{n+1} != p f_n + q f_{n+1} at n=" + std::to_string(n));
      }
    }
  }
  return c;
}

Check polarization_group() {
  Check c;
  std::mt19937_64 rng(0x901a);
  std::uniform_int_distribution<std::uint64_t> idx(0, 20);
  for (const auto& p : fixture_algebras()) {
    for (int t = 0; t < 50; ++t) {
      const std::uint64_t n = idx(rng);
      const FibSpaceVector x{n, small_rat(rng), small_rat(rng)};
      const FibSpaceVector y{n, small_rat(rng), small_rat(rng)};
      try {
        (void)bilinear_form(x, y, p);
      } catch (const Error& e) {
        c.fail(e.what());
      }
    }
  }
  return c;
}

Check pbw_group() {
  Check c;
  for (std::size_t rank = 1; rank <= 6; ++rank) {
    std::vector<Rat> sq;
    for (std::size_t i = 0; i < rank; ++i) sq.emplace_back((i % 2) ? -1 : 2);
    const DiagonalForm form(sq);
    const auto table = multiplication_table(form);
    if (table.size() != dimension(rank) || dimension(rank) != (std::uint64_t{1} << rank)) {
      c.fail("dimension mismatch at rank " + std::to_string(rank));
    }
    for (const auto& row : table) {
      for (const auto& cell : row) {
        if (cell.blade >= dimension(rank) || cell.coeff.is_zero()) c.fail("basis product left the basis");
      }
    }
  }
  return c;
}

Check fixture_group() {
  Check c;
  struct Fixture {
    AlgebraParams params;
    QSqrt5 E;
    CliffordClass cls;
    std::uint64_t n_prime;
  };
  const QSqrt5 a = QSqrt5::alpha();
  const std::vector<Fixture> fixtures = {
      {{1, -1}, (QSqrt5(-5) - QSqrt5(10) * a) / QSqrt5(5), CliffordClass::Division, 0},
      {{-2, -3}, (QSqrt5(23) + QSqrt5(37) * a) / QSqrt5(5), CliffordClass::Split, 0},
      {{2, -3}, (QSqrt5(-33) - QSqrt5(55) * a) / QSqrt5(5), CliffordClass::Division, 0},
      {{Rat(-1, 2), Rat(-1, 2)}, QSqrt5(Rat(3, 20)), CliffordClass::Split, 1},
  };
  for (const auto& f : fixtures) {
    const ClassificationReport r = classify(f.params);
    if (!(r.E == f.E)) c.fail("E mismatch for " + f.params.str() + ": " + r.E.str());
    if (r.clifford_class != f.cls) c.fail("class mismatch for " + f.params.str());
    if (r.certificate.n_prime != f.n_prime) c.fail("n' mismatch for " + f.params.str());
    if (!certificate_holds(r.certificate, f.params)) c.fail("certificate fails for " + f.params.str());
  }
  return c;
}

}  // namespace

bool SelftestResult::all_passed() const {
  return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.passed; });
}

SelftestResult selftest(const SelftestOptions& options) {
  SelftestResult result;
  auto run = [&](std::string name, const std::function<Check()>& body) {
    Check c;
    try {
      c = body();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    result.groups.push_back({std::move(name), c.ok, c.detail});
  };
  run("multiplication-table", [&] { return table_group(options); });
  run("norm-multiplicativity", norm_group);
  run("binet", binet_group);
  run("horadam", horadam_group);
  run("polarization", polarization_group);
  run("pbw-dimension", pbw_group);
  run("example-fixtures", fixture_group);
  return result;
}

}  // namespace fibcl
