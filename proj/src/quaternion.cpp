#include "fibcl/quaternion.hpp"

#include "fibcl/error.hpp"

namespace fibcl {

namespace {

void require_same(const AlgebraParams& a, const AlgebraParams& b) {
  if (!(a == b)) throw Error(Errc::MixedAlgebras, a.str() + " vs " + b.str());
}

// Coefficients of the diagonal norm form in the basis {1, e2, e3, e4}.
std::array<Rat, 4> norm_weights(const AlgebraParams& p) {
  return {Rat(1), p.beta1(), p.beta2(), p.beta1() * p.beta2()};
}

}  // namespace

AlgebraParams::AlgebraParams(Rat beta1, Rat beta2)
    : beta1_(std::move(beta1)), beta2_(std::move(beta2)) {
  if (beta1_.is_zero() || beta2_.is_zero()) {
    throw Error(Errc::InvalidParams, "degenerate algebra " + str());
  }
}

Quaternion Quaternion::one(const AlgebraParams& params) { return basis(params, 0); }

Quaternion Quaternion::basis(const AlgebraParams& params, std::size_t index) {
  QuatCoeffs c{};
  c.at(index) = Rat(1);
  return {params, c};
}

bool Quaternion::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Quaternion Quaternion::operator-() const {
  Quaternion out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  require_same(params_, o.params_);
  for (std::size_t i = 0; i < 4; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  require_same(params_, o.params_);
  for (std::size_t i = 0; i < 4; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Quaternion& Quaternion::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string Quaternion::str() const {
  static constexpr const char* kNames[] = {"1", "e2", "e3", "e4"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += " + ";
    out += coeffs_[i].str() + "*" + kNames[i];
  }
  return out + " in " + params_.str();
}

StructureTable structure_table(const AlgebraParams& params) {
  const Rat& b1 = params.beta1();
  const Rat& b2 = params.beta2();
  auto e = [](Rat c, std::uint8_t idx) { return TableEntry{std::move(c), idx}; };
  return {{
      {e(1, 0), e(1, 1), e(1, 2), e(1, 3)},
      {e(1, 1), e(-b1, 0), e(1, 3), e(-b1, 2)},
      {e(1, 2), e(-1, 3), e(-b2, 0), e(b2, 1)},
      {e(1, 3), e(b1, 2), e(-b2, 1), e(-(b1 * b2), 0)},
  }};
}

Quaternion multiply_with_table(const StructureTable& table, const Quaternion& x,
                               const Quaternion& y) {
  QuatCoeffs out{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (y[j].is_zero()) continue;
      const TableEntry& cell = table[i][j];
      out[cell.index] += cell.coeff * x[i] * y[j];
    }
  }
  return {x.params(), out};
}

Quaternion qmul(const Quaternion& x, const Quaternion& y) {
  require_same(x.params(), y.params());
  return multiply_with_table(structure_table(x.params()), x, y);
}

Quaternion qconj(const Quaternion& x) {
  const auto& c = x.coeffs();
  return {x.params(), {c[0], -c[1], -c[2], -c[3]}};
}

Rat qnorm(const Quaternion& x) {
  const auto w = norm_weights(x.params());
  Rat n;
  for (std::size_t i = 0; i < 4; ++i) n += w[i] * x[i] * x[i];
  return n;
}

Rat qnorm_polar(const Quaternion& x, const Quaternion& y) {
  require_same(x.params(), y.params());
  const auto w = norm_weights(x.params());
  Rat n;
  for (std::size_t i = 0; i < 4; ++i) n += w[i] * x[i] * y[i];
  return n;
}

Quaternion qinv(const Quaternion& x) {
  const Rat n = qnorm(x);
  if (n.is_zero()) throw Error(Errc::NotInvertible, "norm of " + x.str() + " is 0");
  return qconj(x) * n.inverse();
}

bool is_division_over_R(const AlgebraParams& params) {
  return params.beta1().sign() > 0 && params.beta2().sign() > 0;
}

BasisMap identity_map() {
  BasisMap m{};
  for (std::size_t j = 0; j < 4; ++j) m[j][j] = Rat(1);
  return m;
}

BasisMap compose(const BasisMap& outer, const BasisMap& inner) {
  BasisMap out{};
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      if (inner[j][k].is_zero()) continue;
      for (std::size_t i = 0; i < 4; ++i) out[j][i] += inner[j][k] * outer[k][i];
    }
  }
  return out;
}

Quaternion apply_map(const BasisMap& map, const Quaternion& x, const AlgebraParams& target) {
  QuatCoeffs out{};
  for (std::size_t j = 0; j < 4; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < 4; ++i) out[i] += x[j] * map[j][i];
  }
  return {target, out};
}

ScaleIso scale_iso(const AlgebraParams& params, const Rat& x, const Rat& y) {
  if (x.is_zero() || y.is_zero()) {
    throw Error(Errc::ZeroScale, "x=" + x.str() + " y=" + y.str());
  }
  AlgebraParams target(x * x * params.beta1(), y * y * params.beta2());
  BasisMap map{};
  map[0][0] = Rat(1);
  map[1][1] = x.inverse();
  map[2][2] = y.inverse();
  map[3][3] = (x * y).inverse();
  return {std::move(target), map};
}

bool is_homomorphism(const BasisMap& map, const AlgebraParams& source,
                     const AlgebraParams& target) {
  for (std::size_t i = 0; i < 4; ++i) {
    const Quaternion bi = Quaternion::basis(source, i);
    for (std::size_t j = 0; j < 4; ++j) {
      const Quaternion bj = Quaternion::basis(source, j);
      const Quaternion lhs = apply_map(map, qmul(bi, bj), target);
      const Quaternion rhs = qmul(apply_map(map, bi, target), apply_map(map, bj, target));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

std::optional<Quaternion> IsotropyWitness::rational() const {
  if (!radicand.is_perfect_square()) return std::nullopt;
  return rational_part + radical_part * radicand.sqrt_exact();
}

bool IsotropyWitness::has_zero_norm() const {
  if (rational_part.is_zero() && radical_part.is_zero()) return false;
  if (auto q = rational(); q) return !q->is_zero() && qnorm(*q).is_zero();
  return (qnorm(rational_part) + radicand * qnorm(radical_part)).is_zero() &&
         qnorm_polar(rational_part, radical_part).is_zero();
}

std::optional<IsotropyWitness> isotropy_witness(const AlgebraParams& params) {
  if (is_division_over_R(params)) return std::nullopt;
  const auto w = norm_weights(params);
  std::optional<IsotropyWitness> fallback;
  for (std::size_t i = 0; i < 4; ++i) {
    if (w[i].sign() <= 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (w[j].sign() >= 0) continue;
      // w_i + w_j s^2 = 0  =>  s^2 = -w_i / w_j > 0.
      IsotropyWitness cand{Quaternion::basis(params, i), Quaternion::basis(params, j),
                           -w[i] / w[j]};
      if (cand.radicand.is_perfect_square()) return cand;
      if (!fallback) fallback = std::move(cand);
    }
  }
  // No pair works over Q: try small integer vectors in a fixed order.
  constexpr long kBound = 3;
  for (long a = 0; a <= kBound; ++a) {
    for (long b = -kBound; b <= kBound; ++b) {
      for (long c = -kBound; c <= kBound; ++c) {
        for (long d = -kBound; d <= kBound; ++d) {
          Quaternion x(params, {Rat(a), Rat(b), Rat(c), Rat(d)});
          if (x.is_zero() || !qnorm(x).is_zero()) continue;
          return IsotropyWitness{std::move(x), Quaternion(params), Rat(0)};
        }
      }
    }
  }
  return fallback;
}

}  // namespace fibcl
