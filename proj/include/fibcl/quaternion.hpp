#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "fibcl/rational.hpp"

namespace fibcl {

/// Parameters of the generalized quaternion algebra H(beta1, beta2).
class AlgebraParams {
 public:
  /// Throws EInvalidParams when either parameter is zero.
  AlgebraParams(Rat beta1, Rat beta2);

  const Rat& beta1() const { return beta1_; }
  const Rat& beta2() const { return beta2_; }

  std::string str() const { return "H(" + beta1_.str() + "," + beta2_.str() + ")"; }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;

 private:
  Rat beta1_;
  Rat beta2_;
};

/// Coefficients in the basis {1, e2, e3, e4}, index 0..3.
using QuatCoeffs = std::array<Rat, 4>;

class Quaternion {
 public:
  explicit Quaternion(AlgebraParams params) : params_(std::move(params)) {}
  Quaternion(AlgebraParams params, QuatCoeffs coeffs)
      : params_(std::move(params)), coeffs_(std::move(coeffs)) {}

  static Quaternion one(const AlgebraParams& params);
  /// Basis element by index: 0 -> 1, 1 -> e2, 2 -> e3, 3 -> e4.
  static Quaternion basis(const AlgebraParams& params, std::size_t index);

  const AlgebraParams& params() const { return params_; }
  const QuatCoeffs& coeffs() const { return coeffs_; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;

  Quaternion operator-() const;
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rat& s);

  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
  friend Quaternion operator*(Quaternion x, const Rat& s) { return x *= s; }
  friend Quaternion operator*(const Rat& s, Quaternion x) { return x *= s; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  std::string str() const;

 private:
  AlgebraParams params_;
  QuatCoeffs coeffs_{};
};

/// One cell of a multiplication table: basis_i * basis_j = coeff * basis_index.
struct TableEntry {
  Rat coeff;
  std::uint8_t index = 0;
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

using StructureTable = std::array<std::array<TableEntry, 4>, 4>;

/// The multiplication table of H(beta1, beta2):
/// e2^2 = -b1, e3^2 = -b2, e4^2 = -b1 b2, e2 e3 = e4, e3 e2 = -e4,
/// e2 e4 = -b1 e3, e4 e2 = b1 e3, e3 e4 = b2 e2, e4 e3 = -b2 e2.
StructureTable structure_table(const AlgebraParams& params);

/// Bilinear extension of an arbitrary table. qmul is this with the table above.
Quaternion multiply_with_table(const StructureTable& table, const Quaternion& x,
                               const Quaternion& y);

/// Throws EMixedAlgebras when the operands live in different algebras.
Quaternion qmul(const Quaternion& x, const Quaternion& y);

Quaternion qconj(const Quaternion& x);

/// a1^2 + b1 a2^2 + b2 a3^2 + b1 b2 a4^2.
Rat qnorm(const Quaternion& x);

/// Polar form of qnorm: (n(x + y) - n(x) - n(y)) / 2.
Rat qnorm_polar(const Quaternion& x, const Quaternion& y);

/// Throws ENotInvertible when qnorm(x) = 0.
Quaternion qinv(const Quaternion& x);

/// H(beta1, beta2) over the reals is a division algebra iff beta1, beta2 > 0.
bool is_division_over_R(const AlgebraParams& params);

/// A linear map between 4-dimensional algebras, stored as the images of the
/// source basis elements: column j holds the coordinates of image(basis_j).
using BasisMap = std::array<QuatCoeffs, 4>;

BasisMap identity_map();
BasisMap compose(const BasisMap& outer, const BasisMap& inner);
Quaternion apply_map(const BasisMap& map, const Quaternion& x, const AlgebraParams& target);

struct ScaleIso {
  AlgebraParams target;
  BasisMap map;
};

/// H(b1, b2) -> H(x^2 b1, y^2 b2) with e2 -> e2'/x, e3 -> e3'/y, e4 -> e4'/(xy).
/// Throws EZeroScale when x or y is zero.
ScaleIso scale_iso(const AlgebraParams& params, const Rat& x, const Rat& y);

/// Checks map(b_i b_j) = map(b_i) map(b_j) on all 16 basis pairs.
bool is_homomorphism(const BasisMap& map, const AlgebraParams& source,
                     const AlgebraParams& target);

/// A nonzero isotropic vector of the norm form, written as
/// rational_part + sqrt(radicand) * radical_part. When radicand is a perfect
/// square the witness is an honest rational zero divisor.
struct IsotropyWitness {
  Quaternion rational_part;
  Quaternion radical_part;
  Rat radicand;

  /// The witness as a rational quaternion, when radicand is a square.
  std::optional<Quaternion> rational() const;
  /// n(a + sqrt(r) b) = n(a) + r n(b) + 2 sqrt(r) B(a, b), checked exactly.
  bool has_zero_norm() const;
};

/// Built from a pair of norm-form coefficients of opposite sign, preferring a
/// pair whose ratio is a rational square. Empty exactly for division algebras.
std::optional<IsotropyWitness> isotropy_witness(const AlgebraParams& params);

}  // namespace fibcl
