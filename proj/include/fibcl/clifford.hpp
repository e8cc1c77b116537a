#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fibcl/fibquat.hpp"
#include "fibcl/qsqrt5.hpp"
#include "fibcl/quaternion.hpp"
#include "fibcl/rational.hpp"

namespace fibcl {

/// Blade index: bit i set means generator e_{i+1} occurs in the ordered product.
using Blade = std::uint32_t;

inline constexpr std::size_t kMaxGenerators = 16;

/// Nondegenerate diagonal quadratic form; generator i squares to squares[i].
class DiagonalForm {
 public:
  /// Throws EDegenerate on a zero entry and EInvalidParams unless
  /// 1 <= size <= kMaxGenerators.
  explicit DiagonalForm(std::vector<Rat> squares);

  std::size_t rank() const { return squares_.size(); }
  const std::vector<Rat>& squares() const { return squares_; }
  const Rat& operator[](std::size_t i) const { return squares_[i]; }

  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

 private:
  std::vector<Rat> squares_;
};

struct BladeProduct {
  Rat coeff;
  Blade blade = 0;
  friend bool operator==(const BladeProduct&, const BladeProduct&) = default;
};

/// Product of two PBW basis blades under the relations e_i^2 = q_i and
/// e_i e_j = -e_j e_i (i != j).
BladeProduct blade_mul(Blade lhs, Blade rhs, const DiagonalForm& form);

/// "1", "e1", "e1e3", ...
std::string blade_name(Blade blade);

/// 2^rank. Rank 0 is allowed here and gives the ground field.
std::uint64_t dimension(std::size_t rank);
std::uint64_t dimension(const DiagonalForm& form);

/// Dense element of C(V, q) over the PBW basis, one coefficient per blade.
class CliffordElement {
 public:
  explicit CliffordElement(DiagonalForm form);

  static CliffordElement scalar(const DiagonalForm& form, const Rat& value);
  static CliffordElement basis_blade(const DiagonalForm& form, Blade blade);
  /// The generator e_{index+1}.
  static CliffordElement generator(const DiagonalForm& form, std::size_t index);

  const DiagonalForm& form() const { return form_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](Blade b) const { return coeffs_[b]; }
  Rat& operator[](Blade b) { return coeffs_[b]; }

  bool is_zero() const;

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const Rat& s);
  friend CliffordElement operator+(CliffordElement x, const CliffordElement& y) { return x += y; }
  friend CliffordElement operator-(CliffordElement x, const CliffordElement& y) { return x -= y; }
  friend CliffordElement operator*(CliffordElement x, const Rat& s) { return x *= s; }

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

  std::string str() const;

 private:
  DiagonalForm form_;
  std::vector<Rat> coeffs_;
};

/// Bilinear extension of blade_mul. Throws EMixedForms on differing forms.
CliffordElement cmul(const CliffordElement& x, const CliffordElement& y);

/// Full basis product table, row-major over blades 0 .. 2^n - 1.
std::vector<std::vector<BladeProduct>> multiplication_table(const DiagonalForm& form);

/// [n(F_n), n(F_{n+1})]; throws EDegenerate when either norm vanishes.
DiagonalForm fib_clifford_form(std::uint64_t n, const AlgebraParams& params);

enum class CliffordClass { Split, Division };

std::string_view class_name(CliffordClass c);

/// Rank-2 class: Division iff both squares are negative (Cl_{0,2}), else Split.
CliffordClass rank2_class(const DiagonalForm& form);

struct QuaternionIso {
  AlgebraParams target;
  /// Column j is the image of blade j (1, e1, e2, e1e2) in {1, e2, e3, e4}.
  BasisMap map;
};

/// C(diag(a, b)) -> H(-a, -b) with 1 -> 1, e1 -> e2, e2 -> e3, e1e2 -> e4.
QuaternionIso quaternion_iso(const DiagonalForm& form);

/// Compares cmul and qmul under the map on all 16 basis pairs.
bool verify_quaternion_iso(const DiagonalForm& form, const QuaternionIso& iso);

struct ClassificationReport {
  AlgebraParams params;
  QSqrt5 E;
  int sign_E = 0;
  bool input_is_division = false;
  ThresholdCertificate certificate;
  std::uint64_t basepoint = 0;
  DiagonalForm form;
  CliffordClass clifford_class = CliffordClass::Split;
  /// H(-1,-1) for Split, H(1,1) for Division.
  AlgebraParams canonical;
  /// (|a|, |b|): squared scalings taking H(-a, -b) to the canonical algebra.
  std::array<Rat, 2> scaling_witness;
};

/// Throws EIndeterminate when E = 0.
ClassificationReport classify(const AlgebraParams& params);

}  // namespace fibcl
