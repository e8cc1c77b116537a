#include "fibcl/clifford.hpp"

#include <bit>

#include "fibcl/error.hpp"

namespace fibcl {

namespace {

std::string form_str(const DiagonalForm& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.rank(); ++i) {
    if (i) out += ",";
    out += f[i].str();
  }
  return out + "]";
}

// Transpositions needed to sort the word lhs.rhs: every generator in rhs
// must move past each strictly larger generator in lhs.
int reorder_sign(Blade lhs, Blade rhs) {
  int swaps = 0;
  for (Blade a = lhs >> 1; a != 0; a >>= 1) swaps += std::popcount(a & rhs);
  return (swaps & 1) ? -1 : 1;
}

}  // namespace

DiagonalForm::DiagonalForm(std::vector<Rat> squares) : squares_(std::move(squares)) {
  if (squares_.empty() || squares_.size() > kMaxGenerators) {
    throw Error(Errc::InvalidParams,
                "rank " + std::to_string(squares_.size()) + " outside [1, 16]");
  }
  for (const auto& s : squares_) {
    if (s.is_zero()) throw Error(Errc::Degenerate, "zero square in " + form_str(*this));
  }
}

BladeProduct blade_mul(Blade lhs, Blade rhs, const DiagonalForm& form) {
  Rat coeff(reorder_sign(lhs, rhs));
  for (Blade common = lhs & rhs; common != 0; common &= common - 1) {
    coeff *= form[static_cast<std::size_t>(std::countr_zero(common))];
  }
  return {std::move(coeff), lhs ^ rhs};
}

std::string blade_name(Blade blade) {
  if (blade == 0) return "1";
  std::string out;
  for (std::size_t i = 0; blade != 0; ++i, blade >>= 1) {
    if (blade & 1U) out += "e" + std::to_string(i + 1);
  }
  return out;
}

std::uint64_t dimension(std::size_t rank) { return std::uint64_t{1} << rank; }
std::uint64_t dimension(const DiagonalForm& form) { return dimension(form.rank()); }

CliffordElement::CliffordElement(DiagonalForm form)
    : form_(std::move(form)), coeffs_(dimension(form_)) {}

CliffordElement CliffordElement::scalar(const DiagonalForm& form, const Rat& value) {
  CliffordElement e(form);
  e.coeffs_[0] = value;
  return e;
}

CliffordElement CliffordElement::basis_blade(const DiagonalForm& form, Blade blade) {
  CliffordElement e(form);
  e.coeffs_.at(blade) = Rat(1);
  return e;
}

CliffordElement CliffordElement::generator(const DiagonalForm& form, std::size_t index) {
  return basis_blade(form, Blade{1} << index);
}

bool CliffordElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  if (!(form_ == o.form_)) throw Error(Errc::MixedForms, form_str(form_) + " vs " + form_str(o.form_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  if (!(form_ == o.form_)) throw Error(Errc::MixedForms, form_str(form_) + " vs " + form_str(o.form_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string CliffordElement::str() const {
  std::string out;
  for (Blade b = 0; b < coeffs_.size(); ++b) {
    if (coeffs_[b].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[b].str() + "*" + blade_name(b);
  }
  return out.empty() ? "0" : out;
}

CliffordElement cmul(const CliffordElement& x, const CliffordElement& y) {
  if (!(x.form() == y.form())) {
    throw Error(Errc::MixedForms, form_str(x.form()) + " vs " + form_str(y.form()));
  }
  CliffordElement out(x.form());
  const auto n = static_cast<Blade>(x.coeffs().size());
  for (Blade a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (Blade b = 0; b < n; ++b) {
      if (y[b].is_zero()) continue;
      const BladeProduct p = blade_mul(a, b, x.form());
      out[p.blade] += p.coeff * x[a] * y[b];
    }
  }
  return out;
}

std::vector<std::vector<BladeProduct>> multiplication_table(const DiagonalForm& form) {
  const auto n = static_cast<Blade>(dimension(form));
  std::vector<std::vector<BladeProduct>> table(n);
  for (Blade a = 0; a < n; ++a) {
    table[a].reserve(n);
    for (Blade b = 0; b < n; ++b) table[a].push_back(blade_mul(a, b, form));
  }
  return table;
}

DiagonalForm fib_clifford_form(std::uint64_t n, const AlgebraParams& params) {
  Rat a = qnorm(fib_quat(n, params));
  Rat b = qnorm(fib_quat(n + 1, params));
  if (a.is_zero() || b.is_zero()) {
    throw Error(Errc::Degenerate, "n(F_" + std::to_string(n) + ")=" + a.str() + ", n(F_" +
                                      std::to_string(n + 1) + ")=" + b.str() + " in " +
                                      params.str());
  }
  return DiagonalForm({std::move(a), std::move(b)});
}

std::string_view class_name(CliffordClass c) {
  return c == CliffordClass::Division ? "Division" : "Split";
}

CliffordClass rank2_class(const DiagonalForm& form) {
  if (form.rank() != 2) throw Error(Errc::InvalidParams, "rank-2 form expected, got " + form_str(form));
  return (form[0].sign() < 0 && form[1].sign() < 0) ? CliffordClass::Division
                                                     : CliffordClass::Split;
}

QuaternionIso quaternion_iso(const DiagonalForm& form) {
  if (form.rank() != 2) throw Error(Errc::InvalidParams, "rank-2 form expected, got " + form_str(form));
  return {AlgebraParams(-form[0], -form[1]), identity_map()};
}

bool verify_quaternion_iso(const DiagonalForm& form, const QuaternionIso& iso) {
  if (form.rank() != 2) return false;
  auto image = [&](const CliffordElement& c) {
    Quaternion q(iso.target);
    for (Blade b = 0; b < 4; ++b) {
      if (!c[b].is_zero()) q += Quaternion(iso.target, iso.map[b]) * c[b];
    }
    return q;
  };
  for (Blade a = 0; a < 4; ++a) {
    const auto ca = CliffordElement::basis_blade(form, a);
    for (Blade b = 0; b < 4; ++b) {
      const auto cb = CliffordElement::basis_blade(form, b);
      if (!(image(cmul(ca, cb)) == qmul(image(ca), image(cb)))) return false;
    }
  }
  return true;
}

ClassificationReport classify(const AlgebraParams& params) {
  const QSqrt5 e = energy_E(params);
  if (e.is_zero()) throw Error(Errc::Indeterminate, "E = 0 for " + params.str());
  const ThresholdCertificate cert = invertibility_threshold(params);

  // Past n' both norms already carry sign(E), so this loop exits at once; it
  // pins the rule "first index >= n' with both norms nonzero".
  std::uint64_t base = cert.n_prime;
  while (qnorm(fib_quat(base, params)).is_zero() || qnorm(fib_quat(base + 1, params)).is_zero()) {
    ++base;
  }
  DiagonalForm form = fib_clifford_form(base, params);
  const CliffordClass cls = rank2_class(form);
  const QuaternionIso iso = quaternion_iso(form);
  if (!verify_quaternion_iso(form, iso)) {
    throw Error(Errc::Internal, "Clifford/quaternion identification failed for " + form_str(form));
  }
  AlgebraParams canonical = cls == CliffordClass::Division ? AlgebraParams(1, 1)
                                                           : AlgebraParams(-1, -1);
  std::array<Rat, 2> witness{form[0].abs(), form[1].abs()};

  return ClassificationReport{params,
                              e,
                              e.sign(),
                              is_division_over_R(params),
                              cert,
                              base,
                              std::move(form),
                              cls,
                              std::move(canonical),
                              std::move(witness)};
}

}  // namespace fibcl
