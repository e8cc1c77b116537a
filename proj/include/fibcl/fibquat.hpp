#pragma once

#include <array>
#include <cstdint>

#include "fibcl/fib.hpp"
#include "fibcl/qsqrt5.hpp"
#include "fibcl/quaternion.hpp"

namespace fibcl {

/// F_n = f_n + f_{n+1} e2 + f_{n+2} e3 + f_{n+3} e4.
Quaternion fib_quat(std::uint64_t n, const AlgebraParams& params);

/// H_n^{p,q} = p F_n + q F_{n+1}. Built twice, once from that linear
/// combination and once from the Horadam values h_{n+1..n+4} seeded by
/// (p, q); the two must agree or EInternal is thrown.
Quaternion gen_fib_quat(std::uint64_t n, const Int& p, const Int& q, const AlgebraParams& params);

/// Asymptotic data of a norm sequence of the form
///   N(m) = (S_alpha alpha^{2m} + S_beta beta^{2m} - 2 (-1)^m S_osc) / 5.
/// For F_m the leading term gives E = S_alpha / 5.
struct GrowthProfile {
  QSqrt5 S_alpha;
  QSqrt5 S_beta;
  QSqrt5 S_osc;
  QSqrt5 E;
};

/// Profile of n(F_m). S_alpha is evaluated as 1 + b1 a^2 + b2 a^4 + b1 b2 a^6
/// and cross-checked against the expanded closed form of E.
GrowthProfile growth_profile(const AlgebraParams& params);

/// Profile of n(H_m^{p,q}); the constants pick up (p + q alpha)^2,
/// (p + q beta)^2 and (p + q alpha)(p + q beta) = p^2 + pq - q^2.
GrowthProfile gen_growth_profile(const AlgebraParams& params, const Int& p, const Int& q);

/// E(b1, b2) = [1 + b1 + 2 b2 + 5 b1 b2 + alpha (b1 + 3 b2 + 8 b1 b2)] / 5.
QSqrt5 energy_E(const AlgebraParams& params);

/// E'(b1, b2) = (p + alpha q)^2 E(b1, b2) / 5.
QSqrt5 energy_E_prime(const AlgebraParams& params, const Int& p, const Int& q);

/// Evaluates a profile's norm formula at index m; the sqrt5 parts cancel.
Rat profile_norm(const GrowthProfile& profile, std::uint64_t m);

/// n(F_n) through the Binet expansion instead of the coefficients.
Rat norm_closed_form(std::uint64_t n, const AlgebraParams& params);

struct ThresholdCertificate {
  std::uint64_t n_prime = 0;
  std::uint64_t horizon = 0;
  int limit_sign = 0;
  friend bool operator==(const ThresholdCertificate&, const ThresholdCertificate&) = default;
};

/// Minimal n' with sign(n(F_m)) = sign(E) for all m >= n'. The horizon is the
/// least N with alpha^{2N} |S_alpha| > |S_beta| + 2 |S_osc|; past it the
/// leading term dominates, so only [0, horizon] needs explicit evaluation.
/// Throws EIndeterminate when E = 0.
ThresholdCertificate invertibility_threshold(const AlgebraParams& params);

/// Same for H_m^{p,q}; throws EIndeterminate when E' = 0.
ThresholdCertificate gen_invertibility_threshold(const AlgebraParams& params, const Int& p,
                                                 const Int& q);

/// Re-verifies every certificate invariant against direct quaternion norms.
bool certificate_holds(const ThresholdCertificate& cert, const AlgebraParams& params);
bool gen_certificate_holds(const ThresholdCertificate& cert, const AlgebraParams& params,
                           const Int& p, const Int& q);

/// x1 F_n + x2 F_{n+1}, an element of the real span of {F_n, F_{n+1}}.
struct FibSpaceVector {
  std::uint64_t n = 0;
  Rat x1;
  Rat x2;

  FibSpaceVector operator+(const FibSpaceVector& o) const;
  bool is_zero() const { return x1.is_zero() && x2.is_zero(); }
};

Quaternion coords_to_quaternion(const FibSpaceVector& v, const AlgebraParams& params);

/// sign(E) (x1 y1 n(F_n) + x2 y2 n(F_{n+1})). Positive definite for n >= n'.
/// Throws EIndeterminate when E = 0 and EBelowThreshold when n < n'.
Rat inner_product(const FibSpaceVector& z, const FibSpaceVector& w, const AlgebraParams& params);

/// n(F_n) x1^2 + n(F_{n+1}) x2^2.
Rat quadratic_form(const FibSpaceVector& z, const AlgebraParams& params);

/// Direct diagonal formula n(F_n) x1 y1 + n(F_{n+1}) x2 y2, checked against
/// polarization; mismatch throws EInternal.
Rat bilinear_form(const FibSpaceVector& x, const FibSpaceVector& y, const AlgebraParams& params);

/// (q(x + y) - q(x) - q(y)) / 2.
Rat bilinear_form_polarized(const FibSpaceVector& x, const FibSpaceVector& y,
                            const AlgebraParams& params);

struct GramMatrix {
  std::array<std::array<Rat, 2>, 2> entries;
  Rat det() const {
    return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
  }
};

/// diag(n(F_n), n(F_{n+1})).
GramMatrix gram_matrix(std::uint64_t n, const AlgebraParams& params);

}  // namespace fibcl
