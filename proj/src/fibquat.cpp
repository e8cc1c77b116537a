#include "fibcl/fibquat.hpp"

#include <functional>
#include <string>

#include "fibcl/error.hpp"

namespace fibcl {

namespace {

std::string u64(std::uint64_t n) { return std::to_string(n); }

Quaternion from_horadam(std::uint64_t first, const HoradamParams& hp, const AlgebraParams& params) {
  return {params, {Rat(horadam(first, hp)), Rat(horadam(first + 1, hp)),
                   Rat(horadam(first + 2, hp)), Rat(horadam(first + 3, hp))}};
}

QSqrt5 expanded_leading_term(const AlgebraParams& params) {
  const Rat& b1 = params.beta1();
  const Rat& b2 = params.beta2();
  const Rat b12 = b1 * b2;
  const Rat rational = Rat(1) + b1 + Rat(2) * b2 + Rat(5) * b12;
  const Rat alpha_coeff = b1 + Rat(3) * b2 + Rat(8) * b12;
  return QSqrt5(rational) + QSqrt5::alpha() * QSqrt5(alpha_coeff);
}

// 1 + b1 x^2 + b2 x^4 + b1 b2 x^6.
QSqrt5 weighted_even_powers(const AlgebraParams& params, const QSqrt5& x) {
  const QSqrt5 x2 = x * x;
  const QSqrt5 x4 = x2 * x2;
  const QSqrt5 x6 = x4 * x2;
  const Rat& b1 = params.beta1();
  const Rat& b2 = params.beta2();
  return QSqrt5(1) + QSqrt5(b1) * x2 + QSqrt5(b2) * x4 + QSqrt5(b1 * b2) * x6;
}

std::uint64_t domination_horizon(const GrowthProfile& profile) {
  const QSqrt5 rhs = profile.S_beta.abs() + QSqrt5(2) * profile.S_osc.abs();
  const QSqrt5 step = QSqrt5::alpha() * QSqrt5::alpha();
  QSqrt5 lhs = profile.S_alpha.abs();
  std::uint64_t n = 0;
  while (!less(rhs, lhs)) {
    lhs *= step;
    ++n;
  }
  return n;
}

bool dominates_at(const GrowthProfile& profile, std::uint64_t n) {
  const QSqrt5 rhs = profile.S_beta.abs() + QSqrt5(2) * profile.S_osc.abs();
  return less(rhs, alpha_pow(2 * n) * profile.S_alpha.abs());
}

ThresholdCertificate certify(const GrowthProfile& profile) {
  const int limit = profile.S_alpha.sign();
  ThresholdCertificate cert;
  cert.limit_sign = limit;
  cert.horizon = domination_horizon(profile);
  std::uint64_t start = cert.horizon;
  while (start > 0 && profile_norm(profile, start - 1).sign() == limit) --start;
  cert.n_prime = start;
  return cert;
}

bool check_certificate(const ThresholdCertificate& cert, const GrowthProfile& profile,
                       const std::function<Rat(std::uint64_t)>& direct_norm) {
  if (cert.limit_sign == 0 || cert.limit_sign != profile.S_alpha.sign()) return false;
  if (cert.n_prime > cert.horizon) return false;
  if (!dominates_at(profile, cert.horizon)) return false;
  if (cert.horizon > 0 && dominates_at(profile, cert.horizon - 1)) return false;
  for (std::uint64_t m = cert.n_prime; m <= cert.horizon; ++m) {
    if (direct_norm(m).sign() != cert.limit_sign) return false;
  }
  return cert.n_prime == 0 || direct_norm(cert.n_prime - 1).sign() != cert.limit_sign;
}

void require_same_basepoint(const FibSpaceVector& a, const FibSpaceVector& b) {
  if (a.n != b.n) throw Error(Errc::MixedBasepoints, "n=" + u64(a.n) + " vs n=" + u64(b.n));
}

}  // namespace

Quaternion fib_quat(std::uint64_t n, const AlgebraParams& params) {
  auto [f0, f1] = fib_pair(n);
  Int f2 = f0 + f1;
  Int f3 = f1 + f2;
  return {params, {Rat(f0), Rat(f1), Rat(f2), Rat(f3)}};
}

Quaternion gen_fib_quat(std::uint64_t n, const Int& p, const Int& q, const AlgebraParams& params) {
  const Quaternion combo = fib_quat(n, params) * Rat(p) + fib_quat(n + 1, params) * Rat(q);
  // h_{k+1} = p f_k + q f_{k+1}, so the k-th coefficient of p F_n + q F_{n+1}
  // is the Horadam value h_{n+k+1}.
  const Quaternion seq = from_horadam(n + 1, HoradamParams{p, q}, params);
  if (!(combo == seq)) {
    throw Error(Errc::Internal, "H_n routes disagree: " + combo.str() + " vs " + seq.str());
  }
  return combo;
}

GrowthProfile growth_profile(const AlgebraParams& params) {
  GrowthProfile g;
  g.S_alpha = weighted_even_powers(params, QSqrt5::alpha());
  if (!(g.S_alpha == expanded_leading_term(params))) {
    throw Error(Errc::Internal, "leading term routes disagree for " + params.str());
  }
  g.S_beta = weighted_even_powers(params, QSqrt5::beta());
  const Rat& b1 = params.beta1();
  const Rat& b2 = params.beta2();
  g.S_osc = QSqrt5(Rat(1) - b1 + b2 - b1 * b2);
  g.E = g.S_alpha / QSqrt5(5);
  return g;
}

GrowthProfile gen_growth_profile(const AlgebraParams& params, const Int& p, const Int& q) {
  const GrowthProfile base = growth_profile(params);
  const QSqrt5 a = QSqrt5(Rat(p)) + QSqrt5(Rat(q)) * QSqrt5::alpha();
  const QSqrt5 b = QSqrt5(Rat(p)) + QSqrt5(Rat(q)) * QSqrt5::beta();
  GrowthProfile g;
  g.S_alpha = a * a * base.S_alpha;
  g.S_beta = b * b * base.S_beta;
  g.S_osc = a * b * base.S_osc;
  g.E = g.S_alpha / QSqrt5(5);
  return g;
}

QSqrt5 energy_E(const AlgebraParams& params) {
  const QSqrt5 e = expanded_leading_term(params) / QSqrt5(5);
  if (!(e == growth_profile(params).E)) {
    throw Error(Errc::Internal, "E routes disagree for " + params.str());
  }
  return e;
}

QSqrt5 energy_E_prime(const AlgebraParams& params, const Int& p, const Int& q) {
  const QSqrt5 lin = QSqrt5(Rat(p)) + QSqrt5::alpha() * QSqrt5(Rat(q));
  return lin * lin * energy_E(params) / QSqrt5(5);
}

Rat profile_norm(const GrowthProfile& profile, std::uint64_t m) {
  const QSqrt5 a2m = alpha_pow(2 * m);
  const QSqrt5 b2m = a2m.conj();
  const QSqrt5 osc = (m % 2 == 0) ? QSqrt5(2) : QSqrt5(-2);
  const QSqrt5 v = (profile.S_alpha * a2m + profile.S_beta * b2m - osc * profile.S_osc) / QSqrt5(5);
  if (!v.is_rational()) throw Error(Errc::Internal, "closed-form norm not rational: " + v.str());
  return v.a();
}

Rat norm_closed_form(std::uint64_t n, const AlgebraParams& params) {
  return profile_norm(growth_profile(params), n);
}

ThresholdCertificate invertibility_threshold(const AlgebraParams& params) {
  const GrowthProfile profile = growth_profile(params);
  if (profile.E.is_zero()) throw Error(Errc::Indeterminate, "E = 0 for " + params.str());
  return certify(profile);
}

ThresholdCertificate gen_invertibility_threshold(const AlgebraParams& params, const Int& p,
                                                 const Int& q) {
  if (energy_E_prime(params, p, q).is_zero()) {
    throw Error(Errc::Indeterminate, "E' = 0 for " + params.str() + " p=" + p.get_str() +
                                         " q=" + q.get_str());
  }
  return certify(gen_growth_profile(params, p, q));
}

bool certificate_holds(const ThresholdCertificate& cert, const AlgebraParams& params) {
  return check_certificate(cert, growth_profile(params),
                           [&](std::uint64_t m) { return qnorm(fib_quat(m, params)); });
}

bool gen_certificate_holds(const ThresholdCertificate& cert, const AlgebraParams& params,
                           const Int& p, const Int& q) {
  return check_certificate(cert, gen_growth_profile(params, p, q),
                           [&](std::uint64_t m) { return qnorm(gen_fib_quat(m, p, q, params)); });
}

FibSpaceVector FibSpaceVector::operator+(const FibSpaceVector& o) const {
  require_same_basepoint(*this, o);
  return {n, x1 + o.x1, x2 + o.x2};
}

Quaternion coords_to_quaternion(const FibSpaceVector& v, const AlgebraParams& params) {
  return fib_quat(v.n, params) * v.x1 + fib_quat(v.n + 1, params) * v.x2;
}

Rat inner_product(const FibSpaceVector& z, const FibSpaceVector& w, const AlgebraParams& params) {
  require_same_basepoint(z, w);
  const ThresholdCertificate cert = invertibility_threshold(params);
  if (z.n < cert.n_prime) {
    throw Error(Errc::BelowThreshold, "n=" + u64(z.n) + " < n'=" + u64(cert.n_prime));
  }
  const Rat raw = z.x1 * w.x1 * qnorm(fib_quat(z.n, params)) +
                  z.x2 * w.x2 * qnorm(fib_quat(z.n + 1, params));
  return cert.limit_sign > 0 ? raw : -raw;
}

Rat quadratic_form(const FibSpaceVector& z, const AlgebraParams& params) {
  return qnorm(fib_quat(z.n, params)) * z.x1 * z.x1 +
         qnorm(fib_quat(z.n + 1, params)) * z.x2 * z.x2;
}

Rat bilinear_form_polarized(const FibSpaceVector& x, const FibSpaceVector& y,
                            const AlgebraParams& params) {
  const Rat s = quadratic_form(x + y, params) - quadratic_form(x, params) -
                quadratic_form(y, params);
  return s / Rat(2);
}

Rat bilinear_form(const FibSpaceVector& x, const FibSpaceVector& y, const AlgebraParams& params) {
  require_same_basepoint(x, y);
  const Rat direct = qnorm(fib_quat(x.n, params)) * x.x1 * y.x1 +
                     qnorm(fib_quat(x.n + 1, params)) * x.x2 * y.x2;
  const Rat polar = bilinear_form_polarized(x, y, params);
  if (direct != polar) {
    throw Error(Errc::Internal, "bilinear routes disagree: " + direct.str() + " vs " + polar.str());
  }
  return direct;
}

GramMatrix gram_matrix(std::uint64_t n, const AlgebraParams& params) {
  GramMatrix g;
  g.entries[0][0] = qnorm(fib_quat(n, params));
  g.entries[1][1] = qnorm(fib_quat(n + 1, params));
  return g;
}

}  // namespace fibcl
