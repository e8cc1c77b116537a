#include "fibcl/fib.hpp"

#include <bit>

namespace fibcl {

std::pair<Int, Int> fib_pair(std::uint64_t n) {
  // Walk the bits of n from the top: (F(k), F(k+1)) -> (F(2k), F(2k+1)).
  Int fk = 0;
  Int fk1 = 1;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    Int f2k = fk * (2 * fk1 - fk);
    Int f2k1 = fk * fk + fk1 * fk1;
    if ((n >> bit) & 1U) {
      fk = f2k1;
      fk1 = f2k + f2k1;
    } else {
      fk = std::move(f2k);
      fk1 = std::move(f2k1);
    }
  }
  return {fk, fk1};
}

Int fib(std::uint64_t n) { return fib_pair(n).first; }

Int lucas(std::uint64_t n) {
  auto [fn, fn1] = fib_pair(n);
  return Int(2 * fn1 - fn);
}

Int horadam(std::uint64_t n, const HoradamParams& hp) {
  if (n == 0) return hp.p;
  auto [prev, cur] = fib_pair(n - 1);
  return Int(hp.p * prev + hp.q * cur);
}

QSqrt5 binet(std::uint64_t n) {
  const QSqrt5 an = alpha_pow(n);
  const QSqrt5 bn = an.conj();  // beta is the conjugate of alpha
  return (an - bn) / QSqrt5::sqrt5();
}

}  // namespace fibcl
