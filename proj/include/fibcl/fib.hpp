#pragma once

#include <cstdint>
#include <utility>

#include "fibcl/qsqrt5.hpp"
#include "fibcl/rational.hpp"

namespace fibcl {

/// Seeds of the generalized Fibonacci sequence h_0 = p, h_1 = q.
struct HoradamParams {
  Int p;
  Int q;
};

/// (f_n, f_{n+1}) by fast doubling.
std::pair<Int, Int> fib_pair(std::uint64_t n);

Int fib(std::uint64_t n);

/// L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}.
Int lucas(std::uint64_t n);

/// h_n of the sequence seeded by (p, q). Computed as p f_{n-1} + q f_n for
/// n >= 1, which is the shifted form of h_{n+1} = p f_n + q f_{n+1}.
Int horadam(std::uint64_t n, const HoradamParams& hp);

/// (alpha^n - beta^n) / sqrt 5 evaluated in Q(sqrt 5).
QSqrt5 binet(std::uint64_t n);

}  // namespace fibcl
