// Copyright 2026 The ipoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Accumulated modular multiplication R += A C mod B.
//
// Write A C = B Q + R with deg A = L, deg C = N, deg B = M, q = L+N-M. Split
// the multiplication-by-A and multiplication-by-B matrices into their first
// M rows and last q+1 rows:
//
//   [A0 ]       [G]
//   [A_mu] c  = [T] Q + [r; 0]
//
// The last q+1 rows only see the top q+1 coefficients c2 of C, so
// Q = T^{-1} A_mu c2 can be formed inside c2 and r = A0 c - G Q follows.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>

#include "ipoly/errors.hpp"
#include "ipoly/euclid.hpp"
#include "ipoly/ff.hpp"
#include "ipoly/mulbase.hpp"
#include "ipoly/region.hpp"
#include "ipoly/toeplitz.hpp"

namespace ipoly {

/// Trims trailing zero coefficients; returns the shortest prefix holding
/// every nonzero coefficient.
template <class T>
BasicRegion<T> trim_degree(BasicRegion<T> r) {
  std::size_t n = r.size();
  while (n > 0 && r[n - 1].value == 0) --n;
  return r.first(n);
}

/// The four structured blocks of one AXPYIN instance.
struct AxpyinBlocks {
  std::size_t L = 0, N = 0, M = 0, q = 0;
  CoeffRegion c2;      // top q+1 coefficients of C
  PaddedRegion a_mu;   // upper triangular (q+1)x(q+1), diagonal a_L
  PaddedRegion t;      // upper triangular (q+1)x(q+1), diagonal b_M
  ToeplitzView g;      // M x (q+1)
  ToeplitzView a0;     // M x (N+1)

  /// a is trimmed (a_L != 0), L + N >= M and L <= M.
  static AxpyinBlocks make(CoeffRegion a, CoeffRegion c, CoeffRegion b) {
    const std::size_t L = a.size() - 1, N = c.size() - 1, M = b.size() - 1;
    const std::size_t q = L + N - M;
    const std::size_t lp = std::min(L, M - 1);
    const CoeffRegion arev = a.reversed();
    const CoeffRegion brev = b.reversed();
    return AxpyinBlocks{
        L,
        N,
        M,
        q,
        c.sub(N - q, q + 1),
        q > L ? PaddedRegion(0, arev, q - L) : PaddedRegion(arev.first(q + 1)),
        q > M ? PaddedRegion(0, brev, q - M) : PaddedRegion(brev.first(q + 1)),
        ToeplitzView(M, q + 1, PaddedRegion(0, brev.sub(1, M), q)),
        ToeplitzView(M, N + 1,
                     PaddedRegion(M - 1 - lp, a.first(lp + 1).reversed(), N)),
    };
  }
};

/// Called with the quotient while it sits in C's top coefficients.
using QuotientObserver = std::function<void(ConstRegion)>;

/// R += A C mod B, with deg A <= min(deg C, deg B). A, B and C are restored.
template <class Ctx>
void axpyin(const Ctx& ctx, CoeffRegion r, CoeffRegion a, CoeffRegion c,
            CoeffRegion b, const QuotientObserver& observer = {}) {
  const auto& f = ctx.field;
  const std::size_t m = detail::divisor_degree(b);
  if (r.size() != m) {
    throw LengthMismatch("remainder length must equal the modulus degree");
  }
  require_disjoint(r, a, "remainder and first factor");
  require_disjoint(r, b, "remainder and modulus");
  require_disjoint(r, c, "remainder and second factor");
  require_disjoint(a, b, "first factor and modulus");
  require_disjoint(a, c, "factors");
  require_disjoint(b, c, "second factor and modulus");
  a = trim_degree(a);
  if (m == 0 || a.empty() || c.empty()) return;
  const std::size_t L = a.size() - 1, N = c.size() - 1;
  if (L > std::min(N, m)) {
    throw DegreeConstraint("first factor degree exceeds min(deg C, deg B)");
  }
  CallFrame frame(f);
  if (L + N < m) {
    acc_mul_full(ctx, r, a, c);
    return;
  }
  const auto blk = AxpyinBlocks::make(a, c, b);
  detail::tri_mul_rec(ctx, blk.a_mu, blk.c2, Orientation::upper);
  detail::tri_solve_rec(ctx, blk.t, blk.c2, Orientation::upper);
  if (observer) observer(blk.c2);
  detail::toeplitz_rec(ctx, r, blk.g.vec, blk.c2, Sign::minus);
  detail::tri_mul_rec(ctx, blk.t, blk.c2, Orientation::upper);
  detail::tri_solve_rec(ctx, blk.a_mu, blk.c2, Orientation::upper);
  detail::toeplitz_rec(ctx, r, blk.a0.vec, c, Sign::plus);
}

/// R += A C mod B for any degrees; A, B and C are restored.
template <class Ctx>
void fullaxpyin(const Ctx& ctx, CoeffRegion r, CoeffRegion a, CoeffRegion c,
                CoeffRegion b) {
  const std::size_t m = detail::divisor_degree(b);
  if (r.size() != m) {
    throw LengthMismatch("remainder length must equal the modulus degree");
  }
  require_disjoint(r, a, "remainder and first factor");
  require_disjoint(r, b, "remainder and modulus");
  require_disjoint(r, c, "remainder and second factor");
  require_disjoint(a, b, "first factor and modulus");
  require_disjoint(a, c, "factors");
  require_disjoint(b, c, "second factor and modulus");
  a = trim_degree(a);
  c = trim_degree(c);
  if (a.empty() || c.empty() || m == 0) return;
  if (a.size() > c.size()) std::swap(a, c);
  if (a.size() - 1 <= m) {
    axpyin(ctx, r, a, c, b);
    return;
  }
  CallFrame frame(ctx.field);
  oper(ctx, a, b);
  axpyin(ctx, r, a.first(m), c, b);
  oper_inv(ctx, a, b);
}

}  // namespace ipoly
