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

// Euclidean remainder without storing the quotient.
//
// With A of degree N, B of degree M and A split into width-M blocks a_i,
// division is a block-bidiagonal system whose diagonal blocks are
//   T = upper triangular Toeplitz over [b_M, ..., b_1]
//   G = lower triangular Toeplitz over [b_{M-1}, ..., b_0]
// and the remainder falls out of a Horner sweep over the blocks from the
// top: r <- -G T^{-1} r + a_i.

#pragma once

#include <cstddef>

#include "ipoly/errors.hpp"
#include "ipoly/ff.hpp"
#include "ipoly/instrument.hpp"
#include "ipoly/mulbase.hpp"
#include "ipoly/region.hpp"
#include "ipoly/toeplitz.hpp"

namespace ipoly {

/// Block decomposition of one division instance.
struct EuclidContext {
  std::size_t N = 0;         // deg A
  std::size_t M = 0;         // deg B
  std::size_t n = 0;         // N - M + 1, number of quotient coefficients
  std::size_t s = 0;         // (N + 1) mod M, width of OPER's partial top block
  std::size_t mu_padded = 0; // ceil(n / M): blocks below the top one, padded
  std::size_t mu_exact = 0;  // (N + 1 - s) / M: full blocks, exact tiling

  /// Requires N >= M >= 1.
  static EuclidContext make(std::size_t N, std::size_t M) {
    if (M == 0 || N < M) throw BadParameter("block tiling needs N >= M >= 1");
    EuclidContext e;
    e.N = N;
    e.M = M;
    e.n = N - M + 1;
    e.s = (N + 1) % M;
    e.mu_padded = (e.n + M - 1) / M;
    e.mu_exact = (N + 1 - e.s) / M;
    return e;
  }

  /// Defining vectors of T (upper) and G (lower), read from B in reverse.
  template <class T>
  static BasicRegion<T> t_vector(BasicRegion<T> b, std::size_t width) {
    return b.reversed().sub(0, width);
  }
  template <class T>
  static BasicRegion<T> g_vector(BasicRegion<T> b) {
    return b.reversed().sub(1, b.size() - 1);
  }
};

namespace detail {

inline void copy_top_block(CoeffRegion r, ConstRegion a, std::size_t from) {
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = from + k < a.size() ? a[from + k] : Elem{};
  }
}

}  // namespace detail

/// R = A mod B reading A and B only, with an explicit scratch of M elements.
template <Field F>
void remainder_blockwise(const F& f, CoeffRegion r, ConstRegion a,
                         ConstRegion b, CoeffRegion scratch) {
  const std::size_t m = detail::divisor_degree(b);
  if (r.size() != m) {
    throw LengthMismatch("remainder length must equal the divisor degree");
  }
  if (scratch.size() < m) throw LengthMismatch("scratch needs deg B elements");
  require_disjoint(r, a, "remainder and dividend");
  require_disjoint(r, b, "remainder and divisor");
  require_disjoint(scratch, r, "scratch and remainder");
  require_disjoint(scratch, a, "scratch and dividend");
  require_disjoint(scratch, b, "scratch and divisor");
  if (m == 0) return;
  if (a.size() <= m) {
    detail::copy_top_block(r, a, 0);
    return;
  }
  const auto e = EuclidContext::make(a.size() - 1, m);
  const CoeffRegion t = scratch.first(m);
  note_scratch(f, m);
  const ConstTriToeplitz upper{ConstPadded(EuclidContext::t_vector(b, m)),
                               Orientation::upper};

  detail::copy_top_block(r, a, e.mu_padded * m);
  for (std::size_t i = e.mu_padded; i-- > 0;) {
    for (std::size_t k = 0; k < m; ++k) t[k] = r[k];
    quad_tri_solve_overplace(f, upper, t, Orientation::upper);
    for (std::size_t row = 0; row < m; ++row) {
      Elem acc = f.zero();
      for (std::size_t j = 0; j <= row; ++j) {
        acc = f.add(acc, f.mul(b[row - j], t[j]));
      }
      r[row] = f.sub(a[i * m + row], acc);
    }
  }
}

/// R = A mod B in place: A is read only, B is used as scratch for the
/// matrix vectors and restored.
template <class Ctx>
void iper(const Ctx& ctx, CoeffRegion r, ConstRegion a, CoeffRegion b) {
  const auto& f = ctx.field;
  const std::size_t m = detail::divisor_degree(b);
  if (r.size() != m) {
    throw LengthMismatch("remainder length must equal the divisor degree");
  }
  require_disjoint(r, a, "remainder and dividend");
  require_disjoint(r, b, "remainder and divisor");
  require_disjoint(a, b, "dividend and divisor");
  if (m == 0) return;
  if (a.size() <= m) {
    detail::copy_top_block(r, a, 0);
    return;
  }
  CallFrame frame(f);
  const auto e = EuclidContext::make(a.size() - 1, m);
  const PaddedRegion t_vec(EuclidContext::t_vector(b, m));
  const PaddedRegion g_vec(EuclidContext::g_vector(b));

  // The top block may be partial; R holds it zero-extended.
  detail::copy_top_block(r, a, e.mu_padded * m);
  for (std::size_t i = e.mu_padded; i-- > 0;) {
    detail::tri_solve_rec(ctx, t_vec, r, Orientation::upper);
    detail::tri_mul_rec(ctx, g_vec, r, Orientation::lower);
    detail::negate(f, r);
    detail::add_into(f, r, a.sub(i * m, m));
  }
}

/// Overwrites A with [R, Q]: remainder in the low deg(B) coefficients,
/// quotient above. B is restored.
template <class Ctx>
void oper(const Ctx& ctx, CoeffRegion a, CoeffRegion b) {
  const auto& f = ctx.field;
  const std::size_t m = detail::divisor_degree(b);
  require_disjoint(a, b, "dividend and divisor");
  CallFrame frame(f);
  if (m == 0) {
    detail::scale(f, a, f.inv(b[0]));
    return;
  }
  if (a.size() <= m) return;
  const auto e = EuclidContext::make(a.size() - 1, m);
  const CoeffRegion t_full = EuclidContext::t_vector(b, m);
  const CoeffRegion g = EuclidContext::g_vector(b);
  const PaddedRegion g_square(0, g, m - 1);
  auto block = [&](std::size_t i) { return a.sub(i * m, m); };

  if (e.s != 0) {
    const CoeffRegion top = a.sub(e.mu_exact * m, e.s);
    detail::tri_solve_rec(ctx, PaddedRegion(t_full.first(e.s)), top,
                          Orientation::upper);
    detail::toeplitz_rec(ctx, block(e.mu_exact - 1), PaddedRegion(0, g, e.s - 1),
                         top, Sign::minus);
  }
  for (std::size_t i = e.mu_exact - 1; i >= 1; --i) {
    detail::tri_solve_rec(ctx, PaddedRegion(t_full), block(i),
                          Orientation::upper);
    detail::toeplitz_rec(ctx, block(i - 1), g_square, block(i), Sign::minus);
  }
}

/// Undoes oper: A = [R, Q] becomes the original dividend again.
template <class Ctx>
void oper_inv(const Ctx& ctx, CoeffRegion a, CoeffRegion b) {
  const auto& f = ctx.field;
  const std::size_t m = detail::divisor_degree(b);
  require_disjoint(a, b, "dividend and divisor");
  CallFrame frame(f);
  if (m == 0) {
    detail::scale(f, a, b[0]);
    return;
  }
  if (a.size() <= m) return;
  const auto e = EuclidContext::make(a.size() - 1, m);
  const CoeffRegion t_full = EuclidContext::t_vector(b, m);
  const CoeffRegion g = EuclidContext::g_vector(b);
  const PaddedRegion g_square(0, g, m - 1);
  auto block = [&](std::size_t i) { return a.sub(i * m, m); };

  for (std::size_t i = 1; i < e.mu_exact; ++i) {
    detail::toeplitz_rec(ctx, block(i - 1), g_square, block(i), Sign::plus);
    detail::tri_mul_rec(ctx, PaddedRegion(t_full), block(i), Orientation::upper);
  }
  if (e.s != 0) {
    const CoeffRegion top = a.sub(e.mu_exact * m, e.s);
    detail::toeplitz_rec(ctx, block(e.mu_exact - 1), PaddedRegion(0, g, e.s - 1),
                         top, Sign::plus);
    detail::tri_mul_rec(ctx, PaddedRegion(t_full.first(e.s)), top,
                        Orientation::upper);
  }
}

/// R += A mod B; A and B are restored.
template <class Ctx>
void aper(const Ctx& ctx, CoeffRegion r, CoeffRegion a, CoeffRegion b) {
  const auto& f = ctx.field;
  const std::size_t m = detail::divisor_degree(b);
  if (r.size() != m) {
    throw LengthMismatch("remainder length must equal the divisor degree");
  }
  require_disjoint(r, a, "remainder and dividend");
  require_disjoint(r, b, "remainder and divisor");
  require_disjoint(a, b, "dividend and divisor");
  if (m == 0) return;
  if (a.size() <= m) {
    detail::add_into(f, r, a);
    return;
  }
  oper(ctx, a, b);
  detail::add_into(f, r, a.first(m));
  oper_inv(ctx, a, b);
}

}  // namespace ipoly
