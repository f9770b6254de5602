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

// Structured matrix-vector products without materializing the matrix.
//
// Index conventions (0-based):
//   Toeplitz m x n over v (|v| = m+n-1):  T(i, j) = v[m-1+j-i]
//   upper triangular over a (|a| = m):    U(i, j) = a[j-i],     j >= i
//   lower triangular over a (|a| = m):    L(i, j) = a[m-1+j-i], j <= i
//   f-circulant over a:                   C(i, j) = a[(j-i) mod m], times f
//                                         when i > j
//
// The f-circulant product is a reversed f-convolution:
//   Circ_f(a) b = rev(a * rev(b) mod (X^m - f)).

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>

#include "ipoly/conv.hpp"
#include "ipoly/errors.hpp"
#include "ipoly/ff.hpp"
#include "ipoly/mulbase.hpp"
#include "ipoly/region.hpp"

namespace ipoly {

/// A rows x cols Toeplitz matrix given by its defining vector, which may
/// carry virtual zeros at either end.
struct ToeplitzView {
  std::size_t rows = 0;
  std::size_t cols = 0;
  PaddedRegion vec;

  ToeplitzView(std::size_t m, std::size_t n, PaddedRegion v)
      : rows(m), cols(n), vec(v) {
    if (m + n == 0 || v.size() != m + n - 1) {
      throw LengthMismatch("Toeplitz vector must have rows+cols-1 entries");
    }
  }

  Elem entry(std::size_t i, std::size_t j) const {
    return vec.at(rows - 1 + j - i);
  }
};

/// Circ_f(a): Circ_1 is the plain circulant, Circ_0 the upper triangular
/// Toeplitz matrix over a.
struct CirculantView {
  CoeffRegion a;
  Elem f;

  Elem entry(std::size_t i, std::size_t j, const auto& field) const {
    const std::size_t m = a.size();
    const Elem e = a[(j + m - i) % m];
    return i > j ? field.mul(f, e) : e;
  }
};

/// Triangular Toeplitz matrix as a SquareMatrix for the quadratic routines.
template <class T>
struct BasicTriToeplitz {
  BasicPadded<T> a;
  Orientation orientation;

  std::size_t dim() const { return a.size(); }
  Elem entry(std::size_t i, std::size_t j) const {
    if (orientation == Orientation::upper) {
      return j >= i ? a.at(j - i) : Elem{};
    }
    return j <= i ? a.at(a.size() - 1 + j - i) : Elem{};
  }
  Elem diagonal() const {
    return orientation == Orientation::upper ? a.at(0) : a.at(a.size() - 1);
  }
};

using TriToeplitz = BasicTriToeplitz<Elem>;
using ConstTriToeplitz = BasicTriToeplitz<const Elem>;

namespace detail {

template <class Ctx>
void upper_tri_acc(const Ctx& ctx, CoeffRegion c, CoeffRegion a,
                   CoeffRegion b, Sign s) {
  short_rec(ctx, c.reversed(), a, b.reversed(), s);
}

template <class Ctx>
void lower_tri_acc(const Ctx& ctx, CoeffRegion c, CoeffRegion a,
                   CoeffRegion b, Sign s) {
  short_rec(ctx, c, a.reversed(), b, s);
}

// Square m x m over a fully stored vector of length 2m-1: the upper
// triangle plus the strictly lower part as a short product one row down.
template <class Ctx>
void square_acc(const Ctx& ctx, CoeffRegion c, CoeffRegion v, CoeffRegion b,
                Sign s) {
  const std::size_t m = c.size();
  upper_tri_acc(ctx, c, v.drop(m - 1), b, s);
  if (m > 1) short_rec(ctx, c.drop(1), v.first(m - 1).reversed(), b.first(m - 1), s);
}

// Fully stored rectangular case: peel square blocks off the long side.
template <class Ctx>
void rect_full(const Ctx& ctx, CoeffRegion c, CoeffRegion v, CoeffRegion b,
               Sign s) {
  std::size_t m = c.size(), n = b.size();
  while (m > 0 && n > 0) {
    if (m == n) {
      square_acc(ctx, c, v, b, s);
      return;
    }
    if (m > n) {
      square_acc(ctx, c.first(n), v.sub(m - n, 2 * n - 1), b, s);
      c = c.drop(n);
      v = v.first(m - 1);
      m -= n;
    } else {
      square_acc(ctx, c, v.first(2 * m - 1), b.first(m), s);
      b = b.drop(m);
      v = v.drop(m);
      n -= m;
    }
  }
}

template <Field F>
void toeplitz_base(const F& f, CoeffRegion c, const PaddedRegion& v,
                   CoeffRegion b, Sign s) {
  const std::size_t m = c.size(), n = b.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = m - 1 + j - i;
      if (v.is_virtual(k)) continue;
      accumulate(f, c[i], f.mul(v.stored()[k - v.lead()], b[j]), s);
    }
  }
}

// c += s T b for a Toeplitz matrix whose vector may hold virtual zeros.
// Zero rows and columns are trimmed first; what is left is either fully
// stored, an exact triangle, small, or split in half along its long side.
template <class Ctx>
void toeplitz_rec(const Ctx& ctx, CoeffRegion c, PaddedRegion v, CoeffRegion b,
                  Sign s) {
  std::size_t m = c.size(), n = b.size();
  if (m == 0 || n == 0 || v.stored().empty()) return;

  std::size_t p0 = v.lead(), p1 = v.lead() + v.stored().size();
  const std::size_t i0 = m > p1 ? m - p1 : 0;
  const std::size_t i1 = std::min(m - 1, m + n - 2 - p0);
  if (i0 > i1) return;
  const std::size_t m2 = i1 - i0 + 1;
  v = v.window(m - m2 - i0, m2 + n - 1);
  c = c.sub(i0, m2);
  m = m2;

  p0 = v.lead();
  p1 = v.lead() + v.stored().size();
  const std::size_t j0 = p0 + 1 > m ? p0 + 1 - m : 0;
  const std::size_t j1 = std::min(n - 1, p1 - 1);
  if (j0 > j1) return;
  const std::size_t n2 = j1 - j0 + 1;
  v = v.window(j0, m + n2 - 1);
  b = b.sub(j0, n2);
  n = n2;

  CallFrame frame(ctx.field);
  if (v.fully_stored()) {
    rect_full(ctx, c, v.stored(), b, s);
  } else if (m == n && v.lead() == m - 1 && v.trail() == 0) {
    upper_tri_acc(ctx, c, v.stored(), b, s);
  } else if (m == n && v.lead() == 0 && v.trail() == m - 1) {
    lower_tri_acc(ctx, c, v.stored(), b, s);
  } else if (std::min(m, n) <= ctx.threshold()) {
    toeplitz_base(ctx.field, c, v, b, s);
  } else if (m >= n) {
    const std::size_t h = m / 2;
    // Rows [0, h) use v[m-h .. m+n-1); rows [h, m) use v[0 .. m-h+n-1).
    toeplitz_rec(ctx, c.first(h), v.window(m - h, h + n - 1), b, s);
    toeplitz_rec(ctx, c.drop(h), v.window(0, m - h + n - 1), b, s);
  } else {
    const std::size_t h = n / 2;
    toeplitz_rec(ctx, c, v.window(0, m + h - 1), b.first(h), s);
    toeplitz_rec(ctx, c, v.window(h, m + n - h - 1), b.drop(h), s);
  }
}

template <class Ctx>
void tri_mul_rec(const Ctx& ctx, PaddedRegion a, CoeffRegion b,
                 Orientation o) {
  const auto& f = ctx.field;
  const std::size_t m = b.size();
  CallFrame frame(f);
  if (m <= ctx.threshold()) {
    quad_tri_mul_overplace(f, TriToeplitz{a, o}, b, o);
    return;
  }
  const std::size_t k = (m + 1) / 2;
  const CoeffRegion b1 = b.first(k), b2 = b.drop(k);
  if (o == Orientation::upper) {
    tri_mul_rec(ctx, a.window(0, k), b1, o);
    toeplitz_rec(ctx, b1, a.window(1, m - 1), b2, Sign::plus);
    tri_mul_rec(ctx, a.window(0, m - k), b2, o);
  } else {
    tri_mul_rec(ctx, a.window(k, m - k), b2, o);
    toeplitz_rec(ctx, b2, a.window(0, m - 1), b1, Sign::plus);
    tri_mul_rec(ctx, a.window(m - k, k), b1, o);
  }
}

template <class Ctx>
void tri_solve_rec(const Ctx& ctx, PaddedRegion a, CoeffRegion b,
                   Orientation o) {
  const auto& f = ctx.field;
  const std::size_t m = b.size();
  CallFrame frame(f);
  if (m <= ctx.threshold()) {
    quad_tri_solve_overplace(f, TriToeplitz{a, o}, b, o);
    return;
  }
  const std::size_t k = (m + 1) / 2;
  const CoeffRegion b1 = b.first(k), b2 = b.drop(k);
  if (o == Orientation::upper) {
    tri_solve_rec(ctx, a.window(0, m - k), b2, o);
    toeplitz_rec(ctx, b1, a.window(1, m - 1), b2, Sign::minus);
    tri_solve_rec(ctx, a.window(0, k), b1, o);
  } else {
    tri_solve_rec(ctx, a.window(m - k, k), b1, o);
    toeplitz_rec(ctx, b2, a.window(0, m - 1), b1, Sign::minus);
    tri_solve_rec(ctx, a.window(k, m - k), b2, o);
  }
}

inline void check_tri_operands(const PaddedRegion& a, CoeffRegion b) {
  require_same_length(a, b, "triangular Toeplitz operand");
  require_disjoint(a.stored(), b, "matrix vector and right-hand side");
}

}  // namespace detail

/// c += s Circ_f(a) b.
template <class Ctx>
void circulant_acc(const Ctx& ctx, CoeffRegion c, const CirculantView& view,
                   CoeffRegion b, Sign s = Sign::plus) {
  detail::require_same_length(view.a, c, "circulant vector");
  detail::require_same_length(b, c, "circulant right-hand side");
  detail::check_conv_operands(c.reversed(), view.a, b.reversed());
  detail::conv_rec(ctx, c.reversed(), view.a, b.reversed(), view.f, s);
}

/// c += s T b for the square Toeplitz matrix over [a1, a2], where a1 holds
/// the m-1 entries below the diagonal and a2 the diagonal and above.
template <class Ctx>
void square_toeplitz_acc(const Ctx& ctx, CoeffRegion c, CoeffRegion a1,
                         CoeffRegion a2, CoeffRegion b, Sign s = Sign::plus) {
  const std::size_t m = c.size();
  detail::require_same_length(a2, c, "square Toeplitz upper vector");
  detail::require_same_length(b, c, "square Toeplitz right-hand side");
  if (m > 0 && a1.size() != m - 1) {
    throw LengthMismatch("square Toeplitz lower vector must have m-1 entries");
  }
  detail::check_conv_operands(c, a2, b);
  require_disjoint(c, a1, "target and matrix vector");
  require_disjoint(a1, b, "matrix vector and right-hand side");
  if (m == 0) return;
  CallFrame frame(ctx.field);
  detail::upper_tri_acc(ctx, c, a2, b, s);
  if (m > 1) detail::short_rec(ctx, c.drop(1), a1.reversed(), b.first(m - 1), s);
}

/// c += s T b for any rows x cols Toeplitz view.
template <class Ctx>
void rect_toeplitz_acc(const Ctx& ctx, CoeffRegion c, const ToeplitzView& view,
                       CoeffRegion b, Sign s = Sign::plus) {
  if (c.size() != view.rows || b.size() != view.cols) {
    throw LengthMismatch("Toeplitz view shape does not match the operands");
  }
  require_disjoint(c, b, "target and right-hand side");
  require_disjoint(c, view.vec.stored(), "target and matrix vector");
  require_disjoint(b, view.vec.stored(), "matrix vector and right-hand side");
  detail::toeplitz_rec(ctx, c, view.vec, b, s);
}

/// c += s T b for the triangular Toeplitz matrix over a.
template <class Ctx>
void tri_toeplitz_acc(const Ctx& ctx, CoeffRegion c, CoeffRegion a,
                      CoeffRegion b, Orientation o, Sign s = Sign::plus) {
  detail::require_same_length(a, c, "triangular Toeplitz vector");
  detail::check_conv_operands(c, a, b);
  if (c.empty()) return;
  if (o == Orientation::upper) {
    detail::upper_tri_acc(ctx, c, a, b, s);
  } else {
    detail::lower_tri_acc(ctx, c, a, b, s);
  }
}

/// b <- T b, T triangular Toeplitz over a (virtual zeros allowed in a).
template <class Ctx>
void tri_toeplitz_mul_overplace(const Ctx& ctx, PaddedRegion a, CoeffRegion b,
                                Orientation o) {
  detail::check_tri_operands(a, b);
  if (b.empty()) return;
  detail::tri_mul_rec(ctx, a, b, o);
}

/// b <- T^{-1} b; the diagonal entry of T must be nonzero.
template <class Ctx>
void tri_toeplitz_solve_overplace(const Ctx& ctx, PaddedRegion a,
                                  CoeffRegion b, Orientation o) {
  detail::check_tri_operands(a, b);
  if (b.empty()) return;
  if (ctx.field.is_zero(TriToeplitz{a, o}.diagonal())) throw SingularDiagonal();
  detail::tri_solve_rec(ctx, a, b, o);
}

}  // namespace ipoly
