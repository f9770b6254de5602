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

// In-place accumulating products modulo X^n - f:
//
//   c += s * a * b  mod (X^n - f)
//
// a and b are scaled and combined in place during the call and restored
// exactly on return. No buffers are allocated at any recursion level.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "ipoly/errors.hpp"
#include "ipoly/ff.hpp"
#include "ipoly/mulbase.hpp"
#include "ipoly/region.hpp"

namespace ipoly {

/// Split point and auxiliary scalars for one convolution instance.
struct ConvParams {
  std::size_t n = 0;
  Elem f;
  std::size_t t = 0;  // n/2 (even), (n+1)/2 (odd), n/3 (short over F_2)
  Elem lambda;        // short product over p > 2
  Elem g;             // lambda / (lambda - 1)

  template <Field F>
  static ConvParams make(const F& field, std::size_t n, Elem f) {
    ConvParams p;
    p.n = n;
    p.f = f;
    if (field.is_zero(f) && !has_element_outside_01(field)) {
      p.t = n / 3;
    } else {
      p.t = (n + 1) / 2;
    }
    if (has_element_outside_01(field)) {
      p.lambda = field.from(2);
      p.g = field.div(p.lambda, field.sub(p.lambda, field.one()));
    }
    return p;
  }
};

/// A 2x2 matrix over the field acting segment-wise on a pair of rows.
struct RowTransform {
  Elem m00, m01, m10, m11;

  static RowTransform identity() {
    return {Elem{1}, Elem{0}, Elem{0}, Elem{1}};
  }
  bool is_identity() const { return *this == identity(); }
  friend bool operator==(const RowTransform&, const RowTransform&) = default;
};

/// One product of a bilinear schedule: sum the masked input segments into
/// the lowest one, multiply, accumulate into rows (i, j) bracketed by the
/// pre-transform (inverse of post) and the post-transform.
struct BilinearRecord {
  std::uint8_t a_mask;
  std::uint8_t b_mask;
  std::size_t row_i;
  std::size_t row_j;
  RowTransform pre;
  RowTransform post;
};

/// The five full products of the F_2 short-product schedule on thirds.
struct BilinearSchedule {
  std::array<BilinearRecord, 5> records;

  static BilinearSchedule gf2() {
    const RowTransform id = RowTransform::identity();
    // [[1,0],[1,1]] is its own inverse in characteristic 2.
    const RowTransform k{Elem{1}, Elem{0}, Elem{1}, Elem{1}};
    return {{{
        {0b001, 0b001, 0, 1, id, id},
        {0b100, 0b100, 1, 2, id, id},
        {0b111, 0b111, 1, 2, k, k},
        {0b101, 0b101, 1, 2, k, k},
        {0b110, 0b110, 1, 2, k, k},
    }}};
  }
};

namespace detail {

template <Field F>
Elem times(const F& f, Elem coef, Elem x) {
  if (coef.value == 0) return f.zero();
  if (coef.value == 1) return x;
  return f.mul(coef, x);
}

template <Field F>
Elem lin(const F& f, Elem c0, Elem x, Elem c1, Elem y) {
  if (c0.value == 0) return times(f, c1, y);
  if (c1.value == 0) return times(f, c0, x);
  return f.add(times(f, c0, x), times(f, c1, y));
}

template <Field F>
void apply_transform(const F& f, CoeffRegion ci, CoeffRegion cj,
                     const RowTransform& m) {
  if (m.is_identity()) return;
  for (std::size_t k = 0; k < ci.size(); ++k) {
    const Elem x = ci[k], y = cj[k];
    ci[k] = lin(f, m.m00, x, m.m01, y);
    cj[k] = lin(f, m.m10, x, m.m11, y);
  }
}

// Folds the masked segments into the lowest masked one (undo = true
// subtracts them back out). Returns the host segment index.
template <Field F>
std::size_t fold_segments(const F& f, const std::array<CoeffRegion, 3>& seg,
                          std::uint8_t mask, bool undo) {
  std::size_t host = 0;
  while ((mask & (1U << host)) == 0) ++host;
  for (std::size_t k = host + 1; k < 3; ++k) {
    if ((mask & (1U << k)) == 0) continue;
    if (undo) {
      sub_into(f, seg[host], seg[k]);
    } else {
      add_into(f, seg[host], seg[k]);
    }
  }
  return host;
}

template <class Ctx>
void run_schedule(const Ctx& ctx, const BilinearSchedule& sched,
                  const std::array<CoeffRegion, 3>& cs,
                  const std::array<CoeffRegion, 3>& as,
                  const std::array<CoeffRegion, 3>& bs, Sign s) {
  const auto& f = ctx.field;
  const auto& recs = sched.records;
  for (std::size_t r = 0; r < recs.size(); ++r) {
    const auto& rec = recs[r];
    const CoeffRegion ci = cs[rec.row_i], cj = cs[rec.row_j];
    const bool same_as_prev = r > 0 && recs[r - 1].row_i == rec.row_i &&
                              recs[r - 1].row_j == rec.row_j &&
                              recs[r - 1].post == rec.post;
    const bool same_as_next = r + 1 < recs.size() &&
                              recs[r + 1].row_i == rec.row_i &&
                              recs[r + 1].row_j == rec.row_j &&
                              recs[r + 1].post == rec.post;
    if (!same_as_prev) apply_transform(f, ci, cj, rec.pre);
    const std::size_t ha = fold_segments(f, as, rec.a_mask, false);
    const std::size_t hb = fold_segments(f, bs, rec.b_mask, false);
    acc_mul_full(ctx, SplitTarget(ci, cj), as[ha], bs[hb], s);
    fold_segments(f, bs, rec.b_mask, true);
    fold_segments(f, as, rec.a_mask, true);
    if (!same_as_next) apply_transform(f, ci, cj, rec.post);
  }
}

// Quadratic f-convolution with the wrap folded into each product.
template <Field F>
void conv_base(const F& f, CoeffRegion c, ConstRegion a, ConstRegion b,
               Elem fe, Sign s) {
  const std::size_t n = c.size();
  if (f.is_zero(fe)) {
    acc_mul_short(f, c, a, b, n, s);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Elem prod = f.mul(a[i], b[j]);
      std::size_t k = i + j;
      if (k >= n) {
        k -= n;
        prod = times(f, fe, prod);
      }
      accumulate(f, c[k], prod, s);
    }
  }
}

template <class Ctx>
void conv_rec(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
              Elem fe, Sign s);

template <class Ctx>
void short_rec(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
               Sign s);

template <class Ctx>
void even_f(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
            Elem fe, Sign s) {
  const auto& f = ctx.field;
  const std::size_t t = c.size() / 2;
  const CoeffRegion c0 = c.first(t), c1 = c.drop(t);
  const CoeffRegion a0 = a.first(t), a1 = a.drop(t);
  const CoeffRegion b0 = b.first(t), b1 = b.drop(t);
  const Elem one_minus_f = f.sub(f.one(), fe);
  const Elem inv_omf = f.inv(one_minus_f);
  const Elem inv_f = f.inv(fe);

  add_into(f, c1, c0);
  scale(f, c1, inv_omf);
  axpy(f, c0, fe, c1);
  acc_mul_full(ctx, c, a0, b0, s);
  scale(f, c0, inv_f);
  acc_mul_full(ctx, SplitTarget(c1, c0), a1, b1, flip(s));
  sub_into(f, c0, c1);
  scale(f, c1, one_minus_f);
  axpy(f, c1, f.neg(fe), c0);
  add_into(f, a0, a1);
  add_into(f, b0, b1);
  acc_mul_full(ctx, SplitTarget(c1, c0), a0, b0, s);
  sub_into(f, b0, b1);
  sub_into(f, a0, a1);
  scale(f, c0, fe);
}

template <class Ctx>
void even_1(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
            Sign s) {
  const std::size_t t = c.size() / 2;
  const CoeffRegion c0 = c.first(t), c1 = c.drop(t);
  const CoeffRegion a0 = a.first(t), a1 = a.drop(t);
  const CoeffRegion b0 = b.first(t), b1 = b.drop(t);
  // Y = X^t and Y^2 = 1, so (u + vY)Y = v + uY: swapped halves.
  const SplitTarget swapped(c1, c0);
  acc_mul_full(ctx, c, a0, b0, s);
  acc_mul_full(ctx, c, a1, b1, s);
  acc_mul_full(ctx, swapped, a0, b1, s);
  acc_mul_full(ctx, swapped, a1, b0, s);
}

template <class Ctx>
void odd_f(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
           Elem fe, Sign s) {
  const auto& f = ctx.field;
  const std::size_t n = c.size();
  const std::size_t t = (n + 1) / 2;
  const CoeffRegion a0 = a.first(t), a1 = a.drop(t);
  const CoeffRegion b0 = b.first(t), b1 = b.drop(t);
  const CoeffRegion low = c.first(t - 1);
  const Elem inv_f = f.inv(fe);

  acc_mul_full(ctx, c, a0, b0, s);
  // X^{2t} = f X, so a1 b1 lands one slot up with a factor f.
  scale(f, a1, fe);
  acc_mul_full(ctx, c.drop(1), a1, b1, s);
  scale(f, a1, inv_f);
  // Cross terms overflow X^n into the low slots, which must pick up f.
  scale(f, low, inv_f);
  const SplitTarget wrap(c.sub(t, n - t), low);
  acc_mul_full(ctx, wrap, a0, b1, s);
  acc_mul_full(ctx, wrap, a1, b0, s);
  scale(f, low, fe);
}

template <class Ctx>
void short_scaled(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
                  Sign s) {
  const auto& f = ctx.field;
  const ConvParams p = ConvParams::make(f, c.size(), f.zero());
  const Elem one_minus_l = f.sub(f.one(), p.lambda);
  // lambda (P_lo + P_hi) + (1 - lambda)(P_lo + g P_hi) = P_lo
  scale(f, a, p.lambda);
  conv_rec(ctx, c, a, b, f.one(), s);
  scale(f, a, f.div(one_minus_l, p.lambda));
  conv_rec(ctx, c, a, b, p.g, s);
  scale(f, a, f.inv(one_minus_l));
}

template <class Ctx>
void short_gf2(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
               Sign s) {
  const auto& f = ctx.field;
  const std::size_t n = c.size();
  const std::size_t t = n / 3;
  if (t > 0) {
    const std::array<CoeffRegion, 3> cs{c.sub(0, t), c.sub(t, t),
                                        c.sub(2 * t, t)};
    const std::array<CoeffRegion, 3> as{a.sub(0, t), a.sub(t, t),
                                        a.sub(2 * t, t)};
    const std::array<CoeffRegion, 3> bs{b.sub(0, t), b.sub(t, t),
                                        b.sub(2 * t, t)};
    run_schedule(ctx, BilinearSchedule::gf2(), cs, as, bs, s);

    add_into(f, as[1], as[2]);
    add_into(f, bs[0], bs[1]);
    short_rec(ctx, cs[2], as[1], bs[0], s);
    sub_into(f, bs[0], bs[1]);
    sub_into(f, as[1], as[2]);

    add_into(f, as[0], as[2]);
    add_into(f, bs[1], bs[2]);
    short_rec(ctx, cs[2], as[0], bs[1], s);
    sub_into(f, bs[1], bs[2]);
    sub_into(f, as[0], as[2]);
  }
  for (std::size_t r = 3 * t; r < n; ++r) {
    for (std::size_t i = 0; i <= r; ++i) {
      accumulate(f, c[r], f.mul(a[i], b[r - i]), s);
    }
  }
}

template <class Ctx>
void short_rec(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
               Sign s) {
  const auto& f = ctx.field;
  CallFrame frame(f);
  if (c.size() <= ctx.threshold()) {
    acc_mul_short(f, c, a, b, c.size(), s);
  } else if (has_element_outside_01(f)) {
    short_scaled(ctx, c, a, b, s);
  } else {
    short_gf2(ctx, c, a, b, s);
  }
}

template <class Ctx>
void conv_rec(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
              Elem fe, Sign s) {
  const auto& f = ctx.field;
  const std::size_t n = c.size();
  if (n == 0) return;
  if (f.is_zero(fe)) {
    short_rec(ctx, c, a, b, s);
    return;
  }
  CallFrame frame(f);
  if (n <= ctx.threshold()) {
    conv_base(f, c, a, b, fe, s);
  } else if (n % 2 == 1) {
    odd_f(ctx, c, a, b, fe, s);
  } else if (fe == f.one()) {
    even_1(ctx, c, a, b, s);
  } else {
    even_f(ctx, c, a, b, fe, s);
  }
}

inline void check_conv_operands(CoeffRegion c, CoeffRegion a, CoeffRegion b) {
  require_same_length(a, c, "convolution operand");
  require_same_length(b, c, "convolution operand");
  require_disjoint(c, a, "target and first operand");
  require_disjoint(c, b, "target and second operand");
  require_disjoint(a, b, "convolution operands");
}

}  // namespace detail

/// c += s * a * b mod (X^n - f), for any f; all lengths equal n.
template <class Ctx>
void conv_acc(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
              Elem f, Sign s = Sign::plus) {
  detail::check_conv_operands(c, a, b);
  detail::conv_rec(ctx, c, a, b, f, s);
}

/// Even n and f outside {0, 1}.
template <class Ctx>
void conv_even_f(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
                 Elem f, Sign s = Sign::plus) {
  detail::check_conv_operands(c, a, b);
  const auto& field = ctx.field;
  if (c.size() % 2 != 0) throw BadParameter("even-length variant needs even n");
  if (field.is_zero(f) || f == field.one()) {
    throw BadParameter("even-length f variant needs f outside {0, 1}");
  }
  CallFrame frame(field);
  if (c.size() <= ctx.threshold()) {
    detail::conv_base(field, c, a, b, f, s);
  } else {
    detail::even_f(ctx, c, a, b, f, s);
  }
}

/// Even n and f = 1.
template <class Ctx>
void conv_even_1(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
                 Sign s = Sign::plus) {
  detail::check_conv_operands(c, a, b);
  if (c.size() % 2 != 0) throw BadParameter("even-length variant needs even n");
  const auto& field = ctx.field;
  CallFrame frame(field);
  if (c.size() <= ctx.threshold()) {
    detail::conv_base(field, c, a, b, field.one(), s);
  } else {
    detail::even_1(ctx, c, a, b, s);
  }
}

/// Odd n and f != 0.
template <class Ctx>
void conv_odd_f(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
                Elem f, Sign s = Sign::plus) {
  detail::check_conv_operands(c, a, b);
  const auto& field = ctx.field;
  if (c.size() % 2 != 1) throw BadParameter("odd-length variant needs odd n");
  if (field.is_zero(f)) throw BadParameter("odd-length variant needs f != 0");
  CallFrame frame(field);
  if (c.size() <= ctx.threshold()) {
    detail::conv_base(field, c, a, b, f, s);
  } else {
    detail::odd_f(ctx, c, a, b, f, s);
  }
}

/// Short product c += s * a * b mod X^n; all lengths equal n.
template <class Ctx>
void short_acc(const Ctx& ctx, CoeffRegion c, CoeffRegion a, CoeffRegion b,
               Sign s = Sign::plus) {
  detail::check_conv_operands(c, a, b);
  if (c.empty()) return;
  detail::short_rec(ctx, c, a, b, s);
}

}  // namespace ipoly
