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

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ipoly/errors.hpp"
#include "ipoly/ff.hpp"
#include "ipoly/instrument.hpp"
#include "ipoly/region.hpp"

namespace ipoly {

/// Whether a product is added to or subtracted from its target.
enum class Sign { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

enum class Orientation { lower, upper };

namespace detail {

template <Field F>
void accumulate(const F& f, Elem& dst, Elem v, Sign s) {
  dst = s == Sign::plus ? f.add(dst, v) : f.sub(dst, v);
}

template <Field F, class R>
void scale(const F& f, const R& r, Elem x) {
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = f.mul(r[k], x);
}

template <Field F, class R>
void negate(const F& f, const R& r) {
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = f.neg(r[k]);
}

// dst[k] += src[k] over the shorter of the two.
template <Field F, class D, class S>
void add_into(const F& f, const D& dst, const S& src) {
  const std::size_t n = std::min(dst.size(), src.size());
  for (std::size_t k = 0; k < n; ++k) dst[k] = f.add(dst[k], src[k]);
}

template <Field F, class D, class S>
void sub_into(const F& f, const D& dst, const S& src) {
  const std::size_t n = std::min(dst.size(), src.size());
  for (std::size_t k = 0; k < n; ++k) dst[k] = f.sub(dst[k], src[k]);
}

// dst[k] += x * src[k]
template <Field F, class D, class S>
void axpy(const F& f, const D& dst, Elem x, const S& src) {
  const std::size_t n = std::min(dst.size(), src.size());
  for (std::size_t k = 0; k < n; ++k) dst[k] = f.add(dst[k], f.mul(x, src[k]));
}

template <class A, class B>
void require_same_length(const A& a, const B& b, const char* what) {
  if (a.size() != b.size()) {
    throw LengthMismatch(std::string(what) + ": lengths " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
}

}  // namespace detail

/// Schoolbook accumulating multiplication; touches no memory besides c.
struct Schoolbook {
  std::size_t threshold = 16;

  static constexpr const char* name() { return "schoolbook"; }

  template <Field F, class Target>
  void acc_mul(const F& f, const Target& c, ConstRegion a, ConstRegion b,
               Sign s) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        detail::accumulate(f, c[i + j], f.mul(a[i], b[j]), s);
      }
    }
  }
};

/// A pluggable c += a*b building block. Implementations may mutate a and b
/// temporarily only if they restore them; the interface hands out read-only
/// views, so the schoolbook default never does.
template <class S, class F = PrimeField>
concept MulStrategy =
    Field<F> && requires(const S& s, const F& f, CoeffRegion c, SplitTarget t,
                         ConstRegion a) {
      { s.threshold } -> std::convertible_to<std::size_t>;
      { S::name() } -> std::convertible_to<std::string>;
      s.acc_mul(f, c, a, a, Sign::plus);
      s.acc_mul(f, t, a, a, Sign::plus);
    };

/// Field plus multiplication strategy: the environment of every algorithm.
template <Field F, class S = Schoolbook>
  requires MulStrategy<S, F>
struct Context {
  F field;
  S strategy{};

  std::size_t threshold() const {
    return strategy.threshold == 0 ? 1 : strategy.threshold;
  }
};

template <Field F>
Context<F> make_context(const F& field, std::size_t threshold = 16) {
  return Context<F>{field, Schoolbook{threshold}};
}

/// c += s * a * b (full product). c may be a region or a SplitTarget.
template <class Ctx, class Target>
void acc_mul_full(const Ctx& ctx, const Target& c, ConstRegion a,
                  ConstRegion b, Sign s = Sign::plus) {
  if (a.empty() || b.empty()) return;
  if (c.size() < a.size() + b.size() - 1) {
    throw TargetTooShort("product of lengths " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) +
                         " needs a target of length " +
                         std::to_string(a.size() + b.size() - 1));
  }
  CallFrame frame(ctx.field);
  ctx.strategy.acc_mul(ctx.field, c, a, b, s);
}

/// c[k] += s * sum_{i+j=k} a[i] b[j] for k < n (quadratic short product).
template <Field F, class Target>
void acc_mul_short(const F& f, const Target& c, ConstRegion a, ConstRegion b,
                   std::size_t n, Sign s = Sign::plus) {
  if (c.size() < n) {
    throw TargetTooShort("short product of length " + std::to_string(n) +
                         " into a target of length " + std::to_string(c.size()));
  }
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      detail::accumulate(f, c[i + j], f.mul(a[i], b[j]), s);
    }
  }
}

/// Row-major dense square matrix; the plain input format of the quadratic
/// triangular routines.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t n, std::vector<Elem> entries)
      : n_(n), e_(std::move(entries)) {
    if (e_.size() != n * n) throw LengthMismatch("dense matrix entry count");
  }
  std::size_t dim() const { return n_; }
  Elem entry(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Elem> e_;
};

template <class M>
concept SquareMatrix = requires(const M& m, std::size_t i) {
  { m.dim() } -> std::convertible_to<std::size_t>;
  { m.entry(i, i) } -> std::same_as<Elem>;
};

namespace detail {

template <Field F, SquareMatrix M>
void require_invertible_diagonal(const F& f, const M& u) {
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (f.is_zero(u.entry(i, i))) throw SingularDiagonal();
  }
}

}  // namespace detail

/// v <- U v for a triangular U (only the triangle named by `o` is read).
template <Field F, SquareMatrix M>
void quad_tri_mul_overplace(const F& f, const M& u, CoeffRegion v,
                            Orientation o = Orientation::upper) {
  const std::size_t n = u.dim();
  if (v.size() != n) throw LengthMismatch("triangular product dimension");
  if (o == Orientation::upper) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        v[j] = f.add(v[j], f.mul(u.entry(j, i), v[i]));
      }
      v[i] = f.mul(u.entry(i, i), v[i]);
    }
  } else {
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) {
        v[j] = f.add(v[j], f.mul(u.entry(j, i), v[i]));
      }
      v[i] = f.mul(u.entry(i, i), v[i]);
    }
  }
}

/// v <- U^{-1} v; throws SingularDiagonal before touching v.
template <Field F, SquareMatrix M>
void quad_tri_solve_overplace(const F& f, const M& u, CoeffRegion v,
                              Orientation o = Orientation::upper) {
  const std::size_t n = u.dim();
  if (v.size() != n) throw LengthMismatch("triangular solve dimension");
  detail::require_invertible_diagonal(f, u);
  if (o == Orientation::upper) {
    for (std::size_t i = n; i-- > 0;) {
      v[i] = f.div(v[i], u.entry(i, i));
      for (std::size_t j = 0; j < i; ++j) {
        v[j] = f.sub(v[j], f.mul(u.entry(j, i), v[i]));
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = f.div(v[i], u.entry(i, i));
      for (std::size_t j = i + 1; j < n; ++j) {
        v[j] = f.sub(v[j], f.mul(u.entry(j, i), v[i]));
      }
    }
  }
}

namespace detail {

inline std::size_t divisor_degree(ConstRegion b) {
  if (b.empty()) throw NonInvertibleLeading("divisor is empty");
  if (b[b.size() - 1].value == 0) {
    throw NonInvertibleLeading("divisor has a zero leading coefficient");
  }
  return b.size() - 1;
}

}  // namespace detail

/// R = A mod B by long division, with R as the sliding window. A and B are
/// only read; len(R) must equal deg B.
template <Field F>
void quad_rem(const F& f, CoeffRegion r, ConstRegion a, ConstRegion b) {
  const std::size_t m = detail::divisor_degree(b);
  if (r.size() != m) {
    throw LengthMismatch("remainder length must equal the divisor degree");
  }
  require_disjoint(r, a, "remainder and dividend");
  require_disjoint(r, b, "remainder and divisor");
  if (m == 0) return;
  if (a.size() <= m) {
    for (std::size_t k = 0; k < m; ++k) r[k] = k < a.size() ? a[k] : f.zero();
    return;
  }
  const std::size_t n = a.size() - 1;
  for (std::size_t k = 0; k < m; ++k) r[k] = a[n - m + 1 + k];
  const Elem lead_inv = f.inv(b[m]);
  for (std::size_t i = n - m + 1; i-- > 0;) {
    const Elem q = f.mul(r[m - 1], lead_inv);
    for (std::size_t k = m - 1; k > 0; --k) {
      r[k] = f.sub(r[k - 1], f.mul(q, b[k]));
    }
    r[0] = f.sub(a[i], f.mul(q, b[0]));
  }
}

/// Long division inside A's own buffer: afterwards A holds [R, Q] with R in
/// the low deg(B) coefficients and each quotient digit stored where the
/// leading term it cancelled used to be.
template <Field F>
void quad_rem_overplace(const F& f, CoeffRegion a, ConstRegion b) {
  const std::size_t m = detail::divisor_degree(b);
  require_disjoint(a, b, "dividend and divisor");
  if (a.size() <= m) return;
  const std::size_t n = a.size() - 1;
  const Elem lead_inv = f.inv(b[m]);
  for (std::size_t i = n - m + 1; i-- > 0;) {
    const Elem q = f.mul(a[i + m], lead_inv);
    a[i + m] = q;
    for (std::size_t k = 0; k < m; ++k) {
      a[i + k] = f.sub(a[i + k], f.mul(q, b[k]));
    }
  }
}

}  // namespace ipoly
