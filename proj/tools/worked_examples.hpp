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

// Small hand-sized instances with known answers. Each row carries the
// expected literal, an oracle computation of it and the library
// computation; a row passes when all three agree.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ipoly/ipoly.hpp"
#include "polyio.hpp"

namespace ipoly::cli {

using U64s = std::vector<std::uint64_t>;

struct WorkedExample {
  std::string name;
  U64s expected;
  std::function<U64s()> oracle;
  std::function<U64s()> library;
};

struct WorkedResult {
  std::string name;
  bool oracle_ok = false;
  bool library_ok = false;
  std::string detail;
};

namespace examples_detail {

inline std::vector<Elem> elems(const U64s& v) {
  std::vector<Elem> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(Elem{x});
  return out;
}

inline U64s values(const std::vector<Elem>& v) {
  U64s out;
  out.reserve(v.size());
  for (auto e : v) out.push_back(e.value);
  return out;
}

inline U64s concat(U64s a, const U64s& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline U64s conv_lib(std::uint64_t p, U64s a, U64s b, U64s c, std::uint64_t f) {
  auto ctx = make_context(PrimeField(p), 1);
  auto ea = elems(a), eb = elems(b), ec = elems(c);
  conv_acc(ctx, CoeffRegion(ec), CoeffRegion(ea), CoeffRegion(eb), Elem{f});
  return values(ec);
}

inline U64s conv_oracle(std::uint64_t p, U64s a, U64s b, U64s c, std::uint64_t f) {
  return ref::ref_add(p, c, ref::ref_convolution(p, a, b, f, a.size()));
}

inline U64s short_lib(std::uint64_t p, U64s a, U64s b, U64s c) {
  auto ctx = make_context(PrimeField(p), 1);
  auto ea = elems(a), eb = elems(b), ec = elems(c);
  short_acc(ctx, CoeffRegion(ec), CoeffRegion(ea), CoeffRegion(eb));
  return values(ec);
}

}  // namespace examples_detail

inline std::vector<WorkedExample> worked_examples() {
  using namespace examples_detail;
  std::vector<WorkedExample> ex;
  auto add = [&](std::string n, U64s e, std::function<U64s()> o,
                 std::function<U64s()> l) {
    ex.push_back({std::move(n), std::move(e), std::move(o), std::move(l)});
  };

  // Field.
  add("ff add p=5", {2}, [] { return U64s{(3 + 4) % 5}; },
      [] { return U64s{PrimeField(5).add(Elem{3}, Elem{4}).value}; });
  add("ff inv p=7", {5}, [] { return U64s{ref::ref_inv(3, 7)}; },
      [] { return U64s{PrimeField(7).inv(Elem{3}).value}; });

  // Multiplication building blocks.
  add("acc_mul_full p=7", {3, 5, 6},
      [] { return ref::ref_add(7, {1, 1, 1}, ref::ref_mul(7, {2, 3}, {1, 4})); },
      [] {
        auto ctx = make_context(PrimeField(7));
        auto c = elems({1, 1, 1}), a = elems({2, 3}), b = elems({1, 4});
        acc_mul_full(ctx, CoeffRegion(c), ConstRegion(a), ConstRegion(b));
        return values(c);
      });
  add("acc_mul_short p=5", {3, 2},
      [] { return ref::ref_convolution(5, {1, 2}, {3, 1}, 0, 2); },
      [] {
        auto c = elems({0, 0}), a = elems({1, 2}), b = elems({3, 1});
        acc_mul_short(PrimeField(5), CoeffRegion(c), ConstRegion(a),
                      ConstRegion(b), 2);
        return values(c);
      });
  add("quad_tri_mul p=5", {1, 4},
      [] { return ref::ref_matvec(5, {2, 2, {1, 2, 0, 1}}, {3, 4}); },
      [] {
        auto v = elems({3, 4});
        quad_tri_mul_overplace(PrimeField(5), DenseMatrix(2, elems({1, 2, 0, 1})),
                               CoeffRegion(v));
        return values(v);
      });
  add("quad_tri_solve p=5", {0, 4},
      [] { return ref::ref_dense_solve(5, {2, 2, {1, 2, 0, 1}}, {3, 4}); },
      [] {
        auto v = elems({3, 4});
        quad_tri_solve_overplace(PrimeField(5),
                                 DenseMatrix(2, elems({1, 2, 0, 1})),
                                 CoeffRegion(v));
        return values(v);
      });
  add("quad_rem p=7", {1, 1},
      [] { return ref::ref_divmod(7, {1, 2, 0, 1}, {1, 0, 1}).remainder; },
      [] {
        auto r = elems({0, 0}), a = elems({1, 2, 0, 1}), b = elems({1, 0, 1});
        quad_rem(PrimeField(7), CoeffRegion(r), ConstRegion(a), ConstRegion(b));
        return values(r);
      });

  // Convolutions.
  add("conv p=5 n=2 f=2", {2, 2}, [] { return conv_oracle(5, {1, 2}, {3, 1}, {0, 0}, 2); },
      [] { return conv_lib(5, {1, 2}, {3, 1}, {0, 0}, 2); });
  add("conv p=5 n=2 f=1", {1, 3}, [] { return conv_oracle(5, {1, 2}, {3, 1}, {1, 1}, 1); },
      [] { return conv_lib(5, {1, 2}, {3, 1}, {1, 1}, 1); });
  add("conv p=5 n=3 f=2", {2, 1, 0},
      [] { return conv_oracle(5, {1, 0, 1}, {0, 1, 0}, {0, 0, 0}, 2); },
      [] { return conv_lib(5, {1, 0, 1}, {0, 1, 0}, {0, 0, 0}, 2); });
  add("short p=5 n=2", {3, 2}, [] { return conv_oracle(5, {1, 2}, {3, 1}, {0, 0}, 0); },
      [] { return short_lib(5, {1, 2}, {3, 1}, {0, 0}); });
  add("short p=2 n=3", {1, 1, 0},
      [] { return conv_oracle(2, {1, 1, 1}, {1, 0, 1}, {0, 0, 0}, 0); },
      [] { return short_lib(2, {1, 1, 1}, {1, 0, 1}, {0, 0, 0}); });

  // Structured matrices.
  add("square Toeplitz p=7", {5, 3},
      [] { return ref::ref_matvec(7, ref::ref_dense_toeplitz(2, 2, {1, 2, 3}), {1, 1}); },
      [] {
        auto ctx = make_context(PrimeField(7));
        auto a1 = elems({1}), a2 = elems({2, 3}), b = elems({1, 1}), c = elems({0, 0});
        square_toeplitz_acc(ctx, CoeffRegion(c), CoeffRegion(a1), CoeffRegion(a2),
                            CoeffRegion(b));
        return values(c);
      });
  add("rect Toeplitz 3x2 p=5", {2, 0, 3},
      [] { return ref::ref_matvec(5, ref::ref_dense_toeplitz(3, 2, {1, 2, 3, 4}), {1, 1}); },
      [] {
        auto ctx = make_context(PrimeField(5));
        auto v = elems({1, 2, 3, 4}), b = elems({1, 1}), c = elems({0, 0, 0});
        rect_toeplitz_acc(ctx, CoeffRegion(c),
                          ToeplitzView(3, 2, PaddedRegion(CoeffRegion(v))),
                          CoeffRegion(b));
        return values(c);
      });
  auto tri = [](std::uint64_t p, Orientation o, bool solve) {
    auto ctx = make_context(PrimeField(p));
    auto a = elems({1, 2}), b = elems({3, 4});
    if (solve) {
      tri_toeplitz_solve_overplace(ctx, PaddedRegion(CoeffRegion(a)), CoeffRegion(b), o);
    } else {
      tri_toeplitz_mul_overplace(ctx, PaddedRegion(CoeffRegion(a)), CoeffRegion(b), o);
    }
    return values(b);
  };
  add("lower tri Toeplitz mul p=5", {1, 1},
      [] { return ref::ref_matvec(5, ref::ref_dense_toeplitz(2, 2, {1, 2, 0}), {3, 4}); },
      [tri] { return tri(5, Orientation::lower, false); });
  add("upper tri Toeplitz mul p=5", {1, 4},
      [] { return ref::ref_matvec(5, ref::ref_dense_toeplitz(2, 2, {0, 1, 2}), {3, 4}); },
      [tri] { return tri(5, Orientation::upper, false); });
  add("upper tri Toeplitz solve p=5", {0, 4},
      [] { return ref::ref_dense_solve(5, ref::ref_dense_toeplitz(2, 2, {0, 1, 2}), {3, 4}); },
      [tri] { return tri(5, Orientation::upper, true); });
  auto circ = [](std::uint64_t p, U64s a, std::uint64_t f, U64s b) {
    auto ctx = make_context(PrimeField(p));
    auto ea = elems(a), eb = elems(b), ec = elems(U64s(a.size(), 0));
    circulant_acc(ctx, CoeffRegion(ec), CirculantView{CoeffRegion(ea), Elem{f}},
                  CoeffRegion(eb));
    return values(ec);
  };
  add("circulant p=7 f=2", {4, 0},
      [] { return ref::ref_matvec(7, ref::ref_dense_circulant(7, {1, 3}, 2), {1, 1}); },
      [circ] { return circ(7, {1, 3}, 2, {1, 1}); });
  add("circulant p=5 f=0", {4, 3},
      [] { return ref::ref_matvec(5, ref::ref_dense_circulant(5, {2, 3}, 0), {1, 4}); },
      [circ] { return circ(5, {2, 3}, 0, {1, 4}); });

  // Euclidean remainder.
  add("iper p=7", {1, 1},
      [] { return ref::ref_divmod(7, {1, 2, 0, 1}, {1, 0, 1}).remainder; },
      [] {
        auto ctx = make_context(PrimeField(7));
        auto r = elems({0, 0}), a = elems({1, 2, 0, 1}), b = elems({1, 0, 1});
        iper(ctx, CoeffRegion(r), ConstRegion(a), CoeffRegion(b));
        return values(r);
      });
  add("remainder_blockwise p=7", {1, 1},
      [] { return ref::ref_divmod(7, {1, 2, 0, 1}, {1, 0, 1}).remainder; },
      [] {
        auto r = elems({0, 0}), a = elems({1, 2, 0, 1}), b = elems({1, 0, 1});
        auto t = elems({0, 0});
        remainder_blockwise(PrimeField(7), CoeffRegion(r), ConstRegion(a),
                            ConstRegion(b), CoeffRegion(t));
        return values(r);
      });
  auto oper_layout = [](std::uint64_t p, U64s a, U64s b) {
    auto ctx = make_context(PrimeField(p));
    auto ea = elems(a), eb = elems(b);
    oper(ctx, CoeffRegion(ea), CoeffRegion(eb));
    return values(ea);
  };
  add("oper layout p=7", {1, 1, 0, 1},
      [] {
        auto d = ref::ref_divmod(7, {1, 2, 0, 1}, {1, 0, 1});
        return concat(d.remainder, d.quotient);
      },
      [oper_layout] { return oper_layout(7, {1, 2, 0, 1}, {1, 0, 1}); });
  add("oper layout p=5 s=1", {1, 1, 2},
      [] {
        auto d = ref::ref_divmod(5, {3, 1, 2}, {1, 0, 1});
        return concat(d.remainder, d.quotient);
      },
      [oper_layout] { return oper_layout(5, {3, 1, 2}, {1, 0, 1}); });
  add("aper p=7", {2, 1},
      [] { return ref::ref_add(7, {1, 0}, ref::ref_divmod(7, {1, 2, 0, 1}, {1, 0, 1}).remainder); },
      [] {
        auto ctx = make_context(PrimeField(7));
        auto r = elems({1, 0}), a = elems({1, 2, 0, 1}), b = elems({1, 0, 1});
        aper(ctx, CoeffRegion(r), CoeffRegion(a), CoeffRegion(b));
        return values(r);
      });

  // Modular multiplication.
  add("axpyin p=7", {1, 2},
      [] { return ref::ref_mulmod(7, {2, 1}, {1, 2, 3}, {1, 0, 1}); },
      [] {
        auto ctx = make_context(PrimeField(7));
        auto r = elems({0, 0}), a = elems({2, 1}), c = elems({1, 2, 3}),
             b = elems({1, 0, 1});
        axpyin(ctx, CoeffRegion(r), CoeffRegion(a), CoeffRegion(c), CoeffRegion(b));
        return values(r);
      });
  add("fullaxpyin p=5", {4, 4},
      [] { return ref::ref_mulmod(5, {1, 0, 0, 1}, {0, 0, 0, 1}, {1, 0, 1}); },
      [] {
        auto ctx = make_context(PrimeField(5));
        auto r = elems({0, 0}), a = elems({1, 0, 0, 1}), c = elems({0, 0, 0, 1}),
             b = elems({1, 0, 1});
        fullaxpyin(ctx, CoeffRegion(r), CoeffRegion(a), CoeffRegion(c),
                   CoeffRegion(b));
        return values(r);
      });
  return ex;
}

inline std::vector<WorkedResult> run_worked_examples() {
  std::vector<WorkedResult> out;
  for (const auto& e : worked_examples()) {
    WorkedResult r;
    r.name = e.name;
    const U64s o = e.oracle();
    U64s l;
    try {
      l = e.library();
    } catch (const std::exception& ex) {
      r.detail = ex.what();
    }
    r.oracle_ok = o == e.expected;
    r.library_ok = l == e.expected;
    if (!r.oracle_ok || !r.library_ok) {
      r.detail += " expected [" + format_coeffs(e.expected) + "] oracle [" +
                  format_coeffs(o) + "] library [" + format_coeffs(l) + "]";
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace ipoly::cli
