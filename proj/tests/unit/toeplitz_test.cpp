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


#include <gtest/gtest.h>

#include "ipoly/ipoly.hpp"
#include "support.hpp"

namespace ipoly {
namespace {

using testing::E;
using testing::Poly;
using testing::V;

// Dense defining vector (length 2m-1) of a triangular Toeplitz matrix.
Poly tri_vector(const Poly& a, Orientation o) {
  const std::size_t m = a.size();
  Poly v(2 * m - 1, 0);
  for (std::size_t k = 0; k < m; ++k) v[o == Orientation::upper ? m - 1 + k : k] = a[k];
  return v;
}

TEST(CirculantTest, WorkedInstances) {
  auto ctx = make_context(PrimeField(7));
  auto a = E({1, 3}), b = E({1, 1}), c = E({0, 0});
  circulant_acc(ctx, CoeffRegion(c), CirculantView{CoeffRegion(a), Elem{2}}, CoeffRegion(b));
  EXPECT_EQ(V(c), (Poly{4, 0}));

  auto ctx5 = make_context(PrimeField(5));
  auto a5 = E({2, 3}), b5 = E({1, 4}), c5 = E({0, 0});
  circulant_acc(ctx5, CoeffRegion(c5), CirculantView{CoeffRegion(a5), Elem{0}},
                CoeffRegion(b5));
  EXPECT_EQ(V(c5), (Poly{4, 3}));
}

TEST(CirculantTest, UnitVectorIsIdentity) {
  auto ctx = make_context(PrimeField(13), 1);
  auto a = E({1, 0, 0, 0, 0}), b = E({1, 2, 3, 4, 5}), c = E({1, 1, 1, 1, 1});
  circulant_acc(ctx, CoeffRegion(c), CirculantView{CoeffRegion(a), Elem{9}}, CoeffRegion(b));
  EXPECT_EQ(V(c), (Poly{2, 3, 4, 5, 6}));
}

TEST(CirculantTest, ViewEntryMatchesDenseOracle) {
  const PrimeField f(7);
  auto a = E({1, 2, 3});
  CirculantView view{CoeffRegion(a), Elem{4}};
  const auto dense = ref::ref_dense_circulant(7, {1, 2, 3}, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(view.entry(i, j, f).value, dense.at(i, j));
  }
}

TEST(SquareToeplitzTest, WorkedInstance) {
  auto ctx = make_context(PrimeField(7));
  auto a1 = E({1}), a2 = E({2, 3}), b = E({1, 1}), c = E({0, 0});
  square_toeplitz_acc(ctx, CoeffRegion(c), CoeffRegion(a1), CoeffRegion(a2), CoeffRegion(b));
  EXPECT_EQ(V(c), (Poly{5, 3}));
}

TEST(SquareToeplitzTest, ZeroLowerPartIsUpperCirculant) {
  testing::Rng rng(1);
  auto ctx = make_context(PrimeField(13), 1);
  const std::size_t m = 9;
  const Poly a2 = rng.poly(13, m), b = rng.poly(13, m);
  auto e1 = E(Poly(m - 1, 0)), e2 = E(a2), eb = E(b), c1 = E(Poly(m, 0)), c2 = E(Poly(m, 0));
  square_toeplitz_acc(ctx, CoeffRegion(c1), CoeffRegion(e1), CoeffRegion(e2), CoeffRegion(eb));
  circulant_acc(ctx, CoeffRegion(c2), CirculantView{CoeffRegion(e2), Elem{0}}, CoeffRegion(eb));
  EXPECT_EQ(V(c1), V(c2));
}

TEST(SquareToeplitzTest, LengthErrors) {
  auto ctx = make_context(PrimeField(7));
  auto a1 = E({1, 1}), a2 = E({2, 3}), b = E({1, 1}), c = E({0, 0});
  EXPECT_THROW(square_toeplitz_acc(ctx, CoeffRegion(c), CoeffRegion(a1), CoeffRegion(a2),
                                   CoeffRegion(b)),
               LengthMismatch);
}

TEST(RectToeplitzTest, WorkedInstance) {
  auto ctx = make_context(PrimeField(5));
  auto v = E({1, 2, 3, 4}), b = E({1, 1}), c = E({0, 0, 0});
  rect_toeplitz_acc(ctx, CoeffRegion(c), ToeplitzView(3, 2, PaddedRegion(CoeffRegion(v))),
                    CoeffRegion(b));
  EXPECT_EQ(V(c), (Poly{2, 0, 3}));
}

TEST(RectToeplitzTest, SingleRowIsDotWithVector) {
  auto ctx = make_context(PrimeField(13), 1);
  auto v = E({1, 2, 3, 4}), b = E({5, 6, 7, 8}), c = E({0});
  rect_toeplitz_acc(ctx, CoeffRegion(c), ToeplitzView(1, 4, PaddedRegion(CoeffRegion(v))),
                    CoeffRegion(b));
  EXPECT_EQ(c[0].value, (1 * 5 + 2 * 6 + 3 * 7 + 4 * 8) % 13);
}

TEST(RectToeplitzTest, ShapeAndLengthErrors) {
  auto v = E({1, 2, 3});
  EXPECT_THROW(ToeplitzView(3, 2, PaddedRegion(CoeffRegion(v))), LengthMismatch);
  auto ctx = make_context(PrimeField(5));
  auto w = E({1, 2, 3, 4}), b = E({1, 1, 1}), c = E({0, 0, 0});
  EXPECT_THROW(rect_toeplitz_acc(ctx, CoeffRegion(c),
                                 ToeplitzView(3, 2, PaddedRegion(CoeffRegion(w))),
                                 CoeffRegion(b)),
               LengthMismatch);
}

TEST(RectToeplitzTest, RandomShapesWithPaddingMatchDense) {
  testing::Rng rng(17);
  for (std::uint64_t p : testing::kPrimes) {
    for (std::size_t thr : testing::kThresholds) {
      auto ctx = make_context(PrimeField(p), thr);
      for (int it = 0; it < 40; ++it) {
        const std::size_t m = 1 + rng.below(40), n = 1 + rng.below(40);
        const std::size_t len = m + n - 1;
        const std::size_t lead = rng.below(len), trail = rng.below(len - lead);
        const Poly stored = rng.poly(p, len - lead - trail);
        Poly full(lead, 0);
        full.insert(full.end(), stored.begin(), stored.end());
        full.resize(len, 0);
        const Poly b = rng.poly(p, n), c = rng.poly(p, m);
        auto ev = E(stored), eb = E(b), ec = E(c);
        rect_toeplitz_acc(ctx, CoeffRegion(ec),
                          ToeplitzView(m, n, PaddedRegion(lead, CoeffRegion(ev), trail)),
                          CoeffRegion(eb));
        ASSERT_EQ(V(ec),
                  ref::ref_add(p, c, ref::ref_matvec(p, ref::ref_dense_toeplitz(m, n, full), b)))
            << "p=" << p << " m=" << m << " n=" << n;
        ASSERT_EQ(V(ev), stored);
        ASSERT_EQ(V(eb), b);
      }
    }
  }
}

TEST(TriToeplitzTest, WorkedInstances) {
  auto ctx = make_context(PrimeField(5));
  auto run = [&](Orientation o, bool solve) {
    auto a = E({1, 2}), b = E({3, 4});
    if (solve) {
      tri_toeplitz_solve_overplace(ctx, PaddedRegion(CoeffRegion(a)), CoeffRegion(b), o);
    } else {
      tri_toeplitz_mul_overplace(ctx, PaddedRegion(CoeffRegion(a)), CoeffRegion(b), o);
    }
    return V(b);
  };
  EXPECT_EQ(run(Orientation::lower, false), (Poly{1, 1}));
  EXPECT_EQ(run(Orientation::upper, false), (Poly{1, 4}));
  EXPECT_EQ(run(Orientation::upper, true), (Poly{0, 4}));
}

TEST(TriToeplitzTest, UnitVectorIsIdentity) {
  auto ctx = make_context(PrimeField(7), 1);
  auto a = E({1, 0, 0, 0}), b = E({3, 4, 5, 6});
  tri_toeplitz_mul_overplace(ctx, PaddedRegion(CoeffRegion(a)), CoeffRegion(b),
                             Orientation::upper);
  EXPECT_EQ(V(b), (Poly{3, 4, 5, 6}));
}

TEST(TriToeplitzTest, ZeroDiagonalIsSingular) {
  auto ctx = make_context(PrimeField(7));
  auto a = E({0, 2}), b = E({3, 4});
  EXPECT_THROW(tri_toeplitz_solve_overplace(ctx, PaddedRegion(CoeffRegion(a)), CoeffRegion(b),
                                            Orientation::upper),
               SingularDiagonal);
  EXPECT_EQ(V(b), (Poly{3, 4}));
  auto l = E({2, 0});
  EXPECT_THROW(tri_toeplitz_solve_overplace(ctx, PaddedRegion(CoeffRegion(l)), CoeffRegion(b),
                                            Orientation::lower),
               SingularDiagonal);
}

TEST(TriToeplitzTest, RandomMulSolveAndAccumulate) {
  testing::Rng rng(23);
  for (std::uint64_t p : testing::kPrimes) {
    for (std::size_t thr : testing::kThresholds) {
      auto ctx = make_context(PrimeField(p), thr);
      for (int it = 0; it < 40; ++it) {
        const std::size_t m = 1 + rng.below(50);
        const Orientation o = rng.below(2) ? Orientation::upper : Orientation::lower;
        Poly a = rng.poly(p, m);
        (o == Orientation::upper ? a.front() : a.back()) = 1 + rng.below(p - 1);
        const auto dense = ref::ref_dense_toeplitz(m, m, tri_vector(a, o));
        const Poly b = rng.poly(p, m), c = rng.poly(p, m);
        auto ea = E(a), eb = E(b), ec = E(c);
        tri_toeplitz_acc(ctx, CoeffRegion(ec), CoeffRegion(ea), CoeffRegion(eb), o);
        ASSERT_EQ(V(ec), ref::ref_add(p, c, ref::ref_matvec(p, dense, b)));
        tri_toeplitz_mul_overplace(ctx, PaddedRegion(CoeffRegion(ea)), CoeffRegion(eb), o);
        ASSERT_EQ(V(eb), ref::ref_matvec(p, dense, b));
        tri_toeplitz_solve_overplace(ctx, PaddedRegion(CoeffRegion(ea)), CoeffRegion(eb), o);
        ASSERT_EQ(V(eb), b);
        tri_toeplitz_solve_overplace(ctx, PaddedRegion(CoeffRegion(ea)), CoeffRegion(eb), o);
        ASSERT_EQ(V(eb), ref::ref_dense_solve(p, dense, b));
        ASSERT_EQ(V(ea), a);
      }
    }
  }
}

TEST(TriToeplitzTest, QuadraticViewAgreesWithRecursive) {
  testing::Rng rng(29);
  const PrimeField f(13);
  auto ctx = make_context(f, 1);
  for (std::size_t m = 1; m < 30; ++m) {
    Poly a = rng.poly(13, m);
    a.front() = 1 + rng.below(12);
    const Poly b = rng.poly(13, m);
    auto ea = E(a), b1 = E(b), b2 = E(b);
    quad_tri_mul_overplace(f, TriToeplitz{PaddedRegion(CoeffRegion(ea)), Orientation::upper},
                           CoeffRegion(b1), Orientation::upper);
    tri_toeplitz_mul_overplace(ctx, PaddedRegion(CoeffRegion(ea)), CoeffRegion(b2),
                               Orientation::upper);
    ASSERT_EQ(V(b1), V(b2));
  }
}

}  // namespace
}  // namespace ipoly
