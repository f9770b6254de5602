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

TEST(AccMulFullTest, SmallProduct) {
  auto ctx = make_context(PrimeField(7));
  auto c = E({1, 1, 1}), a = E({2, 3}), b = E({1, 4});
  acc_mul_full(ctx, CoeffRegion(c), ConstRegion(a), ConstRegion(b));
  EXPECT_EQ(V(c), (Poly{3, 5, 6}));
}

TEST(AccMulFullTest, ConstantOneAddsA) {
  auto ctx = make_context(PrimeField(7));
  auto c = E({1, 1, 1}), a = E({2, 3, 4}), one = E({1});
  acc_mul_full(ctx, CoeffRegion(c), ConstRegion(a), ConstRegion(one));
  EXPECT_EQ(V(c), (Poly{3, 4, 5}));
}

TEST(AccMulFullTest, ZeroFactorLeavesTarget) {
  auto ctx = make_context(PrimeField(7));
  auto c = E({1, 2, 3}), a = E({0, 0}), b = E({5, 6});
  acc_mul_full(ctx, CoeffRegion(c), ConstRegion(a), ConstRegion(b));
  EXPECT_EQ(V(c), (Poly{1, 2, 3}));
}

TEST(AccMulFullTest, ShortTargetThrows) {
  auto ctx = make_context(PrimeField(7));
  auto c = E({0, 0}), a = E({1, 1}), b = E({1, 1});
  EXPECT_THROW(acc_mul_full(ctx, CoeffRegion(c), ConstRegion(a), ConstRegion(b)),
               TargetTooShort);
}

TEST(AccMulFullTest, SplitTargetAndSignMatchOracle) {
  testing::Rng rng(11);
  for (std::uint64_t p : testing::kPrimes) {
    auto ctx = make_context(PrimeField(p));
    for (int it = 0; it < 100; ++it) {
      const std::size_t la = 1 + rng.below(40), lb = 1 + rng.below(40);
      const std::size_t cut = rng.below(la + lb);
      const Poly a = rng.poly(p, la), b = rng.poly(p, lb), c = rng.poly(p, la + lb - 1);
      auto ea = E(a), eb = E(b);
      auto lo = E(Poly(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(cut)));
      auto hi = E(Poly(c.begin() + static_cast<std::ptrdiff_t>(cut), c.end()));
      acc_mul_full(ctx, SplitTarget(CoeffRegion(lo), CoeffRegion(hi)), ConstRegion(ea),
                   ConstRegion(eb), Sign::minus);
      Poly got = V(lo);
      const Poly h = V(hi);
      got.insert(got.end(), h.begin(), h.end());
      const Poly prod = ref::ref_mul(p, a, b);
      Poly want = c;
      for (std::size_t k = 0; k < prod.size(); ++k) want[k] = (want[k] + p - prod[k]) % p;
      ASSERT_EQ(got, want) << "p=" << p;
    }
  }
}

TEST(AccMulShortTest, Cases) {
  const PrimeField f(5);
  auto c = E({0, 0}), a = E({1, 2}), b = E({3, 1});
  acc_mul_short(f, CoeffRegion(c), ConstRegion(a), ConstRegion(b), 2);
  EXPECT_EQ(V(c), (Poly{3, 2}));
  auto c1 = E({1, 1});
  acc_mul_short(f, CoeffRegion(c1), ConstRegion(a), ConstRegion(b), 1);
  EXPECT_EQ(V(c1), (Poly{4, 1}));
  auto c0 = E({1});
  acc_mul_short(f, CoeffRegion(c0), ConstRegion(a), ConstRegion(b), 0);
  EXPECT_EQ(V(c0), (Poly{1}));
  EXPECT_THROW(acc_mul_short(f, CoeffRegion(c0), ConstRegion(a), ConstRegion(b), 2),
               TargetTooShort);
}

TEST(QuadTriTest, UpperMulAndSolve) {
  const PrimeField f(5);
  const DenseMatrix u(2, E({1, 2, 0, 1}));
  auto v = E({3, 4});
  quad_tri_mul_overplace(f, u, CoeffRegion(v));
  EXPECT_EQ(V(v), (Poly{1, 4}));
  auto w = E({3, 4});
  quad_tri_solve_overplace(f, u, CoeffRegion(w));
  EXPECT_EQ(V(w), (Poly{0, 4}));
}

TEST(QuadTriTest, IdentityLeavesVector) {
  const PrimeField f(5);
  const DenseMatrix id(3, E({1, 0, 0, 0, 1, 0, 0, 0, 1}));
  auto v = E({2, 3, 4});
  quad_tri_mul_overplace(f, id, CoeffRegion(v));
  quad_tri_solve_overplace(f, id, CoeffRegion(v), Orientation::lower);
  EXPECT_EQ(V(v), (Poly{2, 3, 4}));
}

TEST(QuadTriTest, SingularDiagonalThrowsBeforeWriting) {
  const PrimeField f(5);
  const DenseMatrix u(2, E({1, 2, 0, 0}));
  auto v = E({3, 4});
  EXPECT_THROW(quad_tri_solve_overplace(f, u, CoeffRegion(v)), SingularDiagonal);
  EXPECT_EQ(V(v), (Poly{3, 4}));
}

TEST(QuadTriTest, RandomRoundTripBothOrientations) {
  testing::Rng rng(5);
  for (std::uint64_t p : testing::kPrimes) {
    const PrimeField f(p);
    for (int it = 0; it < 50; ++it) {
      const std::size_t n = 1 + rng.below(12);
      const Orientation o = rng.below(2) ? Orientation::upper : Orientation::lower;
      Poly m = rng.poly(p, n * n);
      for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = 1 + rng.below(p - 1);
        for (std::size_t j = 0; j < n; ++j) {
          if ((o == Orientation::upper && j < i) || (o == Orientation::lower && j > i)) {
            m[i * n + j] = 0;
          }
        }
      }
      const DenseMatrix u(n, E(m));
      const Poly v = rng.poly(p, n);
      auto ev = E(v);
      quad_tri_mul_overplace(f, u, CoeffRegion(ev), o);
      ASSERT_EQ(V(ev), ref::ref_matvec(p, {n, n, m}, v));
      quad_tri_solve_overplace(f, u, CoeffRegion(ev), o);
      ASSERT_EQ(V(ev), v);
    }
  }
}

TEST(QuadRemTest, Cases) {
  const PrimeField f(7);
  auto r = E({0, 0}), a = E({1, 2, 0, 1}), b = E({1, 0, 1});
  quad_rem(f, CoeffRegion(r), ConstRegion(a), ConstRegion(b));
  EXPECT_EQ(V(r), (Poly{1, 1}));

  auto r2 = E({0, 0, 0}), small = E({4, 5}), cubic = E({1, 1, 1, 1});
  quad_rem(f, CoeffRegion(r2), ConstRegion(small), ConstRegion(cubic));
  EXPECT_EQ(V(r2), (Poly{4, 5, 0}));

  auto r3 = E({0, 0}), xm = E({0, 0, 1}), big = E({3, 4, 5, 6});
  quad_rem(f, CoeffRegion(r3), ConstRegion(big), ConstRegion(xm));
  EXPECT_EQ(V(r3), (Poly{3, 4}));
}

TEST(QuadRemTest, ErrorsNameThePrecondition) {
  const PrimeField f(7);
  auto r = E({0, 0}), a = E({1, 2, 0, 1}), b = E({1, 0, 0});
  EXPECT_THROW(quad_rem(f, CoeffRegion(r), ConstRegion(a), ConstRegion(b)),
               NonInvertibleLeading);
  auto r1 = E({0}), b2 = E({1, 0, 1});
  EXPECT_THROW(quad_rem(f, CoeffRegion(r1), ConstRegion(a), ConstRegion(b2)),
               LengthMismatch);
}

TEST(QuadRemTest, RandomAgainstOracleAndOverplaceLayout) {
  testing::Rng rng(9);
  for (std::uint64_t p : testing::kPrimes) {
    const PrimeField f(p);
    for (int it = 0; it < 100; ++it) {
      const std::size_t m = rng.below(20), n = rng.below(60);
      const Poly a = rng.poly(p, n + 1), b = rng.poly(p, m + 1, true);
      const auto d = ref::ref_divmod(p, a, b);
      auto ea = E(a), eb = E(b);
      std::vector<Elem> r(m);
      quad_rem(f, CoeffRegion(r), ConstRegion(ea), ConstRegion(eb));
      ASSERT_EQ(V(r), d.remainder);
      quad_rem_overplace(f, CoeffRegion(ea), ConstRegion(eb));
      if (n >= m) {
        Poly layout = d.remainder;
        layout.insert(layout.end(), d.quotient.begin(), d.quotient.end());
        ASSERT_EQ(V(ea), layout);
      } else {
        ASSERT_EQ(V(ea), a);
      }
    }
  }
}

}  // namespace
}  // namespace ipoly
