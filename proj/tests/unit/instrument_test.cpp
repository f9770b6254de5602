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

#include <cmath>
#include <vector>

#include "ipoly/ipoly.hpp"
#include "support.hpp"

namespace ipoly {
namespace {

using testing::E;
using testing::Poly;

TEST(InstrumentTest, SchoolbookCountsAreDefinitional) {
  const PrimeField F(65521);
  testing::Rng rng(1);
  auto a = E(rng.poly(65521, 8)), b = E(rng.poly(65521, 8)), c = E(Poly(15, 0));
  const auto m = measure(F, [&](const auto& cf) {
    acc_mul_full(make_context(cf), CoeffRegion(c), ConstRegion(a), ConstRegion(b));
  });
  EXPECT_EQ(m.ops.muls, 64u);
  EXPECT_EQ(m.ops.adds, 64u);
  EXPECT_EQ(m.ops.divs, 0u);
  EXPECT_EQ(m.peak_aux_elems, 0u);
  EXPECT_EQ(m.peak_depth, 1u);
}

TEST(InstrumentTest, DeterministicForSameInputs) {
  const PrimeField F(65521);
  auto run = [&] {
    testing::Rng rng(5);
    auto a = E(rng.poly(65521, 64)), b = E(rng.poly(65521, 64)), c = E(rng.poly(65521, 64));
    return measure(F, [&](const auto& cf) {
      conv_acc(make_context(cf), CoeffRegion(c), CoeffRegion(a), CoeffRegion(b), Elem{3});
    });
  };
  const auto x = run(), y = run();
  EXPECT_EQ(x.ops, y.ops);
  EXPECT_EQ(x.peak_depth, y.peak_depth);
}

TEST(InstrumentTest, ZeroAuxCeilingHoldsForConvolution) {
  ASSERT_TRUE(heap_tracking_enabled());
  const PrimeField F(65521);
  testing::Rng rng(9);
  for (std::uint64_t f : {0ULL, 1ULL, 3ULL}) {
    auto a = E(rng.poly(65521, 256)), b = E(rng.poly(65521, 256)), c = E(Poly(256, 0));
    EXPECT_NO_THROW(measure(
        F,
        [&](const auto& cf) {
          conv_acc(make_context(cf), CoeffRegion(c), CoeffRegion(a), CoeffRegion(b), Elem{f});
        },
        Ceilings{0, 64}));
  }
}

TEST(InstrumentTest, HeapAllocationIsAttributed) {
  const PrimeField F(7);
  const auto m = measure(F, [](const auto&) {
    std::vector<Elem> v(100);
    asm volatile("" : : "r"(v.data()) : "memory");
  });
  EXPECT_GE(m.peak_aux_elems, 100u);
  EXPECT_EQ(m.heap_allocations, 1u);
  EXPECT_THROW(measure(
                   F,
                   [](const auto&) {
                     std::vector<Elem> v(10);
                     asm volatile("" : : "r"(v.data()) : "memory");
                   },
                   Ceilings{0}),
               GuardViolation);
}

TEST(InstrumentTest, DeclaredScratchIsCounted) {
  const PrimeField F(7);
  auto a = E({1, 2, 0, 1, 3, 4, 5}), b = E({1, 0, 1}), r = E({0, 0}), t = E({0, 0});
  const auto m = measure(F, [&](const auto& cf) {
    remainder_blockwise(cf, CoeffRegion(r), ConstRegion(a), ConstRegion(b), CoeffRegion(t));
  });
  EXPECT_EQ(m.peak_aux_elems, 2u);
}

TEST(InstrumentTest, DepthCeilingViolation) {
  const PrimeField F(13);
  testing::Rng rng(3);
  auto a = E(rng.poly(13, 512)), b = E(rng.poly(13, 512)), c = E(Poly(512, 0));
  EXPECT_THROW(measure(
                   F,
                   [&](const auto& cf) {
                     conv_acc(make_context(cf, 1), CoeffRegion(c), CoeffRegion(a),
                              CoeffRegion(b), Elem{2});
                   },
                   Ceilings{0, 1}),
               GuardViolation);
}

TEST(InstrumentTest, InversionsCountAsDivisions) {
  const PrimeField F(13);
  auto a = E({1, 2, 3, 4, 5}), b = E({1, 0, 2});
  const auto m = measure(F, [&](const auto& cf) {
    oper(make_context(cf), CoeffRegion(a), CoeffRegion(b));
  });
  EXPECT_GE(m.ops.divs, 1u);
}

TEST(InstrumentTest, PeakAuxIndependentOfLength) {
  const PrimeField F(65521);
  testing::Rng rng(13);
  for (std::size_t n : {64u, 256u, 1024u}) {
    const Poly a = rng.poly(65521, 2 * n + 1), b = rng.poly(65521, n / 2 + 1, true);
    auto ea = E(a), eb = E(b), r = E(Poly(n / 2, 0));
    const auto m = measure(F, [&](const auto& cf) {
      iper(make_context(cf), CoeffRegion(r), ConstRegion(ea), CoeffRegion(eb));
      aper(make_context(cf), CoeffRegion(r), CoeffRegion(ea), CoeffRegion(eb));
    });
    EXPECT_EQ(m.peak_aux_elems, 0u) << n;
    EXPECT_LE(m.peak_depth, 2 * std::log2(static_cast<double>(n)) + 8) << n;
  }
}

}  // namespace
}  // namespace ipoly
