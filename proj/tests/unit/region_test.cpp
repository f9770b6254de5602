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
using testing::V;

TEST(RegionTest, SubWindowAndBounds) {
  auto v = E({1, 2, 3, 4, 5});
  CoeffRegion r(v);
  EXPECT_EQ(V(r.sub(1, 3)), (testing::Poly{2, 3, 4}));
  EXPECT_EQ(V(r.last(2)), (testing::Poly{4, 5}));
  EXPECT_EQ(V(r.drop(4)), (testing::Poly{5}));
  EXPECT_THROW(r.sub(3, 3), std::out_of_range);
  EXPECT_NO_THROW(r.sub(5, 0));
}

TEST(RegionTest, ReversalIsAnInvolution) {
  auto v = E({1, 2, 3});
  CoeffRegion r(v);
  EXPECT_EQ(V(r.reversed()), (testing::Poly{3, 2, 1}));
  EXPECT_EQ(r.reversed().reversed(), r);
  EXPECT_EQ(V(r.reversed().sub(1, 2)), (testing::Poly{2, 1}));
  EXPECT_EQ(V(r.sub(1, 2).reversed()), (testing::Poly{3, 2}));
}

TEST(RegionTest, WritesThroughReversedView) {
  auto v = E({1, 2, 3});
  CoeffRegion(v).reversed()[0] = Elem{9};
  EXPECT_EQ(V(v), (testing::Poly{1, 2, 9}));
}

TEST(RegionTest, OverlapDetection) {
  auto v = E({0, 0, 0, 0});
  CoeffRegion r(v);
  EXPECT_TRUE(overlaps(r.first(2), r.sub(1, 2)));
  EXPECT_FALSE(overlaps(r.first(2), r.last(2)));
  EXPECT_TRUE(overlaps(r.first(3).reversed(), r.last(2)));
  EXPECT_FALSE(overlaps(r.first(0), r));
  EXPECT_THROW(require_disjoint(r, r.last(1), "x"), BadParameter);
}

TEST(SplitTargetTest, MapsLogicalIndices) {
  auto a = E({1, 2}), b = E({3, 4, 5});
  SplitTarget t{CoeffRegion(a), CoeffRegion(b)};
  ASSERT_EQ(t.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(t[k].value, k + 1);
  t[3] = Elem{0};
  EXPECT_EQ(b[1], Elem{0});
  EXPECT_THROW(SplitTarget(CoeffRegion(a), CoeffRegion(a).last(1)), BadParameter);
}

TEST(PaddedRegionTest, VirtualZerosReadZeroAndRejectWrites) {
  auto v = E({7, 8});
  PaddedRegion p(1, CoeffRegion(v), 2);
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(p.at(0), Elem{0});
  EXPECT_EQ(p.at(1), Elem{7});
  EXPECT_EQ(p.at(4), Elem{0});
  EXPECT_THROW(p.ref(0), BadParameter);
  p.ref(2) = Elem{1};
  EXPECT_EQ(v[1], Elem{1});
}

TEST(PaddedRegionTest, WindowKeepsPaddingStructure) {
  auto v = E({7, 8, 9});
  PaddedRegion p(2, CoeffRegion(v), 2);  // 0 0 7 8 9 0 0
  auto w = p.window(1, 3);               // 0 7 8
  EXPECT_EQ(w.lead(), 1u);
  EXPECT_EQ(w.stored().size(), 2u);
  EXPECT_EQ(w.trail(), 0u);
  auto z = p.window(5, 2);
  EXPECT_EQ(z.size(), 2u);
  EXPECT_EQ(z.at(0), Elem{0});
  EXPECT_THROW(p.window(6, 2), std::out_of_range);
}

TEST(SplitBlocksTest, ExactTiling) {
  auto v = E({1, 2, 3, 4});
  auto blocks = split_blocks(CoeffRegion(v), 2, false);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(V(blocks[0].stored()), (testing::Poly{1, 2}));
  EXPECT_EQ(V(blocks[1].stored()), (testing::Poly{3, 4}));
}

TEST(SplitBlocksTest, PaddedLastBlock) {
  auto v = E({1, 2, 3});
  auto blocks = split_blocks(CoeffRegion(v), 2, true);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[1].size(), 2u);
  EXPECT_TRUE(blocks[1].is_virtual(1));
  auto single = split_blocks(CoeffRegion(v), 5, true);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].trail(), 2u);
  EXPECT_THROW(split_blocks(CoeffRegion(v), 0, true), BadParameter);
}

TEST(ReverseInPlaceTest, Cases) {
  auto a = E({1, 2, 3});
  reverse_in_place(CoeffRegion(a));
  EXPECT_EQ(V(a), (testing::Poly{3, 2, 1}));
  std::vector<Elem> empty;
  reverse_in_place(CoeffRegion(empty));
  EXPECT_TRUE(empty.empty());
  auto pal = E({4, 4});
  reverse_in_place(CoeffRegion(pal));
  EXPECT_EQ(V(pal), (testing::Poly{4, 4}));
}

TEST(SnapshotTest, DetectsFirstDifference) {
  auto a = E({1, 2});
  Snapshot s{ConstRegion(a)};
  EXPECT_NO_THROW(s.assert_restored());
  a[1] = Elem{3};
  EXPECT_FALSE(s.restored());
  try {
    s.assert_restored();
    FAIL();
  } catch (const RestorationViolation& e) {
    EXPECT_EQ(e.region(), 0u);
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(SnapshotTest, TwoRegionsRestored) {
  auto a = E({1, 2}), b = E({3});
  Snapshot s{ConstRegion(a), ConstRegion(b)};
  b[0] = Elem{0};
  b[0] = Elem{3};
  EXPECT_TRUE(s.restored());
}

}  // namespace
}  // namespace ipoly
