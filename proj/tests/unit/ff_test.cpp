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

TEST(PrimeFieldTest, AddWrapsModP) {
  EXPECT_EQ(PrimeField(5).add(Elem{3}, Elem{4}), Elem{2});
}

TEST(PrimeFieldTest, InverseOfThreeModSeven) {
  EXPECT_EQ(PrimeField(7).inv(Elem{3}), Elem{5});
}

TEST(PrimeFieldTest, InverseOfZeroThrows) {
  EXPECT_THROW(PrimeField(5).inv(Elem{0}), InversionOfZero);
  EXPECT_THROW(PrimeField(5).div(Elem{1}, Elem{0}), InversionOfZero);
}

TEST(PrimeFieldTest, RejectsCompositeAndOversizedModuli) {
  for (std::uint64_t n : {0ULL, 1ULL, 4ULL, 9ULL, 65535ULL, 561ULL, 3215031751ULL}) {
    EXPECT_THROW(PrimeField{n}, NotPrime) << n;
  }
  EXPECT_THROW(PrimeField{(1ULL << 61) + 1}, NotPrime);
  EXPECT_NO_THROW(PrimeField{(1ULL << 61) - 1});
}

TEST(PrimeFieldTest, MillerRabinMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    EXPECT_EQ(is_prime(n), prime) << n;
  }
}

TEST(PrimeFieldTest, SubNegAndFromAreCanonical) {
  const PrimeField f(13);
  for (std::uint64_t x = 0; x < 13; ++x) {
    for (std::uint64_t y = 0; y < 13; ++y) {
      EXPECT_EQ(f.sub(Elem{x}, Elem{y}).value, (x + 13 - y) % 13);
      EXPECT_EQ(f.mul(Elem{x}, Elem{y}).value, x * y % 13);
    }
    EXPECT_EQ(f.add(Elem{x}, f.neg(Elem{x})), f.zero());
  }
  EXPECT_EQ(f.from(40), Elem{1});
  EXPECT_EQ(f.from_signed(-1), Elem{12});
}

TEST(PrimeFieldTest, InverseRoundTripsForEveryUnit) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL, 65521ULL}) {
    const PrimeField f(p);
    for (std::uint64_t x = 1; x < std::min<std::uint64_t>(p, 2000); ++x) {
      EXPECT_EQ(f.mul(Elem{x}, f.inv(Elem{x})), f.one()) << p << ' ' << x;
    }
  }
}

TEST(PrimeFieldTest, LargeModulusUsesWideProducts) {
  const std::uint64_t p = (1ULL << 61) - 1;
  const PrimeField f(p);
  const Elem x{p - 1};
  EXPECT_EQ(f.mul(x, x), f.one());
  EXPECT_EQ(f.mul(f.inv(Elem{123456789}), Elem{123456789}), f.one());
}

TEST(PrimeFieldTest, ElementOutsideZeroOneExistsOnlyAboveTwo) {
  EXPECT_FALSE(has_element_outside_01(PrimeField(2)));
  EXPECT_TRUE(has_element_outside_01(PrimeField(3)));
}

}  // namespace
}  // namespace ipoly
