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

#include <cstdint>
#include <random>
#include <vector>

#include "ipoly/ipoly.hpp"

namespace ipoly::testing {

using Poly = ref::Poly;

inline std::vector<Elem> E(const Poly& v) {
  std::vector<Elem> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = Elem{v[k]};
  return out;
}

inline Poly V(const std::vector<Elem>& v) {
  Poly out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].value;
  return out;
}

inline Poly V(ConstRegion r) {
  Poly out(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) out[k] = r[k].value;
  return out;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(g_);
  }
  Poly poly(std::uint64_t p, std::size_t len, bool nonzero_top = false) {
    Poly v(len);
    for (auto& x : v) x = below(p);
    if (nonzero_top && len > 0) v.back() = 1 + below(p - 1);
    return v;
  }

 private:
  std::mt19937_64 g_;
};

inline constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 13, 65521};
inline constexpr std::size_t kThresholds[] = {1, 2, 16};

}  // namespace ipoly::testing
