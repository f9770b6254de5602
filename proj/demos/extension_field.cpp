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

// Arithmetic in GF(7^2) = F_7[x] / (x^2 + 1): repeated in-place modular
// multiplication walks the powers of x + 3 until it returns to 1.

#include <iostream>
#include <vector>

#include "ipoly/ipoly.hpp"

int main() {
  using namespace ipoly;
  const auto ctx = make_context(PrimeField(7));
  std::vector<Elem> modulus{Elem{1}, Elem{0}, Elem{1}};  // x^2 + 1
  std::vector<Elem> g{Elem{3}, Elem{1}};                // x + 3
  std::vector<Elem> power{Elem{1}, Elem{0}};

  auto show = [](const std::vector<Elem>& v) {
    return std::to_string(v[0].value) + " + " + std::to_string(v[1].value) + "x";
  };

  std::size_t order = 0;
  do {
    std::vector<Elem> next(2);
    fullaxpyin(ctx, CoeffRegion(next), CoeffRegion(power), CoeffRegion(g),
               CoeffRegion(modulus));
    power = next;
    ++order;
    if (order <= 4) std::cout << "(x + 3)^" << order << " = " << show(power) << '\n';
  } while (!(power[0].value == 1 && power[1].value == 0));

  std::cout << "order of x + 3 in GF(49)^*: " << order << '\n';
  return order == 48 ? 0 : 1;
}
