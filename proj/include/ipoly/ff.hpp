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

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "ipoly/errors.hpp"

namespace ipoly {

/// A canonical residue of a prime field. Only a PrimeField creates values
/// from raw integers, so value < p holds for every element in circulation.
struct Elem {
  std::uint64_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint64_t v) : value(v) {}

  friend constexpr bool operator==(Elem, Elem) = default;
  friend std::ostream& operator<<(std::ostream& os, Elem e) {
    return os << e.value;
  }
};

namespace detail {

using u128 = unsigned __int128;

constexpr std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b,
                                 std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

constexpr std::uint64_t powmod64(std::uint64_t a, std::uint64_t e,
                                 std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e != 0) {
    if ((e & 1U) != 0) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the witness set is exact for all 64-bit n.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Exact arithmetic in F_p for a word-sized prime p < 2^61.
///
/// All operations are pure, allocation-free and reentrant. The two
/// call-frame hooks are no-ops here; instrumented fields override them to
/// track recursion depth.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = 1ULL << 61;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= kMaxModulus || !is_prime(p)) {
      throw NotPrime("modulus " + std::to_string(p) +
                     " is not a prime below 2^61");
    }
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }

  /// Reduces an arbitrary integer into the field.
  Elem from(std::uint64_t v) const { return Elem{v % p_}; }
  Elem from_signed(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return Elem{static_cast<std::uint64_t>(r < 0 ? r + m : r)};
  }

  Elem add(Elem x, Elem y) const {
    std::uint64_t s = x.value + y.value;
    return Elem{s >= p_ ? s - p_ : s};
  }
  Elem sub(Elem x, Elem y) const {
    return Elem{x.value >= y.value ? x.value - y.value : x.value + p_ - y.value};
  }
  Elem neg(Elem x) const { return Elem{x.value == 0 ? 0 : p_ - x.value}; }
  Elem mul(Elem x, Elem y) const {
    return Elem{detail::mulmod64(x.value, y.value, p_)};
  }
  Elem inv(Elem x) const {
    if (x.value == 0) throw InversionOfZero();
    return Elem{detail::powmod64(x.value, p_ - 2, p_)};
  }
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

  bool is_zero(Elem x) const { return x.value == 0; }

  void on_call_enter() const {}
  void on_call_exit() const {}

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint64_t p_;
};

/// What every algorithm in this library needs from its coefficient field.
template <class F>
concept Field = requires(const F& f, Elem x) {
  { f.modulus() } -> std::convertible_to<std::uint64_t>;
  { f.zero() } -> std::same_as<Elem>;
  { f.one() } -> std::same_as<Elem>;
  { f.from(std::uint64_t{}) } -> std::same_as<Elem>;
  { f.add(x, x) } -> std::same_as<Elem>;
  { f.sub(x, x) } -> std::same_as<Elem>;
  { f.neg(x) } -> std::same_as<Elem>;
  { f.mul(x, x) } -> std::same_as<Elem>;
  { f.inv(x) } -> std::same_as<Elem>;
  { f.div(x, x) } -> std::same_as<Elem>;
  { f.is_zero(x) } -> std::same_as<bool>;
  f.on_call_enter();
  f.on_call_exit();
};

/// True iff the field has an element outside {0, 1}, i.e. p > 2.
template <Field F>
bool has_element_outside_01(const F& f) {
  return f.modulus() > 2;
}

/// RAII recursion-frame marker; every recursive algorithm opens one.
template <Field F>
class CallFrame {
 public:
  explicit CallFrame(const F& f) : f_(f) { f_.on_call_enter(); }
  ~CallFrame() { f_.on_call_exit(); }
  CallFrame(const CallFrame&) = delete;
  CallFrame& operator=(const CallFrame&) = delete;

 private:
  const F& f_;
};

}  // namespace ipoly
