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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "ipoly/errors.hpp"
#include "ipoly/ff.hpp"

namespace ipoly {

/// A window over field coefficients, walked either forward or backward.
///
/// Element k lives at origin[step * k] with step = +1 or -1, so a reversed
/// view costs nothing and reversed().reversed() is the original view. The
/// region does not own storage.
template <class T>
class BasicRegion {
 public:
  using value_type = std::remove_const_t<T>;

  constexpr BasicRegion() = default;
  constexpr BasicRegion(T* data, std::size_t n) : origin_(data), size_(n) {}
  BasicRegion(std::span<T> s) : origin_(s.data()), size_(s.size()) {}
  BasicRegion(std::vector<value_type>& v)
    requires(!std::is_const_v<T>)
      : origin_(v.data()), size_(v.size()) {}
  BasicRegion(const std::vector<value_type>& v)
    requires std::is_const_v<T>
      : origin_(v.data()), size_(v.size()) {}

  // CoeffRegion -> ConstRegion.
  template <class U>
    requires(std::is_const_v<T> && std::is_same_v<const U, T> &&
             !std::is_same_v<U, T>)
  constexpr BasicRegion(const BasicRegion<U>& o)
      : origin_(o.origin_), size_(o.size_), step_(o.step_) {}

  T& operator[](std::size_t k) const {
    return origin_[step_ * static_cast<std::ptrdiff_t>(k)];
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool is_reversed() const { return step_ < 0; }

  BasicRegion sub(std::size_t offset, std::size_t length) const {
    if (offset > size_ || length > size_ - offset) {
      throw std::out_of_range("region window exceeds its buffer");
    }
    BasicRegion r = *this;
    r.origin_ = origin_ + step_ * static_cast<std::ptrdiff_t>(offset);
    r.size_ = length;
    return r;
  }
  BasicRegion first(std::size_t n) const { return sub(0, n); }
  BasicRegion last(std::size_t n) const { return sub(size_ - n, n); }
  BasicRegion drop(std::size_t n) const { return sub(n, size_ - n); }

  BasicRegion reversed() const {
    BasicRegion r = *this;
    if (size_ != 0) {
      r.origin_ = origin_ + step_ * static_cast<std::ptrdiff_t>(size_ - 1);
    }
    r.step_ = -step_;
    return r;
  }

  /// Lowest and one-past-highest storage addresses touched by the view.
  std::pair<std::uintptr_t, std::uintptr_t> storage_span() const {
    if (size_ == 0) return {0, 0};
    auto a = reinterpret_cast<std::uintptr_t>(&(*this)[0]);
    auto b = reinterpret_cast<std::uintptr_t>(&(*this)[size_ - 1]);
    if (a > b) std::swap(a, b);
    return {a, b + sizeof(T)};
  }

  friend bool operator==(const BasicRegion& a, const BasicRegion& b) {
    return a.origin_ == b.origin_ && a.size_ == b.size_ &&
           (a.step_ == b.step_ || a.size_ <= 1);
  }

 private:
  template <class>
  friend class BasicRegion;

  T* origin_ = nullptr;
  std::size_t size_ = 0;
  std::ptrdiff_t step_ = 1;
};

using CoeffRegion = BasicRegion<Elem>;
using ConstRegion = BasicRegion<const Elem>;

template <class T, class U>
bool overlaps(const BasicRegion<T>& a, const BasicRegion<U>& b) {
  auto [a0, a1] = a.storage_span();
  auto [b0, b1] = b.storage_span();
  if (a0 == a1 || b0 == b1) return false;
  return a0 < b1 && b0 < a1;
}

template <class T, class U>
void require_disjoint(const BasicRegion<T>& a, const BasicRegion<U>& b,
                      const char* what) {
  if (overlaps(a, b)) throw BadParameter(std::string(what) + " overlap");
}

/// Two disjoint regions acting as one accumulation target [first; second].
class SplitTarget {
 public:
  SplitTarget(CoeffRegion first, CoeffRegion second)
      : first_(first), second_(second) {
    require_disjoint(first_, second_, "split target halves");
  }

  Elem& operator[](std::size_t k) const {
    return k < first_.size() ? first_[k] : second_[k - first_.size()];
  }
  std::size_t size() const { return first_.size() + second_.size(); }

  CoeffRegion first() const { return first_; }
  CoeffRegion second() const { return second_; }

 private:
  CoeffRegion first_;
  CoeffRegion second_;
};

/// A logical vector [0 x lead, stored, 0 x trail]. Virtual zeros are read
/// as zero and are never written.
template <class T>
class BasicPadded {
 public:
  using Region = BasicRegion<T>;

  BasicPadded() = default;
  BasicPadded(Region stored) : stored_(stored) {}  // NOLINT(google-explicit-constructor)
  BasicPadded(std::size_t lead, Region stored, std::size_t trail)
      : lead_(lead), stored_(stored), trail_(trail) {}

  template <class U>
    requires(std::is_const_v<T> && std::is_same_v<const U, T> &&
             !std::is_same_v<U, T>)
  BasicPadded(const BasicPadded<U>& o)
      : lead_(o.lead()), stored_(o.stored()), trail_(o.trail()) {}

  std::size_t size() const { return lead_ + stored_.size() + trail_; }
  std::size_t lead() const { return lead_; }
  std::size_t trail() const { return trail_; }
  Region stored() const { return stored_; }
  bool fully_stored() const { return lead_ == 0 && trail_ == 0; }
  bool is_virtual(std::size_t k) const {
    return k < lead_ || k >= lead_ + stored_.size();
  }

  Elem at(std::size_t k) const {
    return is_virtual(k) ? Elem{} : stored_[k - lead_];
  }

  /// Writable reference to a stored coefficient; virtual positions throw.
  T& ref(std::size_t k) const {
    if (is_virtual(k)) throw BadParameter("write to a virtual zero");
    return stored_[k - lead_];
  }

  BasicPadded window(std::size_t offset, std::size_t length) const {
    if (offset > size() || length > size() - offset) {
      throw std::out_of_range("padded window exceeds its vector");
    }
    const std::size_t s0 = lead_, s1 = lead_ + stored_.size();
    const std::size_t w0 = offset, w1 = offset + length;
    const std::size_t k0 = std::max(s0, w0), k1 = std::min(s1, w1);
    if (k0 >= k1) return BasicPadded(length, Region{}, 0);
    return BasicPadded(k0 - w0, stored_.sub(k0 - s0, k1 - k0), w1 - k1);
  }

 private:
  std::size_t lead_ = 0;
  Region stored_;
  std::size_t trail_ = 0;
};

using PaddedRegion = BasicPadded<Elem>;
using ConstPadded = BasicPadded<const Elem>;

/// The consecutive width-`block` windows of a buffer. With padding, the last
/// partial window is reported at full width with virtual zeros on top.
class BlockSequence {
 public:
  BlockSequence(CoeffRegion buf, std::size_t block, bool pad_virtual)
      : buf_(buf), block_(block), pad_(pad_virtual) {
    if (block == 0) throw BadParameter("block width must be positive");
  }

  std::size_t size() const { return (buf_.size() + block_ - 1) / block_; }
  std::size_t block() const { return block_; }

  PaddedRegion operator[](std::size_t i) const {
    const std::size_t off = i * block_;
    const std::size_t len = std::min(block_, buf_.size() - off);
    return PaddedRegion(0, buf_.sub(off, len), pad_ ? block_ - len : 0);
  }

 private:
  CoeffRegion buf_;
  std::size_t block_;
  bool pad_;
};

inline BlockSequence split_blocks(CoeffRegion buf, std::size_t block,
                                  bool pad_virtual) {
  return BlockSequence(buf, block, pad_virtual);
}

inline void reverse_in_place(CoeffRegion r) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n / 2; ++k) std::swap(r[k], r[n - 1 - k]);
}

/// Copies of one or more regions, used to check exact restoration.
class Snapshot {
 public:
  Snapshot() = default;
  Snapshot(std::initializer_list<ConstRegion> regions) {
    for (auto r : regions) add(r);
  }

  void add(ConstRegion r) {
    regions_.push_back(r);
    values_.emplace_back();
    values_.back().reserve(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) values_.back().push_back(r[k]);
  }

  bool restored() const {
    for (std::size_t i = 0; i < regions_.size(); ++i) {
      if (first_difference(i) != kNone) return false;
    }
    return true;
  }

  /// Throws RestorationViolation naming the first region and index that
  /// differ from the copy.
  void assert_restored() const {
    for (std::size_t i = 0; i < regions_.size(); ++i) {
      auto k = first_difference(i);
      if (k != kNone) throw RestorationViolation(i, k);
    }
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t first_difference(std::size_t i) const {
    const auto& r = regions_[i];
    const auto& v = values_[i];
    if (r.size() != v.size()) return 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!(r[k] == v[k])) return k;
    }
    return kNone;
  }

  std::vector<ConstRegion> regions_;
  std::vector<std::vector<Elem>> values_;
};

}  // namespace ipoly
