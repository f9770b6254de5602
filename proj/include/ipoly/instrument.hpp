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
#include <limits>
#include <string>
#include <utility>

#include "ipoly/errors.hpp"
#include "ipoly/ff.hpp"

namespace ipoly {

/// Field-operation tallies: add/sub/neg count as adds, inv/div as divs.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t divs = 0;

  std::uint64_t total() const { return adds + muls + divs; }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Peak auxiliary storage and recursion depth observed inside one scope.
///
/// Auxiliary storage is the sum of caller-provided scratch declared by the
/// algorithm and heap bytes obtained while the guard is active, in units of
/// field elements. Heap bytes are only seen when the allocation hook
/// (ipoly/alloc_hook.hpp) is linked into the program.
class AllocGuard {
 public:
  std::size_t peak_aux_elems() const {
    return scratch_elems_ + (heap_peak_bytes_ + sizeof(Elem) - 1) / sizeof(Elem);
  }
  std::size_t peak_depth() const { return peak_depth_; }
  std::size_t depth() const { return depth_; }
  std::size_t heap_allocations() const { return heap_allocations_; }

  void enter() {
    ++depth_;
    peak_depth_ = std::max(peak_depth_, depth_);
  }
  void exit() { --depth_; }

  void note_scratch(std::size_t elems) {
    scratch_elems_ = std::max(scratch_elems_, elems);
  }
  void on_heap_alloc(std::size_t bytes) {
    ++heap_allocations_;
    heap_live_bytes_ += bytes;
    heap_peak_bytes_ = std::max(heap_peak_bytes_, heap_live_bytes_);
  }
  void on_heap_free(std::size_t bytes) {
    heap_live_bytes_ -= std::min(bytes, heap_live_bytes_);
  }

 private:
  std::size_t depth_ = 0;
  std::size_t peak_depth_ = 0;
  std::size_t scratch_elems_ = 0;
  std::size_t heap_live_bytes_ = 0;
  std::size_t heap_peak_bytes_ = 0;
  std::size_t heap_allocations_ = 0;
};

namespace instrument_detail {

// The one piece of process state: the guard that the allocation hook reports
// to. It is thread-local and only set for the extent of a measure() call.
inline thread_local AllocGuard* active_guard = nullptr;
inline bool heap_hook_installed = false;

}  // namespace instrument_detail

inline bool heap_tracking_enabled() {
  return instrument_detail::heap_hook_installed;
}

/// A field that forwards to `Base` while tallying every operation and call
/// frame into externally owned records.
template <Field Base>
class CountingField {
 public:
  CountingField(const Base& base, OpCounter& ops, AllocGuard& guard)
      : base_(base), ops_(&ops), guard_(&guard) {}

  std::uint64_t modulus() const { return base_.modulus(); }
  Elem zero() const { return base_.zero(); }
  Elem one() const { return base_.one(); }
  Elem from(std::uint64_t v) const { return base_.from(v); }

  Elem add(Elem x, Elem y) const {
    ++ops_->adds;
    return base_.add(x, y);
  }
  Elem sub(Elem x, Elem y) const {
    ++ops_->adds;
    return base_.sub(x, y);
  }
  Elem neg(Elem x) const {
    ++ops_->adds;
    return base_.neg(x);
  }
  Elem mul(Elem x, Elem y) const {
    ++ops_->muls;
    return base_.mul(x, y);
  }
  Elem inv(Elem x) const {
    ++ops_->divs;
    return base_.inv(x);
  }
  Elem div(Elem x, Elem y) const {
    ++ops_->divs;
    return base_.div(x, y);
  }
  bool is_zero(Elem x) const { return base_.is_zero(x); }

  void on_call_enter() const { guard_->enter(); }
  void on_call_exit() const { guard_->exit(); }
  void note_scratch(std::size_t elems) const { guard_->note_scratch(elems); }

  const Base& base() const { return base_; }

 private:
  Base base_;
  OpCounter* ops_;
  AllocGuard* guard_;
};

/// Declares caller-provided scratch to an instrumented field; no-op otherwise.
template <Field F>
void note_scratch(const F& f, std::size_t elems) {
  if constexpr (requires { f.note_scratch(elems); }) f.note_scratch(elems);
}

/// Ceilings checked after a measured call; exceeding one is a GuardViolation.
struct Ceilings {
  std::size_t max_aux_elems = std::numeric_limits<std::size_t>::max();
  std::size_t max_depth = std::numeric_limits<std::size_t>::max();
};

struct Measurement {
  OpCounter ops;
  std::size_t peak_aux_elems = 0;
  std::size_t peak_depth = 0;
  std::size_t heap_allocations = 0;
};

/// Runs `op(counting_field)` with counters and the allocation guard active.
///
/// `op` receives a CountingField<Base> and must route all of its arithmetic
/// through it. Inputs should be prepared before the call so that their
/// allocations are not attributed to the operation.
template <Field Base, class Op>
Measurement measure(const Base& base, Op&& op, const Ceilings& ceilings = {}) {
  OpCounter ops;
  AllocGuard guard;
  CountingField<Base> field(base, ops, guard);
  AllocGuard* previous = std::exchange(instrument_detail::active_guard, &guard);
  try {
    std::forward<Op>(op)(field);
  } catch (...) {
    instrument_detail::active_guard = previous;
    throw;
  }
  instrument_detail::active_guard = previous;

  Measurement m{ops, guard.peak_aux_elems(), guard.peak_depth(),
                guard.heap_allocations()};
  if (m.peak_aux_elems > ceilings.max_aux_elems) {
    throw GuardViolation("auxiliary space " + std::to_string(m.peak_aux_elems) +
                         " exceeds ceiling " +
                         std::to_string(ceilings.max_aux_elems));
  }
  if (m.peak_depth > ceilings.max_depth) {
    throw GuardViolation("recursion depth " + std::to_string(m.peak_depth) +
                         " exceeds ceiling " +
                         std::to_string(ceilings.max_depth));
  }
  return m;
}

}  // namespace ipoly
