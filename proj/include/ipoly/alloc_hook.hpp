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

// Replaces the global allocation functions so that AllocGuard sees heap
// traffic. Include from exactly one translation unit of a program (test
// binaries, the CLI); the library headers never include it.

#pragma once

#include <cstddef>
#include <cstdlib>
#include <new>

#include "ipoly/instrument.hpp"

namespace ipoly::instrument_detail {

// Every block carries its size in a max-aligned header so frees can be
// attributed without relying on sized delete.
inline constexpr std::size_t kHeader = alignof(std::max_align_t);

inline void* hooked_alloc(std::size_t n) {
  void* raw = std::malloc(n + kHeader);
  if (raw == nullptr) return nullptr;
  *static_cast<std::size_t*>(raw) = n;
  if (active_guard != nullptr) active_guard->on_heap_alloc(n);
  return static_cast<char*>(raw) + kHeader;
}

inline void hooked_free(void* p) {
  if (p == nullptr) return;
  void* raw = static_cast<char*>(p) - kHeader;
  if (active_guard != nullptr) {
    active_guard->on_heap_free(*static_cast<std::size_t*>(raw));
  }
  std::free(raw);
}

inline const bool hook_registered = (heap_hook_installed = true);

}  // namespace ipoly::instrument_detail

void* operator new(std::size_t n) {
  void* p = ipoly::instrument_detail::hooked_alloc(n);
  if (p == nullptr) throw std::bad_alloc();
  return p;
}
void* operator new[](std::size_t n) { return ::operator new(n); }
void* operator new(std::size_t n, const std::nothrow_t&) noexcept {
  return ipoly::instrument_detail::hooked_alloc(n);
}
void* operator new[](std::size_t n, const std::nothrow_t&) noexcept {
  return ipoly::instrument_detail::hooked_alloc(n);
}
void operator delete(void* p) noexcept {
  ipoly::instrument_detail::hooked_free(p);
}
void operator delete[](void* p) noexcept {
  ipoly::instrument_detail::hooked_free(p);
}
void operator delete(void* p, std::size_t) noexcept {
  ipoly::instrument_detail::hooked_free(p);
}
void operator delete[](void* p, std::size_t) noexcept {
  ipoly::instrument_detail::hooked_free(p);
}
