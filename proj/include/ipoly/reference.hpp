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

// Naive allocating oracles over raw integers. Nothing here uses the field,
// region or algorithm code of the library, so they serve as independent
// ground truth.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ipoly/errors.hpp"

namespace ipoly::ref {

using Poly = std::vector<std::uint64_t>;

namespace detail {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((unsigned __int128)a * b % p);
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a + b) % p;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a + p - b) % p;
}

// Extended Euclid on signed 128-bit integers.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  __int128 r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  if (r1 == 0) throw InversionOfZero();
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  __int128 m = s0 % static_cast<__int128>(p);
  if (m < 0) m += p;
  return static_cast<std::uint64_t>(m);
}

}  // namespace detail

inline std::uint64_t ref_inv(std::uint64_t a, std::uint64_t p) {
  return detail::inv(a, p);
}

/// Full product into a fresh buffer of length |a|+|b|-1 (empty if either is).
inline Poly ref_mul(std::uint64_t p, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = detail::add(c[i + j], detail::mul(a[i], b[j], p), p);
    }
  }
  return c;
}

struct DivMod {
  Poly quotient;   // length max(0, N-M+1)
  Poly remainder;  // length M = deg b
};

/// Long division; deg b = |b|-1 and its leading coefficient must be nonzero.
inline DivMod ref_divmod(std::uint64_t p, const Poly& a, const Poly& b) {
  if (b.empty() || b.back() % p == 0) {
    throw NonInvertibleLeading("oracle divisor has a zero leading coefficient");
  }
  const std::size_t m = b.size() - 1;
  Poly r = a;
  Poly q;
  if (r.size() > m) {
    q.assign(r.size() - m, 0);
    const std::uint64_t li = detail::inv(b.back(), p);
    for (std::size_t k = r.size(); k-- > m;) {
      const std::uint64_t c = detail::mul(r[k], li, p);
      q[k - m] = c;
      for (std::size_t j = 0; j <= m; ++j) {
        r[k - m + j] = detail::sub(r[k - m + j], detail::mul(c, b[j], p), p);
      }
    }
  }
  r.resize(m, 0);
  return {q, r};
}

/// a * b mod (X^n - f) for length-n inputs.
inline Poly ref_convolution(std::uint64_t p, const Poly& a, const Poly& b,
                            std::uint64_t f, std::size_t n) {
  Poly full = ref_mul(p, a, b);
  Poly c(n, 0);
  // X^k = f^{k div n} X^{k mod n}
  for (std::size_t k = 0; k < full.size(); ++k) {
    std::uint64_t w = 1;
    for (std::size_t e = 0; e < k / n; ++e) w = detail::mul(w, f, p);
    c[k % n] = detail::add(c[k % n], detail::mul(w, full[k], p), p);
  }
  return c;
}

/// a * c mod b by a Horner scheme over c (never forms the full product).
inline Poly ref_mulmod(std::uint64_t p, const Poly& a, const Poly& c,
                       const Poly& b) {
  if (b.empty() || b.back() % p == 0) {
    throw NonInvertibleLeading("oracle modulus has a zero leading coefficient");
  }
  const std::size_t m = b.size() - 1;
  const Poly am = ref_divmod(p, a, b).remainder;
  Poly r(m, 0);
  if (m == 0) return r;
  const std::uint64_t li = detail::inv(b.back(), p);
  for (std::size_t k = c.size(); k-- > 0;) {
    // r <- r * X mod b
    const std::uint64_t top = detail::mul(r[m - 1], li, p);
    for (std::size_t j = m - 1; j > 0; --j) {
      r[j] = detail::sub(r[j - 1], detail::mul(top, b[j], p), p);
    }
    r[0] = detail::sub(0, detail::mul(top, b[0], p), p);
    for (std::size_t j = 0; j < m; ++j) {
      r[j] = detail::add(r[j], detail::mul(am[j], c[k], p), p);
    }
  }
  return r;
}

struct DenseMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> e;  // row-major

  std::uint64_t at(std::size_t i, std::size_t j) const {
    return e[i * cols + j];
  }
};

/// rows x cols Toeplitz matrix with entry (i, j) = v[rows-1+j-i].
inline DenseMat ref_dense_toeplitz(std::size_t rows, std::size_t cols,
                                   const Poly& v) {
  if (v.size() + 1 != rows + cols) {
    throw LengthMismatch("oracle Toeplitz vector length");
  }
  DenseMat m{rows, cols, std::vector<std::uint64_t>(rows * cols)};
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.e[i * cols + j] = v[rows - 1 + j - i];
  }
  return m;
}

/// f-circulant: row 0 is a, each next row is the previous one shifted right
/// by one, and entries that wrapped around (below the diagonal) are times f.
inline DenseMat ref_dense_circulant(std::uint64_t p, const Poly& a,
                                    std::uint64_t f) {
  const std::size_t n = a.size();
  DenseMat m{n, n, std::vector<std::uint64_t>(n * n)};
  for (std::size_t j = 0; j < n; ++j) m.e[j] = a[j] % p;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t prev = m.e[(i - 1) * n + (j + n - 1) % n];
      m.e[i * n + j] = j == 0 ? detail::mul(prev, f, p) : prev;
    }
  }
  return m;
}

inline Poly ref_matvec(std::uint64_t p, const DenseMat& m, const Poly& v) {
  if (v.size() != m.cols) throw LengthMismatch("oracle matvec length");
  Poly out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      out[i] = detail::add(out[i], detail::mul(m.at(i, j), v[j], p), p);
    }
  }
  return out;
}

/// Solves m x = v by Gauss-Jordan elimination with pivoting.
inline Poly ref_dense_solve(std::uint64_t p, DenseMat m, Poly v) {
  const std::size_t n = m.rows;
  if (m.cols != n || v.size() != n) throw LengthMismatch("oracle solve shape");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m.at(piv, col) % p == 0) ++piv;
    if (piv == n) throw SingularDiagonal();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.e[piv * n + j], m.e[col * n + j]);
      }
      std::swap(v[piv], v[col]);
    }
    const std::uint64_t pi = detail::inv(m.at(col, col), p);
    for (std::size_t j = 0; j < n; ++j) m.e[col * n + j] = detail::mul(m.e[col * n + j], pi, p);
    v[col] = detail::mul(v[col], pi, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const std::uint64_t factor = m.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m.e[i * n + j] = detail::sub(m.e[i * n + j], detail::mul(factor, m.at(col, j), p), p);
      }
      v[i] = detail::sub(v[i], detail::mul(factor, v[col], p), p);
    }
  }
  return v;
}

/// Elementwise (a + b) mod p, result as long as the longer input.
inline Poly ref_add(std::uint64_t p, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] = detail::add(a[k], b[k], p);
  return a;
}

}  // namespace ipoly::ref
