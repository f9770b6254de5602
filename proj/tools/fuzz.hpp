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

// Randomized comparison of every in-place operation against the naive
// oracles, with exact restoration checks on every input that is lent to
// the algorithm.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ipoly/ipoly.hpp"

namespace ipoly::cli {

struct FuzzFamily {
  std::string name;
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t restoration_failures = 0;
  std::string first_failure;
};

struct FuzzReport {
  std::vector<FuzzFamily> families;

  std::size_t instances() const { return sum(&FuzzFamily::instances); }
  std::size_t mismatches() const { return sum(&FuzzFamily::mismatches); }
  std::size_t restoration_failures() const {
    return sum(&FuzzFamily::restoration_failures);
  }
  const FuzzFamily* family(const std::string& name) const {
    for (const auto& f : families) {
      if (f.name == name) return &f;
    }
    return nullptr;
  }

 private:
  std::size_t sum(std::size_t FuzzFamily::*m) const {
    std::size_t s = 0;
    for (const auto& f : families) s += f.*m;
    return s;
  }
};

struct FuzzConfig {
  std::uint64_t seed = 1;
  double scale = 1.0;  // multiplies every per-family instance count
  std::size_t max_conv_n = 256;
  std::size_t max_dim = 128;
  std::size_t max_dividend_degree = 1024;
  std::size_t max_divisor_degree = 128;
};

inline constexpr std::array<std::uint64_t, 6> kFuzzFields{2, 3, 5, 7, 13, 65521};

namespace fuzz_detail {

using Poly = ref::Poly;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
  }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(below(hi - lo + 1));
  }
  bool coin() { return below(2) == 1; }

  // Sizes skew small so that base cases and boundaries get most of the hits.
  std::size_t size(std::size_t lo, std::size_t hi) {
    if (coin()) return between(lo, std::min(hi, lo + 40));
    return between(lo, hi);
  }

  std::uint64_t prime() { return kFuzzFields[below(kFuzzFields.size())]; }
  std::size_t threshold() {
    static constexpr std::array<std::size_t, 4> t{1, 2, 4, 16};
    return t[below(t.size())];
  }
  std::uint64_t nonzero(std::uint64_t p) { return 1 + below(p - 1); }

  Poly poly(std::uint64_t p, std::size_t len, bool nonzero_top = false) {
    Poly v(len);
    for (auto& x : v) x = below(p);
    if (nonzero_top && len > 0) v.back() = nonzero(p);
    return v;
  }

  // f = 0, f = 1, f outside {0, 1} when possible, or anything.
  std::uint64_t f_value(std::uint64_t p) {
    switch (below(4)) {
      case 0: return 0;
      case 1: return 1 % p;
      case 2: return p > 2 ? 2 + below(p - 2) : 1;
      default: return below(p);
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<Elem> elems(const Poly& v) {
  std::vector<Elem> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = Elem{v[k]};
  return out;
}

inline Poly values(const std::vector<Elem>& v) {
  Poly out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].value;
  return out;
}

inline Poly signed_add(std::uint64_t p, Poly base, const Poly& delta, Sign s) {
  base.resize(std::max(base.size(), delta.size()), 0);
  for (std::size_t k = 0; k < delta.size(); ++k) {
    base[k] = s == Sign::plus ? (base[k] + delta[k]) % p
                              : (base[k] + p - delta[k]) % p;
  }
  return base;
}

class Recorder {
 public:
  explicit Recorder(FuzzFamily& fam) : fam_(fam) {}

  void check(bool result_ok, bool restored_ok, const std::string& what) {
    ++fam_.instances;
    if (!result_ok) ++fam_.mismatches;
    if (!restored_ok) ++fam_.restoration_failures;
    if ((!result_ok || !restored_ok) && fam_.first_failure.empty()) {
      fam_.first_failure = what + (result_ok ? "" : " [result]") +
                           (restored_ok ? "" : " [restoration]");
    }
  }
  void error(const std::string& what) {
    ++fam_.instances;
    ++fam_.mismatches;
    if (fam_.first_failure.empty()) fam_.first_failure = what;
  }

 private:
  FuzzFamily& fam_;
};

inline std::string tag(std::uint64_t p, std::size_t a, std::size_t b,
                       std::size_t c = 0) {
  return "p=" + std::to_string(p) + " dims=" + std::to_string(a) + "," +
         std::to_string(b) + "," + std::to_string(c);
}

template <class Body>
void run_family(FuzzReport& rep, const std::string& name, std::size_t count,
                Body&& body) {
  rep.families.push_back(FuzzFamily{name, 0, 0, 0, {}});
  Recorder rec(rep.families.back());
  for (std::size_t i = 0; i < count; ++i) {
    try {
      body(rec);
    } catch (const std::exception& e) {
      rec.error(name + ": unexpected exception: " + e.what());
    }
  }
}

inline std::size_t scaled(double scale, std::size_t n) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(n * scale));
}

}  // namespace fuzz_detail

inline FuzzReport run_fuzz(const FuzzConfig& cfg) {
  using namespace fuzz_detail;
  Gen g(cfg.seed);
  FuzzReport rep;
  const double sc = cfg.scale;

  run_family(rep, "conv", scaled(sc, 3000), [&](Recorder& rec) {
    const auto p = g.prime();
    const auto n = g.size(1, cfg.max_conv_n);
    const auto f = g.f_value(p);
    const Sign s = g.coin() ? Sign::plus : Sign::minus;
    const Poly a = g.poly(p, n), b = g.poly(p, n), c = g.poly(p, n);
    auto ea = elems(a), eb = elems(b), ec = elems(c);
    Snapshot snap{ConstRegion(ea), ConstRegion(eb)};
    conv_acc(make_context(PrimeField(p), g.threshold()), CoeffRegion(ec),
             CoeffRegion(ea), CoeffRegion(eb), Elem{f}, s);
    rec.check(values(ec) == signed_add(p, c, ref::ref_convolution(p, a, b, f, n), s),
              snap.restored(), "conv " + tag(p, n, f));
  });

  run_family(rep, "circulant", scaled(sc, 800), [&](Recorder& rec) {
    const auto p = g.prime();
    const auto m = g.size(1, cfg.max_dim);
    const auto f = g.f_value(p);
    const Poly a = g.poly(p, m), b = g.poly(p, m), c = g.poly(p, m);
    auto ea = elems(a), eb = elems(b), ec = elems(c);
    Snapshot snap{ConstRegion(ea), ConstRegion(eb)};
    circulant_acc(make_context(PrimeField(p), g.threshold()), CoeffRegion(ec),
                  CirculantView{CoeffRegion(ea), Elem{f}}, CoeffRegion(eb));
    const Poly want = ref::ref_add(
        p, c, ref::ref_matvec(p, ref::ref_dense_circulant(p, a, f), b));
    rec.check(values(ec) == want, snap.restored(), "circulant " + tag(p, m, f));
  });

  run_family(rep, "square_toeplitz", scaled(sc, 800), [&](Recorder& rec) {
    const auto p = g.prime();
    const auto m = g.size(1, cfg.max_dim);
    const Poly v = g.poly(p, 2 * m - 1), b = g.poly(p, m), c = g.poly(p, m);
    const Poly a1(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m - 1));
    const Poly a2(v.begin() + static_cast<std::ptrdiff_t>(m - 1), v.end());
    auto e1 = elems(a1), e2 = elems(a2), eb = elems(b), ec = elems(c);
    Snapshot snap{ConstRegion(e1), ConstRegion(e2), ConstRegion(eb)};
    square_toeplitz_acc(make_context(PrimeField(p), g.threshold()),
                        CoeffRegion(ec), CoeffRegion(e1), CoeffRegion(e2),
                        CoeffRegion(eb));
    const Poly want =
        ref::ref_add(p, c, ref::ref_matvec(p, ref::ref_dense_toeplitz(m, m, v), b));
    rec.check(values(ec) == want, snap.restored(), "square " + tag(p, m, m));
  });

  run_family(rep, "rect_toeplitz", scaled(sc, 800), [&](Recorder& rec) {
    const auto p = g.prime();
    const auto m = g.size(1, cfg.max_dim), n = g.size(1, cfg.max_dim);
    const std::size_t len = m + n - 1;
    const std::size_t lead = g.coin() ? g.below(len) : 0;
    const std::size_t trail = g.coin() ? g.below(len - lead) : 0;
    const Poly stored = g.poly(p, len - lead - trail);
    Poly full(lead, 0);
    full.insert(full.end(), stored.begin(), stored.end());
    full.resize(len, 0);
    const Poly b = g.poly(p, n), c = g.poly(p, m);
    auto ev = elems(stored), eb = elems(b), ec = elems(c);
    Snapshot snap{ConstRegion(ev), ConstRegion(eb)};
    const Sign s = g.coin() ? Sign::plus : Sign::minus;
    rect_toeplitz_acc(make_context(PrimeField(p), g.threshold()), CoeffRegion(ec),
                      ToeplitzView(m, n, PaddedRegion(lead, CoeffRegion(ev), trail)),
                      CoeffRegion(eb), s);
    const Poly want =
        signed_add(p, c, ref::ref_matvec(p, ref::ref_dense_toeplitz(m, n, full), b), s);
    rec.check(values(ec) == want, snap.restored(), "rect " + tag(p, m, n, lead));
  });

  run_family(rep, "tri_toeplitz", scaled(sc, 1200), [&](Recorder& rec) {
    const auto p = g.prime();
    const auto m = g.size(1, cfg.max_dim);
    const Orientation o = g.coin() ? Orientation::upper : Orientation::lower;
    const std::size_t pad = g.coin() ? g.below(m) : 0;
    Poly stored = g.poly(p, m - pad);
    // Make the diagonal entry invertible so the solve is defined.
    if (o == Orientation::upper) {
      stored.front() = g.nonzero(p);
    } else {
      stored.back() = g.nonzero(p);
    }
    Poly full(2 * m - 1, 0);
    for (std::size_t k = 0; k < stored.size(); ++k) {
      if (o == Orientation::upper) {
        full[m - 1 + k] = stored[k];
      } else {
        full[pad + k] = stored[k];
      }
    }
    const auto dense = ref::ref_dense_toeplitz(m, m, full);
    const Poly b = g.poly(p, m);
    auto ea = elems(stored), eb = elems(b);
    const PaddedRegion pa = o == Orientation::upper
                                ? PaddedRegion(0, CoeffRegion(ea), pad)
                                : PaddedRegion(pad, CoeffRegion(ea), 0);
    Snapshot snap{ConstRegion(ea)};
    const auto ctx = make_context(PrimeField(p), g.threshold());
    tri_toeplitz_mul_overplace(ctx, pa, CoeffRegion(eb), o);
    const bool mul_ok = values(eb) == ref::ref_matvec(p, dense, b);
    tri_toeplitz_solve_overplace(ctx, pa, CoeffRegion(eb), o);
    const bool round_trip = values(eb) == b;
    // Solve on its own, checked by multiplying back with the dense matrix.
    tri_toeplitz_solve_overplace(ctx, pa, CoeffRegion(eb), o);
    const bool solve_ok = ref::ref_matvec(p, dense, values(eb)) == b;
    rec.check(mul_ok && round_trip && solve_ok, snap.restored(),
              "tri " + tag(p, m, pad, o == Orientation::upper));
  });

  run_family(rep, "remainder", scaled(sc, 1500), [&](Recorder& rec) {
    const auto p = g.prime();
    const auto mdeg = g.size(0, cfg.max_divisor_degree);
    const auto ndeg = g.size(0, cfg.max_dividend_degree);
    const Poly a = g.poly(p, ndeg + 1), b = g.poly(p, mdeg + 1, true);
    const Poly want = ref::ref_divmod(p, a, b).remainder;
    auto ea = elems(a), eb = elems(b);
    std::vector<Elem> r1(mdeg), r2(mdeg), r3(mdeg), scratch(mdeg);
    Snapshot snap{ConstRegion(ea), ConstRegion(eb)};
    const PrimeField F(p);
    iper(make_context(F, g.threshold()), CoeffRegion(r1), ConstRegion(ea),
         CoeffRegion(eb));
    remainder_blockwise(F, CoeffRegion(r2), ConstRegion(ea), ConstRegion(eb),
                        CoeffRegion(scratch));
    quad_rem(F, CoeffRegion(r3), ConstRegion(ea), ConstRegion(eb));
    rec.check(values(r1) == want && values(r2) == want && values(r3) == want,
              snap.restored(), "remainder " + tag(p, ndeg, mdeg));
  });

  run_family(rep, "oper", scaled(sc, 1000), [&](Recorder& rec) {
    const auto p = g.prime();
    const auto mdeg = g.size(0, cfg.max_divisor_degree);
    const auto ndeg = g.size(0, cfg.max_dividend_degree);
    const Poly a = g.poly(p, ndeg + 1), b = g.poly(p, mdeg + 1, true);
    auto d = ref::ref_divmod(p, a, b);
    Poly layout = a;
    if (ndeg >= mdeg) {
      layout = d.remainder;
      layout.insert(layout.end(), d.quotient.begin(), d.quotient.end());
    }
    auto ea = elems(a), eb = elems(b);
    Snapshot snap_b{ConstRegion(eb)};
    const auto ctx = make_context(PrimeField(p), g.threshold());
    oper(ctx, CoeffRegion(ea), CoeffRegion(eb));
    const bool layout_ok = values(ea) == layout;
    oper_inv(ctx, CoeffRegion(ea), CoeffRegion(eb));
    rec.check(layout_ok, snap_b.restored() && values(ea) == a,
              "oper " + tag(p, ndeg, mdeg));
  });

  run_family(rep, "aper", scaled(sc, 800), [&](Recorder& rec) {
    const auto p = g.prime();
    const auto mdeg = g.size(0, cfg.max_divisor_degree);
    const auto ndeg = g.size(0, cfg.max_dividend_degree);
    const Poly a = g.poly(p, ndeg + 1), b = g.poly(p, mdeg + 1, true);
    const Poly r = g.poly(p, mdeg);
    auto ea = elems(a), eb = elems(b), er = elems(r);
    Snapshot snap{ConstRegion(ea), ConstRegion(eb)};
    aper(make_context(PrimeField(p), g.threshold()), CoeffRegion(er),
         CoeffRegion(ea), CoeffRegion(eb));
    rec.check(values(er) == ref::ref_add(p, r, ref::ref_divmod(p, a, b).remainder),
              snap.restored(), "aper " + tag(p, ndeg, mdeg));
  });

  run_family(rep, "axpyin", scaled(sc, 800), [&](Recorder& rec) {
    const auto p = g.prime();
    const auto mdeg = g.size(1, cfg.max_divisor_degree);
    const auto ndeg = g.size(0, cfg.max_dividend_degree / 2);
    const auto ldeg = g.between(0, std::min(ndeg, mdeg));
    const Poly a = g.poly(p, ldeg + 1, true), c = g.poly(p, ndeg + 1);
    const Poly b = g.poly(p, mdeg + 1, true), r = g.poly(p, mdeg);
    auto ea = elems(a), ec = elems(c), eb = elems(b), er = elems(r);
    Snapshot snap{ConstRegion(ea), ConstRegion(ec), ConstRegion(eb)};
    const Poly product = ref::ref_mul(p, a, c);
    const Poly quotient = ref::ref_divmod(p, product, b).quotient;
    bool quotient_ok = ldeg + ndeg < mdeg;
    axpyin(make_context(PrimeField(p), g.threshold()), CoeffRegion(er),
           CoeffRegion(ea), CoeffRegion(ec), CoeffRegion(eb),
           [&](ConstRegion q) {
             Poly got(q.size());
             for (std::size_t k = 0; k < q.size(); ++k) got[k] = q[k].value;
             quotient_ok = got == quotient;
           });
    rec.check(quotient_ok &&
                  values(er) == ref::ref_add(p, r, ref::ref_mulmod(p, a, c, b)),
              snap.restored(), "axpyin " + tag(p, ldeg, ndeg, mdeg));
  });

  run_family(rep, "fullaxpyin", scaled(sc, 1200), [&](Recorder& rec) {
    const auto p = g.prime();
    const std::size_t big = cfg.max_dividend_degree, mmax = cfg.max_divisor_degree;
    std::size_t l = 0, n = 0, m = 1;
    switch (g.below(4)) {
      case 0:  // L < M < N
        m = g.size(2, mmax);
        l = g.between(0, m - 1);
        n = g.size(m + 1, big);
        break;
      case 1:  // M < L < N
        m = g.size(1, mmax);
        l = g.size(m + 1, big / 2);
        n = g.size(l + 1, big);
        break;
      case 2:  // L = N = M
        m = l = n = g.size(1, mmax);
        break;
      default:  // L + N < M
        m = g.size(2, mmax);
        l = g.between(0, m - 2);
        n = g.between(0, m - 2 - l);
        break;
    }
    if (g.coin()) std::swap(l, n);
    const Poly a = g.poly(p, l + 1, true), c = g.poly(p, n + 1, true);
    const Poly b = g.poly(p, m + 1, true), r = g.poly(p, m);
    auto ea = elems(a), ec = elems(c), eb = elems(b), er = elems(r), er2 = elems(r);
    Snapshot snap{ConstRegion(ea), ConstRegion(ec), ConstRegion(eb)};
    const auto ctx = make_context(PrimeField(p), g.threshold());
    fullaxpyin(ctx, CoeffRegion(er), CoeffRegion(ea), CoeffRegion(ec), CoeffRegion(eb));
    fullaxpyin(ctx, CoeffRegion(er2), CoeffRegion(ec), CoeffRegion(ea), CoeffRegion(eb));
    const Poly want = ref::ref_add(p, r, ref::ref_mulmod(p, a, c, b));
    rec.check(values(er) == want && values(er2) == want, snap.restored(),
              "fullaxpyin " + tag(p, l, n, m));
  });

  return rep;
}

}  // namespace ipoly::cli
