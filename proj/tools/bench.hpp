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

// Operation-count benchmark rows, their CSV form, and the two scaling
// analyses computed from them (convolution recurrence, remainder growth).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ipoly/ipoly.hpp"
#include "polyio.hpp"

namespace ipoly::cli {

inline constexpr const char* kBenchHeader = "op,p,n,m,l,adds,muls,divs,peak_aux,depth";

/// One measured (op, size) point. For conv rows n is the length; for mul
/// rows n is the operand length; for division-type rows n = deg A and
/// m = deg B; l = deg of the first factor where one exists.
struct BenchRow {
  std::string op;
  std::uint64_t p = 0;
  std::size_t n = 0, m = 0, l = 0;
  std::uint64_t adds = 0, muls = 0, divs = 0;
  std::size_t peak_aux = 0, depth = 0;

  std::uint64_t ops() const { return adds + muls + divs; }
};

struct BenchConfig {
  std::uint64_t p = 65521;
  std::uint64_t seed = 1;
  std::size_t threshold = 16;
  std::vector<std::size_t> conv_sizes{64, 128, 256, 512, 1024, 2048};
  std::vector<std::size_t> iper_dividend{128, 256, 512, 1024, 2048};
  std::vector<std::size_t> iper_divisor{16, 64, 128, 256, 512};
  bool extras = true;  // oper / aper / fullaxpyin rows
};

namespace bench_detail {

class Inputs {
 public:
  Inputs(std::uint64_t p, std::uint64_t seed) : p_(p), rng_(seed) {}

  std::vector<Elem> poly(std::size_t len, bool nonzero_top = false) {
    std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
    std::vector<Elem> v(len);
    for (auto& x : v) x = Elem{d(rng_)};
    if (nonzero_top && len > 0) {
      v.back() = Elem{std::uniform_int_distribution<std::uint64_t>(1, p_ - 1)(rng_)};
    }
    return v;
  }
  Elem outside_01() {
    return Elem{p_ > 2 ? std::uniform_int_distribution<std::uint64_t>(2, p_ - 1)(rng_)
                       : 1};
  }

 private:
  std::uint64_t p_;
  std::mt19937_64 rng_;
};

inline BenchRow row(std::string op, std::uint64_t p, std::size_t n, std::size_t m,
                    std::size_t l, const Measurement& x) {
  return BenchRow{std::move(op), p, n, m, l, x.ops.adds, x.ops.muls, x.ops.divs,
                  x.peak_aux_elems, x.peak_depth};
}

}  // namespace bench_detail

inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  using bench_detail::row;
  const PrimeField F(cfg.p);
  bench_detail::Inputs in(cfg.p, cfg.seed);
  const Elem fx = in.outside_01();
  std::vector<BenchRow> rows;
  auto ctx_of = [&](const auto& cf) { return make_context(cf, cfg.threshold); };

  for (std::size_t n : cfg.conv_sizes) {
    const std::size_t h = (n + 1) / 2;
    {
      auto a = in.poly(h), b = in.poly(h), c = in.poly(2 * h - 1);
      rows.push_back(row("mul", cfg.p, h, 0, 0, measure(F, [&](const auto& cf) {
        acc_mul_full(ctx_of(cf), CoeffRegion(c), ConstRegion(a), ConstRegion(b));
      })));
    }
    const std::pair<const char*, Elem> classes[] = {
        {"conv_f1", F.one()}, {"conv_fx", fx}, {"conv_f0", F.zero()}};
    for (const auto& [name, f] : classes) {
      if (cfg.p == 2 && std::string(name) == "conv_fx") continue;
      auto a = in.poly(n), b = in.poly(n), c = in.poly(n);
      rows.push_back(row(name, cfg.p, n, 0, 0, measure(F, [&](const auto& cf) {
        conv_acc(ctx_of(cf), CoeffRegion(c), CoeffRegion(a), CoeffRegion(b), f);
      })));
    }
  }

  for (std::size_t m : cfg.iper_divisor) {
    for (std::size_t n : cfg.iper_dividend) {
      if (n < m) continue;
      auto a = in.poly(n + 1), b = in.poly(m + 1, true);
      std::vector<Elem> r(m);
      rows.push_back(row("iper", cfg.p, n, m, 0, measure(F, [&](const auto& cf) {
        iper(ctx_of(cf), CoeffRegion(r), ConstRegion(a), CoeffRegion(b));
      })));
    }
  }

  if (cfg.extras) {
    for (std::size_t n : cfg.conv_sizes) {
      const std::size_t m = std::max<std::size_t>(1, n / 4);
      auto a = in.poly(n + 1), b = in.poly(m + 1, true), r = in.poly(m);
      rows.push_back(row("oper", cfg.p, n, m, 0, measure(F, [&](const auto& cf) {
        oper(ctx_of(cf), CoeffRegion(a), CoeffRegion(b));
      })));
      rows.push_back(row("aper", cfg.p, n, m, 0, measure(F, [&](const auto& cf) {
        aper(ctx_of(cf), CoeffRegion(r), CoeffRegion(a), CoeffRegion(b));
      })));
      const std::size_t l = n / 2;
      auto x = in.poly(l + 1, true), y = in.poly(n + 1, true);
      rows.push_back(row("fullaxpyin", cfg.p, n, m, l, measure(F, [&](const auto& cf) {
        fullaxpyin(ctx_of(cf), CoeffRegion(r), CoeffRegion(x), CoeffRegion(y),
                   CoeffRegion(b));
      })));
    }
  }
  return rows;
}

inline void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchHeader << '\n';
  for (const auto& r : rows) {
    out << r.op << ',' << r.p << ',' << r.n << ',' << r.m << ',' << r.l << ','
        << r.adds << ',' << r.muls << ',' << r.divs << ',' << r.peak_aux << ','
        << r.depth << '\n';
  }
}

/// Parses CSV produced by write_csv; throws ParseError on schema violations.
inline std::vector<BenchRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kBenchHeader) {
    throw ParseError("bench CSV header must be '" + std::string(kBenchHeader) + "'");
  }
  std::vector<BenchRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 10 || f[0].empty()) {
      throw ParseError("bench CSV line " + std::to_string(lineno) +
                       ": expected 10 fields");
    }
    const std::string where = "bench CSV line " + std::to_string(lineno);
    BenchRow r;
    r.op = f[0];
    r.p = parse_u64(f[1], where);
    r.n = parse_u64(f[2], where);
    r.m = parse_u64(f[3], where);
    r.l = parse_u64(f[4], where);
    r.adds = parse_u64(f[5], where);
    r.muls = parse_u64(f[6], where);
    r.divs = parse_u64(f[7], where);
    r.peak_aux = parse_u64(f[8], where);
    r.depth = parse_u64(f[9], where);
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Analyses.

/// T(n) <= factor * S(ceil(n/2)) + kappa * n for one conv class, kappa fitted
/// at the smallest n and then held fixed.
struct RecurrenceCheck {
  std::string op;
  double factor = 4.0;
  double kappa = 0;
  std::size_t points = 0;
  std::vector<std::string> violations;
  bool ok() const { return points > 0 && violations.empty(); }
};

inline RecurrenceCheck check_recurrence(const std::vector<BenchRow>& rows,
                                        const std::string& op, double factor) {
  std::map<std::size_t, std::uint64_t> s, t;
  for (const auto& r : rows) {
    if (r.op == "mul") s[r.n] = r.ops();
    if (r.op == op) t[r.n] = r.ops();
  }
  RecurrenceCheck rc;
  rc.op = op;
  rc.factor = factor;
  std::vector<std::pair<std::size_t, double>> excess;  // (n, T - factor*S)
  for (const auto& [n, tn] : t) {
    const auto it = s.find((n + 1) / 2);
    if (it == s.end()) {
      rc.violations.push_back("n=" + std::to_string(n) + ": no mul row for S");
      continue;
    }
    excess.emplace_back(n, static_cast<double>(tn) - factor * static_cast<double>(it->second));
  }
  if (excess.empty()) return rc;
  rc.kappa = std::max(0.0, excess.front().second / static_cast<double>(excess.front().first));
  for (const auto& [n, e] : excess) {
    ++rc.points;
    if (e > rc.kappa * static_cast<double>(n)) {
      std::ostringstream os;
      os << "n=" << n << ": T - " << factor << "S = " << e << " > kappa*n = "
         << rc.kappa * static_cast<double>(n);
      rc.violations.push_back(os.str());
    }
  }
  return rc;
}

/// Remainder growth: doubling N at fixed M doubles the count within
/// `doubling_tol`, and ops / (N M) stays within `grid_tol` of its median over
/// the grid.
struct ScalingCheck {
  std::size_t doubling_pairs = 0;
  double worst_doubling = 2.0;
  std::vector<std::string> doubling_violations;
  std::size_t grid_points = 0;
  double grid_median = 0, grid_min = 0, grid_max = 0;
  std::vector<std::string> grid_violations;
  bool ok() const {
    return doubling_pairs > 0 && grid_points > 0 && doubling_violations.empty() &&
           grid_violations.empty();
  }
};

struct ScalingSpec {
  std::vector<std::size_t> doubling_m{16, 64, 128};
  std::size_t n_lo = 128, n_hi = 2048;
  double doubling_tol = 0.15;
  std::vector<std::size_t> grid_m{128, 256, 512};
  std::vector<std::size_t> grid_n{512, 1024, 2048};
  double grid_tol = 0.20;
};

inline ScalingCheck check_scaling(const std::vector<BenchRow>& rows,
                                  const ScalingSpec& spec = {}) {
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> ops;  // (m, n)
  for (const auto& r : rows) {
    if (r.op == "iper") ops[{r.m, r.n}] = r.ops();
  }
  ScalingCheck sc;
  double worst_dev = -1;
  for (std::size_t m : spec.doubling_m) {
    for (std::size_t n = spec.n_lo; 2 * n <= spec.n_hi; n *= 2) {
      const auto lo = ops.find({m, n}), hi = ops.find({m, 2 * n});
      if (lo == ops.end() || hi == ops.end()) {
        sc.doubling_violations.push_back("missing iper rows for M=" + std::to_string(m) +
                                         " N=" + std::to_string(n));
        continue;
      }
      ++sc.doubling_pairs;
      const double ratio = static_cast<double>(hi->second) / static_cast<double>(lo->second);
      const double dev = std::abs(ratio / 2.0 - 1.0);
      if (dev > worst_dev) {
        worst_dev = dev;
        sc.worst_doubling = ratio;
      }
      if (dev > spec.doubling_tol) {
        std::ostringstream os;
        os << "M=" << m << " N=" << n << "->" << 2 * n << ": ratio " << ratio;
        sc.doubling_violations.push_back(os.str());
      }
    }
  }

  std::vector<std::pair<std::string, double>> per;
  for (std::size_t m : spec.grid_m) {
    for (std::size_t n : spec.grid_n) {
      const auto it = ops.find({m, n});
      if (it == ops.end()) {
        sc.grid_violations.push_back("missing iper row for M=" + std::to_string(m) +
                                     " N=" + std::to_string(n));
        continue;
      }
      per.emplace_back("M=" + std::to_string(m) + " N=" + std::to_string(n),
                       static_cast<double>(it->second) / static_cast<double>(n * m));
    }
  }
  sc.grid_points = per.size();
  if (per.empty()) return sc;
  std::vector<double> v;
  for (const auto& x : per) v.push_back(x.second);
  std::sort(v.begin(), v.end());
  sc.grid_median = v.size() % 2 ? v[v.size() / 2]
                                : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
  sc.grid_min = v.front();
  sc.grid_max = v.back();
  for (const auto& [where, x] : per) {
    if (std::abs(x / sc.grid_median - 1.0) > spec.grid_tol) {
      std::ostringstream os;
      os << where << ": ops/(NM) " << x << " vs median " << sc.grid_median;
      sc.grid_violations.push_back(os.str());
    }
  }
  return sc;
}

/// Summary lines shared by `bench` and the acceptance binary.
struct BenchVerdict {
  std::vector<RecurrenceCheck> recurrence;  // classes held to 4 S
  RecurrenceCheck short_product;            // f = 0, two half-size products
  ScalingCheck scaling;

  bool recurrence_ok() const {
    if (recurrence.empty()) return false;
    for (const auto& r : recurrence) {
      if (!r.ok()) return false;
    }
    return true;
  }
};

inline BenchVerdict analyse(const std::vector<BenchRow>& rows) {
  BenchVerdict v;
  bool has_fx = false;
  for (const auto& r : rows) has_fx = has_fx || r.op == "conv_fx";
  v.recurrence.push_back(check_recurrence(rows, "conv_f1", 4.0));
  if (has_fx) v.recurrence.push_back(check_recurrence(rows, "conv_fx", 4.0));
  v.short_product = check_recurrence(rows, "conv_f0", 8.0);
  v.scaling = check_scaling(rows);
  return v;
}

inline void print_recurrence(std::ostream& out, const RecurrenceCheck& r) {
  out << "  " << r.op << ": T(n) <= " << r.factor << " S(ceil(n/2)) + " << r.kappa
      << " n over " << r.points << " sizes, " << r.violations.size()
      << " violations\n";
  for (const auto& s : r.violations) out << "    " << s << '\n';
}

inline void print_scaling(std::ostream& out, const ScalingCheck& s) {
  out << "  iper doubling: " << s.doubling_pairs << " pairs, worst ratio "
      << s.worst_doubling << ", " << s.doubling_violations.size() << " violations\n";
  for (const auto& x : s.doubling_violations) out << "    " << x << '\n';
  out << "  iper ops/(NM): " << s.grid_points << " grid points, median "
      << s.grid_median << ", range [" << s.grid_min << ", " << s.grid_max << "], "
      << s.grid_violations.size() << " violations\n";
  for (const auto& x : s.grid_violations) out << "    " << x << '\n';
}

}  // namespace ipoly::cli
