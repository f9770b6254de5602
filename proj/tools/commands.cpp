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

#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "fuzz.hpp"
#include "ipoly/ipoly.hpp"
#include "polyio.hpp"
#include "worked_examples.hpp"

namespace ipoly::cli {
namespace {

struct Options {
  std::optional<std::uint64_t> mod;
  std::string out;
  std::uint64_t seed = 1;
  std::size_t threshold = 16;

  // rem / quorem / aper / mulmod / conv
  std::string method = "iper";
  std::vector<std::string> files;
  std::string r_file;
  std::uint64_t f = 0;

  // bench
  std::vector<std::size_t> sizes;
  std::string from;

  // selftest
  double scale = 0.05;
};

std::vector<Elem> to_elems(const std::vector<std::uint64_t>& v) {
  std::vector<Elem> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(Elem{x});
  return out;
}

std::vector<std::uint64_t> to_values(ConstRegion r) {
  std::vector<std::uint64_t> out;
  out.reserve(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) out.push_back(r[k].value);
  return out;
}

// Reads every input file and checks that they share one modulus, which
// must also agree with --mod when given.
struct Inputs {
  std::uint64_t p = 0;
  std::vector<std::vector<Elem>> polys;
};

Inputs load(const Options& o, const std::vector<std::string>& paths) {
  Inputs in;
  for (const auto& path : paths) {
    PolyFile pf = read_poly(path);
    if (in.polys.empty()) {
      in.p = pf.modulus;
    } else if (pf.modulus != in.p) {
      throw BadParameter(path + ": modulus " + std::to_string(pf.modulus) +
                         " differs from " + std::to_string(in.p));
    }
    in.polys.push_back(to_elems(pf.coeffs));
  }
  if (o.mod && *o.mod != in.p) {
    throw BadParameter("--mod " + std::to_string(*o.mod) +
                       " differs from the file modulus " + std::to_string(in.p));
  }
  return in;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ParseError(o.out + ": cannot open for writing");
  f << text;
}

int cmd_rem(const Options& o, std::ostream& out) {
  auto in = load(o, o.files);
  const PrimeField F(in.p);
  auto& a = in.polys[0];
  auto& b = in.polys[1];
  const std::size_t m = b.empty() ? 0 : b.size() - 1;
  std::vector<Elem> r(m);
  if (o.method == "iper") {
    iper(make_context(F, o.threshold), CoeffRegion(r), ConstRegion(a), CoeffRegion(b));
  } else if (o.method == "blockwise") {
    std::vector<Elem> scratch(m);
    remainder_blockwise(F, CoeffRegion(r), ConstRegion(a), ConstRegion(b),
                        CoeffRegion(scratch));
  } else {
    quad_rem(F, CoeffRegion(r), ConstRegion(a), ConstRegion(b));
  }
  emit(o, out, format_poly(in.p, to_values(ConstRegion(r))));
  return kExitOk;
}

int cmd_quorem(const Options& o, std::ostream& out) {
  auto in = load(o, o.files);
  const PrimeField F(in.p);
  auto& a = in.polys[0];
  auto& b = in.polys[1];
  oper(make_context(F, o.threshold), CoeffRegion(a), CoeffRegion(b));
  const std::size_t m = b.size() - 1;
  std::vector<std::uint64_t> q, r;
  if (a.size() > m) {
    r = to_values(ConstRegion(a).first(m));
    q = to_values(ConstRegion(a).drop(m));
  } else {
    r = to_values(ConstRegion(a));
    r.resize(m, 0);
  }
  emit(o, out, std::to_string(in.p) + "\n" + format_coeffs(q) + "\n" +
                   format_coeffs(r) + "\n");
  return kExitOk;
}

// Initial remainder from --r, zero-extended to length m; longer is an error.
std::vector<Elem> initial_remainder(const Options& o, std::uint64_t p, std::size_t m) {
  if (o.r_file.empty()) return std::vector<Elem>(m);
  Options one = o;
  one.mod = p;
  auto in = load(one, {o.r_file});
  auto r = std::move(in.polys[0]);
  if (r.size() > m) {
    throw LengthMismatch("--r has " + std::to_string(r.size()) +
                         " coefficients but the modulus degree is " +
                         std::to_string(m));
  }
  r.resize(m);
  return r;
}

int cmd_aper(const Options& o, std::ostream& out) {
  auto in = load(o, o.files);
  const PrimeField F(in.p);
  auto& a = in.polys[0];
  auto& b = in.polys[1];
  const std::size_t m = detail::divisor_degree(ConstRegion(b));
  auto r = initial_remainder(o, in.p, m);
  aper(make_context(F, o.threshold), CoeffRegion(r), CoeffRegion(a), CoeffRegion(b));
  emit(o, out, format_poly(in.p, to_values(ConstRegion(r))));
  return kExitOk;
}

int cmd_mulmod(const Options& o, std::ostream& out) {
  auto in = load(o, o.files);
  const PrimeField F(in.p);
  auto& a = in.polys[0];
  auto& c = in.polys[1];
  auto& b = in.polys[2];
  const std::size_t m = detail::divisor_degree(ConstRegion(b));
  auto r = initial_remainder(o, in.p, m);
  fullaxpyin(make_context(F, o.threshold), CoeffRegion(r), CoeffRegion(a),
             CoeffRegion(c), CoeffRegion(b));
  emit(o, out, format_poly(in.p, to_values(ConstRegion(r))));
  return kExitOk;
}

int cmd_conv(const Options& o, std::ostream& out) {
  auto in = load(o, o.files);
  const PrimeField F(in.p);
  if (o.f >= in.p) throw BadParameter("--f must be a canonical residue below p");
  auto& a = in.polys[0];
  auto& b = in.polys[1];
  std::vector<Elem> c = in.polys.size() > 2 ? in.polys[2] : std::vector<Elem>(a.size());
  conv_acc(make_context(F, o.threshold), CoeffRegion(c), CoeffRegion(a),
           CoeffRegion(b), Elem{o.f});
  emit(o, out, format_poly(in.p, to_values(ConstRegion(c))));
  return kExitOk;
}

void print_verdict(std::ostream& err, const BenchVerdict& v) {
  err << "convolution recurrence " << (v.recurrence_ok() ? "ok" : "FAILED") << '\n';
  for (const auto& r : v.recurrence) print_recurrence(err, r);
  err << "short product (f = 0) " << (v.short_product.ok() ? "ok" : "FAILED") << '\n';
  print_recurrence(err, v.short_product);
  err << "remainder scaling " << (v.scaling.ok() ? "ok" : "FAILED") << '\n';
  print_scaling(err, v.scaling);
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.from.empty()) {
    std::ifstream f(o.from);
    if (!f) throw ParseError(o.from + ": cannot open");
    const auto v = analyse(read_csv(f));
    print_verdict(out, v);
    return v.recurrence_ok() && v.scaling.ok() ? kExitOk : kExitPrecondition;
  }
  BenchConfig cfg;
  cfg.p = o.mod.value_or(cfg.p);
  cfg.seed = o.seed;
  cfg.threshold = o.threshold;
  if (!o.sizes.empty()) {
    cfg.conv_sizes = o.sizes;
    cfg.iper_dividend = o.sizes;
  }
  const auto rows = run_bench(cfg);
  std::ostringstream csv;
  write_csv(csv, rows);
  emit(o, out, csv.str());
  print_verdict(err, analyse(rows));
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  bool ok = true;
  std::size_t passed = 0;
  const auto worked = run_worked_examples();
  for (const auto& w : worked) {
    if (w.oracle_ok && w.library_ok) {
      ++passed;
    } else {
      ok = false;
      out << "worked example failed: " << w.name << ':' << w.detail << '\n';
    }
  }
  out << "worked examples: " << passed << '/' << worked.size() << " passed\n";

  FuzzConfig cfg;
  cfg.seed = o.seed;
  cfg.scale = o.scale;
  const auto rep = run_fuzz(cfg);
  for (const auto& fam : rep.families) {
    out << "fuzz " << fam.name << ": " << fam.instances << " instances, "
        << fam.mismatches << " mismatches, " << fam.restoration_failures
        << " restoration failures\n";
    if (!fam.first_failure.empty()) out << "  first failure: " << fam.first_failure << '\n';
  }
  ok = ok && rep.mismatches() == 0 && rep.restoration_failures() == 0;
  out << (ok ? "selftest passed\n" : "selftest FAILED\n");
  return ok ? kExitOk : kExitPrecondition;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"In-place polynomial arithmetic over prime fields"};
  app.require_subcommand(1);
  app.add_option("--mod", o.mod, "Prime modulus; must match the input files");
  app.add_option("--out", o.out, "Write the result here instead of stdout");
  app.add_option("--seed", o.seed, "Seed for selftest and bench inputs");
  app.add_option("--threshold", o.threshold, "Schoolbook base-case threshold")
      ->check(CLI::PositiveNumber);

  auto files = [&](CLI::App* sub, const char* desc, std::size_t lo, std::size_t hi) {
    sub->add_option("files", o.files, desc)->required()->expected(
        static_cast<int>(lo), static_cast<int>(hi));
  };
  auto* rem = app.add_subcommand("rem", "R = A mod B");
  files(rem, "A.poly B.poly", 2, 2);
  rem->add_option("--method", o.method, "iper, blockwise or quad")
      ->check(CLI::IsMember({"iper", "blockwise", "quad"}));
  auto* quorem = app.add_subcommand("quorem", "Q and R with A = B Q + R");
  files(quorem, "A.poly B.poly", 2, 2);
  auto* aper_cmd = app.add_subcommand("aper", "R += A mod B");
  files(aper_cmd, "A.poly B.poly", 2, 2);
  aper_cmd->add_option("--r", o.r_file, "Initial R (default zero)");
  auto* mulmod = app.add_subcommand("mulmod", "R += A C mod B");
  files(mulmod, "A.poly C.poly B.poly", 3, 3);
  mulmod->add_option("--r", o.r_file, "Initial R (default zero)");
  auto* conv = app.add_subcommand("conv", "C += A B mod X^n - f");
  files(conv, "a.poly b.poly [c.poly]", 2, 3);
  conv->add_option("--f", o.f, "Constant f of X^n - f");
  auto* bench = app.add_subcommand("bench", "Operation-count CSV");
  bench->add_option("--sizes", o.sizes, "Convolution lengths and dividend degrees")
      ->delimiter(',');
  bench->add_option("--from", o.from, "Analyse an existing CSV instead of measuring");
  auto* selftest = app.add_subcommand("selftest", "Worked examples and oracle fuzz");
  selftest->add_option("--scale", o.scale, "Fuzz instance-count multiplier")
      ->check(CLI::PositiveNumber);

  // The global flags are also accepted after the subcommand name.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (rem->parsed()) return cmd_rem(o, out);
    if (quorem->parsed()) return cmd_quorem(o, out);
    if (aper_cmd->parsed()) return cmd_aper(o, out);
    if (mulmod->parsed()) return cmd_mulmod(o, out);
    if (conv->parsed()) return cmd_conv(o, out);
    if (bench->parsed()) return cmd_bench(o, out, err);
    if (selftest->parsed()) return cmd_selftest(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitParse;
}

}  // namespace ipoly::cli
