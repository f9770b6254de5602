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

// Polynomial file format:
//   line 1: modulus p in decimal
//   line 2: coefficients, low degree first, space separated, each < p
// An empty second line (or a missing one) is the zero polynomial.

#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ipoly::cli {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolyFile {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> coeffs;
};

inline std::uint64_t parse_u64(std::string_view tok, const std::string& where) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(where + ": '" + std::string(tok) + "' is not a decimal integer");
  }
  return v;
}

inline std::vector<std::uint64_t> parse_list(const std::string& line,
                                             const std::string& where) {
  std::vector<std::uint64_t> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(parse_u64(tok, where));
  return out;
}

inline PolyFile parse_poly(std::istream& in, const std::string& name) {
  std::string line1, line2;
  if (!std::getline(in, line1)) throw ParseError(name + ": missing modulus line");
  std::getline(in, line2);
  PolyFile pf;
  auto mod = parse_list(line1, name);
  if (mod.size() != 1) throw ParseError(name + ": first line must hold one modulus");
  pf.modulus = mod[0];
  pf.coeffs = parse_list(line2, name);
  std::string rest;
  while (std::getline(in, rest)) {
    if (rest.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError(name + ": unexpected content after the coefficient line");
    }
  }
  for (auto c : pf.coeffs) {
    if (c >= pf.modulus) {
      throw ParseError(name + ": coefficient " + std::to_string(c) +
                       " is not a canonical residue");
    }
  }
  return pf;
}

inline PolyFile read_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return parse_poly(in, path);
}

inline std::string format_coeffs(const std::vector<std::uint64_t>& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(c[k]);
  }
  return s;
}

inline std::string format_poly(std::uint64_t p, const std::vector<std::uint64_t>& c) {
  return std::to_string(p) + "\n" + format_coeffs(c) + "\n";
}

}  // namespace ipoly::cli
