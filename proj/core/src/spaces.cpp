// Copyright 2026 The HahnForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hahnforge/spaces.hpp"

#include <cctype>
#include <limits>

namespace hahnforge {

// OrdinalCNF -------------------------------------------------------------------

OrdinalCNF::OrdinalCNF(std::vector<OrdinalTerm> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient == 0) throw std::invalid_argument("CNF coefficient must be positive");
    if (i > 0 && terms_[i - 1].exponent <= terms_[i].exponent) {
      throw std::invalid_argument("CNF exponents must strictly decrease");
    }
  }
}

OrdinalCNF OrdinalCNF::finite(std::uint64_t n) {
  if (n == 0) return {};
  return OrdinalCNF({{0, n}});
}

OrdinalCNF OrdinalCNF::omega_power(unsigned exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return {};
  return OrdinalCNF({{exponent, coefficient}});
}

std::uint64_t OrdinalCNF::finite_value() const {
  if (!is_finite()) throw std::logic_error("ordinal is infinite");
  return terms_.empty() ? 0 : terms_.front().coefficient;
}

OrdinalCNF operator+(const OrdinalCNF& a, const OrdinalCNF& b) {
  if (b.is_zero()) return a;
  const unsigned lead = b.terms_.front().exponent;
  std::vector<OrdinalTerm> out;
  std::uint64_t carry = 0;
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) out.push_back(t);
    if (t.exponent == lead) carry = t.coefficient;
  }
  for (std::size_t i = 0; i < b.terms_.size(); ++i) {
    OrdinalTerm t = b.terms_[i];
    if (i == 0) {
      if (t.coefficient > std::numeric_limits<std::uint64_t>::max() - carry) {
        throw std::overflow_error("ordinal coefficient overflow");
      }
      t.coefficient += carry;
    }
    out.push_back(t);
  }
  return OrdinalCNF(std::move(out));
}

std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.exponent != t.exponent) return s.exponent <=> t.exponent;
    if (s.coefficient != t.coefficient) return s.coefficient <=> t.coefficient;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string OrdinalCNF::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : s_(text) {}

  OrdinalCNF parse() {
    skip_space();
    if (at_end()) fail("expected an ordinal term");
    OrdinalCNF acc = term();
    skip_space();
    while (!at_end()) {
      if (s_[pos_] != '+') fail("expected '+'");
      ++pos_;
      skip_space();
      acc = acc + term();
      skip_space();
    }
    return acc;
  }

 private:
  OrdinalCNF term() {
    if (at_end()) fail("expected 'w' or a natural number");
    if (s_[pos_] == 'w') {
      ++pos_;
      skip_space();
      std::uint64_t exponent = 1;
      std::uint64_t coefficient = 1;
      if (!at_end() && s_[pos_] == '^') {
        ++pos_;
        skip_space();
        exponent = nat();
        if (exponent > 1000) fail("exponent too large");
        skip_space();
      }
      if (!at_end() && s_[pos_] == '*') {
        ++pos_;
        skip_space();
        coefficient = nat();
      }
      return OrdinalCNF::omega_power(static_cast<unsigned>(exponent), coefficient);
    }
    return OrdinalCNF::finite(nat());
  }

  std::uint64_t nat() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected a natural number");
    }
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      auto d = static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw OrdinalParseError("ordinal literal, column " + std::to_string(pos_ + 1) + ": " + msg,
                            pos_ + 1);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

OrdinalCNF parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

// Cantor-Bendixson ----------------------------------------------------------------

std::optional<OrdinalCompact> cb_derivative(const OrdinalCompact& k) {
  // The limit points of [0, top] are the ordinals w*b with 1 <= b <= top',
  // where top = w*top' + (finite rest). [1, top'] has order type top' when
  // top' is finite and top' + 1 otherwise.
  std::vector<OrdinalTerm> shifted;
  for (const auto& t : k.top.terms()) {
    if (t.exponent > 0) shifted.push_back({t.exponent - 1, t.coefficient});
  }
  OrdinalCNF reduced(std::move(shifted));
  if (reduced.is_zero()) return std::nullopt;
  if (reduced.is_finite()) return OrdinalCompact{OrdinalCNF::finite(reduced.finite_value() - 1)};
  return OrdinalCompact{reduced};
}

unsigned scattered_rank(const OrdinalCompact& k) {
  unsigned steps = 0;
  std::optional<OrdinalCompact> cur = k;
  while (cur) {
    cur = cb_derivative(*cur);
    ++steps;
  }
  return steps;
}

// alphaN subsets --------------------------------------------------------------

std::uint64_t AlphaNSubset::element(std::uint64_t k) const {
  if (k == 0) throw std::invalid_argument("enumeration is 1-based");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t base = odd_only ? 2 * k - 1 : k;
  if (odd_only && k > max / 2) throw std::overflow_error("alphaN element overflow");
  if (power >= 64 || base > (max >> power)) throw std::overflow_error("alphaN element overflow");
  return base << power;
}

bool AlphaNSubset::contains(std::uint64_t n) const {
  if (n == 0) return false;
  const auto twos = static_cast<unsigned>(__builtin_ctzll(n));
  return odd_only ? twos == power : twos >= power;
}

std::uint64_t AlphaNSubset::index_of(std::uint64_t n) const {
  if (!contains(n)) throw std::invalid_argument(std::to_string(n) + " is not in the subset");
  std::uint64_t m = n >> power;
  return odd_only ? (m + 1) / 2 : m;
}

// Open families ---------------------------------------------------------------

OpenSet OpenFamily::member(std::size_t k) const {
  if (k == 0 || (count_ && k > *count_)) throw std::out_of_range("open family index out of range");
  if (space_ == SpaceKind::kAlphaN) {
    if (k > 63) throw std::out_of_range("open family index beyond representable range");
    const auto p = static_cast<unsigned>(k - 1);
    const bool last = count_ && k == *count_;
    return AlphaNSubset{p, !last};
  }
  if (count_) {
    const Rat n(static_cast<unsigned long>(*count_));
    const Rat kk(static_cast<unsigned long>(k));
    return OpenInterval{Rat((3 * kk - 2) / (3 * n)), Rat((3 * kk - 1) / (3 * n))};
  }
  // (2^-k, 3 * 2^-(k+1)): the closures are separated by [3*2^-(k+1), 2^-(k-1)).
  mpz_class two_k = mpz_class(1) << static_cast<mp_bitcnt_t>(k);
  Rat lo(mpz_class(1), two_k);
  Rat hi(mpz_class(3), two_k * 2);
  lo.canonicalize();
  hi.canonicalize();
  return OpenInterval{lo, hi};
}

OpenFamily disjoint_opens(SpaceKind space, std::optional<std::size_t> count) {
  if (count && *count == 0) throw std::invalid_argument("disjoint_opens needs count >= 1");
  return OpenFamily(space, count);
}

}  // namespace hahnforge
