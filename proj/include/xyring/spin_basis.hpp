// Copyright 2026 The xyring Authors
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

/**
 * @file spin_basis.hpp
 * @brief Product basis of an N-site spin-1/2 ring and its symmetry sectors.
 *
 * A basis state is an N-bit word. Site 1 is the most significant bit, so the
 * word 0b000111 at N = 6 prints as "000111". Bit value 0 is the sigma_z = +1
 * eigenvector, bit value 1 is sigma_z = -1.
 *
 * Sectors:
 *  - Magnetization(k): all words with exactly k one-bits, dimension C(N, k).
 *  - Parity(even|odd): all words whose one-bit count has the given parity.
 *  - Full: all 2^N words.
 */

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "xyring/error.hpp"

namespace xyring {

using BasisState = std::uint32_t;

inline constexpr int kMinSites = 3;
inline constexpr int kMaxSites = 14;

inline void check_site_count(int n) {
  if (n < kMinSites || n > kMaxSites) {
    throw Error(ErrorKind::InvalidSize, "site count " + std::to_string(n) + " outside [" +
                                            std::to_string(kMinSites) + ", " +
                                            std::to_string(kMaxSites) + "]");
  }
}

constexpr std::size_t full_dimension(int n) { return std::size_t{1} << n; }

constexpr int hamming_weight(BasisState s) { return std::popcount(s); }

/// Bit mask of 1-based site `site` in an n-site word.
constexpr BasisState site_mask(int site, int n) { return BasisState{1} << (n - site); }

constexpr int site_bit(BasisState s, int site, int n) { return (s >> (n - site)) & 1U; }

/// Complements every bit of an n-site word.
constexpr BasisState global_spin_flip(BasisState s, int n) {
  return ~s & static_cast<BasisState>(full_dimension(n) - 1);
}

/// Sum of sigma_z over all sites: +1 per 0-bit, -1 per 1-bit.
constexpr int sigma_z_total(BasisState s, int n) { return n - 2 * hamming_weight(s); }

inline std::string to_bitstring(BasisState s, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int site = 1; site <= n; ++site) {
    if (site_bit(s, site, n)) out[static_cast<std::size_t>(site - 1)] = '1';
  }
  return out;
}

/// Parses fixed-width 0/1 text; the width sets n.
inline BasisState from_bitstring(const std::string& text) {
  BasisState s = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::InvalidParams, "bad bitstring '" + text + "'");
    }
    s = (s << 1) | static_cast<BasisState>(c == '1');
  }
  return s;
}

enum class Parity { Even = 0, Odd = 1 };

class Sector {
 public:
  enum class Kind { Magnetization = 0, Parity = 1, Full = 2 };

  static constexpr Sector magnetization(int k) { return Sector(Kind::Magnetization, k); }
  static constexpr Sector parity(Parity p) { return Sector(Kind::Parity, static_cast<int>(p)); }
  static constexpr Sector full() { return Sector(Kind::Full, 0); }

  constexpr Kind kind() const { return kind_; }

  /// Number of one-bits; only meaningful for magnetization sectors.
  constexpr int weight() const { return value_; }
  constexpr Parity parity_value() const { return static_cast<Parity>(value_); }

  constexpr bool contains(BasisState s) const {
    switch (kind_) {
      case Kind::Magnetization: return hamming_weight(s) == value_;
      case Kind::Parity: return (hamming_weight(s) & 1) == value_;
      case Kind::Full: return true;
    }
    return false;
  }

  /// Throws InvalidSector if the sector does not exist for n sites.
  void validate(int n) const {
    if (kind_ == Kind::Magnetization && (value_ < 0 || value_ > n)) {
      throw Error(ErrorKind::InvalidSector, "magnetization weight " + std::to_string(value_) +
                                                " outside [0, " + std::to_string(n) + "]");
    }
  }

  std::size_t dimension(int n) const {
    validate(n);
    switch (kind_) {
      case Kind::Magnetization: return binomial(n, value_);
      case Kind::Parity: return full_dimension(n - 1);
      case Kind::Full: return full_dimension(n);
    }
    return 0;
  }

  /// "k=3", "parity=even", "full".
  std::string label() const {
    switch (kind_) {
      case Kind::Magnetization: return "k=" + std::to_string(value_);
      case Kind::Parity: return value_ == 0 ? "parity=even" : "parity=odd";
      case Kind::Full: return "full";
    }
    return {};
  }

  /// Inverse of label(). Throws InvalidSector on anything else.
  static Sector parse(const std::string& text) {
    if (text == "full") return full();
    if (text == "parity=even") return parity(Parity::Even);
    if (text == "parity=odd") return parity(Parity::Odd);
    if (text.size() > 2 && text.compare(0, 2, "k=") == 0 &&
        text.find_first_not_of("0123456789", 2) == std::string::npos && text.size() <= 4) {
      return magnetization(std::stoi(text.substr(2)));
    }
    throw Error(ErrorKind::InvalidSector, "unknown sector '" + text + "'");
  }

  constexpr auto operator<=>(const Sector&) const = default;

  static constexpr std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
  }

 private:
  constexpr Sector(Kind kind, int value) : kind_(kind), value_(value) {}

  Kind kind_;
  int value_;
};

/// Ascending list of the basis states of one sector plus the inverse map.
class SectorBasis {
 public:
  SectorBasis(int n, Sector sector) : n_(n), sector_(sector) {
    check_site_count(n);
    sector.validate(n);
    const auto full = full_dimension(n);
    index_.assign(full, kAbsent);
    states_.reserve(sector.dimension(n));
    for (BasisState s = 0; s < full; ++s) {
      if (!sector.contains(s)) continue;
      index_[s] = static_cast<std::int32_t>(states_.size());
      states_.push_back(s);
    }
  }

  int sites() const { return n_; }
  const Sector& sector() const { return sector_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<BasisState>& states() const { return states_; }
  BasisState operator[](std::size_t i) const { return states_[i]; }

  bool contains(BasisState s) const { return s < index_.size() && index_[s] != kAbsent; }

  /// Position of `s` in states(); -1 if it is outside the sector.
  std::int64_t index_of(BasisState s) const {
    return s < index_.size() ? index_[s] : std::int64_t{kAbsent};
  }

 private:
  static constexpr std::int32_t kAbsent = -1;

  int n_;
  Sector sector_;
  std::vector<BasisState> states_;
  std::vector<std::int32_t> index_;
};

inline SectorBasis enumerate_sector(int n, Sector sector) { return SectorBasis(n, sector); }

/// Blocks that together tile the full space: magnetization blocks when the
/// coupling is isotropic, parity blocks otherwise.
inline std::vector<Sector> conserved_sectors(int n, bool isotropic) {
  std::vector<Sector> out;
  if (isotropic) {
    for (int k = 0; k <= n; ++k) out.push_back(Sector::magnetization(k));
  } else {
    out.push_back(Sector::parity(Parity::Even));
    out.push_back(Sector::parity(Parity::Odd));
  }
  return out;
}

}  // namespace xyring
