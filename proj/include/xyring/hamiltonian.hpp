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
 * @file hamiltonian.hpp
 * @brief XY ring in a transverse field, periodic boundary conditions.
 *
 *   H = sum_i [ Jx sx(i) sx(i+1) + Jy sy(i) sy(i+1) ] + Bz sum_i sz(i)
 *     = 2J sum_i [ (s-(i) s+(i+1) + s+(i) s-(i+1)) + gamma (s+(i) s+(i+1) + s-(i) s-(i+1)) ]
 *       + Bz sum_i sz(i),
 *
 * with Jx = (1 + gamma) J, Jy = (1 - gamma) J and site N+1 identified with
 * site 1. In the bit basis every nonzero off-diagonal element is either 2J
 * (a nearest-neighbour 01 <-> 10 exchange) or 2J*gamma (a 00 <-> 11 pair
 * flip); the diagonal is Bz * (N - 2 * popcount).
 */

#pragma once

#include <cmath>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "xyring/error.hpp"
#include "xyring/linalg.hpp"
#include "xyring/spin_basis.hpp"

namespace xyring {

struct ModelParams {
  int n = 6;
  double j = 1.0;
  double gamma = 0.0;
  double bz = 0.0;

  double jx() const { return (1.0 + gamma) * j; }
  double jy() const { return (1.0 - gamma) * j; }

  bool isotropic() const { return gamma == 0.0; }

  /// Converts the (Jx, Jy) parameterisation. Jx = -Jy != 0 has no (J, gamma)
  /// form and is rejected; Jx = Jy = 0 maps to J = gamma = 0.
  static ModelParams from_jxjy(int n, double jx, double jy, double bz) {
    ModelParams p;
    p.n = n;
    p.bz = bz;
    p.j = 0.5 * (jx + jy);
    if (p.j == 0.0) {
      if (jx != 0.0) {
        throw Error(ErrorKind::InvalidParams, "Jx = -Jy != 0 has no (J, gamma) representation");
      }
      p.gamma = 0.0;
    } else {
      p.gamma = (jx - jy) / (jx + jy);
    }
    p.validate();
    return p;
  }

  void validate() const {
    check_site_count(n);
    if (!std::isfinite(j) || !std::isfinite(gamma) || !std::isfinite(bz)) {
      throw Error(ErrorKind::InvalidParams, "non-finite model parameter");
    }
  }

  std::string describe() const {
    std::ostringstream os;
    os.precision(9);
    os << "n=" << n << " j=" << j << " gamma=" << gamma << " bz=" << bz;
    return os.str();
  }

  bool operator==(const ModelParams&) const = default;
};

struct HamiltonianMatrix {
  ModelParams params;
  SectorBasis basis;
  Matrix entries;
};

namespace detail {

inline void check_sector_for(const ModelParams& params, const Sector& sector) {
  params.validate();
  sector.validate(params.n);
  if (sector.kind() == Sector::Kind::Magnetization && !params.isotropic()) {
    throw Error(ErrorKind::SectorMismatch,
                "magnetization sector " + sector.label() + " requires gamma = 0 (" + params.describe() + ")");
  }
}

// Calls visit(target, amplitude) for every off-diagonal image of `s` under
// the coupling terms, one call per bond.
template <typename Visit>
void for_each_bond_image(const ModelParams& p, BasisState s, Visit&& visit) {
  const double hop = 2.0 * p.j;
  const double pair = 2.0 * p.j * p.gamma;
  for (int site = 1; site <= p.n; ++site) {
    const int next = site % p.n + 1;
    const BasisState t = s ^ site_mask(site, p.n) ^ site_mask(next, p.n);
    if (site_bit(s, site, p.n) != site_bit(s, next, p.n)) {
      if (hop != 0.0) visit(t, hop);
    } else {
      if (pair != 0.0) visit(t, pair);
    }
  }
}

}  // namespace detail

inline HamiltonianMatrix build_hamiltonian(const ModelParams& params, const Sector& sector) {
  detail::check_sector_for(params, sector);
  SectorBasis basis(params.n, sector);
  const std::size_t dim = basis.size();
  Matrix h(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const BasisState s = basis[col];
    h(col, col) = params.bz * sigma_z_total(s, params.n);
    // On a ring with n >= 3 each pair (s, t) is linked by at most one bond,
    // so writing both triangles from the s < t side keeps H exactly symmetric.
    detail::for_each_bond_image(params, s, [&](BasisState t, double amp) {
      if (t <= s) return;
      const auto row = basis.index_of(t);
      if (row < 0) return;
      h(static_cast<std::size_t>(row), col) += amp;
      h(col, static_cast<std::size_t>(row)) += amp;
    });
  }
  return {params, std::move(basis), std::move(h)};
}

/// Matrix-free H * x over a prepared sector basis.
inline std::vector<double> apply_hamiltonian(const ModelParams& params, const SectorBasis& basis,
                                             std::span<const double> x) {
  detail::check_sector_for(params, basis.sector());
  if (x.size() != basis.size()) {
    throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(x.size()) +
                                                  " != sector dimension " + std::to_string(basis.size()));
  }
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const BasisState s = basis[col];
    const double xs = x[col];
    y[col] += params.bz * sigma_z_total(s, params.n) * xs;
    if (xs == 0.0) continue;
    detail::for_each_bond_image(params, s, [&](BasisState t, double amp) {
      const auto row = basis.index_of(t);
      if (row >= 0) y[static_cast<std::size_t>(row)] += amp * xs;
    });
  }
  return y;
}

inline std::vector<double> apply_hamiltonian(const ModelParams& params, const Sector& sector,
                                             std::span<const double> x) {
  detail::check_sector_for(params, sector);
  return apply_hamiltonian(params, SectorBasis(params.n, sector), x);
}

}  // namespace xyring
