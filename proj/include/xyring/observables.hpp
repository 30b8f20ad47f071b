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
 * @file observables.hpp
 * @brief Two-site reduced density matrix, spin-spin correlation and
 *        Wootters concurrence.
 *
 * Two-site matrices use the product basis {|00>, |01>, |10>, |11>} of the
 * kept pair, first kept site most significant. All states are real, so
 * rho* = rho throughout.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <string>

#include "xyring/eigensolver.hpp"
#include "xyring/error.hpp"
#include "xyring/linalg.hpp"
#include "xyring/spin_basis.hpp"

namespace xyring {

using Matrix4 = std::array<std::array<double, 4>, 4>;

/// Eigenvalues in (-kNegativeEigenError, kEigenClamp) are treated as zero.
inline constexpr double kEigenClamp = 1e-12;
inline constexpr double kNegativeEigenError = 1e-8;

struct ReducedDensityMatrix {
  Matrix4 rho{};
  int site_i = 1;
  int site_j = 2;

  double trace() const { return rho[0][0] + rho[1][1] + rho[2][2] + rho[3][3]; }
};

struct SpinFlippedState {
  Matrix4 rho_tilde{};
};

/// Traces out every site except (i, j) from a real pure state over the full
/// 2^n bit basis.
inline ReducedDensityMatrix partial_trace(std::span<const double> psi, int n, int i, int j) {
  if (i < 1 || j > n || i >= j) {
    throw Error(ErrorKind::BadSites, "need 1 <= i < j <= " + std::to_string(n) + ", got (" + std::to_string(i) +
                                         ", " + std::to_string(j) + ")");
  }
  if (psi.size() != full_dimension(n)) {
    throw Error(ErrorKind::DimensionMismatch, "state length does not match 2^n");
  }
  const BasisState mi = site_mask(i, n);
  const BasisState mj = site_mask(j, n);
  const std::array<BasisState, 4> pair_bits{0, mj, mi, mi | mj};

  ReducedDensityMatrix out;
  out.site_i = i;
  out.site_j = j;
  for (BasisState s = 0; s < psi.size(); ++s) {
    const double a = psi[s];
    if (a == 0.0) continue;
    const int p = (site_bit(s, i, n) << 1) | site_bit(s, j, n);
    const BasisState env = s & ~(mi | mj);
    for (int q = 0; q < 4; ++q) out.rho[p][q] += a * psi[env | pair_bits[q]];
  }
  return out;
}

inline ReducedDensityMatrix partial_trace(const GroundState& state, int i, int j) {
  return partial_trace(state.amplitudes, state.sites(), i, j);
}

/// (sigma_y x sigma_y) rho (sigma_y x sigma_y) for real rho.
inline SpinFlippedState spin_flip(const ReducedDensityMatrix& r) {
  static constexpr Matrix4 yy{{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}};
  SpinFlippedState out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double sum = 0.0;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) sum += yy[a][k] * r.rho[k][l] * yy[l][b];
      out.rho_tilde[a][b] = sum;
    }
  return out;
}

/// <sigma(1) . sigma(2)> including the zz term; lies in [-3, 1].
inline double correlation(const ReducedDensityMatrix& r) {
  static constexpr Matrix4 m{{{1, 0, 0, 0}, {0, -1, 2, 0}, {0, 2, -1, 0}, {0, 0, 0, 1}}};
  double tr = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) tr += r.rho[a][b] * m[b][a];
  return tr;
}

namespace detail {

inline Matrix to_matrix(const Matrix4& m) {
  Matrix out(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) out(a, b) = m[a][b];
  return out;
}

inline double clamp_eigenvalue(double x, const char* what) {
  if (x < -kNegativeEigenError) {
    throw Error(ErrorKind::NumericalFailure,
                std::string(what) + " has eigenvalue " + std::to_string(x) + " below -1e-8; input is not a density matrix");
  }
  return x < kEigenClamp ? 0.0 : x;
}

}  // namespace detail

/**
 * Wootters concurrence max(l1 - l2 - l3 - l4, 0).
 *
 * The l_k are square roots of the eigenvalues of rho * rho_tilde, obtained
 * as the eigenvalues of the symmetric matrix sqrt(rho) rho_tilde sqrt(rho),
 * which shares its spectrum with the non-symmetric product.
 */
inline double concurrence(const ReducedDensityMatrix& r) {
  const auto eig = symmetric_eigen(detail::to_matrix(r.rho));
  Matrix sqrt_rho(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const double w = std::sqrt(detail::clamp_eigenvalue(eig.values[k], "rho"));
    if (w == 0.0) continue;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) sqrt_rho(a, b) += w * eig.vectors(k, a) * eig.vectors(k, b);
  }

  const Matrix flipped = detail::to_matrix(spin_flip(r).rho_tilde);
  Matrix product = multiply(multiply(sqrt_rho, flipped), sqrt_rho);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < a; ++b) {
      const double avg = 0.5 * (product(a, b) + product(b, a));
      product(a, b) = avg;
      product(b, a) = avg;
    }

  std::array<double, 4> lambda{};
  const auto mu = symmetric_eigen(product, false).values;
  for (std::size_t k = 0; k < 4; ++k) lambda[k] = std::sqrt(detail::clamp_eigenvalue(mu[k], "rho * rho_tilde"));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0);
}

/// 2|ad - bc| for the pure state a|00> + b|01> + c|10> + d|11>.
inline double pure_concurrence(double a, double b, double c, double d) {
  const double norm = a * a + b * b + c * c + d * d;
  if (std::abs(norm - 1.0) > 1e-10) {
    throw Error(ErrorKind::NotNormalized, "squared norm " + std::to_string(norm) + " != 1");
  }
  return 2.0 * std::abs(a * d - b * c);
}

/// Density matrix |psi><psi| of a real two-qubit vector.
inline ReducedDensityMatrix pure_density(const std::array<double, 4>& psi) {
  ReducedDensityMatrix out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out.rho[a][b] = psi[a] * psi[b];
  return out;
}

}  // namespace xyring
