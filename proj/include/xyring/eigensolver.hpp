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
 * @file eigensolver.hpp
 * @brief Sector spectra and the global ground state of the XY ring.
 *
 * Eigenvectors are sign-fixed so that the component of largest magnitude is
 * positive; among components within kSignTieTol of that magnitude the one
 * with the lowest basis index decides. This makes every dump reproducible
 * byte for byte.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "xyring/error.hpp"
#include "xyring/hamiltonian.hpp"
#include "xyring/linalg.hpp"
#include "xyring/spin_basis.hpp"

namespace xyring {

/// Absolute energy gap below which two levels count as degenerate.
inline constexpr double kDegeneracyTol = 1e-9;

inline constexpr double kSignTieTol = 1e-12;

struct SectorSpectrum {
  Sector sector = Sector::full();
  std::vector<double> eigenvalues;
  Matrix eigenvectors;  // row i pairs with eigenvalues[i]; empty for values-only solves
  bool ground_degenerate = false;
};

struct GroundState {
  ModelParams params;
  double energy = 0.0;
  Sector sector = Sector::full();
  std::vector<double> amplitudes;  // indexed by BasisState over the full 2^n space
  bool degenerate = false;

  int sites() const { return params.n; }
};

/// Flips the sign of `v` in place so its dominant component is positive.
inline void fix_sign(std::span<double> v) {
  double top = 0.0;
  for (double x : v) top = std::max(top, std::abs(x));
  for (double& x : v) {
    if (std::abs(x) >= top - kSignTieTol) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      return;
    }
  }
}

inline SectorSpectrum diagonalize(const HamiltonianMatrix& h, bool want_vectors = true, int max_iter_per_value = 60) {
  SectorSpectrum out;
  out.sector = h.basis.sector();
  EigenSystem es;
  try {
    es = symmetric_eigen(h.entries, want_vectors, max_iter_per_value);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::ConvergenceFailure) throw;
    throw Error(ErrorKind::ConvergenceFailure, std::string(err.what()) + " [sector " + out.sector.label() +
                                                   ", dimension " + std::to_string(h.basis.size()) + ", " +
                                                   h.params.describe() + "]");
  }
  out.eigenvalues = std::move(es.values);
  out.eigenvectors = std::move(es.vectors);
  for (std::size_t i = 0; i < out.eigenvectors.rows(); ++i) fix_sign(out.eigenvectors.row(i));
  out.ground_degenerate =
      out.eigenvalues.size() > 1 && out.eigenvalues[1] - out.eigenvalues[0] <= kDegeneracyTol;
  return out;
}

/// Lowest eigenvalue of every conserved block: magnetization blocks for
/// gamma = 0, the two parity blocks otherwise.
inline std::map<Sector, double> sector_ground_energies(const ModelParams& params) {
  params.validate();
  std::map<Sector, double> out;
  for (const Sector& s : conserved_sectors(params.n, params.isotropic())) {
    out.emplace(s, diagonalize(build_hamiltonian(params, s), false).eigenvalues.front());
  }
  return out;
}

/// Picks the winning block among per-sector minima: the lowest sector label
/// whose minimum lies within kDegeneracyTol of the global minimum.
inline Sector winning_sector(const std::map<Sector, double>& minima) {
  double lowest = minima.begin()->second;
  for (const auto& [sector, e] : minima) lowest = std::min(lowest, e);
  for (const auto& [sector, e] : minima) {
    if (e <= lowest + kDegeneracyTol) return sector;
  }
  return minima.begin()->first;
}

inline GroundState ground_state(const ModelParams& params) {
  params.validate();
  std::map<Sector, double> minima;
  std::vector<double> low_levels;
  for (const Sector& s : conserved_sectors(params.n, params.isotropic())) {
    const auto spec = diagonalize(build_hamiltonian(params, s), false);
    minima.emplace(s, spec.eigenvalues[0]);
    low_levels.insert(low_levels.end(), spec.eigenvalues.begin(),
                      spec.eigenvalues.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(2, spec.eigenvalues.size())));
  }
  std::sort(low_levels.begin(), low_levels.end());

  GroundState gs;
  gs.params = params;
  gs.sector = winning_sector(minima);
  gs.degenerate = low_levels.size() > 1 && low_levels[1] - low_levels[0] <= kDegeneracyTol;

  const auto h = build_hamiltonian(params, gs.sector);
  const auto spec = diagonalize(h);
  gs.energy = spec.eigenvalues[0];
  gs.amplitudes.assign(full_dimension(params.n), 0.0);
  const auto v = spec.eigenvectors.row(0);
  for (std::size_t i = 0; i < h.basis.size(); ++i) gs.amplitudes[h.basis[i]] = v[i];
  return gs;
}

}  // namespace xyring
