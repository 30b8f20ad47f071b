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

// CSV writers. Every float goes through fmt9 (9 significant digits), lines
// end in '\n' only.

#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "xyring/eigensolver.hpp"
#include "xyring/hamiltonian.hpp"
#include "xyring/observables.hpp"
#include "xyring/sweeps.hpp"

namespace xyring::io {

inline std::string fmt9(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

inline const char* fmt_bool(bool b) { return b ? "true" : "false"; }

inline void write_sweep_csv(std::ostream& os, Axis axis, const std::vector<SweepRecord>& records) {
  os << "axis_name,axis_value,n,j,gamma,bz,ground_energy,sector,c12,concurrence,degenerate\n";
  for (const auto& r : records) {
    os << axis_name(axis) << ',' << fmt9(r.axis_value) << ',' << r.params.n << ',' << fmt9(r.params.j) << ','
       << fmt9(r.params.gamma) << ',' << fmt9(r.params.bz) << ',' << fmt9(r.ground_energy) << ','
       << r.sector.label() << ',' << fmt9(r.c12) << ',' << fmt9(r.con) << ',' << fmt_bool(r.degenerate) << '\n';
  }
}

inline void write_crossings_csv(std::ostream& os, const CrossingReport& report) {
  os << "index,critical_value,sector_before,sector_after,method\n";
  for (std::size_t i = 0; i < report.count(); ++i) {
    const auto c = report.crossing(i);
    os << i << ',' << fmt9(c.value) << ',' << c.before.label() << ',' << c.after.label() << ','
       << method_name(report.method) << '\n';
  }
}

inline void write_levels_csv(std::ostream& os, const LevelTable& table) {
  os << "bz";
  for (const auto& s : table.sectors) os << ',' << s.label();
  os << '\n';
  for (std::size_t i = 0; i < table.bz.size(); ++i) {
    os << fmt9(table.bz[i]);
    for (double e : table.energies[i]) os << ',' << fmt9(e);
    os << '\n';
  }
}

/// Nonzero entries as row,col,value in row-major order.
inline void write_matrix_csv(std::ostream& os, const HamiltonianMatrix& h) {
  os << "row,col,value\n";
  for (std::size_t r = 0; r < h.entries.rows(); ++r)
    for (std::size_t c = 0; c < h.entries.cols(); ++c)
      if (h.entries(r, c) != 0.0) os << r << ',' << c << ',' << fmt9(h.entries(r, c)) << '\n';
}

inline void write_rho_csv(std::ostream& os, const ReducedDensityMatrix& r) {
  os << "row,00,01,10,11\n";
  static const char* const names[4] = {"00", "01", "10", "11"};
  for (int a = 0; a < 4; ++a) {
    os << names[a];
    for (int b = 0; b < 4; ++b) os << ',' << fmt9(r.rho[a][b]);
    os << '\n';
  }
}

inline void write_spectrum_csv(std::ostream& os, const std::vector<SectorSpectrum>& spectra) {
  os << "sector,index,energy\n";
  for (const auto& sp : spectra)
    for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i)
      os << sp.sector.label() << ',' << i << ',' << fmt9(sp.eigenvalues[i]) << '\n';
}

/// basis,amplitude rows for amplitudes at or above 1e-12 in magnitude.
inline void write_ground_csv(std::ostream& os, const GroundState& gs) {
  os << "basis,amplitude\n";
  for (BasisState s = 0; s < gs.amplitudes.size(); ++s)
    if (std::abs(gs.amplitudes[s]) >= 1e-12) os << to_bitstring(s, gs.sites()) << ',' << fmt9(gs.amplitudes[s]) << '\n';
}

}  // namespace xyring::io
