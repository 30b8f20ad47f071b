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
 * @file io_json.hpp
 * @brief JSON dump and reload of a ground state.
 *
 * Schema:
 * @code
 * {
 *   "params": {"n": 6, "j": 1, "gamma": 0, "bz": 3, "jx": 1, "jy": 1},
 *   "energy": -18,
 *   "sector": "k=6",
 *   "degenerate": false,
 *   "amplitudes": [{"basis": "111111", "amplitude": 1}]
 * }
 * @endcode
 * Amplitudes below 1e-12 in magnitude are omitted. Numbers are written in
 * shortest round-trip form so a reloaded state reproduces the energy to
 * machine precision.
 */

#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

#include "xyring/eigensolver.hpp"
#include "xyring/error.hpp"
#include "xyring/spin_basis.hpp"

namespace xyring::io {

inline nlohmann::ordered_json params_json(const ModelParams& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["j"] = p.j;
  j["gamma"] = p.gamma;
  j["bz"] = p.bz;
  j["jx"] = p.jx();
  j["jy"] = p.jy();
  return j;
}

inline nlohmann::ordered_json ground_state_json(const GroundState& gs) {
  nlohmann::ordered_json j;
  j["params"] = params_json(gs.params);
  j["energy"] = gs.energy;
  j["sector"] = gs.sector.label();
  j["degenerate"] = gs.degenerate;
  auto amps = nlohmann::ordered_json::array();
  for (BasisState s = 0; s < gs.amplitudes.size(); ++s) {
    if (std::abs(gs.amplitudes[s]) < 1e-12) continue;
    amps.push_back({{"basis", to_bitstring(s, gs.sites())}, {"amplitude", gs.amplitudes[s]}});
  }
  j["amplitudes"] = std::move(amps);
  return j;
}

/// Rebuilds params, energy and the full amplitude vector. The sector label is
/// not parsed back; `sector` is left as Full.
inline GroundState ground_state_from_json(const nlohmann::json& j) {
  GroundState gs;
  try {
    const auto& p = j.at("params");
    gs.params.n = p.at("n").get<int>();
    gs.params.j = p.at("j").get<double>();
    gs.params.gamma = p.at("gamma").get<double>();
    gs.params.bz = p.at("bz").get<double>();
    gs.energy = j.at("energy").get<double>();
    gs.degenerate = j.value("degenerate", false);
    gs.params.validate();
    gs.amplitudes.assign(full_dimension(gs.params.n), 0.0);
    for (const auto& entry : j.at("amplitudes")) {
      const auto bits = entry.at("basis").get<std::string>();
      if (static_cast<int>(bits.size()) != gs.params.n) {
        throw Error(ErrorKind::InvalidParams, "basis label '" + bits + "' has the wrong width");
      }
      gs.amplitudes[from_bitstring(bits)] = entry.at("amplitude").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidParams, std::string("malformed ground-state JSON: ") + e.what());
  }
  return gs;
}

}  // namespace xyring::io
