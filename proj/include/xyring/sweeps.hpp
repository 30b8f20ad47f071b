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
 * @file sweeps.hpp
 * @brief Parameter sweeps, ground-state level crossings and level diagrams.
 *
 * For gamma = 0 the field term is constant inside a magnetization block and
 * the coupling part scales linearly with J, so every block minimum is an
 * affine function of Bz (at fixed J) and of J (at fixed Bz, on each side of
 * J = 0). The ground-state crossings are then the breakpoints of the lower
 * envelope of a handful of lines, which find_crossings_closed_form computes
 * exactly. find_crossings_bisection is the numerical route: it scans a
 * coarse grid and bisects every bracket, and also covers gamma != 0 where
 * crossings show up as jumps in the pair observables.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "xyring/eigensolver.hpp"
#include "xyring/error.hpp"
#include "xyring/hamiltonian.hpp"
#include "xyring/observables.hpp"
#include "xyring/spin_basis.hpp"

namespace xyring {

enum class Axis { J, Bz, Gamma };

constexpr std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::J: return "j";
    case Axis::Bz: return "bz";
    case Axis::Gamma: return "gamma";
  }
  return "";
}

inline Axis parse_axis(std::string_view text) {
  if (text == "j" || text == "J") return Axis::J;
  if (text == "bz" || text == "Bz") return Axis::Bz;
  if (text == "gamma") return Axis::Gamma;
  throw Error(ErrorKind::InvalidParams, "unknown axis '" + std::string(text) + "'");
}

inline ModelParams with_axis(ModelParams p, Axis axis, double value) {
  switch (axis) {
    case Axis::J: p.j = value; break;
    case Axis::Bz: p.bz = value; break;
    case Axis::Gamma: p.gamma = value; break;
  }
  return p;
}

/// Inclusive grid from, from + step, ..., to. The last point is `to` itself.
inline std::vector<double> sweep_grid(double from, double to, double step) {
  if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step) || !(step > 0.0) || !(from < to)) {
    throw Error(ErrorKind::InvalidRange, "need finite from < to and step > 0");
  }
  const double steps = std::floor((to - from) / step + 1e-9);
  if (steps > 1e7) throw Error(ErrorKind::InvalidRange, "grid has more than 1e7 points");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps) + 2);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(steps); ++i) {
    grid.push_back(from + static_cast<double>(i) * step);
  }
  if (to - grid.back() > 1e-9 * step) {
    grid.push_back(to);
  } else {
    grid.back() = to;
  }
  return grid;
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Results must be
/// written by index; the lowest-index exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, 256));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct SweepRecord {
  ModelParams params;
  double axis_value = 0.0;
  double ground_energy = 0.0;
  Sector sector = Sector::full();
  double c12 = 0.0;
  double con = 0.0;
  bool degenerate = false;
};

/// Ground state plus nearest-neighbour observables of sites (1, 2).
inline SweepRecord evaluate_point(const ModelParams& params, double axis_value = 0.0) {
  const GroundState gs = ground_state(params);
  const auto rho = partial_trace(gs, 1, 2);
  return {params, axis_value, gs.energy, gs.sector, correlation(rho), concurrence(rho), gs.degenerate};
}

inline std::vector<SweepRecord> sweep(const ModelParams& base, Axis axis, double from, double to, double step,
                                      int threads = 1) {
  const auto grid = sweep_grid(from, to, step);
  std::vector<SweepRecord> out(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) { out[i] = evaluate_point(with_axis(base, axis, grid[i]), grid[i]); });
  return out;
}

enum class CrossingMethod { ClosedForm, Bisection };

constexpr std::string_view method_name(CrossingMethod m) {
  return m == CrossingMethod::ClosedForm ? "closed_form" : "bisection";
}

struct Crossing {
  double value = 0.0;
  Sector before = Sector::full();
  Sector after = Sector::full();
};

struct CrossingReport {
  Axis swept_parameter = Axis::J;
  std::vector<double> critical_values;
  /// Ground sector on each interval; one more entry than critical_values.
  std::vector<Sector> sector_sequence;
  CrossingMethod method = CrossingMethod::ClosedForm;

  std::size_t count() const { return critical_values.size(); }

  Crossing crossing(std::size_t i) const { return {critical_values[i], sector_sequence[i], sector_sequence[i + 1]}; }
};

namespace detail {

struct Line {
  double slope;
  double intercept;
  Sector sector;

  double at(double x) const { return slope * x + intercept; }
};

struct Envelope {
  Sector start;
  std::vector<Crossing> crossings;
};

// Breakpoints of min_k lines[k](x) on [lo, hi). Among lines tied at a point
// the one with the smaller slope wins (it stays lowest to the right), then
// the lower sector label.
inline Envelope lower_envelope(const std::vector<Line>& lines, double lo, double hi) {
  // Values or slopes closer than kDegeneracyTol tie; a tie at `lo` goes to the
  // line that wins just to the right of it, then to the lower label.
  auto steeper = [](const Line& a, const Line& b) { return a.slope < b.slope - kDegeneracyTol; };
  auto same_slope = [&](const Line& a, const Line& b) { return !steeper(a, b) && !steeper(b, a); };
  auto better = [&](const Line& a, double va, const Line& b, double vb) {
    if (std::abs(va - vb) > kDegeneracyTol) return va < vb;
    if (!same_slope(a, b)) return steeper(a, b);
    return a.sector < b.sector;
  };
  std::size_t active = 0;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (better(lines[k], lines[k].at(lo), lines[active], lines[active].at(lo))) active = k;
  }
  Envelope env{lines[active].sector, {}};
  double x = lo;
  for (;;) {
    std::optional<std::size_t> next;
    double next_x = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (!steeper(lines[k], lines[active])) continue;
      const double meet = (lines[k].intercept - lines[active].intercept) / (lines[active].slope - lines[k].slope);
      if (!(meet > x)) continue;
      if (!next || meet < next_x ||
          (meet == next_x && (steeper(lines[k], lines[*next]) ||
                              (same_slope(lines[k], lines[*next]) && lines[k].sector < lines[*next].sector)))) {
        next = k;
        next_x = meet;
      }
    }
    if (!next || !(next_x < hi)) break;
    env.crossings.push_back({next_x, lines[active].sector, lines[*next].sector});
    active = *next;
    x = next_x;
  }
  return env;
}

inline void require_isotropic(const ModelParams& p) {
  if (!p.isotropic()) {
    throw Error(ErrorKind::UnsupportedAnisotropy,
                "sector-resolved analysis needs gamma = 0 (" + p.describe() + ")");
  }
}

inline void require_crossing_axis(Axis axis) {
  if (axis == Axis::Gamma) throw Error(ErrorKind::InvalidParams, "crossings are located along j or bz only");
}

inline CrossingReport to_report(Axis axis, CrossingMethod method, Sector start, const std::vector<Crossing>& xs) {
  CrossingReport r;
  r.swept_parameter = axis;
  r.method = method;
  r.sector_sequence.push_back(start);
  for (const auto& c : xs) {
    r.critical_values.push_back(c.value);
    r.sector_sequence.push_back(c.after);
  }
  return r;
}

}  // namespace detail

/**
 * Exact ground-state crossings for gamma = 0 along `axis` on [from, to).
 *
 * Along Bz the block minima are eps_k(J) + Bz (n - 2k). Along J they are
 * J * eps_k(1) + Bz (n - 2k) for J >= 0, and J * mu_k(1) + Bz (n - 2k) for
 * J < 0 where mu_k is the block maximum. The default range is the positive
 * half-axis.
 */
inline CrossingReport find_crossings_closed_form(const ModelParams& base, Axis axis, double from = 0.0,
                                                 double to = std::numeric_limits<double>::infinity()) {
  base.validate();
  detail::require_isotropic(base);
  detail::require_crossing_axis(axis);
  if (std::isnan(from) || std::isnan(to) || !std::isfinite(from) || !(from < to)) {
    throw Error(ErrorKind::InvalidRange, "need finite from < to");
  }
  const int n = base.n;
  std::vector<detail::Line> low;
  std::vector<detail::Line> high;
  for (const Sector& s : conserved_sectors(n, true)) {
    const double field_slope = n - 2 * s.weight();
    if (axis == Axis::Bz) {
      ModelParams p = base;
      p.bz = 0.0;
      const double eps = diagonalize(build_hamiltonian(p, s), false).eigenvalues.front();
      low.push_back({field_slope, eps, s});
    } else {
      ModelParams p = base;
      p.j = 1.0;
      p.bz = 0.0;
      const auto values = diagonalize(build_hamiltonian(p, s), false).eigenvalues;
      const double c = base.bz * field_slope;
      low.push_back({values.front(), c, s});
      // Reflected to u = -J >= 0: E = u * (-mu_k) + c.
      high.push_back({-values.back(), c, s});
    }
  }

  if (axis == Axis::Bz || from >= 0.0) {
    const auto env = detail::lower_envelope(low, from, to);
    return detail::to_report(axis, CrossingMethod::ClosedForm, env.start, env.crossings);
  }

  // Negative J: walk the reflected envelope from u = -from down to u = max(0, -to).
  const double u_hi = -from;
  const double u_lo = to < 0.0 ? -to : 0.0;
  const auto neg = detail::lower_envelope(high, u_lo, u_hi);
  std::vector<Crossing> xs;
  Sector start = neg.start;
  if (!neg.crossings.empty()) start = neg.crossings.back().after;
  for (auto it = neg.crossings.rbegin(); it != neg.crossings.rend(); ++it) {
    xs.push_back({-it->value, it->after, it->before});
  }
  if (to > 0.0) {
    const auto pos = detail::lower_envelope(low, 0.0, to);
    if (pos.start != neg.start) xs.push_back({0.0, neg.start, pos.start});
    xs.insert(xs.end(), pos.crossings.begin(), pos.crossings.end());
  }
  return detail::to_report(axis, CrossingMethod::ClosedForm, start, xs);
}

struct BisectionOptions {
  double coarse_step = 0.01;
  double tolerance = 1e-6;
  double c12_jump = 0.05;
  double con_jump = 0.02;
  int threads = 1;
};

/**
 * Numerical crossing search on [from, to].
 *
 * gamma = 0: the ground sector label is tracked on the coarse grid and
 * every bracket where it changes is bisected (recursively, so several
 * crossings inside one cell are all found) down to `tolerance`.
 *
 * gamma != 0: a crossing is an adjacent pair of non-degenerate grid points
 * whose c12 or concurrence differ by more than the jump thresholds; the
 * bracket is bisected towards the half carrying the larger change.
 *
 * Reported values are bracket midpoints.
 */
inline CrossingReport find_crossings_bisection(const ModelParams& base, Axis axis, double from, double to,
                                               const BisectionOptions& opt = {}) {
  base.validate();
  detail::require_crossing_axis(axis);
  if (!(opt.tolerance > 0.0)) throw Error(ErrorKind::InvalidRange, "bisection tolerance must be positive");
  const auto grid = sweep_grid(from, to, opt.coarse_step);
  std::vector<Crossing> found;
  Sector start = Sector::full();

  if (base.isotropic()) {
    auto label = [&](double x) { return winning_sector(sector_ground_energies(with_axis(base, axis, x))); };
    std::vector<Sector> labels(grid.size(), Sector::full());
    parallel_for(grid.size(), opt.threads, [&](std::size_t i) { labels[i] = label(grid[i]); });
    start = labels.front();

    auto refine = [&](auto&& self, double a, Sector la, double b, Sector lb) -> void {
      if (b - a <= opt.tolerance) {
        found.push_back({0.5 * (a + b), la, lb});
        return;
      }
      const double m = 0.5 * (a + b);
      const Sector lm = label(m);
      if (lm != la) self(self, a, la, m, lm);
      if (lm != lb) self(self, m, lm, b, lb);
    };
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      if (labels[i] != labels[i + 1]) refine(refine, grid[i], labels[i], grid[i + 1], labels[i + 1]);
    }
    return detail::to_report(axis, CrossingMethod::Bisection, start, found);
  }

  std::vector<SweepRecord> recs(grid.size());
  parallel_for(grid.size(), opt.threads,
               [&](std::size_t i) { recs[i] = evaluate_point(with_axis(base, axis, grid[i]), grid[i]); });
  start = recs.front().sector;

  auto score = [&](const SweepRecord& a, const SweepRecord& b) {
    return std::abs(b.c12 - a.c12) / opt.c12_jump + std::abs(b.con - a.con) / opt.con_jump;
  };
  const SweepRecord* prev = nullptr;
  for (const auto& cur : recs) {
    if (cur.degenerate) continue;
    if (prev != nullptr &&
        (std::abs(cur.c12 - prev->c12) > opt.c12_jump || std::abs(cur.con - prev->con) > opt.con_jump)) {
      SweepRecord a = *prev;
      SweepRecord b = cur;
      while (b.axis_value - a.axis_value > opt.tolerance) {
        const double m = 0.5 * (a.axis_value + b.axis_value);
        SweepRecord mid = evaluate_point(with_axis(base, axis, m), m);
        if (score(a, mid) >= score(mid, b)) {
          b = mid;
        } else {
          a = mid;
        }
      }
      found.push_back({0.5 * (a.axis_value + b.axis_value), a.sector, b.sector});
    }
    prev = &cur;
  }
  return detail::to_report(axis, CrossingMethod::Bisection, start, found);
}

struct LevelTable {
  std::vector<double> bz;
  std::vector<Sector> sectors;
  /// energies[i][k]: lowest level of sectors[k] at bz[i].
  std::vector<std::vector<double>> energies;
};

/// Lowest level of every magnetization block on a Bz grid (gamma = 0 only).
inline LevelTable level_diagram(const ModelParams& base, double bz_from, double bz_to, double step, int threads = 1) {
  base.validate();
  detail::require_isotropic(base);
  LevelTable t;
  t.bz = sweep_grid(bz_from, bz_to, step);
  t.sectors = conserved_sectors(base.n, true);
  t.energies.assign(t.bz.size(), {});
  parallel_for(t.bz.size(), threads, [&](std::size_t i) {
    const auto minima = sector_ground_energies(with_axis(base, Axis::Bz, t.bz[i]));
    auto& row = t.energies[i];
    for (const auto& s : t.sectors) row.push_back(minima.at(s));
  });
  return t;
}

}  // namespace xyring
