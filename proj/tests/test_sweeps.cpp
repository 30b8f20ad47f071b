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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "xyring/sweeps.hpp"

using namespace xyring;

namespace {

ModelParams params(int n, double j, double gamma, double bz) { return {n, j, gamma, bz}; }

// Ground sector by brute force: scan every magnetization block of the
// Kronecker-product Hamiltonian with Eigen.
int oracle_ground_weight(const ModelParams& p) {
  const auto h = oracle::ring_hamiltonian(p.n, p.jx(), p.jy(), p.bz);
  int best_k = -1;
  double best = 1e300;
  for (int k = 0; k <= p.n; ++k) {
    const double e = oracle::spectrum(oracle::restrict(h, oracle::words_with_weight(p.n, k)))(0);
    if (e < best - 1e-9) {
      best = e;
      best_k = k;
    }
  }
  return best_k;
}

}  // namespace

TEST(SweepGrid, InclusiveEndpoints) {
  const auto g = sweep_grid(0.1, 3.0, 0.01);
  EXPECT_EQ(g.size(), 291u);
  EXPECT_EQ(g.front(), 0.1);
  EXPECT_EQ(g.back(), 3.0);
  const auto odd = sweep_grid(0.0, 1.0, 0.3);
  EXPECT_EQ(odd, (std::vector<double>{0.0, 0.3, 0.6, 0.8999999999999999, 1.0}));
}

TEST(SweepGrid, RejectsEmptyOrBackwardRanges) {
  for (auto [a, b, s] : {std::tuple{1.0, 1.0, 0.1}, {2.0, 1.0, 0.1}, {0.0, 1.0, 0.0}, {0.0, 1.0, -0.1}}) {
    try {
      sweep_grid(a, b, s);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidRange);
    }
  }
  EXPECT_THROW(sweep(params(6, 1, 0, 1.3), Axis::J, 1.0, 1.0, 0.01), Error);
}

TEST(Sweep, LadderInJWithJumpsAtTheCrossings) {
  const auto recs = sweep(params(6, 1.0, 0.0, 1.30), Axis::J, 0.1, 3.0, 0.01);
  ASSERT_EQ(recs.size(), 291u);
  std::vector<double> jumps;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    EXPECT_EQ(recs[i].params.j, recs[i].axis_value);
    if (std::abs(recs[i].c12 - recs[i - 1].c12) > 1e-9) jumps.push_back(0.5 * (recs[i].axis_value + recs[i - 1].axis_value));
  }
  ASSERT_EQ(jumps.size(), 3u);
  const double want[] = {0.650, 0.888, 2.426};
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(jumps[static_cast<std::size_t>(i)], want[i], 0.006);
}

TEST(Sweep, RecordsSatisfyRangeInvariants) {
  for (const auto& recs : {sweep(params(6, 1.0, 0.0, 0.0), Axis::Bz, 0.0, 3.0, 0.1),
                           sweep(params(6, 1.0, 0.5, 0.0), Axis::Bz, 0.0, 3.0, 0.1),
                           sweep(params(6, 1.0, 0.0, 1.0), Axis::Gamma, -1.0, 1.0, 0.25)}) {
    for (const auto& r : recs) {
      EXPECT_GE(r.c12, -3.0 - 1e-12);
      EXPECT_LE(r.c12, 1.0 + 1e-12);
      EXPECT_GE(r.con, 0.0);
      EXPECT_LE(r.con, 1.0);
      if (r.degenerate) continue;
      double best = 1e300;
      for (const auto& [s, e] : sector_ground_energies(r.params)) best = std::min(best, e);
      EXPECT_NEAR(r.ground_energy, best, 1e-10);
    }
  }
}

TEST(Sweep, IsingLimitIsSmooth) {
  const auto recs = sweep(params(6, 1.0, 1.0, 0.0), Axis::Bz, 0.0, 3.0, 0.01);
  double dc = 0.0, dcon = 0.0;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    dc = std::max(dc, std::abs(recs[i].c12 - recs[i - 1].c12));
    dcon = std::max(dcon, std::abs(recs[i].con - recs[i - 1].con));
  }
  EXPECT_LT(dc, 0.05);
  EXPECT_LT(dcon, 0.05);
}

TEST(Sweep, ParallelOutputIdenticalToSerial) {
  const auto a = sweep(params(8, 1.0, 0.3, 0.0), Axis::Bz, 0.0, 2.0, 0.05, 1);
  const auto b = sweep(params(8, 1.0, 0.3, 0.0), Axis::Bz, 0.0, 2.0, 0.05, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].axis_value, b[i].axis_value);
    EXPECT_EQ(a[i].ground_energy, b[i].ground_energy);
    EXPECT_EQ(a[i].c12, b[i].c12);
    EXPECT_EQ(a[i].con, b[i].con);
    EXPECT_EQ(a[i].sector, b[i].sector);
  }
}

TEST(Sweep, CorrelationConstantBetweenCrossings) {
  const auto base = params(8, 1.0, 0.0, 1.30);
  const auto rep = find_crossings_closed_form(base, Axis::J);
  const auto recs = sweep(base, Axis::J, 0.05, 4.0, 0.01);
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const bool straddles = std::any_of(rep.critical_values.begin(), rep.critical_values.end(), [&](double x) {
      return recs[i - 1].axis_value <= x && x <= recs[i].axis_value;
    });
    if (!straddles) { EXPECT_NEAR(recs[i].c12, recs[i - 1].c12, 1e-9) << recs[i].axis_value; }
  }
}

TEST(ClosedForm, CriticalFieldsAtUnitCoupling) {
  const auto rep = find_crossings_closed_form(params(6, 1.0, 0.0, 0.0), Axis::Bz);
  ASSERT_EQ(rep.count(), 3u);
  EXPECT_NEAR(rep.critical_values[0], 4.0 - 2.0 * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(rep.critical_values[1], 1.4641016151377544, 1e-12);  // -e_4 + e_5 gap over 2
  EXPECT_NEAR(rep.critical_values[2], 2.0, 1e-12);
  EXPECT_EQ(rep.sector_sequence,
            (std::vector<Sector>{Sector::magnetization(3), Sector::magnetization(4), Sector::magnetization(5),
                                 Sector::magnetization(6)}));
  EXPECT_EQ(rep.method, CrossingMethod::ClosedForm);
}

TEST(ClosedForm, TableRowsInJ) {
  const auto n4 = find_crossings_closed_form(params(4, 1.0, 0.0, 1.30), Axis::J);
  ASSERT_EQ(n4.count(), 2u);
  EXPECT_NEAR(n4.critical_values[0], 0.649, 0.002);
  EXPECT_NEAR(n4.critical_values[1], 1.569, 0.002);

  const auto n10 = find_crossings_closed_form(params(10, 1.0, 0.0, 1.30), Axis::J);
  const double want[] = {0.650, 0.721, 0.908, 1.415, 4.104};
  ASSERT_EQ(n10.count(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(n10.critical_values[i], want[i], 0.002);
}

TEST(ClosedForm, AgreesWithBruteForceGroundSector) {
  // Between and around every crossing the oracle's ground weight must match.
  const auto base = params(6, 1.0, 0.0, 1.30);
  const auto rep = find_crossings_closed_form(base, Axis::J);
  for (std::size_t i = 0; i < rep.count(); ++i) {
    const double x = rep.critical_values[i];
    EXPECT_EQ(oracle_ground_weight(with_axis(base, Axis::J, x - 1e-4)), rep.sector_sequence[i].weight());
    EXPECT_EQ(oracle_ground_weight(with_axis(base, Axis::J, x + 1e-4)), rep.sector_sequence[i + 1].weight());
  }
}

TEST(ClosedForm, FieldProportionality) {
  const auto ref = find_crossings_closed_form(params(6, 1.0, 0.0, 1.30), Axis::J);
  for (double lambda : {0.5, 2.0, 3.7}) {
    const auto rep = find_crossings_closed_form(params(6, 1.0, 0.0, 1.30 * lambda), Axis::J);
    ASSERT_EQ(rep.count(), ref.count());
    for (std::size_t i = 0; i < rep.count(); ++i)
      EXPECT_NEAR(rep.critical_values[i], lambda * ref.critical_values[i], 1e-9);
  }
}

TEST(ClosedForm, HalfTheSitesManyJumpsWeightStepsByOne) {
  for (int n : {4, 5, 6, 7, 8, 10}) {
    const auto rep = find_crossings_closed_form(params(n, 1.0, 0.0, 1.30), Axis::J);
    EXPECT_EQ(rep.count(), static_cast<std::size_t>(n / 2)) << n;
    EXPECT_EQ(rep.sector_sequence.front(), Sector::magnetization(n));
    for (std::size_t i = 0; i < rep.count(); ++i)
      EXPECT_EQ(rep.sector_sequence[i].weight() - rep.sector_sequence[i + 1].weight(), 1);
  }
}

TEST(ClosedForm, NegativeCouplingMirrorsPositiveOnEvenRings) {
  // Even rings are bipartite, so J -> -J is a unitary equivalence at gamma = 0.
  const auto rep = find_crossings_closed_form(params(6, 1.0, 0.0, 1.30), Axis::J, -3.0, 3.0);
  ASSERT_EQ(rep.count(), 6u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(rep.critical_values[i], -rep.critical_values[5 - i], 1e-12);
  EXPECT_EQ(rep.sector_sequence[3], Sector::magnetization(6));
  for (std::size_t i = 0; i < rep.count(); ++i) {
    const double x = rep.critical_values[i];
    EXPECT_EQ(oracle_ground_weight(with_axis(params(6, 1.0, 0.0, 1.30), Axis::J, x - 1e-4)),
              rep.sector_sequence[i].weight());
  }
}

TEST(ClosedForm, RangeLimitsAndErrors) {
  const auto part = find_crossings_closed_form(params(6, 1.0, 0.0, 1.30), Axis::J, 0.7, 2.0);
  ASSERT_EQ(part.count(), 1u);
  EXPECT_NEAR(part.critical_values[0], 0.888, 0.002);
  EXPECT_EQ(part.sector_sequence.front(), Sector::magnetization(5));
  try {
    find_crossings_closed_form(params(6, 1.0, 0.2, 1.30), Axis::J);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedAnisotropy);
  }
  EXPECT_THROW(find_crossings_closed_form(params(6, 1.0, 0.0, 1.30), Axis::Gamma), Error);
}

TEST(Bisection, MatchesClosedFormForIsotropicRing) {
  const auto base = params(6, 1.0, 0.0, 1.30);
  const auto exact = find_crossings_closed_form(base, Axis::J, 0.1, 3.0);
  const auto num = find_crossings_bisection(base, Axis::J, 0.1, 3.0);
  ASSERT_EQ(num.count(), exact.count());
  EXPECT_EQ(num.sector_sequence, exact.sector_sequence);
  EXPECT_EQ(num.method, CrossingMethod::Bisection);
  for (std::size_t i = 0; i < num.count(); ++i) EXPECT_NEAR(num.critical_values[i], exact.critical_values[i], 1e-6);
}

TEST(Bisection, HalfFieldTableRow) {
  const auto rep = find_crossings_bisection(params(6, 1.0, 0.0, 0.65), Axis::J, 0.05, 3.0);
  ASSERT_EQ(rep.count(), 3u);
  const double want[] = {0.325, 0.444, 1.213};
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(rep.critical_values[i], want[i], 0.002);
}

TEST(Bisection, FindsSeveralCrossingsInsideOneCoarseCell) {
  BisectionOptions opt;
  opt.coarse_step = 2.5;
  const auto rep = find_crossings_bisection(params(6, 1.0, 0.0, 0.0), Axis::Bz, 0.0, 2.5, opt);
  ASSERT_EQ(rep.count(), 3u);
  EXPECT_NEAR(rep.critical_values[0], 4.0 - 2.0 * std::sqrt(3.0), 1e-6);
  EXPECT_NEAR(rep.critical_values[2], 2.0, 1e-6);
}

TEST(Bisection, IsingLimitHasNoCrossings) {
  const auto rep = find_crossings_bisection(params(6, 1.0, 1.0, 0.0), Axis::Bz, 0.0, 3.0);
  EXPECT_EQ(rep.count(), 0u);
  EXPECT_EQ(rep.sector_sequence.size(), 1u);
}

TEST(Bisection, WeakAnisotropyStillShowsJumps) {
  const auto rep = find_crossings_bisection(params(6, 1.0, 0.1, 0.0), Axis::Bz, 0.0, 3.0);
  ASSERT_EQ(rep.count(), 3u);
  // Transitions move slightly towards Bz = 0 as gamma grows.
  const auto iso = find_crossings_closed_form(params(6, 1.0, 0.0, 0.0), Axis::Bz);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_LT(rep.critical_values[i], iso.critical_values[i]);
    EXPECT_GT(rep.critical_values[i], iso.critical_values[i] - 0.1);
  }
}

TEST(LevelDiagram, AffineCurvesWhoseEnvelopeSwitchesAtTheCrossings) {
  const auto base = params(6, 1.0, 0.0, 0.0);
  const auto t = level_diagram(base, 0.0, 3.0, 0.01);
  ASSERT_EQ(t.sectors.size(), 7u);
  ASSERT_EQ(t.bz.size(), 301u);
  // Affinity: constant slope n - 2k.
  for (std::size_t k = 0; k < 7; ++k)
    for (std::size_t i = 0; i < t.bz.size(); ++i)
      EXPECT_NEAR(t.energies[i][k] - t.energies[0][k], t.bz[i] * (6.0 - 2.0 * static_cast<double>(k)), 1e-10);

  // Intersections of the fitted lines reproduce the closed form.
  const auto rep = find_crossings_closed_form(base, Axis::Bz);
  for (std::size_t c = 0; c < rep.count(); ++c) {
    const auto a = static_cast<std::size_t>(rep.sector_sequence[c].weight());
    const auto b = static_cast<std::size_t>(rep.sector_sequence[c + 1].weight());
    const double sa = 6.0 - 2.0 * static_cast<double>(a), sb = 6.0 - 2.0 * static_cast<double>(b);
    const double meet = (t.energies[0][b] - t.energies[0][a]) / (sa - sb);
    EXPECT_NEAR(meet, rep.critical_values[c], 1e-9);
  }

  // Lower envelope switches between the same grid points.
  std::vector<std::size_t> winner;
  for (const auto& row : t.energies) winner.push_back(static_cast<std::size_t>(std::min_element(row.begin(), row.end()) - row.begin()));
  std::size_t switches = 0;
  for (std::size_t i = 1; i < winner.size(); ++i) switches += winner[i] != winner[i - 1];
  EXPECT_EQ(switches, 3u);
}

TEST(LevelDiagram, UncoupledLinesAllMeetAtZeroField) {
  const auto t = level_diagram(params(4, 0.0, 0.0, 0.0), -1.0, 1.0, 0.5);
  for (std::size_t i = 0; i < t.bz.size(); ++i)
    for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(t.energies[i][k], t.bz[i] * (4.0 - 2.0 * static_cast<double>(k)), 1e-12);
  const auto rep = find_crossings_closed_form(params(4, 0.0, 0.0, 0.0), Axis::Bz, -1.0, 1.0);
  ASSERT_EQ(rep.count(), 1u);
  EXPECT_EQ(rep.critical_values[0], 0.0);
}

TEST(LevelDiagram, Errors) {
  EXPECT_THROW(level_diagram(params(6, 1.0, 0.3, 0.0), 0.0, 1.0, 0.1), Error);
  EXPECT_THROW(level_diagram(params(6, 1.0, 0.0, 0.0), 0.0, 1.0, 0.0), Error);
}

TEST(ClosedForm, OddRingAtZeroFieldStartsInTheSectorThatWinsJustAbove) {
  const auto rep = find_crossings_closed_form(params(5, 1.0, 0.0, 0.0), Axis::Bz);
  EXPECT_EQ(rep.sector_sequence.front(), Sector::magnetization(3));
  ASSERT_EQ(rep.count(), 2u);
  const auto num = find_crossings_bisection(params(5, 1.0, 0.0, 0.0), Axis::Bz, 0.05, 3.0);
  ASSERT_EQ(num.count(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(num.critical_values[i], rep.critical_values[i], 1e-6);
}
