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

// Command-line front end: ground, spectrum, observables, sweep, crossings,
// levels and verify. Exit codes: 0 ok, 2 usage, 3 numerical, 4 I/O.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xyring/io.hpp"
#include "xyring/io_json.hpp"
#include "xyring/xyring.hpp"

namespace {

using namespace xyring;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelFlags {
  int n = 6;
  double j = 1.0;
  double gamma = 0.0;
  double jx = 0.0;
  double jy = 0.0;
  double bz = 0.0;
  CLI::Option* j_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* jx_opt = nullptr;
  CLI::Option* jy_opt = nullptr;

  void add_to(CLI::App* app) {
    app->add_option("--n", n, "number of sites (3..14)")->capture_default_str();
    j_opt = app->add_option("--j", j, "coupling J")->capture_default_str();
    gamma_opt = app->add_option("--gamma", gamma, "anisotropy")->capture_default_str();
    jx_opt = app->add_option("--jx", jx, "x coupling (use with --jy)");
    jy_opt = app->add_option("--jy", jy, "y coupling (use with --jx)");
    app->add_option("--bz", bz, "transverse field")->capture_default_str();
  }

  ModelParams resolve() const {
    const bool polar = *j_opt || *gamma_opt;
    const bool cartesian = *jx_opt || *jy_opt;
    if (polar && cartesian) throw UsageError("give either --j/--gamma or --jx/--jy, not both");
    if (cartesian) {
      if (!*jx_opt || !*jy_opt) throw UsageError("--jx and --jy must be given together");
      return ModelParams::from_jxjy(n, jx, jy, bz);
    }
    ModelParams p{n, j, gamma, bz};
    p.validate();
    return p;
  }
};

struct OutputFlags {
  std::string path = "-";
  std::string format = "csv";

  void add_to(CLI::App* app, bool allow_json = true) {
    app->add_option("--output,-o", path, "output file, - for stdout")->capture_default_str();
    auto* f = app->add_option("--format", format, "csv or json")->capture_default_str();
    f->check(CLI::IsMember(allow_json ? std::vector<std::string>{"csv", "json"} : std::vector<std::string>{"csv"}));
  }

  bool to_stdout() const { return path == "-"; }
};

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw IoError("read from '" + path + "' failed");
  return ss.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Rounds to nine significant digits so JSON numbers match the CSV output.
double r9(double x) { return std::strtod(io::fmt9(x).c_str(), nullptr); }

void summary(const OutputFlags& out, const std::string& text) {
  std::FILE* stream = out.to_stdout() ? stderr : stdout;
  std::fprintf(stream, "%s -> %s\n", text.c_str(), out.to_stdout() ? "stdout" : out.path.c_str());
}

std::string records_note(std::size_t count) { return " (" + std::to_string(count) + " records)"; }

json record_json(Axis axis, const SweepRecord& r) {
  json j;
  j["axis_name"] = std::string(axis_name(axis));
  j["axis_value"] = r9(r.axis_value);
  j["n"] = r.params.n;
  j["j"] = r9(r.params.j);
  j["gamma"] = r9(r.params.gamma);
  j["bz"] = r9(r.params.bz);
  j["ground_energy"] = r9(r.ground_energy);
  j["sector"] = r.sector.label();
  j["c12"] = r9(r.c12);
  j["concurrence"] = r9(r.con);
  j["degenerate"] = r.degenerate;
  return j;
}

// ground ------------------------------------------------------------------

struct GroundCmd {
  ModelFlags model;
  OutputFlags out;
  std::string matrix_path;

  void run() const {
    const auto p = model.resolve();
    const auto gs = ground_state(p);
    std::ostringstream os;
    if (out.format == "json") {
      os << dump(io::ground_state_json(gs));
    } else {
      io::write_ground_csv(os, gs);
    }
    write_text(out.path, os.str());
    if (!matrix_path.empty()) {
      std::ostringstream m;
      io::write_matrix_csv(m, build_hamiltonian(p, gs.sector));
      write_text(matrix_path, m.str());
    }
    summary(out, "ground " + p.describe() + " energy=" + io::fmt9(gs.energy) + " sector=" + gs.sector.label() +
                     (gs.degenerate ? " degenerate" : ""));
  }
};

// spectrum ----------------------------------------------------------------

struct SpectrumCmd {
  ModelFlags model;
  OutputFlags out;
  std::string sector = "blocks";
  std::string matrix_path;

  void run() const {
    const auto p = model.resolve();
    std::vector<Sector> sectors;
    if (sector == "blocks") {
      sectors = conserved_sectors(p.n, p.isotropic());
    } else {
      sectors.push_back(Sector::parse(sector));
    }
    std::vector<SectorSpectrum> spectra;
    std::size_t levels = 0;
    for (const auto& s : sectors) {
      spectra.push_back(diagonalize(build_hamiltonian(p, s), false));
      levels += spectra.back().eigenvalues.size();
    }

    std::ostringstream os;
    if (out.format == "json") {
      json j;
      j["params"] = io::params_json(p);
      auto arr = json::array();
      for (const auto& sp : spectra) {
        json e = json::array();
        for (double v : sp.eigenvalues) e.push_back(r9(v));
        arr.push_back({{"sector", sp.sector.label()}, {"eigenvalues", std::move(e)}});
      }
      j["sectors"] = std::move(arr);
      os << dump(j);
    } else {
      io::write_spectrum_csv(os, spectra);
    }
    write_text(out.path, os.str());
    if (!matrix_path.empty()) {
      std::ostringstream m;
      io::write_matrix_csv(m, build_hamiltonian(p, sectors.size() == 1 ? sectors.front() : Sector::full()));
      write_text(matrix_path, m.str());
    }
    summary(out, "spectrum " + p.describe() + records_note(levels));
  }
};

// observables -------------------------------------------------------------

struct ObservablesCmd {
  ModelFlags model;
  OutputFlags out;
  std::vector<int> sites{1, 2};
  std::string rho_path;

  void run() const {
    const auto p = model.resolve();
    const auto gs = ground_state(p);
    const auto rho = partial_trace(gs, sites[0], sites[1]);
    const double c12 = correlation(rho);
    const double con = concurrence(rho);

    std::ostringstream os;
    if (out.format == "json") {
      json j;
      j["params"] = io::params_json(p);
      j["site_i"] = sites[0];
      j["site_j"] = sites[1];
      j["ground_energy"] = r9(gs.energy);
      j["sector"] = gs.sector.label();
      j["c12"] = r9(c12);
      j["concurrence"] = r9(con);
      j["degenerate"] = gs.degenerate;
      os << dump(j);
    } else {
      os << "n,j,gamma,bz,site_i,site_j,ground_energy,sector,c12,concurrence,degenerate\n";
      os << p.n << ',' << io::fmt9(p.j) << ',' << io::fmt9(p.gamma) << ',' << io::fmt9(p.bz) << ',' << sites[0] << ','
         << sites[1] << ',' << io::fmt9(gs.energy) << ',' << gs.sector.label() << ',' << io::fmt9(c12) << ','
         << io::fmt9(con) << ',' << io::fmt_bool(gs.degenerate) << '\n';
    }
    write_text(out.path, os.str());
    if (!rho_path.empty()) {
      std::ostringstream r;
      io::write_rho_csv(r, rho);
      write_text(rho_path, r.str());
    }
    summary(out, "observables " + p.describe() + " c12=" + io::fmt9(c12) + " concurrence=" + io::fmt9(con));
  }
};

// sweep -------------------------------------------------------------------

struct SweepCmd {
  ModelFlags model;
  OutputFlags out;
  std::string axis = "bz";
  double from = 0.0;
  double to = 0.0;
  double step = 0.01;
  std::vector<double> gamma_list;
  int threads = 1;

  void run() const {
    const auto base = model.resolve();
    const Axis ax = parse_axis(axis);
    std::vector<ModelParams> bases;
    if (gamma_list.empty()) {
      bases.push_back(base);
    } else {
      if (ax == Axis::Gamma) throw UsageError("--gamma-list cannot be combined with --axis gamma");
      if (*model.gamma_opt || *model.jx_opt || *model.jy_opt) throw UsageError("--gamma-list replaces --gamma and --jx/--jy");
      for (double g : gamma_list) bases.push_back(with_axis(base, Axis::Gamma, g));
    }

    std::vector<SweepRecord> all;
    for (const auto& b : bases) {
      auto part = sweep(b, ax, from, to, step, threads);
      all.insert(all.end(), part.begin(), part.end());
    }

    std::ostringstream os;
    if (out.format == "json") {
      json arr = json::array();
      for (const auto& r : all) arr.push_back(record_json(ax, r));
      os << dump(arr);
    } else {
      io::write_sweep_csv(os, ax, all);
    }
    write_text(out.path, os.str());
    summary(out, "sweep " + base.describe() + " axis=" + axis + records_note(all.size()));
  }
};

// crossings ---------------------------------------------------------------

struct CrossingsCmd {
  ModelFlags model;
  OutputFlags out;
  std::string axis = "j";
  std::string method = "closed-form";
  double from = 0.0;
  double to = std::numeric_limits<double>::infinity();
  CLI::Option* to_opt = nullptr;
  double step = 0.01;
  int threads = 1;

  void run() const {
    const auto base = model.resolve();
    const Axis ax = parse_axis(axis);
    CrossingReport rep;
    if (method == "closed-form") {
      rep = find_crossings_closed_form(base, ax, from, to);
    } else {
      if (!*to_opt) throw UsageError("--method bisection needs --to");
      BisectionOptions opt;
      opt.coarse_step = step;
      opt.threads = threads;
      rep = find_crossings_bisection(base, ax, from, to, opt);
    }

    std::ostringstream os;
    if (out.format == "json") {
      json j;
      j["params"] = io::params_json(base);
      j["swept_parameter"] = std::string(axis_name(rep.swept_parameter));
      j["method"] = std::string(method_name(rep.method));
      json values = json::array();
      for (double v : rep.critical_values) values.push_back(r9(v));
      json seq = json::array();
      for (const auto& s : rep.sector_sequence) seq.push_back(s.label());
      j["critical_values"] = std::move(values);
      j["sector_sequence"] = std::move(seq);
      os << dump(j);
    } else {
      io::write_crossings_csv(os, rep);
    }
    write_text(out.path, os.str());
    summary(out, "crossings " + base.describe() + " axis=" + axis + " method=" + method + records_note(rep.count()));
  }
};

// levels ------------------------------------------------------------------

struct LevelsCmd {
  ModelFlags model;
  OutputFlags out;
  double bz_from = 0.0;
  double bz_to = 3.0;
  double step = 0.01;
  int threads = 1;

  void run() const {
    const auto base = model.resolve();
    const auto table = level_diagram(base, bz_from, bz_to, step, threads);
    std::ostringstream os;
    if (out.format == "json") {
      json j;
      j["params"] = io::params_json(base);
      json bz = json::array();
      for (double b : table.bz) bz.push_back(r9(b));
      j["bz"] = std::move(bz);
      json levels;
      for (std::size_t k = 0; k < table.sectors.size(); ++k) {
        json col = json::array();
        for (const auto& row : table.energies) col.push_back(r9(row[k]));
        levels[table.sectors[k].label()] = std::move(col);
      }
      j["levels"] = std::move(levels);
      os << dump(j);
    } else {
      io::write_levels_csv(os, table);
    }
    write_text(out.path, os.str());
    summary(out, "levels " + base.describe() + records_note(table.bz.size()));
  }
};

// verify ------------------------------------------------------------------

struct VerifyCmd {
  std::string input;
  double tolerance = 1e-10;

  void run() const {
    json j;
    try {
      j = json::parse(read_text(input));
    } catch (const json::parse_error& e) {
      throw IoError("'" + input + "' is not valid JSON: " + e.what());
    }
    const auto gs = io::ground_state_from_json(j);
    const auto hv = apply_hamiltonian(gs.params, Sector::full(), gs.amplitudes);
    const double norm = dot(gs.amplitudes, gs.amplitudes);
    if (!(norm > 0.0)) throw Error(ErrorKind::NotNormalized, "state in '" + input + "' has zero norm");
    const double energy = dot(gs.amplitudes, hv) / norm;
    const double diff = std::abs(energy - gs.energy);
    std::printf("verify %s stored=%s recomputed=%s diff=%s\n", gs.params.describe().c_str(),
                io::fmt9(gs.energy).c_str(), io::fmt9(energy).c_str(), io::fmt9(diff).c_str());
    if (!(diff <= tolerance)) {
      throw Error(ErrorKind::NumericalFailure, "energy mismatch " + io::fmt9(diff) + " exceeds " + io::fmt9(tolerance));
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diagonalization of the spin-1/2 XY ring in a transverse field"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "xyring 0.1.0");

  GroundCmd ground;
  auto* c_ground = app.add_subcommand("ground", "ground state amplitudes");
  ground.model.add_to(c_ground);
  ground.out.add_to(c_ground);
  c_ground->add_option("--dump-matrix", ground.matrix_path, "write the winning block as row,col,value CSV");

  SpectrumCmd spectrum;
  auto* c_spectrum = app.add_subcommand("spectrum", "eigenvalues per symmetry block");
  spectrum.model.add_to(c_spectrum);
  spectrum.out.add_to(c_spectrum);
  c_spectrum->add_option("--sector", spectrum.sector, "blocks, full, k=K, parity=even or parity=odd")
      ->capture_default_str();
  c_spectrum->add_option("--dump-matrix", spectrum.matrix_path, "write the Hamiltonian as row,col,value CSV");

  ObservablesCmd observables;
  auto* c_obs = app.add_subcommand("observables", "pair correlation and concurrence of the ground state");
  observables.model.add_to(c_obs);
  observables.out.add_to(c_obs);
  c_obs->add_option("--sites", observables.sites, "two sites i < j")->expected(2)->delimiter(',');
  c_obs->add_option("--dump-rho", observables.rho_path, "write the reduced density matrix as CSV");

  SweepCmd sw;
  auto* c_sweep = app.add_subcommand("sweep", "ground-state observables along one parameter");
  sw.model.add_to(c_sweep);
  sw.out.add_to(c_sweep);
  c_sweep->add_option("--axis", sw.axis, "j, bz or gamma")->check(CLI::IsMember({"j", "bz", "gamma"}))->capture_default_str();
  c_sweep->add_option("--from", sw.from)->required();
  c_sweep->add_option("--to", sw.to)->required();
  c_sweep->add_option("--step", sw.step)->capture_default_str();
  c_sweep->add_option("--gamma-list", sw.gamma_list, "repeat the sweep for each gamma")->delimiter(',');
  c_sweep->add_option("--threads", sw.threads)->check(CLI::PositiveNumber)->capture_default_str();

  CrossingsCmd cr;
  auto* c_cross = app.add_subcommand("crossings", "ground-state level crossings");
  cr.model.add_to(c_cross);
  cr.out.add_to(c_cross);
  c_cross->add_option("--axis", cr.axis, "j or bz")->check(CLI::IsMember({"j", "bz"}))->capture_default_str();
  c_cross->add_option("--method", cr.method)->check(CLI::IsMember({"closed-form", "bisection"}))->capture_default_str();
  c_cross->add_option("--from", cr.from)->capture_default_str();
  cr.to_opt = c_cross->add_option("--to", cr.to, "upper end (default unbounded for closed-form)");
  c_cross->add_option("--step", cr.step, "coarse grid step for bisection")->capture_default_str();
  c_cross->add_option("--threads", cr.threads)->check(CLI::PositiveNumber)->capture_default_str();

  LevelsCmd lv;
  auto* c_levels = app.add_subcommand("levels", "lowest energy per magnetization block against Bz");
  lv.model.add_to(c_levels);
  lv.out.add_to(c_levels);
  c_levels->add_option("--bz-from", lv.bz_from)->capture_default_str();
  c_levels->add_option("--bz-to", lv.bz_to)->capture_default_str();
  c_levels->add_option("--step", lv.step)->capture_default_str();
  c_levels->add_option("--threads", lv.threads)->check(CLI::PositiveNumber)->capture_default_str();

  VerifyCmd verify;
  auto* c_verify = app.add_subcommand("verify", "recompute the energy of a ground-state JSON dump");
  c_verify->add_option("--input,-i", verify.input)->required();
  c_verify->add_option("--tolerance", verify.tolerance)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c_ground) ground.run();
    if (*c_spectrum) spectrum.run();
    if (*c_obs) observables.run();
    if (*c_sweep) sw.run();
    if (*c_cross) cr.run();
    if (*c_levels) lv.run();
    if (*c_verify) verify.run();
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return is_numerical(e.kind()) ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return 0;
}
