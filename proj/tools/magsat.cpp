//! magsat — lower even-parity energy levels of a hydrogen-like atom in
//! a strong magnetic field, with vacuum-polarization screening.
//!
//! Subcommands: perm, potential, validity, spectrum, saturation,
//! oracle, figures. Exit codes: 0 success, 2 usage error, 3 solver
//! failure, 4 I/O failure.

#include "CLI11.hpp"

#include "magsat/fields.hpp"
#include "magsat/output.hpp"
#include "magsat/potential.hpp"
#include "magsat/shooting.hpp"
#include "magsat/spectrum.hpp"
#include "magsat/validity.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace mf = magsat::fields;
namespace mp = magsat::potential;
namespace ms = magsat::spectrum;
namespace mv = magsat::validity;
namespace mo = magsat::output;
namespace msh = magsat::shooting;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct GlobalOptions {
  mf::PhysicalConstants constants;
  std::string config_path;
  std::string units = "mc2";   // mc2 | ry
  std::string format = "csv";  // csv | json
  bool quiet = false;
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void apply_config(GlobalOptions &g) {
  if (g.config_path.empty())
    return;
  std::ifstream in(g.config_path);
  if (!in)
    throw IoError("cannot read config file: " + g.config_path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line = line.substr(0, hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty())
      continue;
    try {
      if (key == "alpha")
        g.constants.alpha = std::stod(val);
      else if (key == "mc2_ev")
        g.constants.mc2_ev = std::stod(val);
      else if (key == "bcr_gauss")
        g.constants.b_cr_gauss = std::stod(val);
      else
        throw CLI::ValidationError("config", "unknown config key: " + key);
    } catch (const std::invalid_argument &) {
      throw CLI::ValidationError("config", "bad value for " + key);
    }
  }
}

mf::FieldUnit parse_unit(const std::string &name) {
  if (name == "b")
    return mf::FieldUnit::b;
  if (name == "calB")
    return mf::FieldUnit::calB;
  if (name == "gauss")
    return mf::FieldUnit::gauss;
  throw CLI::ValidationError("--unit", "expected b, calB or gauss");
}

mo::RunManifest make_manifest(
    const GlobalOptions &g, const std::string &command,
    std::vector<std::pair<std::string, std::string>> inputs) {
  mo::RunManifest m;
  m.command = command;
  m.constants = g.constants;
  m.inputs = std::move(inputs);
  m.timestamp = iso_timestamp();
  return m;
}

void emit(const GlobalOptions &g, const std::string &text) {
  if (!g.quiet)
    std::cout << text;
}

const char *range_name(mf::RangeFlag f) {
  switch (f) {
  case mf::RangeFlag::below_range:
    return "below";
  case mf::RangeFlag::above_range:
    return "above";
  default:
    return "in-range";
  }
}

// ---------------------------------------------------------------- perm

int cmd_perm(const GlobalOptions &g, double B, const std::string &unit,
             const std::string &model_name) {
  const auto field = mf::field_from(B, parse_unit(unit), g.constants);
  const auto model = mf::parse_model(model_name);
  const auto eps = mf::permittivity(field, model, g.constants);
  if (g.format == "json") {
    nlohmann::json j = {{"eps_perp", eps.eps_perp},
                        {"eps_par", eps.eps_par},
                        {"b", field.b},
                        {"calB", field.calB},
                        {"gauss", field.gauss},
                        {"range", range_name(field.range_flag)},
                        {"model", mf::model_name(model)}};
    j["manifest"] = mo::manifest_to_json(make_manifest(
        g, "perm",
        {{"B", mo::format_double(B)}, {"unit", unit}, {"model", model_name}}));
    emit(g, j.dump(2) + "\n");
  } else {
    std::string out = "eps_perp,eps_par,b,calB,range\n";
    out += mo::format_double(eps.eps_perp) + "," +
           mo::format_double(eps.eps_par) + "," + mo::format_double(field.b) +
           "," + mo::format_double(field.calB) + "," +
           range_name(field.range_flag) + "\n";
    emit(g, out);
  }
  return kExitOk;
}

// ----------------------------------------------------------- potential

int cmd_potential(const GlobalOptions &g, double B, const std::string &unit,
                  int m, int Z, const std::string &model_name, double zmax,
                  int points, bool with_sat, bool with_novp,
                  const std::string &file) {
  const auto field = mf::field_from(B, parse_unit(unit), g.constants);
  const auto model = mf::parse_model(model_name);
  std::vector<double> grid;
  grid.reserve(points);
  for (int i = 0; i < points; ++i)
    grid.push_back(zmax * i / (points - 1));
  mp::CurveOptions opts;
  opts.with_saturation = with_sat;
  opts.with_no_vp = with_novp;
  opts.units = g.units == "ry" ? mp::EnergyUnits::rydberg : mp::EnergyUnits::mc2;
  mp::CurveTable table;
  try {
    table = mp::emit_curve(field, m, Z, model, grid, opts, g.constants);
  } catch (const std::exception &e) {
    throw SolverError(e.what());
  }
  const auto manifest = make_manifest(
      g, "potential",
      {{"B", mo::format_double(B)},
       {"unit", unit},
       {"m", std::to_string(m)},
       {"Z", std::to_string(Z)},
       {"model", model_name},
       {"zmax", mo::format_double(zmax)},
       {"points", std::to_string(points)}});
  std::string body;
  if (g.format == "json") {
    auto j = mo::curve_to_json(table);
    j["manifest"] = mo::manifest_to_json(manifest);
    body = j.dump(2) + "\n";
  } else {
    body = mo::curve_to_csv(table);
  }
  if (!file.empty()) {
    mo::write_file_atomic(file, body);
    if (g.format == "csv")
      mo::write_file_atomic(file + ".manifest.json",
                            mo::manifest_to_json(manifest).dump(2) + "\n");
  } else {
    emit(g, body);
  }
  return kExitOk;
}

// ------------------------------------------------------------ validity

int cmd_validity(const GlobalOptions &g, double B, const std::string &unit,
                 int m, int Z, double K, const std::string &model_name) {
  const auto field = mf::field_from(B, parse_unit(unit), g.constants);
  const auto model = mf::parse_model(model_name);
  const auto rep = mv::validity_report(field, m, Z, K, model, {}, g.constants);
  auto j = mo::report_to_json(rep);
  j["manifest"] = mo::manifest_to_json(make_manifest(
      g, "validity",
      {{"B", mo::format_double(B)},
       {"unit", unit},
       {"m", std::to_string(m)},
       {"Z", std::to_string(Z)},
       {"K", mo::format_double(K)},
       {"model", model_name}}));
  if (g.format == "json") {
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "quantity,value\n"
        << "xi_min," << mo::format_double(rep.xi_min) << "\n"
        << "xi_max," << mo::format_double(rep.xi_max) << "\n"
        << "ratio_at_probe," << mo::format_double(rep.ratio_at_probe) << "\n"
        << "adiabatic_param," << mo::format_double(rep.adiabatic_param) << "\n"
        << "K," << mo::format_double(rep.K) << "\n"
        << "verdict," << j["verdict"].get<std::string>() << "\n";
    emit(g, out.str());
  }
  return kExitOk; // diagnostics never gate
}

// ------------------------------------------------------------ spectrum

int cmd_spectrum(const GlobalOptions &g, double B, const std::string &unit,
                 int m, int Z, const std::string &model_name, int roots) {
  ms::SpectrumRequest req;
  req.field = mf::field_from(B, parse_unit(unit), g.constants);
  req.m = m;
  req.Z = Z;
  req.model = mf::parse_model(model_name);
  req.n_roots = roots;
  std::vector<ms::SpectrumRoot> rs;
  try {
    rs = ms::kp_solve(req, g.constants);
  } catch (const std::invalid_argument &) {
    throw; // bad inputs are usage errors
  } catch (const std::exception &e) {
    throw SolverError(e.what());
  }
  if (g.format == "json") {
    nlohmann::json j;
    j["roots"] = mo::roots_to_json(rs);
    j["manifest"] = mo::manifest_to_json(make_manifest(
        g, "spectrum",
        {{"B", mo::format_double(B)},
         {"unit", unit},
         {"m", std::to_string(m)},
         {"Z", std::to_string(Z)},
         {"model", model_name},
         {"roots", std::to_string(roots)}}));
    emit(g, j.dump(2) + "\n");
  } else {
    emit(g, mo::roots_to_csv(rs));
  }
  return kExitOk;
}

// ---------------------------------------------------------- saturation

int cmd_saturation(const GlobalOptions &g, const std::string &m_list, int Z,
                   double calB) {
  std::vector<int> ms_values;
  std::stringstream ss(m_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      ms_values.push_back(std::stoi(tok));
    } catch (const std::exception &) {
      throw CLI::ValidationError("--m", "expected a comma-separated int list");
    }
  }
  if (ms_values.empty())
    throw CLI::ValidationError("--m", "no m values given");
  std::vector<ms::SpectrumRoot> rs;
  try {
    for (int m : ms_values)
      rs.push_back(ms::saturation_solve(m, Z, calB, g.constants));
  } catch (const std::exception &e) {
    throw SolverError(e.what());
  }
  if (g.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < rs.size(); ++i)
      j.push_back({{"m", ms_values[i]},
                   {"omega_sat", rs[i].omega},
                   {"energy_ry", rs[i].energy_ry},
                   {"energy_ev", rs[i].energy_ev},
                   {"residual", rs[i].residual}});
    nlohmann::json wrap;
    wrap["saturation"] = j;
    wrap["manifest"] = mo::manifest_to_json(make_manifest(
        g, "saturation",
        {{"m", m_list},
         {"Z", std::to_string(Z)},
         {"calB", mo::format_double(calB)}}));
    emit(g, wrap.dump(2) + "\n");
  } else {
    std::string out = "m,omega_sat,energy_ry,energy_ev\n";
    for (std::size_t i = 0; i < rs.size(); ++i)
      out += std::to_string(ms_values[i]) + "," +
             mo::format_double(rs[i].omega) + "," +
             mo::format_double(rs[i].energy_ry) + "," +
             mo::format_double(rs[i].energy_ev) + "\n";
    emit(g, out);
  }
  return kExitOk;
}

// -------------------------------------------------------------- oracle

int cmd_oracle(const GlobalOptions &g, double B, const std::string &unit,
               int m, int Z, const std::string &model_name) {
  ms::SpectrumRequest req;
  req.field = mf::field_from(B, parse_unit(unit), g.constants);
  req.m = m;
  req.Z = Z;
  req.model = mf::parse_model(model_name);
  ms::SpectrumRoot kp, shot;
  try {
    kp = ms::kp_solve(req, g.constants)[0];
    shot = msh::shoot_ground(req, {}, g.constants);
  } catch (const std::exception &e) {
    throw SolverError(e.what());
  }
  const double rel = std::abs(shot.omega - kp.omega) / kp.omega;
  if (g.format == "json") {
    nlohmann::json j = {{"omega_kp", kp.omega},
                        {"omega_shooting", shot.omega},
                        {"rel_diff", rel},
                        {"energy_ev_kp", kp.energy_ev},
                        {"energy_ev_shooting", shot.energy_ev}};
    j["manifest"] = mo::manifest_to_json(make_manifest(
        g, "oracle",
        {{"B", mo::format_double(B)},
         {"unit", unit},
         {"m", std::to_string(m)},
         {"Z", std::to_string(Z)},
         {"model", model_name}}));
    emit(g, j.dump(2) + "\n");
  } else {
    std::string out = "method,omega,energy_ev\n";
    out += "kp," + mo::format_double(kp.omega) + "," +
           mo::format_double(kp.energy_ev) + "\n";
    out += "shooting," + mo::format_double(shot.omega) + "," +
           mo::format_double(shot.energy_ev) + "\n";
    out += "rel_diff," + mo::format_double(rel) + ",\n";
    emit(g, out);
  }
  return kExitOk;
}

// ------------------------------------------------------------- figures

void write_figure(const GlobalOptions &g, const std::string &dir,
                  const std::string &name, const std::string &body,
                  const mo::RunManifest &manifest) {
  const std::string path = dir.empty() ? name : dir + "/" + name;
  mo::write_file_atomic(path, body);
  mo::write_file_atomic(path + ".manifest.json",
                        mo::manifest_to_json(manifest).dump(2) + "\n");
  if (!g.quiet)
    std::cout << "wrote " << path << "\n";
}

void figure1(const GlobalOptions &g, const std::string &dir) {
  const double fields_calB[] = {1e5, 1e6, 1e7, 1e8};
  std::string body = "zeta";
  for (double calB : fields_calB)
    body += ",U_mc2_calB" + mo::format_double(calB);
  body += ",U_sat_mc2\n";
  const int n = 301;
  for (int i = 0; i < n; ++i) {
    const double z = 3.0 * i / (n - 1);
    body += mo::format_double(z);
    for (double calB : fields_calB) {
      const auto f = mf::field_from(calB, mf::FieldUnit::calB, g.constants);
      const auto eps =
          mf::permittivity(f, mf::PermittivityModel::full, g.constants);
      body += "," + mo::format_double(mp::effective_potential_lll(
                        0, z, f, eps, 1, g.constants));
    }
    body += "," + mo::format_double(mp::saturation_potential(0, z, 1,
                                                             g.constants));
    body += "\n";
  }
  write_figure(g, dir, "figure1.csv", body,
               make_manifest(g, "figures", {{"which", "1"}}));
}

void figure2(const GlobalOptions &g, const std::string &dir) {
  const std::pair<double, std::string> panels[] = {{1e5, "100000"},
                                                   {1e9, "1000000000"}};
  for (const auto &[calB, label] : panels) {
    const auto f = mf::field_from(calB, mf::FieldUnit::calB, g.constants);
    const auto eps =
        mf::permittivity(f, mf::PermittivityModel::full, g.constants);
    std::string body = "omega,rhs_m0,rhs_m1,rhs_m2,rhs_m3,ln_calB\n";
    const int n = 1200;
    for (int i = 1; i <= n; ++i) {
      const double w = 16.0 * i / n;
      // skip a small window around every digamma pole
      const double kappa = 1.0 / (eps.eps_perp * w);
      if (std::abs(kappa - std::round(kappa)) < 5e-3 && kappa > 0.5)
        continue;
      body += mo::format_double(w);
      for (int m = 0; m <= 3; ++m) {
        ms::SpectrumRequest req;
        req.field = f;
        req.m = m;
        req.Z = 1;
        req.model = mf::PermittivityModel::full;
        body += "," + mo::format_double(ms::kp_rhs(w, req, eps, g.constants));
      }
      body += "," + mo::format_double(std::log(calB)) + "\n";
    }
    const std::string name = "figure2_calB" + label + ".csv";
    write_figure(g, dir, name, body,
                 make_manifest(g, "figures",
                               {{"which", "2"},
                                {"calB", mo::format_double(calB)}}));
  }
}

void figure3(const GlobalOptions &g, const std::string &dir, bool with_sat) {
  std::string body = "calB";
  for (int m = 0; m <= 3; ++m)
    body += ",energy_ry_full_m" + std::to_string(m);
  for (int m = 0; m <= 3; ++m)
    body += ",energy_ry_novp_m" + std::to_string(m);
  if (with_sat)
    for (int m = 0; m <= 3; ++m)
      body += ",energy_ry_sat_m" + std::to_string(m);
  body += "\n";
  double sat[4] = {0, 0, 0, 0};
  if (with_sat)
    for (int m = 0; m <= 3; ++m)
      sat[m] = ms::saturation_solve(
                   m, 1, std::numeric_limits<double>::infinity(), g.constants)
                   .energy_ry;
  const int n = 33;
  for (int i = 0; i < n; ++i) {
    const double calB = std::pow(10.0, 5.0 + 4.0 * i / (n - 1));
    body += mo::format_double(calB);
    for (auto model :
         {mf::PermittivityModel::full, mf::PermittivityModel::unity}) {
      for (int m = 0; m <= 3; ++m) {
        ms::SpectrumRequest req;
        req.field = mf::field_from(calB, mf::FieldUnit::calB, g.constants);
        req.m = m;
        req.Z = 1;
        req.model = model;
        body +=
            "," + mo::format_double(ms::kp_solve(req, g.constants)[0].energy_ry);
      }
    }
    if (with_sat)
      for (int m = 0; m <= 3; ++m)
        body += "," + mo::format_double(sat[m]);
    body += "\n";
  }
  const std::string name = with_sat ? "figure4.csv" : "figure3.csv";
  write_figure(g, dir, name, body,
               make_manifest(g, "figures", {{"which", with_sat ? "4" : "3"}}));
}

int cmd_figures(const GlobalOptions &g, int which, const std::string &dir) {
  try {
    switch (which) {
    case 1:
      figure1(g, dir);
      break;
    case 2:
      figure2(g, dir);
      break;
    case 3:
      figure3(g, dir, false);
      break;
    case 4:
      figure3(g, dir, true);
      break;
    default:
      throw CLI::ValidationError("--which", "expected 1, 2, 3 or 4");
    }
  } catch (const CLI::Error &) {
    throw;
  } catch (const std::runtime_error &e) {
    // distinguish file-system failures from solver failures
    if (std::string(e.what()).find("cannot open") != std::string::npos ||
        std::string(e.what()).find("rename failed") != std::string::npos ||
        std::string(e.what()).find("write failed") != std::string::npos)
      throw IoError(e.what());
    throw SolverError(e.what());
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"hydrogen-like energy levels in strong magnetic fields "
               "with vacuum-polarization screening"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--alpha", g.constants.alpha, "fine-structure constant");
  app.add_option("--bcr-gauss", g.constants.b_cr_gauss,
                 "critical field in gauss");
  app.add_option("--config", g.config_path, "key=value constants file");
  app.add_option("--units", g.units, "energy units for potential curves")
      ->check(CLI::IsMember({"mc2", "ry"}));
  app.add_option("--out", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--quiet", g.quiet, "suppress stdout data");

  double B = 0.0;
  std::string unit = "calB";
  std::string model = "full";
  int m = 0, Z = 1;

  auto *perm = app.add_subcommand("perm", "dielectric permittivities");
  perm->add_option("--B", B, "field strength")->required();
  perm->add_option("--unit", unit, "b|calB|gauss");
  perm->add_option("--model", model, "full|asymptotic|none");

  double zmax = 3.0;
  int points = 301;
  bool with_sat = false, with_novp = false;
  std::string file;
  auto *pot = app.add_subcommand("potential", "effective potential curve");
  pot->add_option("--B", B, "field strength")->required();
  pot->add_option("--unit", unit, "b|calB|gauss");
  pot->add_option("--m", m, "|m| of the LLL state");
  pot->add_option("--Z", Z, "nuclear charge");
  pot->add_option("--model", model, "full|asymptotic|none");
  pot->add_option("--zmax", zmax, "grid endpoint in Compton lengths");
  pot->add_option("--points", points, "grid size")->check(CLI::Range(2, 100000));
  pot->add_flag("--with-saturation", with_sat, "add the saturation column");
  pot->add_flag("--with-novp", with_novp, "add the unscreened column");
  pot->add_option("--file", file, "write to file instead of stdout");

  double K = 1.5;
  auto *val = app.add_subcommand("validity", "applicability diagnostics");
  val->add_option("--B", B, "field strength")->required();
  val->add_option("--unit", unit, "b|calB|gauss");
  val->add_option("--m", m, "|m|");
  val->add_option("--Z", Z, "nuclear charge");
  val->add_option("--K", K, "well support in Compton lengths");
  val->add_option("--model", model, "full|asymptotic|none");

  int roots = 1;
  auto *spec = app.add_subcommand("spectrum", "even-level binding energies");
  spec->add_option("--B", B, "field strength")->required();
  spec->add_option("--unit", unit, "b|calB|gauss");
  spec->add_option("--m", m, "|m|");
  spec->add_option("--Z", Z, "nuclear charge");
  spec->add_option("--model", model, "full|asymptotic|none");
  spec->add_option("--roots", roots, "number of roots")
      ->check(CLI::Range(1, 50));

  std::string m_list = "0,1,2,3";
  double sat_calB = std::numeric_limits<double>::infinity();
  auto *sat = app.add_subcommand("saturation", "large-field limiting levels");
  sat->add_option("--m", m_list, "comma-separated |m| list");
  sat->add_option("--Z", Z, "nuclear charge");
  sat->add_option("--B", sat_calB, "finite field in calB units (default inf)");

  auto *orc = app.add_subcommand("oracle",
                                 "compare spectrum equation with shooting");
  orc->add_option("--B", B, "field strength")->required();
  orc->add_option("--unit", unit, "b|calB|gauss");
  orc->add_option("--m", m, "|m|");
  orc->add_option("--Z", Z, "nuclear charge");
  orc->add_option("--model", model, "full|asymptotic|none");

  int which = 1;
  std::string dir = ".";
  auto *fig = app.add_subcommand("figures", "emit figure data CSVs");
  fig->add_option("--which", which, "figure number 1-4")->required();
  fig->add_option("--out", dir, "output directory");

  try {
    app.parse(argc, argv);
    apply_config(g);
    if (perm->parsed())
      return cmd_perm(g, B, unit, model);
    if (pot->parsed())
      return cmd_potential(g, B, unit, m, Z, model, zmax, points, with_sat,
                           with_novp, file);
    if (val->parsed())
      return cmd_validity(g, B, unit, m, Z, K, model);
    if (spec->parsed())
      return cmd_spectrum(g, B, unit, m, Z, model, roots);
    if (sat->parsed())
      return cmd_saturation(g, m_list, Z, sat_calB);
    if (orc->parsed())
      return cmd_oracle(g, B, unit, m, Z, model);
    if (fig->parsed())
      return cmd_figures(g, which, dir);
    return kExitUsage;
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) // --help
      return app.exit(e);
    app.exit(e);
    return kExitUsage;
  } catch (const SolverError &e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const IoError &e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}
