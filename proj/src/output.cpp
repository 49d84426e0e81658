#include "magsat/output.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace magsat::output {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string units_suffix(potential::EnergyUnits u) {
  return u == potential::EnergyUnits::rydberg ? "ry" : "mc2";
}

} // namespace

std::string curve_to_csv(const potential::CurveTable &table) {
  const std::string suffix =
      table.samples.empty() ? "mc2" : units_suffix(table.samples[0].units_tag);
  std::string body = "zeta,U_" + suffix;
  if (!table.saturation.empty())
    body += ",U_sat_" + suffix;
  if (!table.no_vp.empty())
    body += ",U_novp_" + suffix;
  body += "\n";
  for (std::size_t i = 0; i < table.samples.size(); ++i) {
    body += format_double(table.samples[i].zeta) + "," +
            format_double(table.samples[i].value);
    if (!table.saturation.empty())
      body += "," + format_double(table.saturation[i]);
    if (!table.no_vp.empty())
      body += "," + format_double(table.no_vp[i]);
    body += "\n";
  }
  return body;
}

json curve_to_json(const potential::CurveTable &table) {
  json j;
  j["label"] = table.label;
  j["metadata"] = {{"calB", table.field.calB},
                   {"b", table.field.b},
                   {"m", table.m},
                   {"Z", table.Z},
                   {"model", fields::model_name(table.model)}};
  json samples = json::array();
  for (std::size_t i = 0; i < table.samples.size(); ++i) {
    json s = {{"zeta", table.samples[i].zeta},
              {"U", table.samples[i].value},
              {"units", units_suffix(table.samples[i].units_tag)}};
    if (!table.saturation.empty())
      s["U_sat"] = table.saturation[i];
    if (!table.no_vp.empty())
      s["U_novp"] = table.no_vp[i];
    samples.push_back(s);
  }
  j["samples"] = samples;
  return j;
}

std::string roots_to_csv(const std::vector<spectrum::SpectrumRoot> &roots) {
  std::string body = "nu,omega,kappa,energy_ry,energy_ev,residual\n";
  for (const auto &r : roots)
    body += std::to_string(r.nu) + "," + format_double(r.omega) + "," +
            format_double(r.kappa) + "," + format_double(r.energy_ry) + "," +
            format_double(r.energy_ev) + "," + format_double(r.residual) +
            "\n";
  return body;
}

json roots_to_json(const std::vector<spectrum::SpectrumRoot> &roots) {
  json arr = json::array();
  for (const auto &r : roots)
    arr.push_back({{"nu", r.nu},
                   {"omega", r.omega},
                   {"kappa", r.kappa},
                   {"bracket", {r.bracket_lo, r.bracket_hi}},
                   {"energy_ry", r.energy_ry},
                   {"energy_ev", r.energy_ev},
                   {"residual", r.residual}});
  return arr;
}

json report_to_json(const validity::ValidityReport &report) {
  const char *verdict = report.verdict == validity::Verdict::ok ? "ok"
                        : report.verdict == validity::Verdict::marginal
                            ? "marginal"
                            : "violated";
  return {{"xi_min", report.xi_min},
          {"xi_max", report.xi_max},
          {"ratio_at_probe", report.ratio_at_probe},
          {"adiabatic_param", report.adiabatic_param},
          {"K", report.K},
          {"verdict", verdict}};
}

json manifest_to_json(const RunManifest &manifest) {
  json inputs = json::object();
  for (const auto &[k, v] : manifest.inputs)
    inputs[k] = v;
  return {{"command", manifest.command},
          {"constants",
           {{"alpha", manifest.constants.alpha},
            {"mc2_ev", manifest.constants.mc2_ev},
            {"b_cr_gauss", manifest.constants.b_cr_gauss},
            {"rydberg_ev", manifest.constants.rydberg_ev()}}},
          {"inputs", inputs},
          {"version", manifest.version},
          {"timestamp", manifest.timestamp}};
}

void write_file_atomic(const std::string &path, const std::string &body) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot open for writing: " + tmp);
    out << body;
    if (!out.flush())
      throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

} // namespace magsat::output
