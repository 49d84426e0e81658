#pragma once

//! Structured emission: CSV bodies with shortest round-trip numeric
//! formatting, JSON mirrors, run manifests and atomic file writes.
//! Identical manifests (timestamp aside) produce byte-identical CSV
//! bodies.

#include "magsat/potential.hpp"
#include "magsat/spectrum.hpp"
#include "magsat/validity.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace magsat::output {

//! Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

std::string curve_to_csv(const potential::CurveTable &table);
nlohmann::json curve_to_json(const potential::CurveTable &table);

//! CSV with header nu,omega,kappa,energy_ry,energy_ev,residual.
std::string roots_to_csv(const std::vector<spectrum::SpectrumRoot> &roots);
nlohmann::json roots_to_json(const std::vector<spectrum::SpectrumRoot> &roots);

nlohmann::json report_to_json(const validity::ValidityReport &report);

//! Provenance block embedded in (or written beside) every data file.
struct RunManifest {
  std::string command;
  fields::PhysicalConstants constants;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string version = "1.0.0";
  std::string timestamp; // informational only, excluded from identity
};

nlohmann::json manifest_to_json(const RunManifest &manifest);

//! Write via temp file + rename in the target directory.
void write_file_atomic(const std::string &path, const std::string &body);

} // namespace magsat::output
