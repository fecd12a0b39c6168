#pragma once

#include <optional>
#include <string>

#include "io/json_io.hpp"

namespace tbx {

extern const char* const kLibraryVersion;

struct RunConfig {
  std::string command;
  GenericityOptions genericity;
  int q_max = 4;
  int h_max = 4;
  bool force = false;
  std::optional<CertifyMode> mode;  // overrides the bundle's mode
};

/// `verified` is false when the computation answered "no" (exit code 2).
struct Report {
  Json json;
  bool verified = true;
};

Json config_to_json(const RunConfig& cfg);

Report tableau_characters_report(const Tableau& a, const RunConfig& cfg);
Report tableau_prolong_report(const Tableau& a, const RunConfig& cfg);
Report tableau_cartan_test_report(const Tableau& a, const RunConfig& cfg);
Report tableau_cohomology_report(const Tableau& a, const RunConfig& cfg);
/// Parses and validates; a Jacobi violation is a failed verification.
Report lie_validate_report(const Json& input, const RunConfig& cfg);
Report certify_report(const LieTableau& lt, const RunConfig& cfg);
Report pds_build_report(const LieTableau& lt, const RunConfig& cfg, bool keep_a_basis = false);
Report pds_verify_report(const LieTableau& lt, const RunConfig& cfg, bool keep_a_basis = false);
Report pds_tower_report(const LieTableau& lt, const RunConfig& cfg);
Report gg0_export_report(const LieTableau& lt, const RunConfig& cfg);
Report catalog_list_report(const RunConfig& cfg);
Report catalog_show_report(const std::string& name, const RunConfig& cfg);
/// Entries run concurrently; the report lists them in the given order.
Report catalog_verify_report(const std::vector<std::string>& names, const RunConfig& cfg);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& j);

}  // namespace tbx
