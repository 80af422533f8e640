#pragma once

// Deterministic JSON reports for every command. Keys are sorted, rationals
// are "p/q" strings, and each report embeds the schema version and config.
//
// Verdicts: 0 when the checked property holds, 2 when it was checked and is
// false. Operational failures surface as mwext::Error instead.

#include <optional>

#include "mwext/decompose.hpp"
#include "mwext/error.hpp"
#include "mwext/io.hpp"
#include "mwext/macwilliams.hpp"

namespace mwext {

inline constexpr const char* kSchemaVersion = "mwext-report/1";

struct RunConfig {
  Limits limits;
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 0;  // > 0 selects sample mode (needs a seed)
  bool diagnostic = false;
};

struct Report {
  json body;
  int verdict = 0;
};

std::string render(const json& body);
json config_json(const RunConfig& cfg);
json error_json(const Error& e);

Report weight_report(const RunConfig& cfg, const FunctionSpace& a, const Func& u);
Report distance_report(const RunConfig& cfg, const FunctionSpace& a, const Func& u, const Func& v);
Report quotient_report(const RunConfig& cfg, const FunctionSpace& a);
Report ring_report(const RunConfig& cfg, const FunctionSpace& a);
Report controllable_report(const RunConfig& cfg, const FunctionSpace& a);
Report isometry_report(const RunConfig& cfg, const LinMap& h);
Report separating_report(const RunConfig& cfg, const LinMap& h);
Report decompose_report(const RunConfig& cfg, const LinMap& h);
Report verify_report(const RunConfig& cfg, const LinMap& h, const Decomposition& d);
Report monomial_form_report(const RunConfig& cfg, const LinMap& h);
Report macwilliams_report(const RunConfig& cfg, const SpacePtr& c1, const SpacePtr& c2);
Report selftest_report(const RunConfig& cfg);

}  // namespace mwext
