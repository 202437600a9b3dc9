#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "parade/simulator.hpp"

namespace parade {

// Parse and validate; invariant violations name the offending field path,
// unknown fields are rejected by name.
Scenario load_scenario(const std::string& file_path);
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& s);

// FNV-1a over the canonical serialization; equal scenarios hash equal.
std::string scenario_digest(const Scenario& s);

nlohmann::json step_record_to_json(const StepRecord& rec);

// JSON Lines: header record, one record per step, footer with totals.
void write_result_stream(std::ostream& out, const Scenario& s, const RunResult& r);

}  // namespace parade
