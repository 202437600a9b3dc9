#include <doctest.h>

#include <stdexcept>

#include <sstream>
#include <string>

#include "parade/scenario_io.hpp"
#include "parade/svg_render.hpp"

using namespace parade;
using nlohmann::json;

namespace {

json base_doc() {
  return json::parse(R"({
    "name": "tiny",
    "world": {"bounds": [0, 0, 20, 20], "obstacles": [[6, 6, 10, 14]]},
    "route": {"waypoints": [[2, 2], [18, 2], [18, 18]]},
    "schedule": {"steps": 3, "points_per_instance": 4, "start": 0, "speed": 4, "window_length": 10},
    "team_size": 2,
    "candidate_count": 16,
    "seed": 11,
    "sensor": {"fov_deg": 175}
  })");
}

}  // namespace

TEST_CASE("scenario parses with defaults applied") {
  const Scenario s = scenario_from_json(base_doc());
  CHECK(s.name == "tiny");
  CHECK(s.schedule.step_count == 3);
  CHECK(s.resample_mode == ResampleMode::fixed);
  CHECK(s.sensor.attenuation == Attenuation::binary);
  CHECK(s.heuristic.alpha == 1.0);
  CHECK(s.heuristic.tau == 1e-4);
  CHECK_FALSE(s.sensor.max_range.has_value());
}

TEST_CASE("unknown fields are rejected by name") {
  json doc = base_doc();
  doc["surprise"] = 1;
  CHECK_THROWS_WITH_AS(scenario_from_json(doc),
                       "scenario: surprise: unknown field", std::invalid_argument);
  doc = base_doc();
  doc["sensor"]["zoom"] = 2;
  CHECK_THROWS_WITH_AS(scenario_from_json(doc),
                       "scenario: sensor.zoom: unknown field", std::invalid_argument);
}

TEST_CASE("invariant violations name the field") {
  json doc = base_doc();
  doc["team_size"] = 0;
  try {
    scenario_from_json(doc);
    FAIL("expected a validation error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("team_size") != std::string::npos);
  }

  doc = base_doc();
  doc["world"]["obstacles"].push_back({3, 3, 3, 3});
  try {
    scenario_from_json(doc);
    FAIL("expected a validation error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("world.obstacles[1]") != std::string::npos);
  }
}

TEST_CASE("serialization round-trips digest-equal") {
  const Scenario s = scenario_from_json(base_doc());
  const Scenario again = scenario_from_json(scenario_to_json(s));
  CHECK(scenario_digest(s) == scenario_digest(again));
  // Tampered scenarios hash differently.
  Scenario tweaked = again;
  tweaked.seed += 1;
  CHECK(scenario_digest(s) != scenario_digest(tweaked));
}

TEST_CASE("result stream has K + 2 lines") {
  const Scenario s = scenario_from_json(base_doc());
  const RunResult r = run(s);
  std::ostringstream out;
  write_result_stream(out, s, r);
  std::istringstream in(out.str());
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    const json rec = json::parse(line);
    if (lines == 0) {
      CHECK(rec["type"] == "header");
      CHECK(rec["scenario_digest"] == r.scenario_digest);
    } else if (lines <= s.schedule.step_count) {
      CHECK(rec["type"] == "step");
      CHECK(rec["step"] == lines - 1);
    } else {
      CHECK(rec["type"] == "footer");
    }
    ++lines;
  }
  CHECK(lines == s.schedule.step_count + 2);
}

TEST_CASE("svg frames are well-formed and deterministic") {
  Scenario s = scenario_from_json(base_doc());
  s.team_size = 1;
  s.candidate_count = 4;
  s.schedule = ParadeSchedule{1, {0.0}, {0.0}, 1};  // single route point
  const CandidateSet cands = sample_candidates(s.world, s.candidate_count, s.seed);

  std::string first, second;
  {
    const RunResult r = run(s);
    const RouteInstance inst = route_instance(s.path, s.schedule, 0);
    first = render_frame(s, r.steps[0], inst, cands);
    second = render_frame(s, r.steps[0], inst, cands);
  }
  CHECK(first == second);
  CHECK(first.substr(0, 4) == "<svg");
  CHECK(first.find("</svg>") != std::string::npos);

  auto count = [&](const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = first.find(needle, pos)) != std::string::npos) {
      ++n;
      pos += needle.size();
    }
    return n;
  };
  CHECK(count("class=\"guard\"") == 1);
  CHECK(count("class=\"sightline\"") == 1);  // one guard, one route point
  CHECK(count("class=\"obstacle\"") == 1);
  CHECK(count("class=\"candidate\"") == 4);
}

TEST_CASE("uncovered route points get the uncovered style") {
  // A guard walled off from the single route point.
  Scenario s;
  s.world = {{{0, 0}, {10, 10}}, {{{4, 0.5}, {6, 9.5}}}};
  s.path = RoutePath::from_waypoints({{8, 5}, {9, 5}});
  s.schedule = ParadeSchedule{1, {0.0}, {0.0}, 1};
  s.team_size = 1;
  s.candidate_count = 1;
  s.seed = 0;

  StepRecord rec;
  rec.selected = {0};
  rec.selected_positions = {{1, 5}};
  const RouteInstance inst = route_instance(s.path, s.schedule, 0);
  const CandidateSet cands{{{1, 5}}, 0, ResampleMode::fixed};
  const std::string svg = render_frame(s, rec, inst, cands);
  CHECK(svg.find("uncovered") != std::string::npos);
  CHECK(svg.find("class=\"sightline\"") == std::string::npos);
}

TEST_CASE("missing files are reported distinctly") {
  CHECK_THROWS_WITH_AS(load_scenario("/nonexistent/path.json"),
                       "scenario: cannot open file: /nonexistent/path.json",
                       std::runtime_error);
}
