#include "parade/scenario_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parade {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument("scenario: " + path + ": " + what);
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& path) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) fail(path.empty() ? key : path + "." + key, "unknown field");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::size_t as_count(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    fail(path, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

Point2 as_point(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) fail(path, "expected [x, y]");
  return {as_number(v[0], path + "[0]"), as_number(v[1], path + "[1]")};
}

Rect as_rect(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 4) fail(path, "expected [min_x, min_y, max_x, max_y]");
  Rect r{{as_number(v[0], path), as_number(v[1], path)},
         {as_number(v[2], path), as_number(v[3], path)}};
  if (!r.valid()) fail(path, "degenerate rectangle (min corner must be strictly below max)");
  return r;
}

World parse_world(const json& v) {
  if (!v.is_object()) fail("world", "expected an object");
  reject_unknown_fields(v, {"bounds", "obstacles"}, "world");
  World w;
  w.bounds = as_rect(require(v, "bounds", "world"), "world.bounds");
  if (auto it = v.find("obstacles"); it != v.end()) {
    if (!it->is_array()) fail("world.obstacles", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      w.obstacles.push_back(as_rect((*it)[i], "world.obstacles[" + std::to_string(i) + "]"));
  }
  return w;
}

ParadeSchedule parse_schedule(const json& v, double total_arclength) {
  if (!v.is_object()) fail("schedule", "expected an object");
  const bool explicit_windows = v.contains("tail") || v.contains("head");
  ParadeSchedule sched;
  if (explicit_windows) {
    reject_unknown_fields(v, {"steps", "points_per_instance", "tail", "head"}, "schedule");
    sched.step_count = as_count(require(v, "steps", "schedule"), "schedule.steps");
    sched.points_per_instance =
        as_count(require(v, "points_per_instance", "schedule"), "schedule.points_per_instance");
    for (const json& t : require(v, "tail", "schedule"))
      sched.tail_arclength.push_back(as_number(t, "schedule.tail"));
    for (const json& h : require(v, "head", "schedule"))
      sched.head_arclength.push_back(as_number(h, "schedule.head"));
    sched.validate(total_arclength);
    return sched;
  }
  reject_unknown_fields(
      v, {"steps", "points_per_instance", "start", "speed", "window_length"}, "schedule");
  return ParadeSchedule::constant_speed(
      as_count(require(v, "steps", "schedule"), "schedule.steps"),
      as_count(require(v, "points_per_instance", "schedule"), "schedule.points_per_instance"),
      as_number(require(v, "start", "schedule"), "schedule.start"),
      as_number(require(v, "speed", "schedule"), "schedule.speed"),
      as_number(require(v, "window_length", "schedule"), "schedule.window_length"),
      total_arclength);
}

SensorModel parse_sensor(const json& v) {
  if (!v.is_object()) fail("sensor", "expected an object");
  reject_unknown_fields(v, {"fov_deg", "max_range", "attenuation", "heading_policy"}, "sensor");
  SensorModel model;
  model.fov_deg = as_number(require(v, "fov_deg", "sensor"), "sensor.fov_deg");
  if (auto it = v.find("max_range"); it != v.end())
    model.max_range = as_number(*it, "sensor.max_range");
  if (auto it = v.find("attenuation"); it != v.end()) {
    const std::string mode = it->is_string() ? it->get<std::string>() : "";
    if (mode == "binary") model.attenuation = Attenuation::binary;
    else if (mode == "linear_decay") model.attenuation = Attenuation::linear_decay;
    else fail("sensor.attenuation", "expected \"binary\" or \"linear_decay\"");
  }
  if (auto it = v.find("heading_policy"); it != v.end()) {
    const std::string mode = it->is_string() ? it->get<std::string>() : "";
    if (mode == "sweep") model.heading_policy = HeadingPolicy::sweep;
    else if (mode == "centroid") model.heading_policy = HeadingPolicy::centroid;
    else fail("sensor.heading_policy", "expected \"sweep\" or \"centroid\"");
  }
  model.validate();
  return model;
}

HeuristicConfig parse_heuristic(const json& v) {
  if (!v.is_object()) fail("heuristic", "expected an object");
  reject_unknown_fields(v, {"alpha", "tau", "bool_tol", "max_iters"}, "heuristic");
  HeuristicConfig cfg;
  if (auto it = v.find("alpha"); it != v.end()) cfg.alpha = as_number(*it, "heuristic.alpha");
  if (auto it = v.find("tau"); it != v.end()) cfg.tau = as_number(*it, "heuristic.tau");
  if (auto it = v.find("bool_tol"); it != v.end())
    cfg.bool_tol = as_number(*it, "heuristic.bool_tol");
  if (auto it = v.find("max_iters"); it != v.end())
    cfg.max_iters = static_cast<int>(as_count(*it, "heuristic.max_iters"));
  cfg.validate();
  return cfg;
}

json point_to_json(const Point2& p) { return json::array({p.x, p.y}); }

json rect_to_json(const Rect& r) {
  return json::array({r.min_corner.x, r.min_corner.y, r.max_corner.x, r.max_corner.y});
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
  if (!doc.is_object()) fail("", "top-level document must be an object");
  reject_unknown_fields(doc,
                        {"name", "world", "route", "schedule", "team_size",
                         "candidate_count", "seed", "resample_mode", "sensor",
                         "heuristic", "sampling_period"},
                        "");
  Scenario s;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail("name", "expected a string");
    s.name = it->get<std::string>();
  }
  s.world = parse_world(require(doc, "world", ""));

  const json& route = require(doc, "route", "");
  if (!route.is_object()) fail("route", "expected an object");
  reject_unknown_fields(route, {"waypoints"}, "route");
  std::vector<Point2> waypoints;
  const json& wps = require(route, "waypoints", "route");
  for (std::size_t i = 0; i < wps.size(); ++i)
    waypoints.push_back(as_point(wps[i], "route.waypoints[" + std::to_string(i) + "]"));
  s.path = RoutePath::from_waypoints(std::move(waypoints));

  s.schedule = parse_schedule(require(doc, "schedule", ""), s.path.total_arclength());
  s.team_size = as_count(require(doc, "team_size", ""), "team_size");
  if (s.team_size == 0) fail("team_size", "must be >= 1");
  s.candidate_count = as_count(require(doc, "candidate_count", ""), "candidate_count");
  if (s.candidate_count == 0) fail("candidate_count", "must be >= 1");
  s.seed = require(doc, "seed", "").is_number_unsigned()
               ? doc["seed"].get<std::uint64_t>()
               : (fail("seed", "expected an unsigned integer"), 0);
  if (auto it = doc.find("resample_mode"); it != doc.end()) {
    const std::string mode = it->is_string() ? it->get<std::string>() : "";
    if (mode == "fixed") s.resample_mode = ResampleMode::fixed;
    else if (mode == "per_iteration") s.resample_mode = ResampleMode::per_iteration;
    else fail("resample_mode", "expected \"fixed\" or \"per_iteration\"");
  }
  s.sensor = parse_sensor(require(doc, "sensor", ""));
  if (auto it = doc.find("heuristic"); it != doc.end()) s.heuristic = parse_heuristic(*it);
  if (auto it = doc.find("sampling_period"); it != doc.end())
    s.sampling_period = as_number(*it, "sampling_period");

  s.validate();
  return s;
}

Scenario load_scenario(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw std::runtime_error("scenario: cannot open file: " + file_path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("scenario: malformed JSON in " + file_path + ": " + e.what());
  }
  return scenario_from_json(doc);
}

json scenario_to_json(const Scenario& s) {
  // Canonical form: schedule always serialized as explicit windows.
  json obstacles = json::array();
  for (const Rect& o : s.world.obstacles) obstacles.push_back(rect_to_json(o));
  json waypoints = json::array();
  for (const Point2& p : s.path.waypoints) waypoints.push_back(point_to_json(p));

  json doc{
      {"name", s.name},
      {"world", {{"bounds", rect_to_json(s.world.bounds)}, {"obstacles", obstacles}}},
      {"route", {{"waypoints", waypoints}}},
      {"schedule",
       {{"steps", s.schedule.step_count},
        {"points_per_instance", s.schedule.points_per_instance},
        {"tail", s.schedule.tail_arclength},
        {"head", s.schedule.head_arclength}}},
      {"team_size", s.team_size},
      {"candidate_count", s.candidate_count},
      {"seed", s.seed},
      {"resample_mode",
       s.resample_mode == ResampleMode::fixed ? "fixed" : "per_iteration"},
      {"sensor",
       {{"fov_deg", s.sensor.fov_deg},
        {"attenuation",
         s.sensor.attenuation == Attenuation::binary ? "binary" : "linear_decay"},
        {"heading_policy",
         s.sensor.heading_policy == HeadingPolicy::sweep ? "sweep" : "centroid"}}},
      {"heuristic",
       {{"alpha", s.heuristic.alpha},
        {"tau", s.heuristic.tau},
        {"bool_tol", s.heuristic.bool_tol},
        {"max_iters", s.heuristic.max_iters}}},
  };
  if (s.sensor.max_range) doc["sensor"]["max_range"] = *s.sensor.max_range;
  if (s.sampling_period) doc["sampling_period"] = *s.sampling_period;
  return doc;
}

std::string scenario_digest(const Scenario& s) {
  const std::string canon = scenario_to_json(s).dump();
  std::uint64_t hash = 14695981039346656037ull;  // FNV-1a 64
  for (unsigned char c : canon) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

json step_record_to_json(const StepRecord& rec) {
  json selected_positions = json::array();
  for (const Point2& p : rec.selected_positions) selected_positions.push_back(point_to_json(p));
  json robot_positions = json::array();
  for (const Point2& p : rec.robot_positions) robot_positions.push_back(point_to_json(p));
  json histogram = json::array();
  for (const auto& [value, count] : rec.coverage_histogram)
    histogram.push_back(json::array({value, count}));
  return json{
      {"type", "step"},
      {"step", rec.step_index},
      {"selected", rec.selected},
      {"selected_positions", selected_positions},
      {"robot_positions", robot_positions},
      {"robot_to_target", rec.robot_to_target},
      {"assignment_distance", rec.assignment_distance},
      {"t_boolean", rec.t_boolean},
      {"min_coverage_point_index", rec.min_coverage_point_index},
      {"heuristic_iterations", rec.heuristic_iterations},
      {"converged", rec.converged},
      {"rounded", rec.rounded},
      {"solve_seconds", rec.solve_seconds},
      {"coverage_histogram", histogram},
  };
}

void write_result_stream(std::ostream& out, const Scenario& s, const RunResult& r) {
  const json header{{"type", "header"},
                    {"scenario_digest", r.scenario_digest},
                    {"scenario_name", s.name},
                    {"steps", s.schedule.step_count},
                    {"team_size", s.team_size},
                    {"candidate_count", s.candidate_count}};
  out << header.dump() << '\n';
  for (const StepRecord& rec : r.steps) out << step_record_to_json(rec).dump() << '\n';
  const json footer{{"type", "footer"},
                    {"mean_solve_seconds", r.mean_solve_seconds},
                    {"max_solve_seconds", r.max_solve_seconds},
                    {"mean_t_boolean", r.mean_t_boolean}};
  out << footer.dump() << '\n';
}

}  // namespace parade
