#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parade/oracle.hpp"
#include "parade/scenario_io.hpp"
#include "parade/simulator.hpp"
#include "parade/svg_render.hpp"

namespace {

using namespace parade;

std::vector<std::size_t> parse_count_list(const std::string& csv, const std::string& flag) {
  std::vector<std::size_t> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "expected a comma-separated list of counts");
    }
  }
  if (values.empty()) throw CLI::ValidationError(flag, "empty list");
  return values;
}

int cmd_run(const std::string& scenario_path, const std::string& out_path,
            const std::string& frames_dir, std::optional<std::uint64_t> seed_override) {
  Scenario s = load_scenario(scenario_path);
  if (seed_override) s.seed = *seed_override;

  StepObserver observer = nullptr;
  if (!frames_dir.empty()) {
    std::filesystem::create_directories(frames_dir);
    observer = [&s, &frames_dir](const StepRecord& rec, const RouteInstance& inst,
                                 const CandidateSet& cands) {
      char name[32];
      std::snprintf(name, sizeof(name), "frame_%04zu.svg", rec.step_index);
      std::ofstream f(std::filesystem::path(frames_dir) / name, std::ios::binary);
      f << render_frame(s, rec, inst, cands);
    };
  }

  const RunResult result = run(s, observer);

  if (out_path.empty()) {
    write_result_stream(std::cout, s, result);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    write_result_stream(out, s, result);
  }
  std::cerr << "run: " << result.steps.size() << " steps, mean t_boolean "
            << result.mean_t_boolean << ", mean solve " << result.mean_solve_seconds
            << " s\n";
  return 0;
}

int cmd_oracle(const std::string& scenario_path, std::size_t step) {
  const Scenario s = load_scenario(scenario_path);
  const RouteInstance inst = route_instance(s.path, s.schedule, step);
  const std::uint64_t seed =
      s.resample_mode == ResampleMode::fixed ? s.seed : s.seed + step;
  const CandidateSet cands = sample_candidates(s.world, s.candidate_count, seed);
  const CoverageMatrix A = build_coverage_matrix(s.world, cands, inst, s.sensor);

  const OracleResult exact = brute_force(A, s.team_size);
  const PlacementSolution heur = recover_boolean(A, s.team_size, s.heuristic);

  std::cout << "step " << step << ": oracle value " << exact.best_value
            << " (subsets evaluated " << exact.subsets_evaluated << "), heuristic value "
            << heur.t_boolean << " (" << heur.iterations << " iterations"
            << (heur.rounded ? ", rounded" : "") << ")\n";
  std::cout << "oracle subset:";
  for (std::size_t i : exact.best_subset) std::cout << " " << i;
  std::cout << "\nheuristic subset:";
  for (std::size_t i : heur.selected) std::cout << " " << i;
  std::cout << "\n";
  return 0;
}

int cmd_bench(const std::string& scenario_path, const std::string& robots_csv,
              const std::string& candidates_csv, const std::string& out_path) {
  const Scenario base = load_scenario(scenario_path);
  const std::vector<std::size_t> robot_counts = parse_count_list(robots_csv, "--robots");
  const std::vector<std::size_t> candidate_counts =
      parse_count_list(candidates_csv, "--candidates");

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    out = &file;
  }

  *out << "robots,candidates,step,solve_seconds,iterations,t_boolean\n";
  for (std::size_t S : robot_counts) {
    for (std::size_t n : candidate_counts) {
      Scenario s = base;
      s.team_size = S;
      s.candidate_count = n;
      const RunResult result = run(s);
      for (const StepRecord& rec : result.steps) {
        *out << S << "," << n << "," << rec.step_index << "," << rec.solve_seconds
             << "," << rec.heuristic_iterations << "," << rec.t_boolean << "\n";
      }
      std::cerr << "bench: S=" << S << " n=" << n << " mean solve "
                << result.mean_solve_seconds << " s\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-min coverage placement of a camera team over a moving parade route"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, frames_dir;
  std::optional<std::uint64_t> seed_override;
  std::size_t oracle_step = 0;
  std::string robots_csv = "6,12,24";
  std::string candidates_csv = "512,1024,2048,4096";

  CLI::App* run_cmd = app.add_subcommand("run", "simulate a scenario and emit JSON Lines");
  run_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run_cmd->add_option("--out", out_path, "results file (default: stdout)");
  run_cmd->add_option("--frames", frames_dir, "directory for per-step SVG frames");
  run_cmd->add_option("--seed", seed_override, "override the scenario seed");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force check of one step against the heuristic");
  oracle_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
  oracle_cmd->add_option("--step", oracle_step, "step index")->required();

  CLI::App* bench_cmd = app.add_subcommand("bench", "timing sweep over team and candidate sizes");
  bench_cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
  bench_cmd->add_option("--robots", robots_csv, "comma-separated team sizes");
  bench_cmd->add_option("--candidates", candidates_csv, "comma-separated candidate counts");
  bench_cmd->add_option("--out", out_path, "CSV output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(scenario_path, out_path, frames_dir, seed_override);
    if (oracle_cmd->parsed()) return cmd_oracle(scenario_path, oracle_step);
    if (bench_cmd->parsed())
      return cmd_bench(scenario_path, robots_csv, candidates_csv, out_path);
  } catch (const parade::OracleLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
