#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmflow/runner.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"cmflow: an expanding curvature-flow solver for rotationally "
               "symmetric convex bodies in support-function form"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "integrate one or more scenarios");
  std::vector<std::string> run_configs;
  int grid_points = 0, jobs = 1;
  double t_max_override = 0.0;
  std::string output_dir;
  run->add_option("config", run_configs, "config file(s)")->required();
  run->add_option("--grid-points", grid_points, "override [grid] num_points");
  run->add_option("--t-max", t_max_override, "override [engine] t_max");
  run->add_option("--output-dir", output_dir, "override [output] directory");
  run->add_option("--jobs", jobs, "run configs in parallel");

  // check
  auto* check = app.add_subcommand("check", "static checks on phi (no flow)");
  std::string check_config;
  bool check_json = false;
  check->add_option("config", check_config, "config file")->required();
  check->add_flag("--json", check_json, "emit JSON instead of text");

  // list-scenarios
  auto* list = app.add_subcommand("list-scenarios", "print the registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& name : cmflow::scenario_names())
        std::cout << name << "\n";
      return 0;
    }

    if (check->parsed()) {
      const auto cfg = cmflow::parse_config_file(check_config);
      return cmflow::cmd_check(cfg, check_json, std::cout);
    }

    std::vector<cmflow::RunConfig> cfgs;
    for (const auto& path : run_configs) {
      auto cfg = cmflow::parse_config_file(path);
      if (grid_points > 0) cfg.num_points = grid_points;
      if (t_max_override > 0.0) cfg.t_max = t_max_override;
      if (!output_dir.empty()) {
        // With several configs, keep each run in its own subdirectory.
        cfg.directory = run_configs.size() == 1
                            ? output_dir
                            : (fs::path(output_dir) /
                               fs::path(path).stem().string())
                                  .string();
      }
      cfgs.push_back(std::move(cfg));
    }
    return cmflow::cmd_run_many(cfgs, jobs, std::cout);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return cmflow::exit_internal;
  }
}
