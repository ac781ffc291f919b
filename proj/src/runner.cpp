#include "cmflow/runner.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "cmflow/output.hpp"

namespace cmflow {

namespace fs = std::filesystem;

int cmd_run(const RunConfig& cfg, std::ostream& log) {
  try {
    ScenarioSpec spec = build_scenario(cfg);
    spec.validate();

    fs::create_directories(cfg.directory);
    write_echo_cfg((fs::path(cfg.directory) / "echo.cfg").string(), cfg);

    log << "running scenario '" << spec.name << "' (n=" << spec.params.n
        << " k=" << spec.params.k << " p=" << spec.params.p
        << " N=" << cfg.num_points << ")\n";
    const TrajectoryRecord rec = run_flow(spec.initial, spec.params);
    log << "terminal status: " << rec.status.describe()
        << " at t = " << rec.status.time << " (" << rec.total_steps
        << " steps, " << rec.samples.size() << " samples)\n";

    const bool want_csv = std::find(cfg.formats.begin(), cfg.formats.end(),
                                    "csv") != cfg.formats.end();
    const bool want_json = std::find(cfg.formats.begin(), cfg.formats.end(),
                                     "json") != cfg.formats.end();
    if (want_csv)
      write_monitors_csv((fs::path(cfg.directory) / "monitors.csv").string(),
                         rec.samples);
    if (want_json)
      write_final_state_json(
          (fs::path(cfg.directory) / "final_state.json").string(), rec,
          spec.params);

    if (spec.expected == ExpectedOutcome::none) return exit_ok;
    const bool got_converge = rec.status.converged();
    const bool got_breakdown = rec.status.breakdown();
    if (spec.expected == ExpectedOutcome::converge)
      return got_converge ? exit_ok : exit_mismatch;
    return got_breakdown ? exit_ok : exit_mismatch;
  } catch (const std::exception& ex) {
    log << "error: " << ex.what() << "\n";
    return exit_internal;
  }
}

int cmd_run_many(const std::vector<RunConfig>& cfgs, int jobs,
                 std::ostream& log) {
  if (cfgs.size() == 1 || jobs <= 1) {
    int worst = exit_ok;
    for (const auto& c : cfgs) worst = std::max(worst, cmd_run(c, log));
    return worst;
  }
  std::atomic<size_t> next{0};
  std::atomic<int> worst{exit_ok};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cfgs.size()) return;
      std::ostringstream local;
      const int rc = cmd_run(cfgs[i], local);
      int cur = worst.load();
      while (cur < rc && !worst.compare_exchange_weak(cur, rc)) {}
      static std::mutex log_mutex;
      std::lock_guard<std::mutex> lock(log_mutex);
      log << local.str();
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min<int>(jobs, static_cast<int>(cfgs.size()));
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return worst.load();
}

int cmd_check(const RunConfig& cfg, bool json_out, std::ostream& log) {
  try {
    ScenarioSpec spec = build_scenario(cfg);
    const CheckReport rep = static_checks(spec);
    log << (json_out ? check_report_json(rep) : check_report_text(rep));
    return exit_ok;
  } catch (const std::exception& ex) {
    log << "error: " << ex.what() << "\n";
    return exit_internal;
  }
}

} // namespace cmflow
