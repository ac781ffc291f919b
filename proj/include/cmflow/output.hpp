#pragma once

#include <string>
#include <vector>

#include "cmflow/config.hpp"
#include "cmflow/flow.hpp"

namespace cmflow {

/// monitors.csv: header row with the MonitorRecord columns, one row per
/// sample, 17 significant digits, LF line endings, '.' decimal separator.
std::string monitors_csv(const std::vector<MonitorRecord>& samples);
void write_monitors_csv(const std::string& path,
                        const std::vector<MonitorRecord>& samples);

/// final_state.json: grid, h values, the converged constant (measure mean of
/// phi h^{1-p} sigma_k at the final state) and the terminal status.
std::string final_state_json(const TrajectoryRecord& rec,
                             const FlowParams& params);
void write_final_state_json(const std::string& path,
                            const TrajectoryRecord& rec,
                            const FlowParams& params);

void write_echo_cfg(const std::string& path, const RunConfig& cfg);

/// Static checks of phi without flowing.
struct CheckReport {
  double convexity_min_eig = 0.0;
  bool convexity_ok = false;
  double convexity_exponent = 0.0;  // m = p + k - 1
  double closure = 0.0;
  bool firey_applicable = false;  // k < n
  double firey_defect_min = 0.0;
  bool firey_tails_positive = false;
  double firey_closure_value = 0.0;
};
CheckReport static_checks(const ScenarioSpec& spec);
std::string check_report_text(const CheckReport& rep);
std::string check_report_json(const CheckReport& rep);

} // namespace cmflow
