#include "cmflow/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cmflow/functionals.hpp"
#include "cmflow/kernels.hpp"

namespace cmflow {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);  // binary: keep LF endings
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace

std::string monitors_csv(const std::vector<MonitorRecord>& samples) {
  std::ostringstream o;
  const auto& names = MonitorRecord::column_names();
  for (size_t i = 0; i < names.size(); ++i) o << (i ? "," : "") << names[i];
  o << "\n";
  for (const auto& m : samples) {
    const auto row = m.as_array();
    for (size_t i = 0; i < row.size(); ++i)
      o << (i ? "," : "") << fmt17(row[i]);
    o << "\n";
  }
  return o.str();
}

void write_monitors_csv(const std::string& path,
                        const std::vector<MonitorRecord>& samples) {
  write_text(path, monitors_csv(samples));
}

std::string final_state_json(const TrajectoryRecord& rec,
                             const FlowParams& params) {
  nlohmann::json j;
  j["terminal_status"] = {{"kind", rec.status.kind ==
                                       TerminalStatus::Kind::converged
                                   ? "converged"
                               : rec.status.kind ==
                                       TerminalStatus::Kind::t_max_reached
                                   ? "t_max_reached"
                                   : "breakdown"},
                          {"reason", rec.status.reason},
                          {"time", rec.status.time}};
  j["total_steps"] = rec.total_steps;
  if (rec.final_state) {
    const auto& st = *rec.final_state;
    const auto& g = st.h().grid();
    j["grid"] = {{"n", g.n},
                 {"num_points", g.num_points},
                 {"dtheta", g.dtheta},
                 {"theta", g.theta}};
    j["h"] = std::vector<double>(st.h().values().begin(),
                                 st.h().values().end());
    // Converged constant: measure mean of phi h^{1-p} sigma_k.
    std::vector<double> s(st.h().size());
    kernels::pointwise_speed(params.phi.values(), st.h().values(),
                             1.0 - params.p, st.radii().sigma_k.values(), s);
    const double cbar = g.omega_ambient *
                        kernels::weighted_sum(g.weights, s) / g.omega_total;
    j["c_bar"] = cbar;
  }
  return j.dump(2) + "\n";
}

void write_final_state_json(const std::string& path,
                            const TrajectoryRecord& rec,
                            const FlowParams& params) {
  write_text(path, final_state_json(rec, params));
}

void write_echo_cfg(const std::string& path, const RunConfig& cfg) {
  write_text(path, emit_config(cfg));
}

CheckReport static_checks(const ScenarioSpec& spec) {
  CheckReport rep;
  rep.convexity_exponent = spec.params.p + spec.params.k - 1.0;
  const auto conv = convexity_condition(spec.params.phi, rep.convexity_exponent);
  rep.convexity_min_eig = conv.min_eig;
  rep.convexity_ok = conv.ok;
  rep.closure = closure_integral(spec.params.phi);
  rep.firey_applicable = spec.params.k < spec.params.n;
  if (rep.firey_applicable) {
    const auto firey = firey_defect(spec.params.phi, spec.params.k);
    rep.firey_defect_min = firey.defect.min();
    rep.firey_tails_positive = firey.tails_positive;
    rep.firey_closure_value = firey.closure_value;
  }
  return rep;
}

std::string check_report_text(const CheckReport& rep) {
  std::ostringstream o;
  char buf[128];
  std::snprintf(buf, sizeof buf, "(p+k-1)-convexity: %s, min_eig = %.6g\n",
                rep.convexity_ok ? "PASS" : "FAIL", rep.convexity_min_eig);
  o << buf;
  std::snprintf(buf, sizeof buf, "closure integral:  %.6g %s\n", rep.closure,
                std::abs(rep.closure) < 1e-10 ? "(zero)" : "(nonzero)");
  o << buf;
  if (rep.firey_applicable) {
    std::snprintf(buf, sizeof buf,
                  "firey defect min:  %.6g (%s), tails %s, closure %.6g\n",
                  rep.firey_defect_min,
                  rep.firey_defect_min > 0.0 ? "positive" : "nonpositive",
                  rep.firey_tails_positive ? "positive" : "not positive",
                  rep.firey_closure_value);
    o << buf;
  } else {
    o << "firey defect:      n/a (k = n)\n";
  }
  return o.str();
}

std::string check_report_json(const CheckReport& rep) {
  nlohmann::json j;
  j["convexity"] = {{"exponent", rep.convexity_exponent},
                    {"min_eig", rep.convexity_min_eig},
                    {"ok", rep.convexity_ok}};
  j["closure_integral"] = rep.closure;
  if (rep.firey_applicable)
    j["firey"] = {{"defect_min", rep.firey_defect_min},
                  {"tails_positive", rep.firey_tails_positive},
                  {"closure_value", rep.firey_closure_value}};
  return j.dump(2) + "\n";
}

} // namespace cmflow
