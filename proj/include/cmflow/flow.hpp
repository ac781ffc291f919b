#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmflow/curvature.hpp"
#include "cmflow/flow_params.hpp"
#include "cmflow/functionals.hpp"
#include "cmflow/profile.hpp"

namespace cmflow {

/// Flow snapshot with derived fields computed once at construction:
/// principal radii, sigma_k, eta, and the speed phi h^{2-p} sigma_k.
class FlowState {
 public:
  FlowState(double time, RadialProfile h, const FlowParams& params);

  double time() const { return time_; }
  const RadialProfile& h() const { return h_; }
  const PrincipalRadii& radii() const { return radii_; }
  double eta() const { return eta_; }
  const RadialProfile& speed() const { return speed_; }  // phi h^{2-p} sigma_k

  bool finite() const;
  double min_h() const { return h_.min(); }

 private:
  double time_;
  RadialProfile h_;
  PrincipalRadii radii_;
  double eta_;
  RadialProfile speed_;
};

/// eta = int h sigma_k dx / int (1/phi) dx.
double eta(const FlowState& state, const FlowParams& params);

/// Pointwise phi h^{2-p} sigma_k.
RadialProfile rhs_unnormalized(const FlowState& state,
                               const FlowParams& params);

/// rhs_unnormalized - eta h.
RadialProfile rhs_normalized(const FlowState& state, const FlowParams& params);

/// One classical RK4 step of the configured flow (eta re-evaluated at every
/// stage). Applies the rescaling projection afterwards when configured.
/// Never throws on emerging NaN or sign loss; run_flow turns those into a
/// breakdown status with the prior state preserved.
FlowState step(const FlowState& state, const FlowParams& params, double dt);

/// Parabolic step bound:
///   cfl * dtheta^2 / max(Theta ds/dz1, Theta |ds/dz2| max|tan| dtheta, eps),
/// clamped to the time remaining before t_max.
double stable_dt(const FlowState& state, const FlowParams& params);

/// The scalar rescaling lambda h with
///   lambda = (int 1/phi dx / int h^p/phi dx)^{1/p}            (p != 0)
///   lambda = exp(-(1/int 1/phi dx) int log(h)/phi dx)         (p = 0),
/// i.e. the normalization that pins int h^p/phi = int 1/phi.
RadialProfile rescale_snapshot(const FlowState& state,
                               const FlowParams& params);

struct TerminalStatus {
  enum class Kind { converged, t_max_reached, breakdown };
  Kind kind = Kind::t_max_reached;
  std::string reason;  // breakdown reason: negative_h | negative_sigma_k |
                       // nan | loss_of_convexity
  double time = 0.0;

  bool converged() const { return kind == Kind::converged; }
  bool breakdown() const { return kind == Kind::breakdown; }
  std::string describe() const;
};

struct TrajectoryRecord {
  std::vector<MonitorRecord> samples;  // strictly increasing times
  TerminalStatus status;
  std::optional<FlowState> final_state;  // last valid state
  long total_steps = 0;
};

/// Integrates from the initial profile until the soliton residual and the
/// normalized-rhs norm both drop below residual_tol, t_max is reached, or the
/// flow breaks down. In the normalized modes the initial profile is first
/// rescaled so the conserved integral identity holds from time zero.
/// Breakdown rules: NaN or h <= 0 end the run immediately; sigma_k <= 0 ends
/// it for k = n; for k < n, min zeta1 < breakdown_zeta_tol sustained over
/// three consecutive samples is flagged as loss of convexity.
TrajectoryRecord run_flow(const RadialProfile& initial,
                          const FlowParams& params);

/// All tracked functionals of one state. Fields that are undefined on a
/// broken state (entropy on h <= 0, residual with nonpositive mean) are
/// recorded as NaN rather than thrown.
MonitorRecord compute_monitor(const FlowState& state, const FlowParams& params);

/// linearized_L with Theta taken from the params' phi and p.
RadialProfile linearized_L(const RadialProfile& F, const FlowState& state,
                           const FlowParams& params);

} // namespace cmflow
