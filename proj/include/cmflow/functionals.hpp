#pragma once

#include <array>
#include <string>
#include <vector>

#include "cmflow/flow_params.hpp"
#include "cmflow/profile.hpp"

namespace cmflow {

/// Per-sample snapshot of every tracked functional and bound.
/// Field order here is the column order of monitors.csv.
struct MonitorRecord {
  double time = 0.0;
  double entropy_A = 0.0;
  double eta = 0.0;
  double conservation = 0.0;  // int h^p/phi dx (int log(h)/phi dx for p = 0)
  double h_min = 0.0, h_max = 0.0;
  double sigma_k_min = 0.0, sigma_k_max = 0.0;
  double zeta1_min = 0.0, zeta2_min = 0.0;
  double grad_log_h_max = 0.0;
  double soliton_residual = 0.0;
  double speed_min = 0.0, speed_max = 0.0;  // of phi h^{1-p} sigma_k

  static constexpr int num_columns = 14;
  static const std::array<const char*, num_columns>& column_names();
  std::array<double, num_columns> as_array() const;
};

/// Scale-invariant entropy of the flow:
///   A[h] = int h sigma_k dx * (int h^p/phi dx)^{-(k+1)/p}   (p != 0)
///   A[h] = exp(-(k+1)/int(1/phi) * int log(h)/phi dx) * int h sigma_k dx.
/// Non-decreasing along the normalized flow. Requires h > 0.
double entropy_A(const RadialProfile& h, const FlowParams& params);

/// Deviation of s = phi h^{1-p} sigma_k from its measure-weighted mean:
/// max|s - mean| / mean. Zero exactly on self-similar solutions of
/// phi h^{1-p} sigma_k = c. Throws std::domain_error when the mean is <= 0.
double soliton_residual(const RadialProfile& h, const FlowParams& params);

/// max over the grid of |h_theta| / h.
double grad_log_h_max(const RadialProfile& h);

/// Pointwise defect of the closed-form solvability condition for 1/phi to be
/// the (normalized) kth symmetric function of a convex hypersurface of
/// revolution:
///   defect(theta) = 1/phi - (n-k) cos^{-n}(theta)
///                       int_theta^{pi/2} cos^{n-1}(a) sin(a) / phi da.
/// With the normalized sigma_k convention the defect of an actual
/// hypersurface equals (k/n) zeta1 zeta2^{k-1}; for phi == 1 it is k/n.
/// Also reports the tail integrals (positive for theta > -pi/2 when phi
/// qualifies) and the closure value at theta = -pi/2, which vanishes iff the
/// first-moment condition int x/phi dx = 0 holds.
struct FireyReport {
  RadialProfile defect;
  RadialProfile tail;
  bool tails_positive = false;
  double closure_value = 0.0;
};
FireyReport firey_defect(const RadialProfile& phi, int k);

/// Polar component of int_{S^n} x/phi(x) dx (the only one that survives
/// rotational symmetry): omega_{n-1} sum_j w_j sin(theta_j)/phi_j.
double closure_integral(const RadialProfile& phi);

/// The quantity preserved in sign along flows with p > 1:
///   h^{p-1}/phi - (n-k) cos^{-n}(theta) *
///       int_theta^{pi/2} cos^{n-1} sin(a) h^{p-1}/phi da.
/// Reduces to the firey defect at p = 1.
RadialProfile preserved_Q(const RadialProfile& h, const RadialProfile& phi,
                          const FlowParams& params);

/// Positive definiteness of hess(f) + g f for f = phi^{1/m} via the two
/// rotationally symmetric eigenvalue fields f_thth + f and f - tan f_th.
struct ConvexityReport {
  double min_eig = 0.0;
  bool ok = false;
};
ConvexityReport convexity_condition(const RadialProfile& phi, double m);

/// Initial growth rate of the meridional radius at the equator for initial
/// data whose zeta1 vanishes to second order at theta = 0:
///   rate = sigma_k h^{2-p} (phi_thth + (p+k-1) phi) at theta = 0.
/// Negative rate drives the loss of convexity. Throws std::domain_error if
/// |zeta1|, |zeta1'| or |zeta1''| at 0 exceeds 1e-8.
double counterexample_rate(const RadialProfile& h, const RadialProfile& phi,
                           const FlowParams& params);

} // namespace cmflow
