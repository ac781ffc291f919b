#pragma once

#include <string>
#include <vector>

#include "cmflow/flow_params.hpp"
#include "cmflow/profile.hpp"

namespace cmflow {

/// Smooth even bump, identically zero on [-pi/4, pi/4] and positive
/// elsewhere on [-pi/2, pi/2]:
///   r(theta) = exp(-1 / (theta^2 - (pi/4)^2))  for |theta| > pi/4.
/// Flat to all orders at the gluing points.
double bump_r(double theta);

/// Support profile with meridional radius zeta1 = r: the solution of
/// h'' + h = r with h'(0) = 0,
///   h(theta) = sin(theta) int_0^theta r cos
///            + cos(theta) int_theta^{pi/2} r sin,
/// evaluated by composite Simpson quadrature well below stencil error and
/// sampled on the grid. Even; degenerate (zeta1 = 0) on the flat cap but
/// with zeta2 > 0 everywhere, so sigma_k(.,0) > 0 for k < n.
RadialProfile counterexample_h0(GridPtr grid);

/// phi(theta) = (cos^2(theta) + 1/2)^m with m = p+k-1 > 0. The associated
/// f = phi^{1/m} has f_thth + f = -1/2 at the equator: the convexity
/// condition fails there by construction.
RadialProfile counterexample_phi(GridPtr grid, double m);

/// Support function of the spheroid with equatorial semi-axis a and polar
/// semi-axis c: h = sqrt(a^2 cos^2 + c^2 sin^2). Strictly convex.
RadialProfile spheroid_profile(GridPtr grid, double a, double c);

/// Anisotropy families used by the named scenarios.
struct PhiSpec {
  enum class Kind { constant, sin2_power, tilted, counterexample };
  Kind kind = Kind::constant;
  double eps = 0.2;    // sin2_power: (1 + eps sin^2)^m, eps in (0,1)
  double m = 1.0;      // sin2_power / counterexample exponent, m > 0
  double delta = 0.3;  // tilted: 1 + delta sin(theta), |delta| < 1
};
RadialProfile phi_family(GridPtr grid, const PhiSpec& spec);

enum class ExpectedOutcome { converge, breakdown, none };

/// A fully assembled run: parameters, initial profile, expectation.
struct ScenarioSpec {
  std::string name;
  FlowParams params;
  RadialProfile initial;
  ExpectedOutcome expected = ExpectedOutcome::none;
  std::string notes;

  /// Checks the constructive preconditions: positivity, parity, and (for
  /// convergent k < n scenarios) the convexity condition on phi.
  void validate() const;
};

/// Registry of stable scenario names usable from the CLI.
std::vector<std::string> scenario_names();
bool is_known_scenario(const std::string& name);

/// Builds a named scenario on a fresh grid with num_points nodes.
/// Throws std::invalid_argument for unknown names.
ScenarioSpec make_scenario(const std::string& name, int num_points);

} // namespace cmflow
