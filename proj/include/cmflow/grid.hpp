#pragma once

#include <memory>
#include <vector>

namespace cmflow {

/// Cell-centered latitude grid on (-pi/2, pi/2) for rotationally symmetric
/// fields on the unit sphere S^n in R^{n+1}.
///
/// Nodes sit at theta_j = -pi/2 + (j+1/2)*dtheta, so tan(theta) is finite at
/// every node and the poles fall on cell boundaries. The quadrature weights
/// integrate against the surface measure cos^{n-1}(theta) dtheta; they are
/// built from Chebyshev moments of the measure (the nodes are first-kind
/// Chebyshev points in s = sin(theta)), which makes the rule exact for
/// polynomials in sin(theta) up to degree num_points-1. Profiles that come
/// from smooth fields on the sphere are integrated to machine precision at
/// moderate resolution.
struct LatitudeGrid {
  int n = 0;             // ambient sphere dimension: hypersurfaces live in R^{n+1}
  int num_points = 0;
  double dtheta = 0.0;

  std::vector<double> theta;       // strictly increasing, theta[j] = -theta[N-1-j]
  std::vector<double> sin_theta;
  std::vector<double> cos_theta;   // evaluated as sin(pole distance); never 0
  std::vector<double> tan_theta;
  std::vector<double> pole_dist;   // pi/2 - |theta|
  std::vector<double> weights;     // 1-D weights against cos^{n-1}; all positive

  // Product-linear tail rule: exact zeroth/first moments of cos^{n-1} over
  // the node-to-node panels and the two polar caps. Used for the cumulative
  // integrals int_theta^{pi/2} of the Firey-type conditions, where the local
  // error must scale with the local measure so that division by cos^n(theta)
  // stays second-order accurate all the way into the last cells.
  std::vector<double> panel_w_lo;  // size N-1, weight on the southern node
  std::vector<double> panel_w_hi;  // size N-1, weight on the northern node
  double cap_m0_north = 0.0, cap_m1_north = 0.0;  // moments about theta[N-1]
  double cap_m0_south = 0.0, cap_m1_south = 0.0;  // moments about theta[0]

  double omega_ambient = 0.0;  // surface area of S^{n-1} (the measure prefactor)
  double omega_total = 0.0;    // surface area of S^n
  double weight_sum = 0.0;     // sum of weights = omega_total / omega_ambient

  double max_abs_tan() const { return tan_theta.back(); }
};

using GridPtr = std::shared_ptr<const LatitudeGrid>;

/// Builds the grid. Throws std::invalid_argument for n < 2 or num_points < 16.
GridPtr build_grid(int n, int num_points);

/// Surface area of S^d (unit sphere in R^{d+1}).
double sphere_area(int d);

} // namespace cmflow
