#pragma once

#include "cmflow/profile.hpp"

namespace cmflow {

enum class Normalization { unnormalized, normalized_pde, rescale_each_step };

/// Parameters of the expanding flow dh/dt = phi h^{2-p} sigma_k and of its
/// volume-style normalization dh/dtau = phi h^{2-p} sigma_k - eta h, with
///   eta = int h sigma_k dx / int (1/phi) dx.
struct FlowParams {
  int n = 2;  // ambient sphere dimension (matches the grid of phi)
  int k = 1;  // order of the elementary symmetric speed, 1 <= k <= n
  double p = 2.0;
  RadialProfile phi;

  double cfl = 0.2;          // in (0, 1]
  double t_max = 50.0;
  double residual_tol = 1e-6;
  Normalization normalization = Normalization::normalized_pde;
  bool renorm_projection = true;   // rescale after each step so int h^p/phi stays pinned
  double breakdown_zeta_tol = -1e-8;
  int sample_stride = 100;         // steps between monitor samples

  explicit FlowParams(RadialProfile phi_profile)
      : phi(std::move(phi_profile)) {
    n = phi.grid().n;
  }

  const GridPtr& grid_ptr() const { return phi.grid_ptr(); }
  const LatitudeGrid& grid() const { return phi.grid(); }

  /// Throws std::invalid_argument on any violated precondition:
  /// 1 <= k <= n, phi > 0, cfl in (0,1], non-even phi only for k = n.
  void validate() const;
};

} // namespace cmflow
