#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cmflow/grid.hpp"

namespace cmflow {

/// Symmetry of a latitude profile under theta -> -theta.
/// Parity drives the ghost-value rule at the poles: even and untagged (none)
/// profiles extend across a pole by mirror reflection, the correct
/// continuation for any rotationally symmetric scalar; odd profiles (one
/// theta-derivative deep) extend with a sign flip.
enum class Parity { even, odd, none };

/// Values of a rotationally symmetric scalar field sampled on a LatitudeGrid.
class RadialProfile {
 public:
  RadialProfile(GridPtr grid, std::vector<double> values, Parity parity);

  static RadialProfile constant(GridPtr grid, double value);
  static RadialProfile from_function(GridPtr grid,
                                     const std::function<double(double)>& f,
                                     Parity parity);

  const LatitudeGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  Parity parity() const { return parity_; }

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int j) const { return values_[j]; }
  double& operator[](int j) { return values_[j]; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double min() const;
  double max() const;
  bool all_finite() const;

  /// Max deviation from the declared equatorial symmetry (0 for parity none).
  double parity_defect() const;

  RadialProfile with_parity(Parity p) const { return {grid_, values_, p}; }

 private:
  GridPtr grid_;
  std::vector<double> values_;
  Parity parity_;
};

/// Integral over S^n: omega_{n-1} * sum_j weights[j] * f[j].
/// Exact for constants to machine precision; annihilates odd profiles.
double integrate_sphere(const RadialProfile& f);

/// Same grid instance check for binary operations; throws on mismatch.
void require_same_grid(const RadialProfile& a, const RadialProfile& b);

/// Cumulative tail integrals of the weighted integrand:
///   tail[j] ~= int_{theta_j}^{pi/2} g(a) cos^{n-1}(a) da
/// evaluated with the grid's product-linear panel rule and compensated
/// summation from the north pole. `closure` is the full-range integral
/// (the theta = -pi/2 value), produced by the same accumulation so the
/// endpoint suffers no cancellation against an independently computed total.
struct TailIntegrals {
  std::vector<double> tail;
  double closure = 0.0;
};
TailIntegrals tail_integrals_north(const RadialProfile& g);

} // namespace cmflow
