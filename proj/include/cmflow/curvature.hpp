#pragma once

#include "cmflow/profile.hpp"

namespace cmflow {

/// kth elementary symmetric function of the radii multiset
/// {zeta1, zeta2 (n-1 times)}, normalized so sigma_k(1,...,1) = 1:
///   sigma_k = (k/n) zeta1 zeta2^{k-1} + ((n-k)/n) zeta2^k.
double sigma_k_eval(double zeta1, double zeta2, int n, int k);

struct SigmaPartials {
  double d_zeta1;       // d sigma_k / d zeta1
  double d_zeta2_total; // sum over the n-1 repeated azimuthal directions
};
SigmaPartials sigma_k_partials(double zeta1, double zeta2, int n, int k);

/// Principal radii of the hypersurface with support profile h:
/// meridional zeta1 = h_thth + h, azimuthal zeta2 = h - tan(theta) h_th
/// (multiplicity n-1). The two cells nearest each pole evaluate zeta2 by
/// blending toward zeta1 with the umbilic series zeta2 = zeta1 + c u^2,
/// u the pole distance, c fitted at the third cell: the raw tan * h_th
/// product loses an order of accuracy there.
struct PrincipalRadii {
  RadialProfile zeta1;
  RadialProfile zeta2;
  RadialProfile sigma_k;
  double min_zeta1 = 0.0;
  double min_zeta2 = 0.0;
};
PrincipalRadii principal_radii(const RadialProfile& h, int k);

/// Eigenvalues of the spherical Hessian bundle of a latitude profile f:
/// meridional f_thth + f and azimuthal f - tan(theta) f_th, with the same
/// pole handling as principal_radii. (principal_radii is this applied to h.)
void hessian_eigenvalues(const RadialProfile& f, std::vector<double>& merid,
                         std::vector<double>& azim);

/// Allocation-free cores used by the flow engine. `scratch` must have the
/// grid size. hessian_parts_into writes f_thth and the pole-blended
/// -tan(theta) f_th; radii_into adds f to both.
void hessian_parts_into(const LatitudeGrid& g, std::span<const double> f,
                        double ghost_sign, std::span<double> merid2,
                        std::span<double> azim2, std::span<double> scratch);
void radii_into(const LatitudeGrid& g, std::span<const double> h,
                double ghost_sign, std::span<double> zeta1,
                std::span<double> zeta2, std::span<double> scratch);

/// Action of the linearized operator L = Theta sigma_k^{ab} grad_a grad_b on
/// F, evaluated through the rotationally symmetric eigen-decomposition:
///   L F = Theta [ (d sigma_k/d zeta1) F_thth
///               + (d sigma_k/d zeta2 total) (-tan(theta) F_th) ],
/// Theta = phi h^{2-p}. The azimuthal term uses the zeta2 pole blend.
RadialProfile linearized_L(const RadialProfile& F, const RadialProfile& h,
                           const RadialProfile& phi, double p, int k);

} // namespace cmflow
