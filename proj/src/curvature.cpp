#include "cmflow/curvature.hpp"

#include <cmath>
#include <stdexcept>

#include "cmflow/derivatives.hpp"
#include "cmflow/kernels.hpp"

namespace cmflow {

namespace {

void check_nk(int n, int k) {
  if (n < 2) throw std::invalid_argument("require n >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("require 1 <= k <= n");
}

double ipow(double x, int q) {
  double r = 1.0;
  for (int i = 0; i < q; ++i) r *= x;
  return r;
}

void second_derivative_parts(const RadialProfile& f, std::vector<double>& m2,
                             std::vector<double>& a2) {
  const auto& g = f.grid();
  m2.resize(g.num_points);
  a2.resize(g.num_points);
  std::vector<double> scratch(g.num_points);
  hessian_parts_into(g, f.values(), ghost_sign(f.parity()), m2, a2, scratch);
}

} // namespace

// merid2 = f_thth, azim2 = -tan(theta) f_th, with the azimuthal part blended
// toward the meridional one over the two cells nearest each pole via the
// series azim2 = merid2 + c u^2 (coefficient fitted at the third cell; the
// raw tan * f_th product is a 0 * inf limit there).
void hessian_parts_into(const LatitudeGrid& g, std::span<const double> f,
                        double ghost_sign, std::span<double> m2,
                        std::span<double> a2, std::span<double> scratch) {
  const int N = g.num_points;
  kernels::stencil_d1(f, ghost_sign, g.dtheta, scratch);
  kernels::stencil_d2(f, ghost_sign, g.dtheta, m2);
  const long n = N;
#pragma omp parallel for schedule(static) if (n >= (long)kernels::omp_grain)
  for (long j = 0; j < n; ++j) a2[j] = -g.tan_theta[j] * scratch[j];

  const auto& u = g.pole_dist;
  const double cs = (a2[2] - m2[2]) / (u[2] * u[2]);
  a2[0] = m2[0] + cs * u[0] * u[0];
  a2[1] = m2[1] + cs * u[1] * u[1];
  const double cn = (a2[N - 3] - m2[N - 3]) / (u[N - 3] * u[N - 3]);
  a2[N - 1] = m2[N - 1] + cn * u[N - 1] * u[N - 1];
  a2[N - 2] = m2[N - 2] + cn * u[N - 2] * u[N - 2];
}

void radii_into(const LatitudeGrid& g, std::span<const double> h,
                double ghost_sign, std::span<double> zeta1,
                std::span<double> zeta2, std::span<double> scratch) {
  hessian_parts_into(g, h, ghost_sign, zeta1, zeta2, scratch);
  const long n = g.num_points;
#pragma omp parallel for schedule(static) if (n >= (long)kernels::omp_grain)
  for (long j = 0; j < n; ++j) {
    zeta1[j] += h[j];
    zeta2[j] += h[j];
  }
}

double sigma_k_eval(double zeta1, double zeta2, int n, int k) {
  check_nk(n, k);
  const double kn = static_cast<double>(k) / n;
  return kn * zeta1 * ipow(zeta2, k - 1) + (1.0 - kn) * ipow(zeta2, k);
}

SigmaPartials sigma_k_partials(double zeta1, double zeta2, int n, int k) {
  check_nk(n, k);
  const double kn = static_cast<double>(k) / n;
  SigmaPartials out;
  out.d_zeta1 = kn * ipow(zeta2, k - 1);
  out.d_zeta2_total = (k >= 2) ? kn * (k - 1) * zeta1 * ipow(zeta2, k - 2) +
                                     kn * (n - k) * ipow(zeta2, k - 1)
                               : kn * (n - k);
  return out;
}

void hessian_eigenvalues(const RadialProfile& f, std::vector<double>& merid,
                         std::vector<double>& azim) {
  second_derivative_parts(f, merid, azim);
  const auto v = f.values();
  for (int j = 0; j < f.size(); ++j) {
    merid[j] += v[j];
    azim[j] += v[j];
  }
}

PrincipalRadii principal_radii(const RadialProfile& h, int k) {
  const auto& g = h.grid();
  check_nk(g.n, k);
  std::vector<double> z1, z2;
  hessian_eigenvalues(h, z1, z2);
  std::vector<double> sk(g.num_points);
  kernels::pointwise_sigma_k(z1, z2, g.n, k, sk);

  PrincipalRadii out{
      RadialProfile(h.grid_ptr(), std::move(z1), h.parity()),
      RadialProfile(h.grid_ptr(), std::move(z2), h.parity()),
      RadialProfile(h.grid_ptr(), std::move(sk), h.parity()),
      0.0, 0.0};
  out.min_zeta1 = out.zeta1.min();
  out.min_zeta2 = out.zeta2.min();
  return out;
}

RadialProfile linearized_L(const RadialProfile& F, const RadialProfile& h,
                           const RadialProfile& phi, double p, int k) {
  require_same_grid(F, h);
  require_same_grid(F, phi);
  const auto& g = F.grid();
  check_nk(g.n, k);

  std::vector<double> m2, a2;
  second_derivative_parts(F, m2, a2);

  std::vector<double> z1, z2;
  hessian_eigenvalues(h, z1, z2);
  std::vector<double> p1(g.num_points), p2(g.num_points);
  kernels::pointwise_sigma_k_partials(z1, z2, g.n, k, p1, p2);

  const double e = 2.0 - p;
  std::vector<double> out(g.num_points);
  const long n = g.num_points;
#pragma omp parallel for schedule(static) if (n >= (long)kernels::omp_grain)
  for (long j = 0; j < n; ++j) {
    const double theta_coeff = phi[j] * kernels::pow_real(h[j], e);
    out[j] = theta_coeff * (p1[j] * m2[j] + p2[j] * a2[j]);
  }
  return {F.grid_ptr(), std::move(out), F.parity()};
}

} // namespace cmflow
