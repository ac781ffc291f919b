#include "cmflow/functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "cmflow/curvature.hpp"
#include "cmflow/derivatives.hpp"
#include "cmflow/kernels.hpp"

namespace cmflow {

const std::array<const char*, MonitorRecord::num_columns>&
MonitorRecord::column_names() {
  static const std::array<const char*, num_columns> names = {
      "time",          "entropy_A",       "eta",
      "conservation",  "h_min",           "h_max",
      "sigma_k_min",   "sigma_k_max",     "zeta1_min",
      "zeta2_min",     "grad_log_h_max",  "soliton_residual",
      "speed_min",     "speed_max"};
  return names;
}

std::array<double, MonitorRecord::num_columns> MonitorRecord::as_array()
    const {
  return {time,        entropy_A,   eta,       conservation,
          h_min,       h_max,       sigma_k_min, sigma_k_max,
          zeta1_min,   zeta2_min,   grad_log_h_max, soliton_residual,
          speed_min,   speed_max};
}

double entropy_A(const RadialProfile& h, const FlowParams& params) {
  require_same_grid(h, params.phi);
  if (!(h.min() > 0.0))
    throw std::domain_error("entropy_A: h must be strictly positive");
  const auto& g = h.grid();
  const int N = g.num_points;

  const auto radii = principal_radii(h, params.k);
  std::vector<double> buf(N);
  kernels::mul(h.values(), radii.sigma_k.values(), buf);
  const double mixed =
      g.omega_ambient * kernels::weighted_sum(g.weights, buf);

  std::vector<double> inv_phi(N);
  for (int j = 0; j < N; ++j) inv_phi[j] = 1.0 / params.phi[j];

  if (params.p != 0.0) {
    kernels::pow_mul(h.values(), params.p, inv_phi, buf);
    const double ihp = g.omega_ambient * kernels::weighted_sum(g.weights, buf);
    return mixed * std::pow(ihp, -(params.k + 1.0) / params.p);
  }
  for (int j = 0; j < N; ++j) buf[j] = std::log(h[j]) * inv_phi[j];
  const double ilog = g.omega_ambient * kernels::weighted_sum(g.weights, buf);
  const double iphi =
      g.omega_ambient * kernels::weighted_sum(g.weights, inv_phi);
  return std::exp(-(params.k + 1.0) * ilog / iphi) * mixed;
}

double soliton_residual(const RadialProfile& h, const FlowParams& params) {
  require_same_grid(h, params.phi);
  if (!(h.min() > 0.0))
    throw std::domain_error("soliton_residual: h must be strictly positive");
  const auto& g = h.grid();
  const auto radii = principal_radii(h, params.k);
  std::vector<double> s(g.num_points);
  kernels::pointwise_speed(params.phi.values(), h.values(), 1.0 - params.p,
                           radii.sigma_k.values(), s);
  const double cbar =
      g.omega_ambient * kernels::weighted_sum(g.weights, s) / g.omega_total;
  if (!(cbar > 0.0))
    throw std::domain_error("soliton_residual: nonpositive mean speed");
  double dev = 0.0;
  for (double v : s) dev = std::max(dev, std::abs(v - cbar));
  return dev / cbar;
}

double grad_log_h_max(const RadialProfile& h) {
  const RadialProfile dh = d_theta(h);
  double m = 0.0;
  for (int j = 0; j < h.size(); ++j)
    m = std::max(m, std::abs(dh[j]) / h[j]);
  return m;
}

FireyReport firey_defect(const RadialProfile& phi, int k) {
  const auto& g = phi.grid();
  if (k < 1 || k >= g.n)
    throw std::invalid_argument("firey_defect: require 1 <= k < n");
  if (!(phi.min() > 0.0))
    throw std::invalid_argument("firey_defect: phi must be positive");
  const int N = g.num_points;

  // Integrand of the tail: sin(a) / phi(a); the cos^{n-1} factor lives in
  // the panel moments.
  std::vector<double> integrand(N);
  for (int j = 0; j < N; ++j) integrand[j] = g.sin_theta[j] / phi[j];
  auto tails = tail_integrals_north(
      RadialProfile(phi.grid_ptr(), integrand, Parity::none));

  std::vector<double> defect(N);
  bool tails_positive = true;
  for (int j = 0; j < N; ++j) {
    const double cn = kernels::pow_real(g.cos_theta[j], double(g.n));
    defect[j] = 1.0 / phi[j] - (g.n - k) * tails.tail[j] / cn;
    if (!(tails.tail[j] > 0.0)) tails_positive = false;
  }

  FireyReport rep{
      RadialProfile(phi.grid_ptr(), std::move(defect), Parity::none),
      RadialProfile(phi.grid_ptr(), std::move(tails.tail), Parity::none),
      tails_positive, tails.closure};
  return rep;
}

double closure_integral(const RadialProfile& phi) {
  if (!(phi.min() > 0.0))
    throw std::invalid_argument("closure_integral: phi must be positive");
  const auto& g = phi.grid();
  std::vector<double> f(g.num_points);
  for (int j = 0; j < g.num_points; ++j) f[j] = g.sin_theta[j] / phi[j];
  return g.omega_ambient * kernels::weighted_sum(g.weights, f);
}

RadialProfile preserved_Q(const RadialProfile& h, const RadialProfile& phi,
                          const FlowParams& params) {
  require_same_grid(h, phi);
  const auto& g = h.grid();
  if (params.k >= g.n)
    throw std::invalid_argument("preserved_Q: require k < n");
  const int N = g.num_points;

  std::vector<double> hp(N);  // h^{p-1} / phi
  for (int j = 0; j < N; ++j)
    hp[j] = kernels::pow_real(h[j], params.p - 1.0) / phi[j];

  std::vector<double> integrand(N);
  for (int j = 0; j < N; ++j) integrand[j] = g.sin_theta[j] * hp[j];
  const auto tails = tail_integrals_north(
      RadialProfile(h.grid_ptr(), integrand, Parity::none));

  std::vector<double> q(N);
  for (int j = 0; j < N; ++j) {
    const double cn = kernels::pow_real(g.cos_theta[j], double(g.n));
    q[j] = hp[j] - (g.n - params.k) * tails.tail[j] / cn;
  }
  return {h.grid_ptr(), std::move(q), Parity::none};
}

ConvexityReport convexity_condition(const RadialProfile& phi, double m) {
  if (m == 0.0)
    throw std::invalid_argument("convexity_condition: m must be nonzero");
  if (!(phi.min() > 0.0))
    throw std::invalid_argument("convexity_condition: phi must be positive");
  std::vector<double> f(phi.size());
  for (int j = 0; j < phi.size(); ++j)
    f[j] = std::pow(phi[j], 1.0 / m);
  RadialProfile fp(phi.grid_ptr(), std::move(f), phi.parity());

  std::vector<double> merid, azim;
  hessian_eigenvalues(fp, merid, azim);
  ConvexityReport rep;
  rep.min_eig =
      std::min(kernels::min_val(merid), kernels::min_val(azim));
  rep.ok = rep.min_eig > 0.0;
  return rep;
}

double counterexample_rate(const RadialProfile& h, const RadialProfile& phi,
                           const FlowParams& params) {
  require_same_grid(h, phi);
  const auto radii = principal_radii(h, params.k);

  const double z1_0 = interpolate_equator(radii.zeta1);
  const double dz1_0 = interpolate_equator(d_theta(radii.zeta1));
  const double ddz1_0 = interpolate_equator(d2_theta(radii.zeta1));
  constexpr double tol = 1e-8;
  if (std::abs(z1_0) > tol || std::abs(dz1_0) > tol || std::abs(ddz1_0) > tol)
    throw std::domain_error(
        "counterexample_rate: zeta1 must vanish to second order at theta=0");

  const double sk0 = interpolate_equator(radii.sigma_k);
  const double h0 = interpolate_equator(h);
  const double phi0 = interpolate_equator(phi);
  const double phi_tt0 = interpolate_equator(d2_theta(phi));
  const double m = params.p + params.k - 1.0;
  return sk0 * kernels::pow_real(h0, 2.0 - params.p) * (phi_tt0 + m * phi0);
}

} // namespace cmflow
