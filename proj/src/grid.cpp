#include "cmflow/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cmflow {

namespace {

constexpr double kPi = std::numbers::pi;

// 5-point Gauss-Legendre on [-1, 1].
constexpr double gl_x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                            0.5384693101056831, 0.9061798459386640};
constexpr double gl_w[5] = {0.2369268850561891, 0.4786286704993665,
                            0.5688888888888889, 0.4786286704993665,
                            0.2369268850561891};

// Zeroth and first moment of cos^q about `about` over [lo, hi].
void cos_moments(int q, double lo, double hi, double about, double& m0,
                 double& m1) {
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  m0 = 0.0;
  m1 = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double a = mid + half * gl_x[i];
    const double f = std::pow(std::cos(a), q);
    m0 += gl_w[i] * f;
    m1 += gl_w[i] * f * (a - about);
  }
  m0 *= half;
  m1 *= half;
}

// Chebyshev moments of the measure (1-s^2)^{(n-2)/2} ds, s = sin(theta):
//   mu_m = int_{-1}^{1} T_m(s) (1-s^2)^{(n-2)/2} ds
// Odd moments vanish; even ones obey mu_m = mu_{m-2} (m-n-1)/(m+n-1).
std::vector<double> chebyshev_moments(int n, int count) {
  std::vector<double> mu(count, 0.0);
  mu[0] = std::sqrt(kPi) * std::tgamma(0.5 * n) / std::tgamma(0.5 * (n + 1));
  for (int m = 2; m < count; m += 2)
    mu[m] = mu[m - 2] * static_cast<double>(m - n - 1) / (m + n - 1);
  return mu;
}

} // namespace

double sphere_area(int d) {
  return 2.0 * std::pow(kPi, 0.5 * (d + 1)) / std::tgamma(0.5 * (d + 1));
}

GridPtr build_grid(int n, int num_points) {
  if (n < 2) throw std::invalid_argument("build_grid: require n >= 2");
  if (num_points < 16)
    throw std::invalid_argument("build_grid: require num_points >= 16");

  auto g = std::make_shared<LatitudeGrid>();
  g->n = n;
  g->num_points = num_points;
  const int N = num_points;
  const double d = kPi / N;
  g->dtheta = d;

  g->theta.resize(N);
  g->sin_theta.resize(N);
  g->cos_theta.resize(N);
  g->tan_theta.resize(N);
  g->pole_dist.resize(N);
  // Build the southern half from the pole distance u = pi/2 - |theta| and
  // mirror so that theta[j] == -theta[N-1-j] holds bitwise.
  for (int j = 0; j < N / 2 + (N % 2); ++j) {
    const double u = (j + 0.5) * d;  // distance from the south pole
    const int jm = N - 1 - j;
    const double su = std::sin(u), cu = std::cos(u);
    g->theta[j] = u - kPi / 2.0;
    g->theta[jm] = -(u - kPi / 2.0);
    g->pole_dist[j] = u;
    g->pole_dist[jm] = u;
    g->cos_theta[j] = su;
    g->cos_theta[jm] = su;
    g->sin_theta[j] = -cu;
    g->sin_theta[jm] = cu;
    g->tan_theta[j] = -cu / su;
    g->tan_theta[jm] = cu / su;
  }
  if (N % 2 == 1) {
    const int mid = N / 2;
    g->theta[mid] = 0.0;
    g->sin_theta[mid] = 0.0;
    g->cos_theta[mid] = 1.0;
    g->tan_theta[mid] = 0.0;
    g->pole_dist[mid] = kPi / 2.0;
  }

  // Quadrature weights solving sum_j w_j T_m(s_j) = mu_m for m < N.
  // s_j = -cos(psi_j), psi_j = (j+1/2) pi / N, hence
  //   w_j = (mu_0 + 2 sum_{m even >= 2} mu_m cos(m psi_j)) / N.
  const auto mu = chebyshev_moments(n, N);
  g->weights.resize(N);
  for (int j = 0; j < N / 2 + (N % 2); ++j) {
    const double psi = (j + 0.5) * kPi / N;
    double w = mu[0];
    for (int m = 2; m < N; m += 2) {
      if (mu[m] == 0.0) break;  // trig-polynomial measure, n odd
      w += 2.0 * mu[m] * std::cos(m * psi);
    }
    w /= N;
    g->weights[j] = w;
    g->weights[N - 1 - j] = w;
  }

  double wsum = 0.0;
  for (double w : g->weights) {
    if (!(w > 0.0)) throw std::runtime_error("build_grid: nonpositive weight");
    wsum += w;
  }
  g->weight_sum = wsum;
  g->omega_ambient = sphere_area(n - 1);
  g->omega_total = sphere_area(n);

  // Tail-rule moments.
  const int q = n - 1;
  g->panel_w_lo.resize(N - 1);
  g->panel_w_hi.resize(N - 1);
  for (int j = 0; j + 1 < N; ++j) {
    double m0, m1;
    cos_moments(q, g->theta[j], g->theta[j + 1], g->theta[j], m0, m1);
    g->panel_w_lo[j] = m0 - m1 / d;
    g->panel_w_hi[j] = m1 / d;
  }
  cos_moments(q, g->theta[N - 1], kPi / 2.0, g->theta[N - 1], g->cap_m0_north,
              g->cap_m1_north);
  cos_moments(q, -kPi / 2.0, g->theta[0], g->theta[0], g->cap_m0_south,
              g->cap_m1_south);

  return g;
}

} // namespace cmflow
