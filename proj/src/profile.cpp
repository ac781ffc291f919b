#include "cmflow/profile.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "cmflow/kernels.hpp"

namespace cmflow {

RadialProfile::RadialProfile(GridPtr grid, std::vector<double> values,
                             Parity parity)
    : grid_(std::move(grid)), values_(std::move(values)), parity_(parity) {
  if (!grid_) throw std::invalid_argument("RadialProfile: null grid");
  if (static_cast<int>(values_.size()) != grid_->num_points)
    throw std::invalid_argument("RadialProfile: length mismatch with grid");
}

RadialProfile RadialProfile::constant(GridPtr grid, double value) {
  std::vector<double> v(grid->num_points, value);
  return {std::move(grid), std::move(v), Parity::even};
}

RadialProfile RadialProfile::from_function(
    GridPtr grid, const std::function<double(double)>& f, Parity parity) {
  std::vector<double> v(grid->num_points);
  for (int j = 0; j < grid->num_points; ++j) v[j] = f(grid->theta[j]);
  return {std::move(grid), std::move(v), parity};
}

double RadialProfile::min() const { return kernels::min_val(values_); }
double RadialProfile::max() const { return kernels::max_val(values_); }
bool RadialProfile::all_finite() const {
  return kernels::all_finite(values_);
}

double RadialProfile::parity_defect() const {
  if (parity_ == Parity::none) return 0.0;
  const double sign = (parity_ == Parity::even) ? 1.0 : -1.0;
  const int N = size();
  double m = 0.0;
  for (int j = 0; j < N / 2; ++j)
    m = std::max(m, std::abs(values_[j] - sign * values_[N - 1 - j]));
  return m;
}

double integrate_sphere(const RadialProfile& f) {
  const auto& g = f.grid();
  return g.omega_ambient * kernels::weighted_sum(g.weights, f.values());
}

void require_same_grid(const RadialProfile& a, const RadialProfile& b) {
  if (a.grid_ptr().get() != b.grid_ptr().get())
    throw std::invalid_argument("profiles live on different grids");
}

TailIntegrals tail_integrals_north(const RadialProfile& f) {
  const auto& g = f.grid();
  const int N = g.num_points;
  const auto v = f.values();
  const double d = g.dtheta;

  TailIntegrals out;
  out.tail.resize(N);

  // Neumaier-compensated accumulation from the north pole: near-pole tails
  // are tiny differences of order-one partial sums otherwise.
  double s = g.cap_m0_north * v[N - 1] +
             g.cap_m1_north * (v[N - 1] - v[N - 2]) / d;
  double c = 0.0;
  auto add = [&s, &c](double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  };
  out.tail[N - 1] = s + c;
  for (int j = N - 2; j >= 0; --j) {
    add(g.panel_w_lo[j] * v[j] + g.panel_w_hi[j] * v[j + 1]);
    out.tail[j] = s + c;
  }
  add(g.cap_m0_south * v[0] + g.cap_m1_south * (v[1] - v[0]) / d);
  out.closure = s + c;
  return out;
}

} // namespace cmflow
