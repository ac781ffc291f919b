#include "cmflow/derivatives.hpp"

#include <stdexcept>

#include "cmflow/kernels.hpp"

namespace cmflow {

double ghost_sign(Parity p) { return p == Parity::odd ? -1.0 : 1.0; }

namespace {
Parity flipped(Parity p) {
  switch (p) {
    case Parity::even: return Parity::odd;
    case Parity::odd: return Parity::even;
    default: return Parity::none;
  }
}
} // namespace

RadialProfile d_theta(const RadialProfile& f) {
  std::vector<double> out(f.size());
  kernels::stencil_d1(f.values(), ghost_sign(f.parity()), f.grid().dtheta,
                      out);
  return {f.grid_ptr(), std::move(out), flipped(f.parity())};
}

RadialProfile d2_theta(const RadialProfile& f) {
  std::vector<double> out(f.size());
  kernels::stencil_d2(f.values(), ghost_sign(f.parity()), f.grid().dtheta,
                      out);
  return {f.grid_ptr(), std::move(out), f.parity()};
}

double interpolate_equator(const RadialProfile& f) {
  const int N = f.size();
  if (N < 4 || N % 2 != 0)
    throw std::invalid_argument(
        "interpolate_equator: need an even grid with at least 4 nodes");
  const int j = N / 2;
  // Cubic through the four nodes straddling theta = 0.
  return (9.0 * (f[j - 1] + f[j]) - (f[j - 2] + f[j + 1])) / 16.0;
}

} // namespace cmflow
