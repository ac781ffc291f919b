#include "cmflow/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cmflow/curvature.hpp"
#include "cmflow/functionals.hpp"

namespace cmflow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSimpsonPanels = 10000;

// Composite Simpson on [a, b].
template <class F>
double simpson(F&& f, double a, double b, int panels) {
  if (b <= a) return 0.0;
  const double h = (b - a) / (2.0 * panels);
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < 2 * panels; i += 2) odd += f(a + i * h);
  for (int i = 2; i < 2 * panels; i += 2) even += f(a + i * h);
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

} // namespace

double bump_r(double theta) {
  const double t = std::abs(theta);
  const double cap = kPi / 4.0;
  if (t <= cap) return 0.0;
  const double e = -1.0 / (t * t - cap * cap);
  return e < -700.0 ? 0.0 : std::exp(e);
}

RadialProfile counterexample_h0(GridPtr grid) {
  std::vector<double> v(grid->num_points);
  for (int j = 0; j < grid->num_points; ++j) {
    const double t = std::abs(grid->theta[j]);
    const double i_cos =
        simpson([](double a) { return bump_r(a) * std::cos(a); }, 0.0, t,
                kSimpsonPanels);
    const double i_sin =
        simpson([](double a) { return bump_r(a) * std::sin(a); }, t, kPi / 2.0,
                kSimpsonPanels);
    v[j] = std::sin(t) * i_cos + std::cos(t) * i_sin;
  }
  return {std::move(grid), std::move(v), Parity::even};
}

RadialProfile counterexample_phi(GridPtr grid, double m) {
  if (!(m > 0.0))
    throw std::invalid_argument("counterexample_phi: require m = p+k-1 > 0");
  return RadialProfile::from_function(
      std::move(grid),
      [m](double th) {
        const double c = std::cos(th);
        return std::pow(c * c + 0.5, m);
      },
      Parity::even);
}

RadialProfile spheroid_profile(GridPtr grid, double a, double c) {
  if (!(a > 0.0) || !(c > 0.0))
    throw std::invalid_argument("spheroid_profile: require a, c > 0");
  return RadialProfile::from_function(
      std::move(grid),
      [a, c](double th) {
        const double ct = std::cos(th), st = std::sin(th);
        return std::sqrt(a * a * ct * ct + c * c * st * st);
      },
      Parity::even);
}

RadialProfile phi_family(GridPtr grid, const PhiSpec& spec) {
  switch (spec.kind) {
    case PhiSpec::Kind::constant:
      return RadialProfile::constant(std::move(grid), 1.0);
    case PhiSpec::Kind::sin2_power: {
      if (!(spec.eps > 0.0) || spec.eps >= 1.0)
        throw std::invalid_argument("phi_family: require eps in (0,1)");
      if (!(spec.m > 0.0))
        throw std::invalid_argument("phi_family: require m > 0");
      const double eps = spec.eps, m = spec.m;
      return RadialProfile::from_function(
          std::move(grid),
          [eps, m](double th) {
            const double s = std::sin(th);
            return std::pow(1.0 + eps * s * s, m);
          },
          Parity::even);
    }
    case PhiSpec::Kind::tilted: {
      if (std::abs(spec.delta) >= 1.0)
        throw std::invalid_argument("phi_family: require |delta| < 1");
      const double d = spec.delta;
      return RadialProfile::from_function(
          std::move(grid), [d](double th) { return 1.0 + d * std::sin(th); },
          Parity::none);
    }
    case PhiSpec::Kind::counterexample:
      return counterexample_phi(std::move(grid), spec.m);
  }
  throw std::invalid_argument("phi_family: unknown kind");
}

void ScenarioSpec::validate() const {
  params.validate();
  require_same_grid(initial, params.phi);
  if (!(initial.min() > 0.0))
    throw std::invalid_argument("scenario: initial profile must be positive");
  if (initial.parity() != Parity::even)
    throw std::invalid_argument("scenario: initial profile must be even");
  if (expected == ExpectedOutcome::converge && params.k < params.n) {
    const auto rep =
        convexity_condition(params.phi, params.p + params.k - 1.0);
    if (!rep.ok)
      throw std::invalid_argument(
          "scenario: convergence expected but phi fails the (p+k-1) "
          "convexity condition");
  }
}

std::vector<std::string> scenario_names() {
  return {"round_sphere", "theorem1", "theorem1a", "theorem2",
          "counterexample"};
}

bool is_known_scenario(const std::string& name) {
  for (const auto& s : scenario_names())
    if (s == name) return true;
  return false;
}

// make_scenario(name, num_points) lives in config.cpp: presets are plain
// RunConfig values there, and this keeps a single source of truth for the
// scenario parameters.

} // namespace cmflow
