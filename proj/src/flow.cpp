#include "cmflow/flow.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cmflow/derivatives.hpp"
#include "cmflow/kernels.hpp"

namespace cmflow {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDenomFloor = 1e-12;
} // namespace

void FlowParams::validate() const {
  const auto& g = grid();
  if (n != g.n)
    throw std::invalid_argument("FlowParams: n does not match the grid");
  if (k < 1 || k > n)
    throw std::invalid_argument("k must satisfy 1 <= k <= n");
  if (!phi.all_finite() || !(phi.min() > 0.0))
    throw std::invalid_argument("phi must be strictly positive");
  if (phi.parity() == Parity::odd)
    throw std::invalid_argument("phi cannot be an odd profile");
  if (phi.parity() != Parity::even && k != n)
    throw std::invalid_argument(
        "non-even (tilted) phi is supported only for k = n");
  if (!(cfl > 0.0) || cfl > 1.0)
    throw std::invalid_argument("cfl must lie in (0, 1]");
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  if (!(residual_tol > 0.0))
    throw std::invalid_argument("residual_tol must be positive");
  if (sample_stride < 1)
    throw std::invalid_argument("sample_stride must be >= 1");
  if (breakdown_zeta_tol > 0.0)
    throw std::invalid_argument("breakdown_zeta_tol must be <= 0");
}

// ---------------------------------------------------------------------------
// Engine: scratch buffers and the raw-step core shared by step() and
// run_flow(), so single-step calls and full runs follow bitwise-identical
// arithmetic.
// ---------------------------------------------------------------------------

namespace {

struct Engine {
  const FlowParams& prm;
  const LatitudeGrid& g;
  int N;
  double e2p;          // 2 - p
  bool normalized_rhs; // integrate the eta-corrected flow
  bool project;        // rescale after every step

  std::vector<double> inv_phi;
  double int_inv_phi; // integrate_sphere(1/phi), fixed along the run

  std::vector<double> z1, z2, sk, scr, prod, k1, k2, k3, k4, htmp;

  explicit Engine(const FlowParams& params)
      : prm(params), g(params.grid()), N(g.num_points), e2p(2.0 - params.p) {
    normalized_rhs = prm.normalization == Normalization::normalized_pde;
    project = (prm.normalization == Normalization::normalized_pde &&
               prm.renorm_projection) ||
              prm.normalization == Normalization::rescale_each_step;
    inv_phi.resize(N);
    for (int j = 0; j < N; ++j) inv_phi[j] = 1.0 / prm.phi[j];
    int_inv_phi = g.omega_ambient * kernels::weighted_sum(g.weights, inv_phi);
    for (auto* v : {&z1, &z2, &sk, &scr, &prod, &k1, &k2, &k3, &k4, &htmp})
      v->resize(N);
  }

  double eta_of(std::span<const double> h) {
    kernels::mul(h, sk, prod);
    return g.omega_ambient * kernels::weighted_sum(g.weights, prod) /
           int_inv_phi;
  }

  // Writes the configured rhs into out; leaves z1/z2/sk at this h.
  void rhs(std::span<const double> h, std::span<double> out) {
    radii_into(g, h, 1.0, z1, z2, scr);
    kernels::pointwise_sigma_k(z1, z2, g.n, prm.k, sk);
    kernels::pointwise_speed(prm.phi.values(), h, e2p, sk, out);
    if (normalized_rhs) kernels::axpy(out, -eta_of(h), h, out);
  }

  // Rescaling scalar of the current profile (the norsol normalization).
  double lambda_of(std::span<const double> h) {
    if (prm.p != 0.0) {
      kernels::pow_mul(h, prm.p, inv_phi, prod);
      const double ihp =
          g.omega_ambient * kernels::weighted_sum(g.weights, prod);
      return std::pow(int_inv_phi / ihp, 1.0 / prm.p);
    }
    for (int j = 0; j < N; ++j) prod[j] = std::log(h[j]) * inv_phi[j];
    const double ilog =
        g.omega_ambient * kernels::weighted_sum(g.weights, prod);
    return std::exp(-ilog / int_inv_phi);
  }

  // Stability bound from the current h (radii recomputed locally).
  double dt_bound(std::span<const double> h) {
    radii_into(g, h, 1.0, z1, z2, scr);
    double amax = 0.0, bmax = 0.0;
    for (int j = 0; j < N; ++j) {
      const auto sp = sigma_k_partials(z1[j], z2[j], g.n, prm.k);
      const double th = prm.phi[j] * kernels::pow_real(h[j], e2p);
      amax = std::max(amax, th * sp.d_zeta1);
      bmax = std::max(bmax, th * std::abs(sp.d_zeta2_total));
    }
    const double denom = std::max(
        {amax, bmax * g.max_abs_tan() * g.dtheta, kDenomFloor});
    return prm.cfl * g.dtheta * g.dtheta / denom;
  }

  // One RK4 step (+ projection) of the raw profile values.
  void advance(std::vector<double>& h, double dt) {
    rhs(h, k1);
    kernels::axpy(h, 0.5 * dt, k1, htmp);
    rhs(htmp, k2);
    kernels::axpy(h, 0.5 * dt, k2, htmp);
    rhs(htmp, k3);
    kernels::axpy(h, dt, k3, htmp);
    rhs(htmp, k4);
    kernels::rk4_combine(h, k1, k2, k3, k4, dt, htmp);
    if (project) {
      const double lam = lambda_of(htmp);
      kernels::scale(htmp, lam, h);
    } else {
      h = htmp;
    }
  }
};

Parity evolved_parity(const RadialProfile& initial, const RadialProfile& phi) {
  return (initial.parity() == Parity::even && phi.parity() == Parity::even)
             ? Parity::even
             : Parity::none;
}

} // namespace

// ---------------------------------------------------------------------------
// FlowState
// ---------------------------------------------------------------------------

FlowState::FlowState(double time, RadialProfile h, const FlowParams& params)
    : time_(time),
      h_(std::move(h)),
      radii_(principal_radii(h_, params.k)),
      eta_(0.0),
      speed_(h_.grid_ptr(), std::vector<double>(h_.size(), 0.0), h_.parity()) {
  std::vector<double> prod(h_.size());
  kernels::mul(h_.values(), radii_.sigma_k.values(), prod);
  const auto& g = h_.grid();
  const double num =
      g.omega_ambient * kernels::weighted_sum(g.weights, prod);
  std::vector<double> inv_phi(h_.size());
  for (int j = 0; j < h_.size(); ++j) inv_phi[j] = 1.0 / params.phi[j];
  const double den =
      g.omega_ambient * kernels::weighted_sum(g.weights, inv_phi);
  eta_ = num / den;
  kernels::pointwise_speed(params.phi.values(), h_.values(), 2.0 - params.p,
                           radii_.sigma_k.values(), speed_.values());
}

bool FlowState::finite() const {
  return h_.all_finite() && radii_.sigma_k.all_finite() &&
         std::isfinite(eta_);
}

double eta(const FlowState& state, const FlowParams&) { return state.eta(); }

RadialProfile rhs_unnormalized(const FlowState& state, const FlowParams&) {
  return state.speed();
}

RadialProfile rhs_normalized(const FlowState& state,
                             const FlowParams& /*params*/) {
  std::vector<double> out(state.h().size());
  kernels::axpy(state.speed().values(), -state.eta(), state.h().values(), out);
  return {state.h().grid_ptr(), std::move(out), state.h().parity()};
}

FlowState step(const FlowState& state, const FlowParams& params, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  Engine eng(params);
  std::vector<double> h(state.h().values().begin(), state.h().values().end());
  eng.advance(h, dt);
  return {state.time() + dt,
          RadialProfile(state.h().grid_ptr(), std::move(h),
                        state.h().parity()),
          params};
}

double stable_dt(const FlowState& state, const FlowParams& params) {
  Engine eng(params);
  const double dt = eng.dt_bound(state.h().values());
  return std::min(dt, std::max(params.t_max - state.time(), 0.0));
}

RadialProfile rescale_snapshot(const FlowState& state,
                               const FlowParams& params) {
  if (!(state.min_h() > 0.0))
    throw std::domain_error("rescale_snapshot: h must be positive");
  Engine eng(params);
  const double lam = eng.lambda_of(state.h().values());
  std::vector<double> out(state.h().size());
  kernels::scale(state.h().values(), lam, out);
  return {state.h().grid_ptr(), std::move(out), state.h().parity()};
}

RadialProfile linearized_L(const RadialProfile& F, const FlowState& state,
                           const FlowParams& params) {
  return linearized_L(F, state.h(), params.phi, params.p, params.k);
}

// ---------------------------------------------------------------------------
// Monitors
// ---------------------------------------------------------------------------

MonitorRecord compute_monitor(const FlowState& state,
                              const FlowParams& params) {
  MonitorRecord m;
  m.time = state.time();
  const auto& h = state.h();
  const auto& radii = state.radii();
  const bool broken = !state.finite() || !(h.min() > 0.0);

  m.h_min = h.min();
  m.h_max = h.max();
  m.sigma_k_min = radii.sigma_k.min();
  m.sigma_k_max = radii.sigma_k.max();
  m.zeta1_min = radii.min_zeta1;
  m.zeta2_min = radii.min_zeta2;
  m.eta = state.eta();

  if (broken) {
    m.entropy_A = m.conservation = m.grad_log_h_max = kNaN;
    m.soliton_residual = m.speed_min = m.speed_max = kNaN;
    return m;
  }

  m.entropy_A = entropy_A(h, params);

  std::vector<double> buf(h.size());
  std::vector<double> inv_phi(h.size());
  for (int j = 0; j < h.size(); ++j) inv_phi[j] = 1.0 / params.phi[j];
  if (params.p != 0.0) {
    kernels::pow_mul(h.values(), params.p, inv_phi, buf);
  } else {
    for (int j = 0; j < h.size(); ++j) buf[j] = std::log(h[j]) * inv_phi[j];
  }
  const auto& g = h.grid();
  m.conservation = g.omega_ambient * kernels::weighted_sum(g.weights, buf);

  m.grad_log_h_max = grad_log_h_max(h);

  // s = phi h^{1-p} sigma_k: soliton residual and speed envelope.
  kernels::pointwise_speed(params.phi.values(), h.values(), 1.0 - params.p,
                           radii.sigma_k.values(), buf);
  m.speed_min = kernels::min_val(buf);
  m.speed_max = kernels::max_val(buf);
  const double cbar =
      g.omega_ambient * kernels::weighted_sum(g.weights, buf) / g.omega_total;
  if (cbar > 0.0) {
    double dev = 0.0;
    for (double s : buf) dev = std::max(dev, std::abs(s - cbar));
    m.soliton_residual = dev / cbar;
  } else {
    m.soliton_residual = kNaN;
  }
  return m;
}

// ---------------------------------------------------------------------------
// run_flow
// ---------------------------------------------------------------------------

std::string TerminalStatus::describe() const {
  switch (kind) {
    case Kind::converged: return "converged";
    case Kind::t_max_reached: return "t_max_reached";
    case Kind::breakdown: return "breakdown(" + reason + ")";
  }
  return "unknown";
}

TrajectoryRecord run_flow(const RadialProfile& initial,
                          const FlowParams& params) {
  params.validate();
  require_same_grid(initial, params.phi);
  if (initial.parity() != Parity::even)
    throw std::invalid_argument("run_flow: initial profile must be even");
  if (!initial.all_finite() || !(initial.min() > 0.0))
    throw std::invalid_argument("run_flow: initial profile must be positive");

  Engine eng(params);
  const Parity par = evolved_parity(initial, params.phi);
  std::vector<double> h(initial.values().begin(), initial.values().end());
  if (params.normalization != Normalization::unnormalized) {
    const double lam = eng.lambda_of(h);
    for (double& v : h) v *= lam;
  }

  TrajectoryRecord rec;
  double t = 0.0;
  int zeta1_streak = 0;
  long last_sample = -1;

  auto make_state = [&](double time, const std::vector<double>& values) {
    return FlowState(time,
                     RadialProfile(initial.grid_ptr(), values, par), params);
  };

  for (;;) {
    const bool due = (rec.total_steps % params.sample_stride == 0) ||
                     t >= params.t_max;
    if (due && rec.total_steps != last_sample) {
      last_sample = rec.total_steps;
      FlowState st = make_state(t, h);

      if (!st.finite()) {
        rec.status = {TerminalStatus::Kind::breakdown, "nan", t};
        break;
      }
      rec.samples.push_back(compute_monitor(st, params));
      rec.final_state = st;

      if (!(st.min_h() > 0.0)) {
        rec.status = {TerminalStatus::Kind::breakdown, "negative_h", t};
        break;
      }
      if (params.k == params.n && !(st.radii().sigma_k.min() > 0.0)) {
        rec.status = {TerminalStatus::Kind::breakdown, "negative_sigma_k", t};
        break;
      }
      if (params.k < params.n &&
          st.radii().min_zeta1 < params.breakdown_zeta_tol) {
        if (++zeta1_streak >= 3) {
          rec.status = {TerminalStatus::Kind::breakdown, "loss_of_convexity",
                        t};
          break;
        }
      } else {
        zeta1_streak = 0;
      }

      // Convergence: soliton residual plus stagnation of the normalized
      // rhs. Unnormalized states are judged through their rescaled
      // snapshot (the residual is scale-invariant, the rhs is not).
      std::optional<FlowState> rescaled;
      const FlowState* crit = &st;
      if (params.normalization == Normalization::unnormalized) {
        rescaled.emplace(t, rescale_snapshot(st, params), params);
        crit = &*rescaled;
      }
      const double res = rec.samples.back().soliton_residual;
      std::vector<double> rn(h.size());
      kernels::axpy(crit->speed().values(), -crit->eta(), crit->h().values(),
                    rn);
      const double rhs_norm = kernels::max_abs(rn) / crit->h().max();
      if (std::isfinite(res) && res <= params.residual_tol &&
          rhs_norm <= params.residual_tol) {
        rec.status = {TerminalStatus::Kind::converged, "", t};
        break;
      }
    }

    if (t >= params.t_max) {
      rec.status = {TerminalStatus::Kind::t_max_reached, "", t};
      break;
    }

    double dt = eng.dt_bound(h);
    dt = std::min(dt, params.t_max - t);
    const std::vector<double> h_prev = h;
    eng.advance(h, dt);

    if (!kernels::all_finite(h) || !(kernels::min_val(h) > 0.0)) {
      const char* why = kernels::all_finite(h) ? "negative_h" : "nan";
      FlowState prev = make_state(t, h_prev);
      if (rec.total_steps != last_sample)
        rec.samples.push_back(compute_monitor(prev, params));
      rec.final_state = prev;
      rec.status = {TerminalStatus::Kind::breakdown, why, t};
      break;
    }
    t += dt;
    ++rec.total_steps;
  }
  return rec;
}

} // namespace cmflow
