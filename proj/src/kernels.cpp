#include "cmflow/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cmflow::kernels {

namespace {

// Ghost lookup: node -1 mirrors node 0, node -2 mirrors node 1 (and the same
// across the north pole), scaled by the parity sign.
inline double at(std::span<const double> f, long j, double s) {
  const long n = static_cast<long>(f.size());
  if (j < 0) return s * f[-j - 1];
  if (j >= n) return s * f[2 * n - 1 - j];
  return f[j];
}

inline double d1_at(std::span<const double> f, long j, double s,
                    double inv12d) {
  return (-at(f, j + 2, s) + 8.0 * at(f, j + 1, s) - 8.0 * at(f, j - 1, s) +
          at(f, j - 2, s)) *
         inv12d;
}

inline double d2_at(std::span<const double> f, long j, double s,
                    double inv12d2) {
  return (-at(f, j + 2, s) + 16.0 * at(f, j + 1, s) - 30.0 * f[j] +
          16.0 * at(f, j - 1, s) - at(f, j - 2, s)) *
         inv12d2;
}

inline double ipow(double x, int q) {
  double r = 1.0;
  for (int i = 0; i < q; ++i) r *= x;
  return r;
}

struct Neumaier {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double result() const { return s + c; }
};

inline double block_partial(std::span<const double> w,
                            std::span<const double> f, std::size_t lo,
                            std::size_t hi) {
  Neumaier acc;
  for (std::size_t i = lo; i < hi; ++i) acc.add(w[i] * f[i]);
  return acc.result();
}

inline double sigma_k_at(double z1, double z2, int n, int k) {
  const double kn = static_cast<double>(k) / n;
  return kn * z1 * ipow(z2, k - 1) + (1.0 - kn) * ipow(z2, k);
}

inline void sigma_partials_at(double z1, double z2, int n, int k, double& d1,
                              double& d2tot) {
  const double kn = static_cast<double>(k) / n;
  d1 = kn * ipow(z2, k - 1);
  d2tot = (k >= 2)
              ? kn * (k - 1) * z1 * ipow(z2, k - 2) +
                    kn * (n - k) * ipow(z2, k - 1)
              : kn * (n - k);
}

} // namespace

double pow_real(double x, double e) {
  if (e == 0.0) return 1.0;
  if (e == 1.0) return x;
  if (e == -1.0) return 1.0 / x;
  if (e == 2.0) return x * x;
  if (e == -2.0) return 1.0 / (x * x);
  if (e == 3.0) return x * x * x;
  if (e == -3.0) return 1.0 / (x * x * x);
  if (e == 0.5) return std::sqrt(x);
  if (e == -0.5) return 1.0 / std::sqrt(x);
  if (e == 1.5) return x * std::sqrt(x);
  return std::pow(x, e);
}

// ---------------------------------------------------------------------------
// OpenMP lane
// ---------------------------------------------------------------------------

void stencil_d1(std::span<const double> f, double ghost_sign, double dtheta,
                std::span<double> out) {
  const long n = static_cast<long>(f.size());
  const double inv12d = 1.0 / (12.0 * dtheta);
#pragma omp parallel for schedule(static) if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) out[j] = d1_at(f, j, ghost_sign, inv12d);
}

void stencil_d2(std::span<const double> f, double ghost_sign, double dtheta,
                std::span<double> out) {
  const long n = static_cast<long>(f.size());
  const double inv12d2 = 1.0 / (12.0 * dtheta * dtheta);
#pragma omp parallel for schedule(static) if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) out[j] = d2_at(f, j, ghost_sign, inv12d2);
}

void pointwise_speed(std::span<const double> phi, std::span<const double> h,
                     double e, std::span<const double> s,
                     std::span<double> out) {
  const long n = static_cast<long>(h.size());
#pragma omp parallel for schedule(static) if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) out[j] = phi[j] * pow_real(h[j], e) * s[j];
}

void pointwise_sigma_k(std::span<const double> z1, std::span<const double> z2,
                       int n, int k, std::span<double> out) {
  const long m = static_cast<long>(z1.size());
#pragma omp parallel for schedule(static) if (m >= (long)omp_grain)
  for (long j = 0; j < m; ++j) out[j] = sigma_k_at(z1[j], z2[j], n, k);
}

void pointwise_sigma_k_partials(std::span<const double> z1,
                                std::span<const double> z2, int n, int k,
                                std::span<double> d1, std::span<double> d2tot) {
  const long m = static_cast<long>(z1.size());
#pragma omp parallel for schedule(static) if (m >= (long)omp_grain)
  for (long j = 0; j < m; ++j)
    sigma_partials_at(z1[j], z2[j], n, k, d1[j], d2tot[j]);
}

void mul(std::span<const double> a, std::span<const double> b,
         std::span<double> out) {
  const long n = static_cast<long>(a.size());
#pragma omp parallel for schedule(static) if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) out[j] = a[j] * b[j];
}

void pow_mul(std::span<const double> a, double e, std::span<const double> b,
             std::span<double> out) {
  const long n = static_cast<long>(a.size());
#pragma omp parallel for schedule(static) if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) out[j] = b[j] * pow_real(a[j], e);
}

void axpy(std::span<const double> a, double c, std::span<const double> b,
          std::span<double> out) {
  const long n = static_cast<long>(a.size());
#pragma omp parallel for schedule(static) if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) out[j] = a[j] + c * b[j];
}

void rk4_combine(std::span<const double> h, std::span<const double> k1,
                 std::span<const double> k2, std::span<const double> k3,
                 std::span<const double> k4, double dt, std::span<double> out) {
  const long n = static_cast<long>(h.size());
  const double c = dt / 6.0;
#pragma omp parallel for schedule(static) if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j)
    out[j] = h[j] + c * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
}

void scale(std::span<const double> a, double c, std::span<double> out) {
  const long n = static_cast<long>(a.size());
#pragma omp parallel for schedule(static) if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) out[j] = c * a[j];
}

double weighted_sum(std::span<const double> w, std::span<const double> f) {
  const std::size_t n = w.size();
  const std::size_t nblocks = (n + sum_block - 1) / sum_block;
  if (nblocks <= 1) return block_partial(w, f, 0, n);
  std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static) if (n >= omp_grain)
  for (long b = 0; b < static_cast<long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * sum_block;
    partial[b] = block_partial(w, f, lo, std::min(lo + sum_block, n));
  }
  Neumaier acc;
  for (double p : partial) acc.add(p);
  return acc.result();
}

double min_val(std::span<const double> a) {
  const long n = static_cast<long>(a.size());
  double m = a[0];
#pragma omp parallel for schedule(static) reduction(min : m) \
    if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) m = std::min(m, a[j]);
  return m;
}

double max_val(std::span<const double> a) {
  const long n = static_cast<long>(a.size());
  double m = a[0];
#pragma omp parallel for schedule(static) reduction(max : m) \
    if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) m = std::max(m, a[j]);
  return m;
}

double max_abs(std::span<const double> a) {
  const long n = static_cast<long>(a.size());
  double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m) \
    if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) m = std::max(m, std::abs(a[j]));
  return m;
}

bool all_finite(std::span<const double> a) {
  const long n = static_cast<long>(a.size());
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok) \
    if (n >= (long)omp_grain)
  for (long j = 0; j < n; ++j) ok = ok && std::isfinite(a[j]);
  return ok;
}

// ---------------------------------------------------------------------------
// Serial reference lane
// ---------------------------------------------------------------------------

namespace ref {

void stencil_d1(std::span<const double> f, double ghost_sign, double dtheta,
                std::span<double> out) {
  const long n = static_cast<long>(f.size());
  const double inv12d = 1.0 / (12.0 * dtheta);
  for (long j = 0; j < n; ++j) out[j] = d1_at(f, j, ghost_sign, inv12d);
}

void stencil_d2(std::span<const double> f, double ghost_sign, double dtheta,
                std::span<double> out) {
  const long n = static_cast<long>(f.size());
  const double inv12d2 = 1.0 / (12.0 * dtheta * dtheta);
  for (long j = 0; j < n; ++j) out[j] = d2_at(f, j, ghost_sign, inv12d2);
}

void pointwise_speed(std::span<const double> phi, std::span<const double> h,
                     double e, std::span<const double> s,
                     std::span<double> out) {
  for (std::size_t j = 0; j < h.size(); ++j)
    out[j] = phi[j] * pow_real(h[j], e) * s[j];
}

void pointwise_sigma_k(std::span<const double> z1, std::span<const double> z2,
                       int n, int k, std::span<double> out) {
  for (std::size_t j = 0; j < z1.size(); ++j)
    out[j] = sigma_k_at(z1[j], z2[j], n, k);
}

void pointwise_sigma_k_partials(std::span<const double> z1,
                                std::span<const double> z2, int n, int k,
                                std::span<double> d1, std::span<double> d2tot) {
  for (std::size_t j = 0; j < z1.size(); ++j)
    sigma_partials_at(z1[j], z2[j], n, k, d1[j], d2tot[j]);
}

void mul(std::span<const double> a, std::span<const double> b,
         std::span<double> out) {
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] * b[j];
}

void pow_mul(std::span<const double> a, double e, std::span<const double> b,
             std::span<double> out) {
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = b[j] * pow_real(a[j], e);
}

void axpy(std::span<const double> a, double c, std::span<const double> b,
          std::span<double> out) {
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] + c * b[j];
}

void rk4_combine(std::span<const double> h, std::span<const double> k1,
                 std::span<const double> k2, std::span<const double> k3,
                 std::span<const double> k4, double dt, std::span<double> out) {
  const double c = dt / 6.0;
  for (std::size_t j = 0; j < h.size(); ++j)
    out[j] = h[j] + c * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
}

void scale(std::span<const double> a, double c, std::span<double> out) {
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = c * a[j];
}

double weighted_sum(std::span<const double> w, std::span<const double> f) {
  const std::size_t n = w.size();
  const std::size_t nblocks = (n + sum_block - 1) / sum_block;
  if (nblocks <= 1) return block_partial(w, f, 0, n);
  std::vector<double> partial(nblocks);
  for (std::size_t b = 0; b < nblocks; ++b) {
    const std::size_t lo = b * sum_block;
    partial[b] = block_partial(w, f, lo, std::min(lo + sum_block, n));
  }
  Neumaier acc;
  for (double p : partial) acc.add(p);
  return acc.result();
}

double min_val(std::span<const double> a) {
  double m = a[0];
  for (double x : a) m = std::min(m, x);
  return m;
}

double max_val(std::span<const double> a) {
  double m = a[0];
  for (double x : a) m = std::max(m, x);
  return m;
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

} // namespace ref

} // namespace cmflow::kernels
