#pragma once

#include <cstddef>
#include <span>

// Hot inner loops of the solver. Every kernel has two lanes:
//
//   kernels::       OpenMP-parallel (pragmas gated by a size threshold, so
//                   desk-scale grids run serially with zero overhead),
//   kernels::ref::  plain serial reference, kept for tests and benchmarks.
//
// Both lanes are bitwise identical by construction: pointwise loops have no
// cross-iteration dependence, and reductions accumulate fixed-size blocks in
// index order with Neumaier compensation, independent of the thread count.

namespace cmflow::kernels {

inline constexpr std::size_t omp_grain = 8192;
inline constexpr std::size_t sum_block = 1024;

// 4th-order centered first/second derivative on a cell-centered grid.
// Near-pole stencils use ghost nodes mirrored across the pole with the given
// sign (+1 scalar-type extension, -1 derivative-type).
void stencil_d1(std::span<const double> f, double ghost_sign, double dtheta,
                std::span<double> out);
void stencil_d2(std::span<const double> f, double ghost_sign, double dtheta,
                std::span<double> out);

// out = phi * h^e * s, with fast paths for small integer and half-integer e.
void pointwise_speed(std::span<const double> phi, std::span<const double> h,
                     double e, std::span<const double> s,
                     std::span<double> out);

// Normalized elementary symmetric function of the radii pair
// (zeta1, zeta2 with multiplicity n-1), and its two partial derivatives.
void pointwise_sigma_k(std::span<const double> z1, std::span<const double> z2,
                       int n, int k, std::span<double> out);
void pointwise_sigma_k_partials(std::span<const double> z1,
                                std::span<const double> z2, int n, int k,
                                std::span<double> d1, std::span<double> d2tot);

// out = a * b
void mul(std::span<const double> a, std::span<const double> b,
         std::span<double> out);
// out = b * a^e
void pow_mul(std::span<const double> a, double e, std::span<const double> b,
             std::span<double> out);
// out = a + c*b
void axpy(std::span<const double> a, double c, std::span<const double> b,
          std::span<double> out);
// out = h + (dt/6)(k1 + 2 k2 + 2 k3 + k4)
void rk4_combine(std::span<const double> h, std::span<const double> k1,
                 std::span<const double> k2, std::span<const double> k3,
                 std::span<const double> k4, double dt, std::span<double> out);
void scale(std::span<const double> a, double c, std::span<double> out);

// Deterministic compensated reduction: sum_j w[j]*f[j].
double weighted_sum(std::span<const double> w, std::span<const double> f);
double min_val(std::span<const double> a);
double max_val(std::span<const double> a);
double max_abs(std::span<const double> a);
bool all_finite(std::span<const double> a);

// x^e with exact fast paths for e in {0, +-1, +-2, +-3, 1/2, -1/2, 3/2}.
double pow_real(double x, double e);

namespace ref {
void stencil_d1(std::span<const double> f, double ghost_sign, double dtheta,
                std::span<double> out);
void stencil_d2(std::span<const double> f, double ghost_sign, double dtheta,
                std::span<double> out);
void pointwise_speed(std::span<const double> phi, std::span<const double> h,
                     double e, std::span<const double> s,
                     std::span<double> out);
void pointwise_sigma_k(std::span<const double> z1, std::span<const double> z2,
                       int n, int k, std::span<double> out);
void pointwise_sigma_k_partials(std::span<const double> z1,
                                std::span<const double> z2, int n, int k,
                                std::span<double> d1, std::span<double> d2tot);
void mul(std::span<const double> a, std::span<const double> b,
         std::span<double> out);
void pow_mul(std::span<const double> a, double e, std::span<const double> b,
             std::span<double> out);
void axpy(std::span<const double> a, double c, std::span<const double> b,
          std::span<double> out);
void rk4_combine(std::span<const double> h, std::span<const double> k1,
                 std::span<const double> k2, std::span<const double> k3,
                 std::span<const double> k4, double dt, std::span<double> out);
void scale(std::span<const double> a, double c, std::span<double> out);
double weighted_sum(std::span<const double> w, std::span<const double> f);
double min_val(std::span<const double> a);
double max_val(std::span<const double> a);
double max_abs(std::span<const double> a);
} // namespace ref

} // namespace cmflow::kernels
