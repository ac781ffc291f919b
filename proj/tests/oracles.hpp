#pragma once

// Test-side oracles, independent of the implementation paths they check.

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracles {

// Brute-force normalized elementary symmetric function over the multiset
// {z1, z2 (n-1 times)}: enumerate all k-subsets of the n slots.
inline double sigma_k_bruteforce(double z1, double z2, int n, int k) {
  const std::uint32_t full = 1u << n;
  double sum = 0.0;
  double binom = 1.0;
  for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (std::popcount(mask) != k) continue;
    double prod = 1.0;
    for (int slot = 0; slot < n; ++slot)
      if (mask & (1u << slot)) prod *= (slot == 0) ? z1 : z2;
    sum += prod;
  }
  return sum / binom;
}

// Composite Simpson on [a, b].
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int panels) {
  if (b <= a) return 0.0;
  const double h = (b - a) / (2.0 * panels);
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < 2 * panels; i += 2) odd += f(a + i * h);
  for (int i = 2; i < 2 * panels; i += 2) even += f(a + i * h);
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

// Least-squares slope of log2(err) against log2(N): the observed order of a
// method whose error behaves like C * N^{-order}.
inline double observed_order(const std::vector<double>& errs) {
  const int m = static_cast<int>(errs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    const double x = i;  // doubling sequence: log2(N_i) = const + i
    const double y = -std::log2(errs[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817u);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

} // namespace oracles
