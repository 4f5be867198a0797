#ifndef TCS_NUMERICS_HPP
#define TCS_NUMERICS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "tcs/errors.hpp"

namespace tcs {

// One classic fourth-order Runge-Kutta step for y' = f(t, y).
// f takes (t, y) and returns the derivative array.
template <std::size_t N, typename F>
std::array<double, N> rk4_step(const F& f, double t, double dt,
                               const std::array<double, N>& y) {
  std::array<double, N> k1 = f(t, y);
  std::array<double, N> tmp;
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
  std::array<double, N> k2 = f(t + 0.5 * dt, tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
  std::array<double, N> k3 = f(t + 0.5 * dt, tmp);
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + dt * k3[i];
  std::array<double, N> k4 = f(t + dt, tmp);
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

// Second-order three-point derivative estimate of sampled f(t).
// Centered in the interior, one-sided at both endpoints. The stencils use
// the actual spacings, so a shortened final step is handled exactly.
template <typename T>
std::vector<T> derivative_3pt(const std::vector<double>& t,
                              const std::vector<T>& f) {
  const std::size_t n = t.size();
  if (n != f.size() || n < 3) {
    throw TooFewPoints("derivative_3pt: need at least 3 aligned samples");
  }
  std::vector<T> df(n);
  {
    const double h1 = t[1] - t[0], h2 = t[2] - t[1];
    df[0] = f[0] * (-(2.0 * h1 + h2) / (h1 * (h1 + h2))) +
            f[1] * ((h1 + h2) / (h1 * h2)) + f[2] * (-h1 / (h2 * (h1 + h2)));
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h1 = t[i] - t[i - 1], h2 = t[i + 1] - t[i];
    df[i] = f[i - 1] * (-h2 / (h1 * (h1 + h2))) +
            f[i] * ((h2 - h1) / (h1 * h2)) + f[i + 1] * (h1 / (h2 * (h1 + h2)));
  }
  {
    const double h1 = t[n - 2] - t[n - 3], h2 = t[n - 1] - t[n - 2];
    df[n - 1] = f[n - 3] * (h2 / (h1 * (h1 + h2))) +
                f[n - 2] * (-(h1 + h2) / (h1 * h2)) +
                f[n - 1] * ((h1 + 2.0 * h2) / (h2 * (h1 + h2)));
  }
  return df;
}

}  // namespace tcs

#endif  // TCS_NUMERICS_HPP
