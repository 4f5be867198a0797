#include "tcs/tcs_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tcs/fft.hpp"

namespace tcs {

namespace {
constexpr double kCausticFloor = 1e-12;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

GridSpec::GridSpec(double x_min_, double x_max_, std::size_t n_)
    : x_min(x_min_), x_max(x_max_), n(n_) {
  if (!(x_max > x_min)) {
    throw std::invalid_argument("GridSpec: x_max must exceed x_min");
  }
  if (n < 16 || !is_power_of_two(n)) {
    throw std::invalid_argument("GridSpec: n must be a power of two >= 16");
  }
}

std::vector<double> GridSpec::wavenumbers() const {
  const double dk = 2.0 * std::numbers::pi / (x_max - x_min);
  std::vector<double> k(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<double>(j);
    k[j] = (j < n / 2) ? dk * jj : dk * (jj - static_cast<double>(n));
  }
  return k;
}

double WaveFunction::norm_squared() const {
  const double h = grid.spacing();
  double acc = 0.0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return acc * h;
}

double PhaseTracker::advance(Complex z) {
  if (std::abs(z) < kCausticFloor) {
    throw CausticDetected("PhaseTracker: |z| underflow");
  }
  unwound_ += std::arg(z / current_);
  current_ = z;
  return unwound_;
}

WaveFunction build_tcs(const PhysicalParams& params,
                       const TrajectoryPoint& point, Complex b,
                       const GridSpec& grid, const PhaseTracker& tracker) {
  if (!(b.imag() > 0.0)) {
    throw NonAdmissibleB("build_tcs: Im(b) must be > 0");
  }
  const double abs_z = std::abs(point.z);
  if (abs_z < kCausticFloor) {
    throw CausticDetected("build_tcs: |z| underflow");
  }
  if (std::abs(tracker.current_z() - point.z) >
      1e-9 * (1.0 + std::abs(point.z))) {
    throw std::invalid_argument(
        "build_tcs: phase tracker is not positioned at this trajectory point");
  }

  const double hbar = params.hbar;
  const double sigma = std::sqrt(0.5 * hbar * abs_z * abs_z / b.imag());
  if (point.x - grid.x_min < 6.0 * sigma || grid.x_max - point.x < 6.0 * sigma) {
    std::ostringstream msg;
    msg << "build_tcs: grid [" << grid.x_min << ", " << grid.x_max
        << "] leaves less than 6 standard deviations (6*" << sigma
        << ") around x=" << point.x;
    throw GridTooNarrow(msg.str());
  }

  const double norm_const = std::pow(b.imag() / (std::numbers::pi * hbar), 0.25);
  // z^{-1/2} on the branch tracked continuously from arg z(0) = 0.
  const Complex pref = norm_const / std::sqrt(abs_z) *
                       std::exp(Complex(0.0, -0.5 * tracker.unwound_arg()));
  const Complex q = point.w / point.z;

  WaveFunction psi;
  psi.grid = grid;
  psi.amplitudes.resize(grid.n);
  const Complex i_over_hbar(0.0, 1.0 / hbar);
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double d = grid.point(j) - point.x;
    const Complex phase = point.action + point.p * d + 0.5 * q * d * d;
    psi.amplitudes[j] = pref * std::exp(i_over_hbar * phase);
  }
  return psi;
}

Moments grid_moments(const WaveFunction& psi, double hbar) {
  const GridSpec& grid = psi.grid;
  const double h = grid.spacing();

  double norm2 = 0.0;
  for (const auto& a : psi.amplitudes) norm2 += std::norm(a);
  norm2 *= h;
  if (norm2 < 1e-12) {
    throw ZeroNorm("grid_moments: norm^2 below 1e-12");
  }

  Moments m;
  double acc = 0.0;
  for (std::size_t j = 0; j < grid.n; ++j) {
    acc += grid.point(j) * std::norm(psi.amplitudes[j]);
  }
  m.mean_x = acc * h / norm2;
  acc = 0.0;
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double d = grid.point(j) - m.mean_x;
    acc += d * d * std::norm(psi.amplitudes[j]);
  }
  m.var_x = acc * h / norm2;

  std::vector<Complex> spectrum = psi.amplitudes;
  detail::Fft(grid.n).forward(spectrum);
  const std::vector<double> k = grid.wavenumbers();
  double denom = 0.0, mean_k = 0.0;
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double wgt = std::norm(spectrum[j]);
    denom += wgt;
    mean_k += k[j] * wgt;
  }
  mean_k /= denom;
  double var_k = 0.0;
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double dk = k[j] - mean_k;
    var_k += dk * dk * std::norm(spectrum[j]);
  }
  var_k /= denom;
  m.mean_p = hbar * mean_k;
  m.var_p = hbar * hbar * var_k;
  return m;
}

Moments analytic_moments(const TrajectoryPoint& point, Complex b, double hbar) {
  if (!(b.imag() > 0.0)) {
    throw NonAdmissibleB("analytic_moments: Im(b) must be > 0");
  }
  Moments m;
  m.mean_x = point.x;
  m.mean_p = point.p;
  m.var_x = 0.5 * hbar * std::norm(point.z) / b.imag();
  m.var_p = 0.5 * hbar * std::norm(point.w) / b.imag();
  return m;
}

GridSpec default_grid(const SemiclassicalTrajectory& traj, Complex b,
                      double hbar, std::size_t n, double padding_sigmas) {
  if (traj.size() == 0) {
    throw GridMismatch("default_grid: empty trajectory");
  }
  if (!(b.imag() > 0.0)) {
    throw NonAdmissibleB("default_grid: Im(b) must be > 0");
  }
  double x_lo = traj[0].x, x_hi = traj[0].x, sigma_max = 0.0;
  for (const auto& pt : traj.points) {
    x_lo = std::min(x_lo, pt.x);
    x_hi = std::max(x_hi, pt.x);
    sigma_max = std::max(sigma_max,
                         std::sqrt(0.5 * hbar * std::norm(pt.z) / b.imag()));
  }
  return GridSpec(x_lo - padding_sigmas * sigma_max,
                  x_hi + padding_sigmas * sigma_max, n);
}

}  // namespace tcs
