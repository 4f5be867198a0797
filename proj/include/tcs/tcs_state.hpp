#ifndef TCS_TCS_STATE_HPP
#define TCS_TCS_STATE_HPP

#include <vector>

#include "tcs/classical.hpp"

namespace tcs {

// Uniform periodic spatial grid: x_j = x_min + j h, j = 0..n-1,
// h = (x_max - x_min)/n. x_max itself is the wrap-around point.
struct GridSpec {
  double x_min = -1.0;
  double x_max = 1.0;
  std::size_t n = 16;

  GridSpec() = default;
  GridSpec(double x_min_, double x_max_, std::size_t n_);

  double spacing() const { return (x_max - x_min) / static_cast<double>(n); }
  double point(std::size_t j) const {
    return x_min + static_cast<double>(j) * spacing();
  }
  // FFT-ordered angular wavenumbers: 2*pi*j/L for j < n/2, negative branch
  // above.
  std::vector<double> wavenumbers() const;

  bool operator==(const GridSpec&) const = default;
};

// Complex amplitudes on a GridSpec, units length^{-1/2}.
struct WaveFunction {
  GridSpec grid;
  std::vector<Complex> amplitudes;

  double norm_squared() const;
};

// Continuous-branch state for the z^{-1/2} prefactor: accumulates the
// unwound argument of z(t) along a trajectory, starting from z(0) = 1,
// arg = 0. Feed it every stored z in time order; each step's winding must
// stay below pi (true for any reasonable dt).
class PhaseTracker {
 public:
  // Returns the unwound argument after absorbing the next z sample.
  double advance(Complex z);
  double unwound_arg() const { return unwound_; }
  Complex current_z() const { return current_; }

 private:
  Complex current_{1.0, 0.0};
  double unwound_ = 0.0;
};

struct Moments {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
};

// Gaussian wavepacket carried by one trajectory point:
//   psi(x) = N z^{-1/2} exp{ i [S0 + p (x - xc) + (w/z)(x - xc)^2 / 2] / hbar }
// with N = (Im b / (pi hbar))^{1/4}, so norm^2 = 1. The tracker must have
// been advanced to exactly this point's z; the branch of z^{-1/2} follows
// its unwound argument.
//
// Throws NonAdmissibleB, CausticDetected, or GridTooNarrow when the packet
// has less than 6 standard deviations of clearance to either grid edge.
WaveFunction build_tcs(const PhysicalParams& params,
                       const TrajectoryPoint& point, Complex b,
                       const GridSpec& grid, const PhaseTracker& tracker);

// Position moments by quadrature on the grid, momentum moments in the
// spectral representation under the periodic convention.
Moments grid_moments(const WaveFunction& psi, double hbar);

// Exact moments: mean = (x, p), var_x = (hbar/2)|z|^2/Im b,
// var_p = (hbar/2)|w|^2/Im b.
Moments analytic_moments(const TrajectoryPoint& point, Complex b, double hbar);

// Auto-sized grid covering the trajectory with padding_sigmas standard
// deviations of clearance beyond the widest instantaneous packet.
GridSpec default_grid(const SemiclassicalTrajectory& traj, Complex b,
                      double hbar, std::size_t n = 1024,
                      double padding_sigmas = 8.0);

}  // namespace tcs

#endif  // TCS_TCS_STATE_HPP
