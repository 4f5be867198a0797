#ifndef TCS_RICCATI_HPP
#define TCS_RICCATI_HPP

#include <vector>

#include "tcs/classical.hpp"

namespace tcs {

// Complex Riccati variable Q(t) = w(t)/z(t) sampled on a trajectory's grid.
// Q1 = Re Q is the real curvature of the Gaussian phase, Q2 = Im Q > 0 its
// width parameter (Im Q = Im b / |z|^2 along admissible trajectories).
struct RiccatiTrace {
  std::vector<double> times;
  std::vector<Complex> q;

  std::size_t size() const { return times.size(); }
  double q1(std::size_t i) const { return q[i].real(); }
  double q2(std::size_t i) const { return q[i].imag(); }
};

// Pointwise quotient w/z. Throws DivisionNearCaustic if any |z| <= 1e-12.
RiccatiTrace q_from_trajectory(const SemiclassicalTrajectory& traj);

// Direct integration of the real/imaginary split
//   Q1' = -h_pp (Q1^2 - Q2^2) - 2 h_px Q1 - h_xx
//   Q2' = -2 h_pp Q1 Q2 - 2 h_px Q2
// with Q1(0) = Re b, Q2(0) = Im b, stepped by RK4 on the trajectory's time
// grid. The position needed for h_xx at the Runge-Kutta stage points is
// advanced jointly with Q, so the result is independent of the (w, z) pair
// and serves as the second computation path for Q.
RiccatiTrace integrate_riccati(const PotentialSpec& spec,
                               const PhysicalParams& params,
                               const SemiclassicalTrajectory& traj, Complex b);

// Per-time |Q' + h_pp Q^2 + 2 h_px Q + h_xx| with a three-point
// finite-difference Q'. Throws TooFewPoints below 3 samples.
std::vector<double> riccati_residual(
    const RiccatiTrace& trace, const std::vector<SymbolPartials>& partials);

}  // namespace tcs

#endif  // TCS_RICCATI_HPP
