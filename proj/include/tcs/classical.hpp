#ifndef TCS_CLASSICAL_HPP
#define TCS_CLASSICAL_HPP

#include <complex>
#include <vector>

#include "tcs/hamiltonian.hpp"

namespace tcs {

// Initial data for the trajectory and its variational pair:
// x(0)=x0, p(0)=p0, w(0)=b, z(0)=1. Admissible only for Im b > 0.
struct InitialData {
  double x0 = 0.0;
  double p0 = 0.0;
  Complex b{0.0, 1.0};
};

// One sample of the coupled classical/variational flow.
struct TrajectoryPoint {
  double t = 0.0;
  double x = 0.0;
  double p = 0.0;
  double action = 0.0;  // accumulated integral of (x' p - H)
  Complex w{0.0, 0.0};
  Complex z{0.0, 0.0};
};

// Dense time series of TrajectoryPoint, strictly increasing in t from t=0.
struct SemiclassicalTrajectory {
  std::vector<TrajectoryPoint> points;

  std::size_t size() const { return points.size(); }
  const TrajectoryPoint& operator[](std::size_t i) const { return points[i]; }
  std::vector<double> times() const;
};

// Integrates the 7-real-dimensional system
//   x' = p/m,  p' = -V'(x),  S' = x' p - H,
//   w' = -V''(x) z,  z' = w/m
// with fixed-step classic RK4, sampling at 0, dt, 2dt, ..., t_final
// (final step shortened if needed).
//
// Throws InvalidStep, NonAdmissibleB, or CausticDetected (|z| < 1e-12).
SemiclassicalTrajectory integrate(const PotentialSpec& spec,
                                  const PhysicalParams& params,
                                  const InitialData& init, double t_final,
                                  double dt);

// w conj(z) - conj(w) z; purely imaginary, constant along solutions of the
// variational system, and equal to 2i Im b at t = 0.
Complex symplectic_invariant(Complex w, Complex z);

// Exact harmonic-oscillator record for initial data x0=R, p0=0:
//   x = R cos wt, p = -m w R sin wt,
//   w = b cos wt - m w sin wt, z = (b/mw) sin wt + cos wt,
//   action = -(m w R^2 / 4) sin 2wt.
TrajectoryPoint closed_form_harmonic(double omega, const PhysicalParams& params,
                                     double R, Complex b, double t);

// Exact free-particle record: x = x0 + p0 t/m, p = p0, w = b, z = 1 + b t/m,
// action = p0^2 t / 2m.
TrajectoryPoint closed_form_free(const PhysicalParams& params, double x0,
                                 double p0, Complex b, double t);

}  // namespace tcs

#endif  // TCS_CLASSICAL_HPP
