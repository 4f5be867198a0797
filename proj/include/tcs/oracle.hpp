#ifndef TCS_ORACLE_HPP
#define TCS_ORACLE_HPP

#include "tcs/tcs_state.hpp"

namespace tcs {

// Settings for the grid propagator. validate() enforces the phase-wrap
// guards: max|V| dt / hbar < pi on the grid and (hbar k_max^2 / 2m) dt < pi
// at the Nyquist wavenumber.
struct PropagatorConfig {
  double dt = 1e-3;
  GridSpec grid;
  PhysicalParams params;
  PotentialSpec spec = PotentialSpec::free_particle();

  void validate() const;  // throws ConfigInvalid
};

// Second-order Strang splitting exp(-iV dt/2h) exp(-iT dt/h) exp(-iV dt/2h)
// per step, kinetic factor applied spectrally. Steps of cfg.dt, final step
// shortened onto t_final. Norm is preserved to rounding; global error
// O(dt^2).
WaveFunction propagate(const WaveFunction& psi0, const PropagatorConfig& cfg,
                       double t_final);

// sqrt(sum |a_j - b_j|^2 h).
double l2_distance(const WaveFunction& a, const WaveFunction& b);

// min over a global phase theta of ||e^{i theta} a - b||; removes the
// overall-phase ambiguity when comparing states built under different
// conventions.
double phase_aligned_distance(const WaveFunction& a, const WaveFunction& b);

}  // namespace tcs

#endif  // TCS_ORACLE_HPP
