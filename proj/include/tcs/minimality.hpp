#ifndef TCS_MINIMALITY_HPP
#define TCS_MINIMALITY_HPP

#include <string>
#include <vector>

#include "tcs/classical.hpp"
#include "tcs/riccati.hpp"

namespace tcs {

enum class Verdict { minimal_for_all_t, minimal_at_t0_only, not_minimal };

std::string verdict_name(Verdict v);

// Tolerances separating exact-condition failures from discretization noise.
struct Tolerances {
  double tol_b = 1e-9;  // relative, on |Re b| vs |b|
  double tol_V = 1e-6;  // absolute, on |V''(x(t)) - (Im b)^2/m|
};

// Structured outcome of the uncertainty-minimization test. All residual
// traces are aligned with the trajectory's times.
struct MinimalityReport {
  bool re_b_zero = false;
  double re_b_residual = 0.0;              // |Re b|
  std::vector<double> product_trace;       // (dx^2)(dp^2) per time
  std::vector<double> eq6_residual;        // |d/dt |wz|^2| estimate
  std::vector<double> eq7_residual;        // |h_pp|w|^2 s - h_xx|z|^2 s|, s = wz*+w*z
  std::vector<double> eq14_residual;       // |V''(x(t)) - (Im b)^2/m|
  Verdict verdict = Verdict::not_minimal;
};

// (hbar^2/4) |w|^2 |z|^2 / (Im b)^2; equals the exact variance product
// dx^2 dp^2 of the state so long as the symplectic invariant holds.
double uncertainty_product(Complex w, Complex z, Complex b, double hbar);

// True iff |Re b| < tol_b * |b|; residual = |Re b|.
struct InitialConditionCheck {
  bool holds = false;
  double residual = 0.0;
};
InitialConditionCheck initial_condition_check(Complex b, double tol_b);

// Per-time |h_pp |w|^2 (wz*+w*z) - h_xx |z|^2 (wz*+w*z)|.
std::vector<double> eq7_residual(const SemiclassicalTrajectory& traj,
                                 const std::vector<SymbolPartials>& partials);

// Finite-difference estimate of d/dt |w z|^2 per time.
std::vector<double> eq6_residual(const SemiclassicalTrajectory& traj);

// Per-time |V''(x(t)) - (Im b)^2 / m|: the curvature condition that, with
// Re b = 0, characterizes minimization at every t.
std::vector<double> trajectory_condition_residual(
    const PotentialSpec& spec, const SemiclassicalTrajectory& traj, Complex b,
    const PhysicalParams& params);

// Per-time |d/dt(h_xx/h_pp) + 4 h_px h_xx/h_pp| on a uniform grid of
// spacing dt. Works on abstract partials so non-mechanical symbols
// (h_px != 0) are testable.
std::vector<double> eq11_residual(const std::vector<SymbolPartials>& partials,
                                  double dt);

// True iff max |Q1(t)| < tol: Q1 = 0 is the unique solution through
// Q1(0) = 0 when the minimization conditions hold.
bool q1_uniqueness_check(const RiccatiTrace& trace, double tol);

// Runs every residual above and derives the verdict:
//   minimal_for_all_t   - Re b = 0 and the curvature condition holds at all t
//   minimal_at_t0_only  - Re b = 0 but the curvature condition fails somewhere
//   not_minimal         - Re b != 0 (product > hbar^2/4 already at t=0)
MinimalityReport classify(const PotentialSpec& spec,
                          const PhysicalParams& params,
                          const InitialData& init,
                          const SemiclassicalTrajectory& traj,
                          const RiccatiTrace& trace,
                          const Tolerances& tol = Tolerances{});

}  // namespace tcs

#endif  // TCS_MINIMALITY_HPP
