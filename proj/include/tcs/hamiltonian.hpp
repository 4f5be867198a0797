#ifndef TCS_HAMILTONIAN_HPP
#define TCS_HAMILTONIAN_HPP

#include <complex>
#include <string>
#include <vector>

#include "tcs/errors.hpp"

namespace tcs {

using Complex = std::complex<double>;

// Mass and Planck constant in the working unit system.
struct PhysicalParams {
  double mass = 1.0;
  double hbar = 1.0;

  PhysicalParams() = default;
  PhysicalParams(double mass_, double hbar_);
};

// Time-independent potential V(x) with analytic x-derivatives of every order.
//
// Supported shapes: free (V=0), harmonic m*omega^2*x^2/2, arbitrary
// polynomial (coeffs lowest-degree-first), and quartic
// m*omega^2*x^2/2 + lambda*x^4. Every shape is stored as its polynomial
// coefficient list, so evaluation and differentiation share one exact path.
// The t argument is accepted throughout so time-dependent potentials can be
// added later without interface changes.
class PotentialSpec {
 public:
  enum class Kind { free, harmonic, polynomial, quartic };

  static PotentialSpec free_particle();
  static PotentialSpec harmonic(double omega, double mass);
  static PotentialSpec polynomial(std::vector<double> coeffs);
  static PotentialSpec quartic(double omega, double lambda, double mass);

  Kind kind() const { return kind_; }
  double omega() const { return omega_; }
  double lambda() const { return lambda_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  std::string kind_name() const;

 private:
  PotentialSpec(Kind kind, double omega, double lambda,
                std::vector<double> coeffs)
      : kind_(kind), omega_(omega), lambda_(lambda),
        coeffs_(std::move(coeffs)) {}

  Kind kind_;
  double omega_ = 0.0;
  double lambda_ = 0.0;
  std::vector<double> coeffs_;  // coeffs_[k] multiplies x^k
};

// Second derivatives of the Hamiltonian symbol H(x,p,t) on the trajectory.
struct SymbolPartials {
  double h_xx = 0.0;
  double h_xp = 0.0;
  double h_px = 0.0;
  double h_pp = 0.0;
};

// V(x,t); independent of t for the supported time-independent shapes.
double eval_potential(const PotentialSpec& spec, double x, double t = 0.0);

// Analytic d^k V / dx^k at (x,t); order 0 returns the potential itself.
double potential_derivative(const PotentialSpec& spec, int order, double x,
                            double t = 0.0);

// Second partials of H = p^2/2m + V(x,t) at a phase-space point:
// h_pp = 1/m, h_xp = h_px = 0, h_xx = V''(x).
SymbolPartials symbol_partials(const PotentialSpec& spec,
                               const PhysicalParams& params, double x,
                               double p, double t = 0.0);

}  // namespace tcs

#endif  // TCS_HAMILTONIAN_HPP
