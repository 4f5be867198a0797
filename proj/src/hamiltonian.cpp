#include "tcs/hamiltonian.hpp"

#include <stdexcept>
#include <utility>

namespace tcs {

PhysicalParams::PhysicalParams(double mass_, double hbar_)
    : mass(mass_), hbar(hbar_) {
  if (!(mass > 0.0)) throw std::invalid_argument("PhysicalParams: mass must be > 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("PhysicalParams: hbar must be > 0");
}

PotentialSpec PotentialSpec::free_particle() {
  return PotentialSpec(Kind::free, 0.0, 0.0, {});
}

PotentialSpec PotentialSpec::harmonic(double omega, double mass) {
  if (!(omega > 0.0)) throw std::invalid_argument("harmonic: omega must be > 0");
  if (!(mass > 0.0)) throw std::invalid_argument("harmonic: mass must be > 0");
  return PotentialSpec(Kind::harmonic, omega, 0.0,
                       {0.0, 0.0, 0.5 * mass * omega * omega});
}

PotentialSpec PotentialSpec::polynomial(std::vector<double> coeffs) {
  return PotentialSpec(Kind::polynomial, 0.0, 0.0, std::move(coeffs));
}

PotentialSpec PotentialSpec::quartic(double omega, double lambda, double mass) {
  if (!(omega > 0.0)) throw std::invalid_argument("quartic: omega must be > 0");
  if (!(mass > 0.0)) throw std::invalid_argument("quartic: mass must be > 0");
  return PotentialSpec(Kind::quartic, omega, lambda,
                       {0.0, 0.0, 0.5 * mass * omega * omega, 0.0, lambda});
}

std::string PotentialSpec::kind_name() const {
  switch (kind_) {
    case Kind::free: return "free";
    case Kind::harmonic: return "harmonic";
    case Kind::polynomial: return "polynomial";
    case Kind::quartic: return "quartic";
  }
  return "unknown";
}

double eval_potential(const PotentialSpec& spec, double x, double t) {
  (void)t;
  // Horner evaluation, highest degree first.
  double v = 0.0;
  const auto& c = spec.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

double potential_derivative(const PotentialSpec& spec, int order, double x,
                            double t) {
  (void)t;
  if (order < 0) throw std::invalid_argument("potential_derivative: order must be >= 0");
  const auto& c = spec.coeffs();
  const int degree = static_cast<int>(c.size()) - 1;
  if (order > degree) return 0.0;
  // d^n/dx^n x^k = k!/(k-n)! x^(k-n); Horner over the shifted coefficients.
  double v = 0.0;
  for (int k = degree; k >= order; --k) {
    double factor = 1.0;
    for (int j = k; j > k - order; --j) factor *= static_cast<double>(j);
    v = v * x + factor * c[static_cast<std::size_t>(k)];
  }
  return v;
}

SymbolPartials symbol_partials(const PotentialSpec& spec,
                               const PhysicalParams& params, double x,
                               double p, double t) {
  (void)p;
  SymbolPartials out;
  out.h_pp = 1.0 / params.mass;
  out.h_xp = 0.0;
  out.h_px = 0.0;
  out.h_xx = potential_derivative(spec, 2, x, t);
  return out;
}

}  // namespace tcs
