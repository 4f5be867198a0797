#include "tcs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tcs/fft.hpp"

namespace tcs {

void PropagatorConfig::validate() const {
  if (!(dt > 0.0)) {
    throw ConfigInvalid("PropagatorConfig: dt must be positive");
  }
  double v_max = 0.0;
  for (std::size_t j = 0; j < grid.n; ++j) {
    v_max = std::max(v_max, std::abs(eval_potential(spec, grid.point(j))));
  }
  if (!(v_max * dt / params.hbar < std::numbers::pi)) {
    std::ostringstream msg;
    msg << "PropagatorConfig: potential phase per step " << v_max * dt / params.hbar
        << " exceeds pi; shrink dt or the grid extent";
    throw ConfigInvalid(msg.str());
  }
  const double k_max = std::numbers::pi / grid.spacing();
  const double kinetic_phase = 0.5 * params.hbar * k_max * k_max * dt / params.mass;
  if (!(kinetic_phase < std::numbers::pi)) {
    std::ostringstream msg;
    msg << "PropagatorConfig: kinetic phase per step " << kinetic_phase
        << " at the Nyquist wavenumber exceeds pi; shrink dt or widen the grid";
    throw ConfigInvalid(msg.str());
  }
}

namespace {

struct StrangFactors {
  std::vector<Complex> half_potential;  // exp(-i V dt / 2 hbar)
  std::vector<Complex> kinetic;         // exp(-i hbar k^2 dt / 2 m)
};

StrangFactors make_factors(const PropagatorConfig& cfg, double dt) {
  StrangFactors f;
  f.half_potential.resize(cfg.grid.n);
  f.kinetic.resize(cfg.grid.n);
  const double hbar = cfg.params.hbar;
  for (std::size_t j = 0; j < cfg.grid.n; ++j) {
    const double v = eval_potential(cfg.spec, cfg.grid.point(j));
    f.half_potential[j] = std::exp(Complex(0.0, -0.5 * v * dt / hbar));
  }
  const std::vector<double> k = cfg.grid.wavenumbers();
  for (std::size_t j = 0; j < cfg.grid.n; ++j) {
    f.kinetic[j] =
        std::exp(Complex(0.0, -0.5 * hbar * k[j] * k[j] * dt / cfg.params.mass));
  }
  return f;
}

void strang_step(std::vector<Complex>& psi, const StrangFactors& f,
                 const detail::Fft& fft) {
  const std::size_t n = psi.size();
  for (std::size_t j = 0; j < n; ++j) psi[j] *= f.half_potential[j];
  fft.forward(psi);
  for (std::size_t j = 0; j < n; ++j) psi[j] *= f.kinetic[j];
  fft.inverse(psi);
  for (std::size_t j = 0; j < n; ++j) psi[j] *= f.half_potential[j];
}

}  // namespace

WaveFunction propagate(const WaveFunction& psi0, const PropagatorConfig& cfg,
                       double t_final) {
  cfg.validate();
  if (psi0.grid != cfg.grid) {
    throw GridMismatch("propagate: state grid differs from config grid");
  }
  if (!(t_final >= 0.0)) {
    throw InvalidStep("propagate: t_final must be non-negative");
  }

  WaveFunction psi = psi0;
  if (t_final == 0.0) return psi;

  const auto n_full =
      static_cast<std::size_t>(std::floor(t_final / cfg.dt + 1e-9));
  const double tail = t_final - static_cast<double>(n_full) * cfg.dt;
  const bool has_tail = tail > 1e-9 * cfg.dt;

  const detail::Fft fft(cfg.grid.n);
  if (n_full > 0) {
    // When there is no tail the last full step absorbs the rounding slack so
    // the evolution lands on t_final exactly.
    const StrangFactors f = make_factors(cfg, cfg.dt);
    const std::size_t regular = has_tail ? n_full : n_full - 1;
    for (std::size_t s = 0; s < regular; ++s) strang_step(psi.amplitudes, f, fft);
    if (!has_tail) {
      const double last = t_final - static_cast<double>(n_full - 1) * cfg.dt;
      const StrangFactors f_last = make_factors(cfg, last);
      strang_step(psi.amplitudes, f_last, fft);
    }
  }
  if (has_tail) {
    const StrangFactors f_tail = make_factors(cfg, tail);
    strang_step(psi.amplitudes, f_tail, fft);
  }
  return psi;
}

double l2_distance(const WaveFunction& a, const WaveFunction& b) {
  if (a.grid != b.grid) {
    throw GridMismatch("l2_distance: grids differ");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < a.amplitudes.size(); ++j) {
    acc += std::norm(a.amplitudes[j] - b.amplitudes[j]);
  }
  return std::sqrt(acc * a.grid.spacing());
}

double phase_aligned_distance(const WaveFunction& a, const WaveFunction& b) {
  if (a.grid != b.grid) {
    throw GridMismatch("phase_aligned_distance: grids differ");
  }
  const double h = a.grid.spacing();
  double na = 0.0, nb = 0.0;
  Complex inner(0.0, 0.0);
  for (std::size_t j = 0; j < a.amplitudes.size(); ++j) {
    na += std::norm(a.amplitudes[j]);
    nb += std::norm(b.amplitudes[j]);
    inner += std::conj(a.amplitudes[j]) * b.amplitudes[j];
  }
  na *= h;
  nb *= h;
  inner *= h;
  if (na < 1e-12 || nb < 1e-12) {
    throw ZeroNorm("phase_aligned_distance: zero-norm operand");
  }
  // ||e^{i theta} a - b||^2 is minimized at theta = arg<a,b>, leaving
  // na + nb - 2|<a,b>|.
  return std::sqrt(std::max(0.0, na + nb - 2.0 * std::abs(inner)));
}

}  // namespace tcs
