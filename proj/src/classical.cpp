#include "tcs/classical.hpp"

#include <cmath>
#include <sstream>

#include "tcs/numerics.hpp"

namespace tcs {

std::vector<double> SemiclassicalTrajectory::times() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(pt.t);
  return out;
}

namespace {

constexpr double kCausticFloor = 1e-12;

// State layout: x, p, S, Re w, Im w, Re z, Im z.
using State7 = std::array<double, 7>;

TrajectoryPoint to_point(double t, const State7& y) {
  TrajectoryPoint pt;
  pt.t = t;
  pt.x = y[0];
  pt.p = y[1];
  pt.action = y[2];
  pt.w = Complex(y[3], y[4]);
  pt.z = Complex(y[5], y[6]);
  return pt;
}

}  // namespace

SemiclassicalTrajectory integrate(const PotentialSpec& spec,
                                  const PhysicalParams& params,
                                  const InitialData& init, double t_final,
                                  double dt) {
  if (!(dt > 0.0) || !(t_final > 0.0)) {
    throw InvalidStep("integrate: dt and t_final must be positive");
  }
  if (dt > t_final) {
    throw InvalidStep("integrate: dt must not exceed t_final");
  }
  if (!(init.b.imag() > 0.0)) {
    throw NonAdmissibleB("integrate: Im(b) must be strictly positive");
  }

  const double m = params.mass;
  auto rhs = [&](double t, const State7& y) -> State7 {
    const double x = y[0], p = y[1];
    const double v1 = potential_derivative(spec, 1, x, t);
    const double v2 = potential_derivative(spec, 2, x, t);
    const double h = 0.5 * p * p / m + eval_potential(spec, x, t);
    State7 d;
    d[0] = p / m;
    d[1] = -v1;
    d[2] = d[0] * p - h;
    d[3] = -v2 * y[5];  // w' = -V'' z
    d[4] = -v2 * y[6];
    d[5] = y[3] / m;    // z' = w/m
    d[6] = y[4] / m;
    return d;
  };

  State7 y{init.x0, init.p0, 0.0,
           init.b.real(), init.b.imag(), 1.0, 0.0};

  // Sample times are k*dt plus t_final itself; when t_final is an exact
  // multiple of dt (up to rounding) the last full step is stretched onto it
  // rather than emitting a sliver step.
  const auto n_full =
      static_cast<std::size_t>(std::floor(t_final / dt + 1e-9));
  const double tail = t_final - static_cast<double>(n_full) * dt;
  const bool has_tail = tail > 1e-9 * dt;
  const std::size_t n_steps = n_full + (has_tail ? 1 : 0);

  SemiclassicalTrajectory traj;
  traj.points.reserve(n_steps + 1);
  traj.points.push_back(to_point(0.0, y));

  double t = 0.0;
  for (std::size_t k = 1; k <= n_steps; ++k) {
    const bool last = (k == n_steps);
    const double t_next = last ? t_final : dt * static_cast<double>(k);
    y = rk4_step(rhs, t, t_next - t, y);
    t = t_next;
    const double abs_z = std::hypot(y[5], y[6]);
    if (abs_z < kCausticFloor) {
      std::ostringstream msg;
      msg << "integrate: |z| fell below " << kCausticFloor << " at t=" << t;
      throw CausticDetected(msg.str());
    }
    traj.points.push_back(to_point(t, y));
  }
  return traj;
}

Complex symplectic_invariant(Complex w, Complex z) {
  return w * std::conj(z) - std::conj(w) * z;
}

TrajectoryPoint closed_form_harmonic(double omega, const PhysicalParams& params,
                                     double R, Complex b, double t) {
  const double m = params.mass;
  const double c = std::cos(omega * t);
  const double s = std::sin(omega * t);
  TrajectoryPoint pt;
  pt.t = t;
  pt.x = R * c;
  pt.p = -m * omega * R * s;
  pt.w = b * c - m * omega * s;
  pt.z = (b / (m * omega)) * s + c;
  pt.action = -0.25 * m * omega * R * R * std::sin(2.0 * omega * t);
  return pt;
}

TrajectoryPoint closed_form_free(const PhysicalParams& params, double x0,
                                 double p0, Complex b, double t) {
  const double m = params.mass;
  TrajectoryPoint pt;
  pt.t = t;
  pt.x = x0 + p0 * t / m;
  pt.p = p0;
  pt.w = b;
  pt.z = 1.0 + b * t / m;
  pt.action = 0.5 * p0 * p0 / m * t;
  return pt;
}

}  // namespace tcs
