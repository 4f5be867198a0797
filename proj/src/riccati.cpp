#include "tcs/riccati.hpp"

#include <cmath>
#include <sstream>

#include "tcs/numerics.hpp"

namespace tcs {

namespace {
constexpr double kCausticFloor = 1e-12;
}

RiccatiTrace q_from_trajectory(const SemiclassicalTrajectory& traj) {
  RiccatiTrace trace;
  trace.times.reserve(traj.size());
  trace.q.reserve(traj.size());
  for (const auto& pt : traj.points) {
    if (std::abs(pt.z) <= kCausticFloor) {
      std::ostringstream msg;
      msg << "q_from_trajectory: |z| <= " << kCausticFloor << " at t=" << pt.t;
      throw DivisionNearCaustic(msg.str());
    }
    trace.times.push_back(pt.t);
    trace.q.push_back(pt.w / pt.z);
  }
  return trace;
}

RiccatiTrace integrate_riccati(const PotentialSpec& spec,
                               const PhysicalParams& params,
                               const SemiclassicalTrajectory& traj, Complex b) {
  if (traj.size() == 0) {
    throw GridMismatch("integrate_riccati: trajectory has no samples");
  }
  for (std::size_t i = 1; i < traj.size(); ++i) {
    if (!(traj[i].t > traj[i - 1].t)) {
      throw GridMismatch("integrate_riccati: trajectory times must increase");
    }
  }

  // State: x, p, Q1, Q2. x and p reproduce the reference trajectory (same
  // RK4, same grid) and supply h_xx at the stage points.
  using State4 = std::array<double, 4>;
  auto rhs = [&](double t, const State4& y) -> State4 {
    const SymbolPartials sp = symbol_partials(spec, params, y[0], y[1], t);
    State4 d;
    d[0] = y[1] / params.mass;
    d[1] = -potential_derivative(spec, 1, y[0], t);
    d[2] = -sp.h_pp * (y[2] * y[2] - y[3] * y[3]) - 2.0 * sp.h_px * y[2] -
           sp.h_xx;
    d[3] = -2.0 * sp.h_pp * y[2] * y[3] - 2.0 * sp.h_px * y[3];
    return d;
  };

  State4 y{traj[0].x, traj[0].p, b.real(), b.imag()};
  RiccatiTrace trace;
  trace.times.reserve(traj.size());
  trace.q.reserve(traj.size());
  trace.times.push_back(traj[0].t);
  trace.q.push_back(Complex(y[2], y[3]));
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const double t0 = traj[i - 1].t;
    y = rk4_step(rhs, t0, traj[i].t - t0, y);
    trace.times.push_back(traj[i].t);
    trace.q.push_back(Complex(y[2], y[3]));
  }
  return trace;
}

std::vector<double> riccati_residual(
    const RiccatiTrace& trace, const std::vector<SymbolPartials>& partials) {
  if (trace.size() < 3) {
    throw TooFewPoints("riccati_residual: need at least 3 samples");
  }
  if (partials.size() != trace.size()) {
    throw GridMismatch("riccati_residual: partials not aligned with trace");
  }
  const std::vector<Complex> dq = derivative_3pt(trace.times, trace.q);
  std::vector<double> res(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Complex q = trace.q[i];
    const SymbolPartials& sp = partials[i];
    res[i] = std::abs(dq[i] + sp.h_pp * q * q + 2.0 * sp.h_px * q + sp.h_xx);
  }
  return res;
}

}  // namespace tcs
