#include "tcs/minimality.hpp"

#include <algorithm>
#include <cmath>

#include "tcs/numerics.hpp"

namespace tcs {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::minimal_for_all_t: return "minimal_for_all_t";
    case Verdict::minimal_at_t0_only: return "minimal_at_t0_only";
    case Verdict::not_minimal: return "not_minimal";
  }
  return "unknown";
}

double uncertainty_product(Complex w, Complex z, Complex b, double hbar) {
  if (!(b.imag() > 0.0)) {
    throw NonAdmissibleB("uncertainty_product: Im(b) must be > 0");
  }
  const double im_b = b.imag();
  return 0.25 * hbar * hbar * std::norm(w) * std::norm(z) / (im_b * im_b);
}

InitialConditionCheck initial_condition_check(Complex b, double tol_b) {
  if (!(b.imag() > 0.0)) {
    throw NonAdmissibleB("initial_condition_check: Im(b) must be > 0");
  }
  InitialConditionCheck out;
  out.residual = std::abs(b.real());
  out.holds = out.residual < tol_b * std::abs(b);
  return out;
}

std::vector<double> eq7_residual(const SemiclassicalTrajectory& traj,
                                 const std::vector<SymbolPartials>& partials) {
  if (partials.size() != traj.size()) {
    throw GridMismatch("eq7_residual: partials not aligned with trajectory");
  }
  std::vector<double> res(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& pt = traj[i];
    const double s = 2.0 * (pt.w * std::conj(pt.z)).real();  // wz* + w*z
    res[i] = std::abs(partials[i].h_pp * std::norm(pt.w) * s -
                      partials[i].h_xx * std::norm(pt.z) * s);
  }
  return res;
}

std::vector<double> eq6_residual(const SemiclassicalTrajectory& traj) {
  if (traj.size() < 3) {
    throw TooFewPoints("eq6_residual: need at least 3 samples");
  }
  std::vector<double> wz2(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    wz2[i] = std::norm(traj[i].w) * std::norm(traj[i].z);
  }
  std::vector<double> d = derivative_3pt(traj.times(), wz2);
  for (auto& v : d) v = std::abs(v);
  return d;
}

std::vector<double> trajectory_condition_residual(
    const PotentialSpec& spec, const SemiclassicalTrajectory& traj, Complex b,
    const PhysicalParams& params) {
  if (!(b.imag() > 0.0)) {
    throw NonAdmissibleB("trajectory_condition_residual: Im(b) must be > 0");
  }
  const double target = b.imag() * b.imag() / params.mass;
  std::vector<double> res(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    res[i] =
        std::abs(potential_derivative(spec, 2, traj[i].x, traj[i].t) - target);
  }
  return res;
}

std::vector<double> eq11_residual(const std::vector<SymbolPartials>& partials,
                                  double dt) {
  if (partials.size() < 3) {
    throw TooFewPoints("eq11_residual: need at least 3 samples");
  }
  if (!(dt > 0.0)) {
    throw InvalidStep("eq11_residual: dt must be positive");
  }
  std::vector<double> ratio(partials.size());
  std::vector<double> times(partials.size());
  for (std::size_t i = 0; i < partials.size(); ++i) {
    if (std::abs(partials[i].h_pp) <= 1e-12) {
      throw DegenerateSymbol("eq11_residual: |h_pp| <= 1e-12");
    }
    ratio[i] = partials[i].h_xx / partials[i].h_pp;
    times[i] = dt * static_cast<double>(i);
  }
  std::vector<double> d = derivative_3pt(times, ratio);
  std::vector<double> res(partials.size());
  for (std::size_t i = 0; i < partials.size(); ++i) {
    res[i] = std::abs(d[i] + 4.0 * partials[i].h_px * ratio[i]);
  }
  return res;
}

bool q1_uniqueness_check(const RiccatiTrace& trace, double tol) {
  double max_q1 = 0.0;
  for (const auto& q : trace.q) max_q1 = std::max(max_q1, std::abs(q.real()));
  return max_q1 < tol;
}

MinimalityReport classify(const PotentialSpec& spec,
                          const PhysicalParams& params,
                          const InitialData& init,
                          const SemiclassicalTrajectory& traj,
                          const RiccatiTrace& trace, const Tolerances& tol) {
  if (trace.size() != traj.size()) {
    throw GridMismatch("classify: trace not aligned with trajectory");
  }
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (trace.times[i] != traj[i].t) {
      throw GridMismatch("classify: trace times differ from trajectory times");
    }
  }

  MinimalityReport report;
  const auto check = initial_condition_check(init.b, tol.tol_b);
  report.re_b_zero = check.holds;
  report.re_b_residual = check.residual;

  report.product_trace.resize(traj.size());
  std::vector<SymbolPartials> partials(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& pt = traj[i];
    report.product_trace[i] =
        uncertainty_product(pt.w, pt.z, init.b, params.hbar);
    partials[i] = symbol_partials(spec, params, pt.x, pt.p, pt.t);
  }
  report.eq6_residual = eq6_residual(traj);
  report.eq7_residual = eq7_residual(traj, partials);
  report.eq14_residual =
      trajectory_condition_residual(spec, traj, init.b, params);

  const double max_eq14 =
      *std::max_element(report.eq14_residual.begin(),
                        report.eq14_residual.end());
  if (!report.re_b_zero) {
    report.verdict = Verdict::not_minimal;
  } else if (max_eq14 < tol.tol_V) {
    report.verdict = Verdict::minimal_for_all_t;
  } else {
    report.verdict = Verdict::minimal_at_t0_only;
  }
  return report;
}

}  // namespace tcs
