#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "tcs/riccati.hpp"

using tcs::Complex;
using tcs::PhysicalParams;
using tcs::PotentialSpec;

namespace {

const PhysicalParams kUnit(1.0, 1.0);

std::vector<tcs::SymbolPartials> partials_along(
    const PotentialSpec& spec, const tcs::SemiclassicalTrajectory& traj) {
  std::vector<tcs::SymbolPartials> out(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out[i] = tcs::symbol_partials(spec, kUnit, traj[i].x, traj[i].p, traj[i].t);
  }
  return out;
}

}  // namespace

TEST_CASE("quotient trace starts at b and stays constant for b = i m w") {
  const auto spec = PotentialSpec::harmonic(1.0, 1.0);
  const Complex b(0.0, 1.0);
  const auto traj = tcs::integrate(spec, kUnit, {1.0, 0.0, b}, 6.0, 1e-3);
  const auto trace = tcs::q_from_trajectory(traj);
  CHECK(trace.q.front() == b);
  double worst = 0.0;
  for (const auto& q : trace.q) worst = std::max(worst, std::abs(q - b));
  CHECK(worst < 1e-8);
}

TEST_CASE("free-particle quotient: Q(1) = i/(1+i) = 0.5 + 0.5i") {
  const Complex b(0.0, 1.0);
  const auto traj = tcs::integrate(PotentialSpec::free_particle(), kUnit,
                                   {0.0, 0.0, b}, 1.0, 1e-3);
  const auto trace = tcs::q_from_trajectory(traj);
  CHECK(std::abs(trace.q.back() - Complex(0.5, 0.5)) < 1e-10);
}

TEST_CASE("direct integration reproduces the quotient path") {
  const Complex b(0.0, 1.0);

  SUBCASE("harmonic, constant solution") {
    const auto spec = PotentialSpec::harmonic(1.0, 1.0);
    const auto traj = tcs::integrate(spec, kUnit, {1.0, 0.0, b}, 6.0, 1e-3);
    const auto trace = tcs::integrate_riccati(spec, kUnit, traj, b);
    double worst = 0.0;
    for (const auto& q : trace.q) worst = std::max(worst, std::abs(q - b));
    CHECK(worst < 1e-8);
  }

  SUBCASE("free particle at t=1") {
    const auto spec = PotentialSpec::free_particle();
    const auto traj = tcs::integrate(spec, kUnit, {0.0, 0.0, b}, 1.0, 1e-3);
    const auto trace = tcs::integrate_riccati(spec, kUnit, traj, b);
    CHECK(std::abs(trace.q.back() - Complex(0.5, 0.5)) < 1e-8);
  }

  SUBCASE("t=0 is exact for general b") {
    const Complex b0(0.7, 1.3);
    const auto spec = PotentialSpec::quartic(1.0, 0.1, 1.0);
    const auto traj = tcs::integrate(spec, kUnit, {1.0, 0.0, b0}, 1e-2, 1e-3);
    const auto trace = tcs::integrate_riccati(spec, kUnit, traj, b0);
    CHECK(trace.q[0] == b0);
  }
}

TEST_CASE("path equivalence holds on general runs to 1e-6") {
  const auto check_run = [&](const PotentialSpec& spec, Complex b) {
    const auto traj = tcs::integrate(spec, kUnit, {1.0, 0.0, b}, 10.0, 1e-3);
    const auto quot = tcs::q_from_trajectory(traj);
    const auto direct = tcs::integrate_riccati(spec, kUnit, traj, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < quot.size(); ++i) {
      worst = std::max(worst, std::abs(quot.q[i] - direct.q[i]));
    }
    CHECK(worst < 1e-6);
  };
  check_run(PotentialSpec::harmonic(1.0, 1.0), Complex(0.0, 2.0));
  check_run(PotentialSpec::harmonic(1.0, 1.0), Complex(0.5, 1.0));
  check_run(PotentialSpec::quartic(1.0, 0.1, 1.0), Complex(0.0, 1.0));
  check_run(PotentialSpec::free_particle(), Complex(0.0, 1.0));
}

TEST_CASE("Im Q identity: q2 |z|^2 = Im b at all times") {
  const Complex b(0.4, 1.1);
  const auto spec = PotentialSpec::quartic(1.0, 0.1, 1.0);
  const auto traj = tcs::integrate(spec, kUnit, {1.0, 0.0, b}, 10.0, 1e-3);
  const auto trace = tcs::q_from_trajectory(traj);
  double worst = 0.0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    worst = std::max(worst, std::abs(trace.q[i].imag() *
                                         std::norm(traj[i].z) -
                                     b.imag()));
    CHECK(trace.q[i].imag() > 0.0);
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("finite-difference residual of the Riccati equation") {
  SUBCASE("constant solution: residual at rounding level") {
    const auto spec = PotentialSpec::harmonic(1.0, 1.0);
    const Complex b(0.0, 1.0);
    const auto traj = tcs::integrate(spec, kUnit, {1.0, 0.0, b}, 2.0, 1e-3);
    const auto trace = tcs::q_from_trajectory(traj);
    const auto res = tcs::riccati_residual(trace, partials_along(spec, traj));
    for (double r : res) CHECK(r < 1e-9);
  }

  SUBCASE("general b: residual is C dt^2, differencing-limited") {
    // |Q'''| reaches 66 at t=0 for this state, so the centered stencil
    // floor is 1.1e-5 at dt=1e-3 and the one-sided endpoints double it.
    // Fixture constant C = 25 covers both; halving dt must scale it by 4.
    const auto spec = PotentialSpec::harmonic(1.0, 1.0);
    const Complex b(0.0, 2.0);
    const double kC = 25.0;
    for (const double dt : {1e-3, 5e-4}) {
      const auto traj = tcs::integrate(spec, kUnit, {1.0, 0.0, b}, 2.0, dt);
      const auto trace = tcs::q_from_trajectory(traj);
      const auto res = tcs::riccati_residual(trace, partials_along(spec, traj));
      for (double r : res) CHECK(r < kC * dt * dt);
    }
  }

  SUBCASE("free particle: Q = b/(1 + b t/m)") {
    // |Q'''(0)| = 6: centered stencils stay under dt^2, the one-sided
    // endpoint carries twice the constant.
    const auto spec = PotentialSpec::free_particle();
    const Complex b(0.0, 1.0);
    const auto traj = tcs::integrate(spec, kUnit, {0.0, 0.0, b}, 2.0, 1e-3);
    const auto trace = tcs::q_from_trajectory(traj);
    const auto res = tcs::riccati_residual(trace, partials_along(spec, traj));
    for (std::size_t i = 1; i + 1 < res.size(); ++i) CHECK(res[i] < 1e-6);
    CHECK(res.front() < 3e-6);
    CHECK(res.back() < 3e-6);
  }
}

TEST_CASE("error paths") {
  const auto spec = PotentialSpec::free_particle();
  const Complex b(0.0, 1.0);
  const auto traj = tcs::integrate(spec, kUnit, {0.0, 0.0, b}, 2e-3, 1e-3);

  SUBCASE("too few samples for differencing") {
    tcs::RiccatiTrace tiny;
    tiny.times = {0.0, 1e-3};
    tiny.q = {b, b};
    CHECK_THROWS_AS(tcs::riccati_residual(tiny, {{}, {}}), tcs::TooFewPoints);
  }

  SUBCASE("misaligned partials") {
    const auto trace = tcs::q_from_trajectory(traj);
    CHECK_THROWS_AS(tcs::riccati_residual(trace, {{}}), tcs::GridMismatch);
  }

  SUBCASE("division near caustic") {
    auto broken = traj;
    broken.points[1].z = Complex(0.0, 0.0);
    CHECK_THROWS_AS(tcs::q_from_trajectory(broken), tcs::DivisionNearCaustic);
  }
}
