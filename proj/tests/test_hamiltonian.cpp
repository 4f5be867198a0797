#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tcs/hamiltonian.hpp"

using tcs::PhysicalParams;
using tcs::PotentialSpec;

TEST_CASE("harmonic potential evaluates m w^2 x^2 / 2") {
  const auto v = PotentialSpec::harmonic(1.0, 1.0);
  CHECK(tcs::eval_potential(v, 2.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  // Mass enters the strength: V = m w^2 x^2 / 2.
  const auto v2 = PotentialSpec::harmonic(1.0, 3.0);
  CHECK(tcs::eval_potential(v2, 2.0, 0.0) == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("free potential is zero everywhere") {
  const auto v = PotentialSpec::free_particle();
  CHECK(tcs::eval_potential(v, 17.3, 0.0) == 0.0);
  CHECK(tcs::potential_derivative(v, 2, 17.3, 0.0) == 0.0);
}

TEST_CASE("polynomial evaluation: 0.5 x^2 + 0.1 x^4 at x=1") {
  const auto v = PotentialSpec::polynomial({0.0, 0.0, 0.5, 0.0, 0.1});
  CHECK(tcs::eval_potential(v, 1.0, 0.0) == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("analytic derivatives of simple shapes") {
  // d2/dx2 of m w^2 x^2 / 2 is the constant m w^2 = 4.
  const auto harm = PotentialSpec::harmonic(2.0, 1.0);
  CHECK(tcs::potential_derivative(harm, 2, -3.7, 0.0) == doctest::Approx(4.0));
  // Quadratic potentials have no derivatives beyond order 2.
  CHECK(tcs::potential_derivative(harm, 3, 0.3, 0.0) == 0.0);
  CHECK(tcs::potential_derivative(harm, 7, 0.3, 0.0) == 0.0);
  // d2/dx2 x^3 = 6x.
  const auto cubic = PotentialSpec::polynomial({0.0, 0.0, 0.0, 1.0});
  CHECK(tcs::potential_derivative(cubic, 2, 2.0, 0.0) == doctest::Approx(12.0));
}

TEST_CASE("order-zero derivative equals the potential") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  const PotentialSpec specs[] = {
      PotentialSpec::free_particle(),
      PotentialSpec::harmonic(1.3, 2.0),
      PotentialSpec::polynomial({0.2, -1.0, 0.5, 0.0, 0.1}),
      PotentialSpec::quartic(1.0, 0.1, 1.0),
  };
  for (const auto& spec : specs) {
    for (int i = 0; i < 25; ++i) {
      const double x = dist(rng);
      CHECK(tcs::potential_derivative(spec, 0, x, 0.0) ==
            doctest::Approx(tcs::eval_potential(spec, x, 0.0)).epsilon(1e-15));
    }
  }
}

TEST_CASE("analytic derivative matches central differences") {
  // Independent check of orders 1 and 2 on 100 random points in [-5, 5].
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  const auto spec = PotentialSpec::polynomial({0.3, -0.7, 0.5, 0.02, 0.1});
  const double h = 1e-4;
  for (int i = 0; i < 100; ++i) {
    const double x = dist(rng);
    const double f_m = tcs::eval_potential(spec, x - h, 0.0);
    const double f_0 = tcs::eval_potential(spec, x, 0.0);
    const double f_p = tcs::eval_potential(spec, x + h, 0.0);
    const double d1 = (f_p - f_m) / (2.0 * h);
    const double d2 = (f_p - 2.0 * f_0 + f_m) / (h * h);
    const double a1 = tcs::potential_derivative(spec, 1, x, 0.0);
    const double a2 = tcs::potential_derivative(spec, 2, x, 0.0);
    CHECK(std::abs(a1 - d1) <= 1e-6 * std::max(1.0, std::abs(a1)));
    CHECK(std::abs(a2 - d2) <= 1e-6 * std::max(1.0, std::abs(a2)));
  }
}

TEST_CASE("harmonic spec is identical to its polynomial form") {
  const double m = 1.7, omega = 0.9;
  const auto harm = PotentialSpec::harmonic(omega, m);
  const auto poly = PotentialSpec::polynomial({0.0, 0.0, 0.5 * m * omega * omega});
  for (double x = -4.0; x <= 4.0; x += 0.37) {
    CHECK(tcs::eval_potential(harm, x, 0.0) == tcs::eval_potential(poly, x, 0.0));
    for (int order = 1; order <= 3; ++order) {
      CHECK(tcs::potential_derivative(harm, order, x, 0.0) ==
            tcs::potential_derivative(poly, order, x, 0.0));
    }
  }
}

TEST_CASE("symbol partials of the mechanical Hamiltonian") {
  const PhysicalParams unit(1.0, 1.0);
  const auto harm = PotentialSpec::harmonic(1.0, 1.0);
  auto sp = tcs::symbol_partials(harm, unit, 0.4, -0.2, 0.0);
  CHECK(sp.h_xx == doctest::Approx(1.0));
  CHECK(sp.h_pp == doctest::Approx(1.0));
  CHECK(sp.h_xp == 0.0);
  CHECK(sp.h_px == 0.0);

  const PhysicalParams heavy(2.0, 1.0);
  sp = tcs::symbol_partials(PotentialSpec::free_particle(), heavy, 0.0, 1.0, 0.0);
  CHECK(sp.h_xx == 0.0);
  CHECK(sp.h_pp == doctest::Approx(0.5));

  // V'' = m w^2 + 12 lambda x^2 = 1 + 1.2 at x = 1.
  const auto quartic = PotentialSpec::quartic(1.0, 0.1, 1.0);
  sp = tcs::symbol_partials(quartic, unit, 1.0, 0.0, 0.0);
  CHECK(sp.h_xx == doctest::Approx(2.2).epsilon(1e-15));
}

TEST_CASE("mixed partials agree exactly for every spec") {
  const PhysicalParams params(1.3, 0.7);
  const auto spec = PotentialSpec::quartic(2.0, 0.05, 1.3);
  for (double x = -3.0; x <= 3.0; x += 0.71) {
    const auto sp = tcs::symbol_partials(spec, params, x, 0.5 * x, 0.0);
    CHECK(sp.h_xp == sp.h_px);
  }
}

TEST_CASE("constructor preconditions") {
  CHECK_THROWS_AS(PhysicalParams(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PhysicalParams(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PotentialSpec::harmonic(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PotentialSpec::quartic(-1.0, 0.1, 1.0), std::invalid_argument);
}
