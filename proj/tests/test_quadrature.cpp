#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "roughcomb/quadrature.hpp"

using namespace roughcomb;

TEST_CASE("polynomials and trig integrate to their antiderivatives") {
  CHECK(integrate_1d([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(integrate_1d([](double x) { return std::sin(x); }, 0.0, 3.141592653589793) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(integrate_1d([](double x) { return std::exp(-x); }, 0.0, 20.0) ==
        doctest::Approx(1.0 - std::exp(-20.0)).epsilon(1e-12));
}

TEST_CASE("a kink is handled by adaptive splitting") {
  double v = integrate_1d([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0,
                          {1e-12, 1e-12, 50});
  CHECK(v == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-11));
}

TEST_CASE("interval additivity") {
  auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  double whole = integrate_1d(f, 0.0, 2.0);
  double split = integrate_1d(f, 0.0, 0.7) + integrate_1d(f, 0.7, 2.0);
  CHECK(whole == doctest::Approx(split).epsilon(1e-12));
  CHECK(whole == doctest::Approx(std::atan(2.0)).epsilon(1e-12));
}

TEST_CASE("degenerate and invalid ranges") {
  CHECK(integrate_1d([](double x) { return x; }, 1.5, 1.5) == 0.0);
  CHECK_THROWS_AS(integrate_1d([](double x) { return x; }, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("depth exhaustion is reported, not silently accepted") {
  CHECK_THROWS_AS(integrate_1d([](double x) { return std::sin(1000.0 * x); }, 0.0, 7.0,
                               {1e-300, 0.0, 1}),
                  std::runtime_error);
}

TEST_CASE("rectangle and triangle double integrals") {
  double rect = integrate_2d_rect([](double x, double y) { return x * y; }, 0.0, 1.0, 0.0, 1.0);
  CHECK(rect == doctest::Approx(0.25).epsilon(1e-12));

  double tri = integrate_2d([](double, double) { return 1.0; }, 0.0, 1.0,
                            [](double) { return 0.0; }, [](double x) { return 1.0 - x; });
  CHECK(tri == doctest::Approx(0.5).epsilon(1e-12));

  // empty inner ranges contribute zero mass
  double empty = integrate_2d([](double, double) { return 1.0; }, 0.0, 1.0,
                              [](double) { return 1.0; }, [](double) { return 0.0; });
  CHECK(empty == 0.0);
}
