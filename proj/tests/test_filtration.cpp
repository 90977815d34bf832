#include <doctest.h>

#include <cmath>

#include "mckay/filtration.hpp"
#include "mckay/io.hpp"

using namespace mckay;

namespace {

constexpr double kPi = 3.14159265358979323846;

HamiltonianProfile a1_profile(const Rational& slope_turns) {
  MatrixGroup g = build_group(builtin("cyclic_A1"));
  GroupSpec spec = builtin("cyclic_A1");
  spec.has_profile = true;
  spec.profile_final_slope_turns = slope_turns;
  return profile_for_group(g, spec, Rational(3));
}

}  // namespace

TEST_CASE("f primitive basics") {
  HamiltonianProfile p = a1_profile(Rational(9, 4));
  CHECK(f_primitive(p, p.r0) == 0.0);
  CHECK(f_primitive(p, p.r0 / 2) == 0.0);
  double at_flat = f_primitive(p, p.r_flat);
  CHECK(std::abs(f_primitive(p, p.r_flat + 1.0) - at_flat) <= 1e-10);
}

TEST_CASE("closed form integral of a linear ramp against h' = R/2") {
  // phi ramps linearly on (1,2), so f(2) = int_1^2 (tau/2) dtau = 3/4
  HamiltonianProfile p;
  p.r0 = 1.0;
  p.r1 = 2.0;
  p.r_flat = 2.0;
  p.h_prime = PiecewisePoly({PolyPiece{0.0, 0.0, {0.0, 0.5}}});
  p.phi = PiecewisePoly({PolyPiece{0.0, 1.0, {0.0}}, PolyPiece{1.0, 2.0, {0.0, 1.0}},
                         PolyPiece{2.0, 0.0, {1.0}}});
  p.final_slope_exact = false;
  CHECK(std::abs(f_primitive(p, 2.0) - 0.75) <= 1e-10);
}

TEST_CASE("filtration values") {
  HamiltonianProfile p = a1_profile(Rational(9, 4));
  CHECK(filtration_value(p, 0.0).t == 0.0);
  CHECK(filtration_value(p, p.r0).t == 0.0);
  CHECK(filtration_value(p, p.r0 + 0.3).t < 0.0);
  double prev = 0.0;
  for (int i = 1; i <= 40; ++i) {
    double rho = p.r0 + (p.r_flat + 2.0 - p.r0) * i / 40.0;
    double t = filtration_value(p, rho).t;
    CHECK(t <= prev + 1e-12);
    prev = t;
  }
}

TEST_CASE("the capped quadratic profile verifies against the A1 period set") {
  HamiltonianProfile p = a1_profile(Rational(9, 4));
  ProfileReport report = verify_profile(p);
  for (const ProfileCheck& c : report.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  // slice ordering 0 > F_-1 > F_-2 > ...
  REQUIRE(report.slice_values.size() >= 2);
  double last = 0.0;
  for (const FilterValue& v : report.slice_values) {
    CHECK(v.t < last);
    last = v.t;
  }
}

TEST_CASE("inadmissible profiles are flagged") {
  HamiltonianProfile p = a1_profile(Rational(9, 4));

  // slope at R0 at least the minimal period
  HamiltonianProfile bad_slope = p;
  bad_slope.r0 = 2.5 * kPi;  // h'(R0) = 1.25 pi > pi
  ProfileReport r1 = verify_profile(bad_slope);
  bool found = false;
  for (const ProfileCheck& c : r1.checks)
    if (c.name == "slope_at_r0_below_min_period") {
      found = true;
      CHECK_FALSE(c.pass);
    }
  CHECK(found);

  // plateau slope equal to a Reeb period
  HamiltonianProfile bad_plateau = a1_profile(Rational(2));
  ProfileReport r2 = verify_profile(bad_plateau);
  for (const ProfileCheck& c : r2.checks)
    if (c.name == "plateau_slope_not_a_period") CHECK_FALSE(c.pass);
}

TEST_CASE("T' equals -phi h'' within 1e-6") {
  HamiltonianProfile p = a1_profile(Rational(9, 4));
  for (int i = 1; i < 30; ++i) {
    double rho = p.r0 + (p.r1 - p.r0) * i / 30.0;
    double h = 1e-5;
    double numeric =
        (filtration_value(p, rho + h).t - filtration_value(p, rho - h).t) / (2.0 * h);
    double closed = -p.phi(rho) * p.h_prime.derivative_at(rho);
    CHECK(std::abs(numeric - closed) <= 1e-6);
  }
}

TEST_CASE("f stays bounded by its value at the plateau") {
  HamiltonianProfile p = a1_profile(Rational(9, 4));
  double bound = f_primitive(p, p.r_flat) + 1e-10;
  for (int i = 0; i <= 50; ++i) {
    double rho = (p.r_flat + 3.0) * i / 50.0;
    CHECK(f_primitive(p, rho) <= bound);
  }
}

TEST_CASE("profile family slice values decrease in order of appearance") {
  for (const Rational& slope : {Rational(5, 4), Rational(9, 4), Rational(13, 4)}) {
    HamiltonianProfile p = a1_profile(slope);
    ProfileReport report = verify_profile(p);
    double last = 0.0;
    for (const FilterValue& v : report.slice_values) {
      CHECK(v.t < last);
      last = v.t;
    }
  }
}
