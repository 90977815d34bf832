#pragma once

#include <string>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

// Piecewise polynomial on [0, inf), degree <= 4 per piece. The last piece
// extends to infinity.
struct PolyPiece {
  double from = 0;
  double to = 0;  // ignored for the final piece
  std::vector<double> coeffs;  // ascending powers, evaluated in (x - from)
};

class PiecewisePoly {
public:
  PiecewisePoly() = default;
  explicit PiecewisePoly(std::vector<PolyPiece> pieces);

  double operator()(double x) const;
  double derivative_at(double x) const;
  const std::vector<PolyPiece>& pieces() const { return pieces_; }
  std::vector<double> knots() const;  // interior breakpoints

private:
  std::vector<PolyPiece> pieces_;
};

// Radial Hamiltonian data: the slope h'(R), a cutoff phi(R), and the Reeb
// period set it is measured against (in turns, exact, and in radians).
struct HamiltonianProfile {
  double r0 = 0;      // phi = 0 and h' below the minimal period up to here
  double r1 = 0;      // phi' > 0 on (r0, r1); h' constant for R >= r1
  double r_flat = 0;  // phi = 1 from here on (= r1 for the built-in profile)
  PiecewisePoly h_prime;
  PiecewisePoly phi;
  std::vector<Rational> reeb_periods_turns;  // sorted, ascending
  Rational final_slope_turns;                // plateau slope, exact
  bool final_slope_exact = true;             // false for hand-built numeric profiles
  std::uint64_t group_order = 0;             // for the generic-slope check

  std::vector<double> reeb_periods_radians() const;
  double plateau_slope() const;
};

// The standard quadratic-then-linear profile: h = R^2/4 capped at slope
// k = 2*pi*final_slope_turns, smoothstep cutoff on (r0, r1).
HamiltonianProfile make_standard_profile(const std::vector<Rational>& periods_turns,
                                         const Rational& final_slope_turns,
                                         std::uint64_t group_order);

// f(R) = int_0^R phi'(t) h'(t) dt by adaptive quadrature (abs tol 1e-10).
double f_primitive(const HamiltonianProfile& profile, double r);

struct FilterValue {
  double rho = 0;
  double t = 0;  // T(rho) = -phi(rho) h'(rho) + f(rho)
};
FilterValue filtration_value(const HamiltonianProfile& profile, double rho);

struct ProfileCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ProfileReport {
  std::vector<ProfileCheck> checks;
  std::vector<FilterValue> slice_values;  // one per Reeb period below the final slope
  bool all_pass() const;
};

// Admissibility and filtration checks at tolerance 1e-9: slope at R0 below
// the minimal period, convexity, plateau slope avoiding periods (and the
// multiples of 1/|G| when exact), phi shape, T <= 0 and monotone, strict
// decrease near period slopes, slice ordering 0 > F_{-1} > F_{-2} > ...,
// first-order smoothness at the knots.
ProfileReport verify_profile(const HamiltonianProfile& profile);

}  // namespace mckay
