#include "mckay/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mckay/errors.hpp"

namespace mckay {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kTolerance = 1e-9;
constexpr double kQuadTolerance = 1e-10;
}  // namespace

PiecewisePoly::PiecewisePoly(std::vector<PolyPiece> pieces) : pieces_(std::move(pieces)) {
  require(!pieces_.empty(), ErrorKind::Internal, "piecewise polynomial with no pieces");
  for (const PolyPiece& p : pieces_)
    require(p.coeffs.size() <= 5, ErrorKind::Internal, "piece degree exceeds 4");
}

double PiecewisePoly::operator()(double x) const {
  const PolyPiece* piece = &pieces_.back();
  for (const PolyPiece& p : pieces_) {
    if (x < p.to || &p == &pieces_.back()) {
      piece = &p;
      break;
    }
  }
  double u = x - piece->from, acc = 0, pw = 1;
  for (double c : piece->coeffs) {
    acc += c * pw;
    pw *= u;
  }
  return acc;
}

double PiecewisePoly::derivative_at(double x) const {
  const PolyPiece* piece = &pieces_.back();
  for (const PolyPiece& p : pieces_) {
    if (x < p.to || &p == &pieces_.back()) {
      piece = &p;
      break;
    }
  }
  double u = x - piece->from, acc = 0, pw = 1;
  for (std::size_t i = 1; i < piece->coeffs.size(); ++i) {
    acc += static_cast<double>(i) * piece->coeffs[i] * pw;
    pw *= u;
  }
  return acc;
}

std::vector<double> PiecewisePoly::knots() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) out.push_back(pieces_[i].to);
  return out;
}

std::vector<double> HamiltonianProfile::reeb_periods_radians() const {
  std::vector<double> out;
  out.reserve(reeb_periods_turns.size());
  for (const Rational& q : reeb_periods_turns) out.push_back(kTwoPi * rat_double(q));
  return out;
}

double HamiltonianProfile::plateau_slope() const { return h_prime(r1 + 1.0); }

HamiltonianProfile make_standard_profile(const std::vector<Rational>& periods_turns,
                                         const Rational& final_slope_turns,
                                         std::uint64_t group_order) {
  require(!periods_turns.empty(), ErrorKind::Internal, "profile needs a period set");
  HamiltonianProfile p;
  p.reeb_periods_turns = periods_turns;
  std::sort(p.reeb_periods_turns.begin(), p.reeb_periods_turns.end());
  p.final_slope_turns = final_slope_turns;
  p.final_slope_exact = true;
  p.group_order = group_order;

  double min_period = kTwoPi * rat_double(p.reeb_periods_turns.front());
  double k = kTwoPi * rat_double(final_slope_turns);
  // h = R^2/4, so h'(R) = R/2 up to R = 2k, then the constant k.
  p.r0 = min_period;  // h'(r0) = min_period/2, below the minimal period
  p.r1 = 2.0 * k;
  p.r_flat = p.r1;
  p.h_prime = PiecewisePoly({PolyPiece{0.0, p.r1, {0.0, 0.5}}, PolyPiece{p.r1, 0.0, {k}}});

  // smoothstep ramp 3u^2 - 2u^3 on (r0, r1), expanded in (R - r0)
  double w = p.r1 - p.r0;
  require(w > 0, ErrorKind::Internal, "profile has no ramp interval: slope too small");
  std::vector<double> ramp = {0.0, 0.0, 3.0 / (w * w), -2.0 / (w * w * w)};
  p.phi = PiecewisePoly({PolyPiece{0.0, p.r0, {0.0}}, PolyPiece{p.r0, p.r1, ramp},
                         PolyPiece{p.r1, 0.0, {1.0}}});
  return p;
}

namespace {

// R with h'(R) = tau, by bisection; h' is increasing by admissibility.
double solve_slope(const HamiltonianProfile& profile, double tau) {
  double lo = 0.0, hi = profile.r1;
  if (profile.h_prime(lo) > tau) return lo;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (profile.h_prime(mid) < tau)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0)
    fail(ErrorKind::QuadratureFailure, "adaptive quadrature failed to converge");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, fm, flm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, fb, frm, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (b <= a) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fb, fm, whole, tol, 48);
}

}  // namespace

namespace {

const PolyPiece& piece_at(const PiecewisePoly& f, double x) {
  for (const PolyPiece& p : f.pieces())
    if (x < p.to || &p == &f.pieces().back()) return p;
  return f.pieces().back();
}

double piece_eval(const PolyPiece& p, double x) {
  double u = x - p.from, acc = 0, pw = 1;
  for (double c : p.coeffs) {
    acc += c * pw;
    pw *= u;
  }
  return acc;
}

double piece_eval_derivative(const PolyPiece& p, double x) {
  double u = x - p.from, acc = 0, pw = 1;
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
    acc += static_cast<double>(i) * p.coeffs[i] * pw;
    pw *= u;
  }
  return acc;
}

}  // namespace

double f_primitive(const HamiltonianProfile& profile, double r) {
  if (r <= profile.r0) return 0.0;
  // split at the knots so every subinterval is smooth; pieces are then
  // pinned per subinterval so the closed endpoints see no jumps
  double top = std::min(r, profile.r_flat);  // phi' = 0 past r_flat
  std::vector<double> cuts{profile.r0, top};
  for (double k : profile.phi.knots())
    if (k > profile.r0 && k < top) cuts.push_back(k);
  for (double k : profile.h_prime.knots())
    if (k > profile.r0 && k < top) cuts.push_back(k);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i], b = cuts[i + 1];
    if (b <= a) continue;
    const PolyPiece& phi_piece = piece_at(profile.phi, 0.5 * (a + b));
    const PolyPiece& slope_piece = piece_at(profile.h_prime, 0.5 * (a + b));
    auto integrand = [&](double t) {
      return piece_eval_derivative(phi_piece, t) * piece_eval(slope_piece, t);
    };
    total += integrate(integrand, a, b, kQuadTolerance / static_cast<double>(cuts.size()));
  }
  return total;
}

FilterValue filtration_value(const HamiltonianProfile& profile, double rho) {
  FilterValue v;
  v.rho = rho;
  v.t = -profile.phi(rho) * profile.h_prime(rho) + f_primitive(profile, rho);
  return v;
}

bool ProfileReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ProfileCheck& c) { return c.pass; });
}

ProfileReport verify_profile(const HamiltonianProfile& profile) {
  ProfileReport report;
  auto push = [&](const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back(ProfileCheck{name, pass, detail});
  };
  std::vector<double> periods = profile.reeb_periods_radians();
  std::sort(periods.begin(), periods.end());
  double min_period = periods.empty() ? 0.0 : periods.front();
  double slope_r0 = profile.h_prime(profile.r0);

  push("slope_at_r0_below_min_period", slope_r0 > 0 && slope_r0 < min_period - kTolerance,
       "h'(R0) = " + std::to_string(slope_r0) + ", min period = " + std::to_string(min_period));

  // convexity of h: h'' >= 0 sampled, h''(R0+) > 0
  bool convex = true;
  double hpp_r0 = profile.h_prime.derivative_at(profile.r0 + kTolerance);
  if (hpp_r0 <= 0) convex = false;
  const int grid = 400;
  double span = profile.r_flat + 2.0;
  for (int i = 0; i <= grid && convex; ++i) {
    double x = profile.r0 + (span - profile.r0) * i / grid;
    if (profile.h_prime.derivative_at(x) < -kTolerance) convex = false;
  }
  push("h_convex", convex, "h'' >= 0 on the sampled grid, h''(R0) > 0");

  // plateau slope is not a Reeb period; exact when the slope is rational
  bool plateau_ok = true;
  std::string plateau_note;
  if (profile.final_slope_exact) {
    for (const Rational& tau : profile.reeb_periods_turns)
      if (tau == profile.final_slope_turns) plateau_ok = false;
    if (profile.group_order > 0) {
      Rational scaled = profile.final_slope_turns * Rational(profile.group_order);
      if (is_integer(scaled)) {
        plateau_ok = false;
        plateau_note = "final slope lies in (2 pi/|G|) Z";
      }
    }
  } else {
    for (double tau : periods)
      if (std::abs(profile.plateau_slope() - tau) <= kTolerance) plateau_ok = false;
  }
  push("plateau_slope_not_a_period", plateau_ok, plateau_note);

  // phi: 0 below R0, monotone into [0,1], 1 past r_flat
  bool phi_ok = std::abs(profile.phi(0.0)) <= kTolerance &&
                std::abs(profile.phi(profile.r0)) <= kTolerance &&
                std::abs(profile.phi(profile.r_flat) - 1.0) <= kTolerance;
  double prev = 0.0;
  for (int i = 0; i <= grid && phi_ok; ++i) {
    double x = profile.r0 + (profile.r_flat - profile.r0) * i / grid;
    double v = profile.phi(x);
    if (v < -kTolerance || v > 1.0 + kTolerance || v < prev - kTolerance) phi_ok = false;
    prev = v;
  }
  push("phi_monotone_into_unit_interval", phi_ok, "");

  // T: zero below R0, negative above, decreasing
  bool t_zero = true, t_negative = true, t_monotone = true;
  for (int i = 0; i <= 20; ++i) {
    double x = profile.r0 * i / 20.0;
    if (std::abs(filtration_value(profile, x).t) > kTolerance) t_zero = false;
  }
  double prev_t = 0.0;
  for (int i = 1; i <= grid; ++i) {
    double x = profile.r0 + (span - profile.r0) * i / grid;
    double t = filtration_value(profile, x).t;
    if (t >= 0.0) t_negative = false;
    if (t > prev_t + kTolerance) t_monotone = false;
    prev_t = t;
  }
  push("t_zero_below_r0", t_zero, "");
  push("t_negative_above_r0", t_negative, "");
  push("t_decreasing", t_monotone, "");

  // strict decrease near slices whose slope is a Reeb period
  bool strict_ok = true;
  double delta = std::max(1e-4, (profile.r1 - profile.r0) * 1e-4);
  for (double tau : periods) {
    if (tau >= profile.plateau_slope()) continue;
    // R with h'(R) = tau; for the standard profile h' = R/2
    double r_tau = solve_slope(profile, tau);
    double t_before = filtration_value(profile, r_tau - delta).t;
    double t_at = filtration_value(profile, r_tau).t;
    double t_after = filtration_value(profile, r_tau + delta).t;
    if (!(t_before > t_at + kTolerance && t_at > t_after + kTolerance)) strict_ok = false;
  }
  push("t_strict_near_period_slopes", strict_ok, "");

  // slice values: 0 > F_{-1} > F_{-2} > ...
  bool ordered = true;
  double last = 0.0;
  for (double tau : periods) {
    if (tau >= profile.plateau_slope()) break;
    double r_tau = solve_slope(profile, tau);
    FilterValue fv = filtration_value(profile, r_tau);
    report.slice_values.push_back(fv);
    if (!(fv.t < last - kTolerance)) ordered = false;
    last = fv.t;
  }
  push("slice_values_strictly_ordered", ordered, "");

  // first-order smoothness at the knots: adjacent pieces agree in value at
  // the shared knot; the cutoff also agrees in first derivative
  bool smooth = true;
  auto piece_value = [](const PolyPiece& p, double x) {
    double u = x - p.from, acc = 0, pw = 1;
    for (double c : p.coeffs) {
      acc += c * pw;
      pw *= u;
    }
    return acc;
  };
  auto piece_derivative = [](const PolyPiece& p, double x) {
    double u = x - p.from, acc = 0, pw = 1;
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) {
      acc += static_cast<double>(i) * p.coeffs[i] * pw;
      pw *= u;
    }
    return acc;
  };
  auto check_value_continuity = [&](const PiecewisePoly& f) {
    const auto& ps = f.pieces();
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      double k = ps[i].to;
      if (std::abs(piece_value(ps[i], k) - piece_value(ps[i + 1], k)) > kTolerance) smooth = false;
    }
  };
  check_value_continuity(profile.h_prime);
  check_value_continuity(profile.phi);
  {
    const auto& ps = profile.phi.pieces();
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      double k = ps[i].to;
      if (std::abs(piece_derivative(ps[i], k) - piece_derivative(ps[i + 1], k)) > kTolerance)
        smooth = false;
    }
  }
  push("knots_smooth_to_first_order", smooth, "");

  return report;
}

}  // namespace mckay
