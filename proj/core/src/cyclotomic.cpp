#include "mckay/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

// Per-order data: the cyclotomic polynomial Phi_N and reduction rows
// expressing zeta^e for e in [phi(N), max(2*phi(N)-2, N-1)] over the
// power basis 1, zeta, ..., zeta^(phi(N)-1).
struct FieldTable {
  std::int64_t order = 1;
  std::int64_t phi = 1;
  std::vector<BigInt> min_poly;                     // Phi_N, monic, degree phi
  std::vector<std::vector<Rational>> power_rows;    // row t = zeta^(phi+t)
};

std::vector<BigInt> poly_x_pow_minus_one(std::int64_t n) {
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, BigInt(0));
  p[0] = -1;
  p.back() = 1;
  return p;
}

// Exact division of integer polynomials, divisor monic.
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt c = num[i + den.size() - 1];
    if (c == 0) continue;
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return quot;
}

std::vector<BigInt> cyclotomic_polynomial(std::int64_t n,
                                          std::map<std::int64_t, std::vector<BigInt>>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<BigInt> f = poly_x_pow_minus_one(n);
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    f = poly_div_exact(std::move(f), cyclotomic_polynomial(d, cache));
  }
  cache.emplace(n, f);
  return f;
}

std::mutex g_table_mutex;
std::map<std::int64_t, FieldTable> g_tables;
std::map<std::int64_t, std::vector<BigInt>> g_phi_cache;

const FieldTable& field_table(std::int64_t n) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = g_tables.find(n);
  if (it != g_tables.end()) return it->second;

  require(n >= 1, ErrorKind::Internal, "cyclotomic order must be positive");
  require(n <= kOrderCap, ErrorKind::PromotionOverflow,
          "cyclotomic order " + std::to_string(n) + " exceeds the cap " +
              std::to_string(kOrderCap));

  FieldTable t;
  t.order = n;
  t.min_poly = cyclotomic_polynomial(n, g_phi_cache);
  t.phi = static_cast<std::int64_t>(t.min_poly.size()) - 1;

  std::int64_t top = std::max(2 * t.phi - 2, n - 1);
  t.power_rows.reserve(static_cast<std::size_t>(std::max<std::int64_t>(0, top - t.phi + 1)));
  // zeta^phi = -(Phi - x^phi)
  std::vector<Rational> row(static_cast<std::size_t>(t.phi));
  for (std::int64_t j = 0; j < t.phi; ++j) row[j] = Rational(-t.min_poly[j]);
  for (std::int64_t e = t.phi; e <= top; ++e) {
    t.power_rows.push_back(row);
    // shift by one power of zeta and re-reduce the top coefficient
    std::vector<Rational> next(static_cast<std::size_t>(t.phi), Rational(0));
    Rational top_coeff = row[static_cast<std::size_t>(t.phi - 1)];
    for (std::int64_t j = t.phi - 1; j > 0; --j) next[j] = row[j - 1];
    if (top_coeff != 0) {
      for (std::int64_t j = 0; j < t.phi; ++j)
        next[j] -= top_coeff * Rational(t.min_poly[j]);
    }
    row = std::move(next);
  }
  return g_tables.emplace(n, std::move(t)).first->second;
}

// Reduce an accumulator polynomial (arbitrary degree) into the power basis.
std::vector<Rational> reduce_into_basis(std::vector<Rational> acc, const FieldTable& t) {
  std::size_t phi = static_cast<std::size_t>(t.phi);
  std::vector<Rational> out(phi, Rational(0));
  for (std::size_t e = acc.size(); e-- > 0;) {
    if (acc[e].is_zero()) continue;
    if (e < phi) {
      out[e] += acc[e];
    } else {
      const auto& row = t.power_rows.at(e - phi);
      for (std::size_t j = 0; j < phi; ++j) {
        if (!row[j].is_zero()) out[j] += acc[e] * row[j];
      }
    }
  }
  return out;
}

std::vector<Rational> zeta_power_reduced(std::int64_t order, std::int64_t e) {
  const FieldTable& t = field_table(order);
  e %= order;
  if (e < 0) e += order;
  std::vector<Rational> out(static_cast<std::size_t>(t.phi), Rational(0));
  if (e < t.phi) {
    out[static_cast<std::size_t>(e)] = 1;
  } else {
    out = t.power_rows.at(static_cast<std::size_t>(e - t.phi));
  }
  return out;
}

// Polynomial division over Q, divisor need not be monic. Returns remainder,
// stores quotient if requested.
std::vector<Rational> poly_rem(std::vector<Rational> num, const std::vector<Rational>& den,
                               std::vector<Rational>* quot_out = nullptr) {
  auto deg = [](const std::vector<Rational>& p) -> std::ptrdiff_t {
    for (std::size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  std::ptrdiff_t dd = deg(den);
  std::vector<Rational> quot;
  std::ptrdiff_t dn = deg(num);
  if (dn >= dd) quot.assign(static_cast<std::size_t>(dn - dd + 1), Rational(0));
  while ((dn = deg(num)) >= dd) {
    Rational c = num[static_cast<std::size_t>(dn)] / den[static_cast<std::size_t>(dd)];
    quot[static_cast<std::size_t>(dn - dd)] = c;
    for (std::ptrdiff_t j = 0; j <= dd; ++j)
      num[static_cast<std::size_t>(dn - dd + j)] -= c * den[static_cast<std::size_t>(j)];
  }
  if (quot_out) *quot_out = std::move(quot);
  return num;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n, m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b, std::int64_t cap) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t l = a / g;
  require(l <= cap / b + 1 && l * b <= cap, ErrorKind::PromotionOverflow,
          "order promotion lcm(" + std::to_string(a) + "," + std::to_string(b) +
              ") exceeds the cap " + std::to_string(cap));
  return l * b;
}

Cyclotomic::Cyclotomic(std::int64_t order, std::vector<Rational> reduced_coeffs)
    : order_(order), coeffs_(std::move(reduced_coeffs)) {
  const FieldTable& t = field_table(order);
  require(static_cast<std::int64_t>(coeffs_.size()) == t.phi, ErrorKind::Internal,
          "cyclotomic coefficient vector has wrong length");
}

Cyclotomic Cyclotomic::zero(std::int64_t order) {
  const FieldTable& t = field_table(order);
  return Cyclotomic(order, std::vector<Rational>(static_cast<std::size_t>(t.phi), Rational(0)));
}

Cyclotomic Cyclotomic::one(std::int64_t order) {
  Cyclotomic c = zero(order);
  c.coeffs_[0] = 1;
  return c;
}

Cyclotomic Cyclotomic::rational(const Rational& value, std::int64_t order) {
  Cyclotomic c = zero(order);
  c.coeffs_[0] = value;
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t order, std::int64_t power) {
  require(order >= 1, ErrorKind::Internal, "root_of_unity: order must be >= 1");
  return Cyclotomic(order, zeta_power_reduced(order, power));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  require(is_rational(), ErrorKind::Internal, "rational_value on a non-rational element");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(std::int64_t new_order) const {
  if (new_order == order_) return *this;
  require(new_order % order_ == 0, ErrorKind::Internal,
          "promotion target must be a multiple of the current order");
  const FieldTable& t = field_table(new_order);
  std::int64_t stride = new_order / order_;
  std::vector<Rational> acc(static_cast<std::size_t>(t.phi), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::vector<Rational> pw = zeta_power_reduced(new_order, static_cast<std::int64_t>(i) * stride);
    for (std::size_t j = 0; j < acc.size(); ++j)
      if (!pw[j].is_zero()) acc[j] += coeffs_[i] * pw[j];
  }
  return Cyclotomic(new_order, std::move(acc));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (order_ != rhs.order_) {
    std::int64_t l = lcm_checked(order_, rhs.order_);
    *this = promoted(l);
    return *this += rhs.promoted(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  if (order_ != rhs.order_) {
    std::int64_t l = lcm_checked(order_, rhs.order_);
    *this = promoted(l);
    return *this -= rhs.promoted(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (order_ != rhs.order_) {
    std::int64_t l = lcm_checked(order_, rhs.order_);
    *this = promoted(l);
    return *this *= rhs.promoted(l);
  }
  const FieldTable& t = field_table(order_);
  std::vector<Rational> acc(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      acc[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce_into_basis(std::move(acc), t);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
  return *this *= rhs.inverse().promoted(
      order_ == rhs.order() ? order_ : lcm_checked(order_, rhs.order()));
}

Cyclotomic Cyclotomic::inverse() const {
  require(!is_zero(), ErrorKind::DivisionByZero, "division by zero in Q(zeta)");
  const FieldTable& t = field_table(order_);
  // Extended Euclid in Q[x] against the (irreducible) minimal polynomial:
  // gcd is a nonzero constant, and the Bezout coefficient of *this is the
  // inverse up to that constant.
  std::vector<Rational> r0(t.min_poly.size());
  for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(t.min_poly[i]);
  std::vector<Rational> r1 = coeffs_;
  std::vector<Rational> s0(1, Rational(0)), s1(1, Rational(1));
  auto is_zero_poly = [](const std::vector<Rational>& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
  };
  while (!is_zero_poly(r1)) {
    std::vector<Rational> q;
    std::vector<Rational> r2 = poly_rem(r0, r1, &q);
    // s2 = s0 - q*s1
    std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd; it must be a nonzero constant.
  for (std::size_t i = 1; i < r0.size(); ++i)
    require(r0[i] == 0, ErrorKind::Internal, "cyclotomic inverse: gcd not constant");
  Rational scale = r0[0];
  require(scale != 0, ErrorKind::Internal, "cyclotomic inverse: zero gcd");
  std::vector<Rational> acc(s0.size(), Rational(0));
  for (std::size_t i = 0; i < s0.size(); ++i) acc[i] = s0[i] / scale;
  return Cyclotomic(order_, reduce_into_basis(std::move(acc), t));
}

Cyclotomic Cyclotomic::conj() const {
  const FieldTable& t = field_table(order_);
  std::vector<Rational> acc(static_cast<std::size_t>(t.phi), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::vector<Rational> pw =
        zeta_power_reduced(order_, (order_ - static_cast<std::int64_t>(i)) % order_);
    for (std::size_t j = 0; j < acc.size(); ++j)
      if (!pw[j].is_zero()) acc[j] += coeffs_[i] * pw[j];
  }
  return Cyclotomic(order_, std::move(acc));
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result = Cyclotomic::one(order_);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::complex<double> Cyclotomic::to_complex() const {
  long double re = 0, im = 0, cre = 0, cim = 0;  // Kahan-compensated sums
  const long double two_pi = 6.283185307179586476925286766559L;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    long double c = static_cast<long double>(rat_double(coeffs_[i]));
    long double ang = two_pi * static_cast<long double>(i) / static_cast<long double>(order_);
    long double tr = c * std::cos(ang) - cre;
    long double ti = c * std::sin(ang) - cim;
    long double sr = re + tr, si = im + ti;
    cre = (sr - re) - tr;
    cim = (si - im) - ti;
    re = sr;
    im = si;
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
  if (order_ == rhs.order_) return coeffs_ == rhs.coeffs_;
  std::int64_t l = lcm_checked(order_, rhs.order_);
  return promoted(l).coeffs_ == rhs.promoted(l).coeffs_;
}

bool Cyclotomic::operator<(const Cyclotomic& rhs) const {
  if (order_ != rhs.order_) {
    std::int64_t l = lcm_checked(order_, rhs.order_);
    return promoted(l) < rhs.promoted(l);
  }
  return std::lexicographical_compare(coeffs_.begin(), coeffs_.end(), rhs.coeffs_.begin(),
                                      rhs.coeffs_.end());
}

Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op) {
  switch (op) {
    case CycOp::Add: return a + b;
    case CycOp::Sub: return a - b;
    case CycOp::Mul: return a * b;
    case CycOp::Div: return a / b;
  }
  fail(ErrorKind::Internal, "unknown cyclotomic op");
}

}  // namespace mckay
