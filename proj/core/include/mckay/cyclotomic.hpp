#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

// Orders of Q(zeta_N) are capped: mixed-order arithmetic promotes to the lcm
// of the operand orders and refuses to go past this bound.
inline constexpr std::int64_t kOrderCap = 1'000'000;

std::int64_t euler_phi(std::int64_t n);
std::int64_t lcm_checked(std::int64_t a, std::int64_t b, std::int64_t cap = kOrderCap);

// An element of Q(zeta_N), stored as a polynomial in zeta_N of degree
// < phi(N), reduced modulo the N-th cyclotomic polynomial. The reduced
// coefficient vector is canonical: two values of the same order are equal
// iff their vectors are equal, and mixed orders compare after promotion.
class Cyclotomic {
public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& value) : order_(1), coeffs_(1, value) {}
  Cyclotomic(std::int64_t order, std::vector<Rational> reduced_coeffs);

  static Cyclotomic zero(std::int64_t order = 1);
  static Cyclotomic one(std::int64_t order = 1);
  static Cyclotomic rational(const Rational& value, std::int64_t order = 1);
  // zeta_N^k, any integer k (reduced mod N).
  static Cyclotomic root_of_unity(std::int64_t order, std::int64_t power);

  std::int64_t order() const { return order_; }
  // Reduced power-basis coefficients: coefficient of zeta^i at index i,
  // i < phi(order).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic promoted(std::int64_t new_order) const;  // order() must divide new_order

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  Cyclotomic inverse() const;  // throws DivisionByZero on 0
  Cyclotomic conj() const;     // complex conjugation zeta -> zeta^(N-1)
  Cyclotomic pow(std::int64_t e) const;

  // Float embedding, for oracles and display only; never feeds the exact path.
  std::complex<double> to_complex() const;

  bool operator==(const Cyclotomic& rhs) const;
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }
  // Total order on values (promotes to a common field first); used for
  // canonical dedup during group closure.
  bool operator<(const Cyclotomic& rhs) const;

private:
  std::int64_t order_;
  std::vector<Rational> coeffs_;
};

enum class CycOp { Add, Sub, Mul, Div };
Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op);

}  // namespace mckay
