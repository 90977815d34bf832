#include "mckay/czindex.hpp"

#include <numeric>

#include "mckay/errors.hpp"

namespace mckay {

long w_function(const Rational& turns) {
  if (is_integer(turns)) return 2 * static_cast<long>(to_int64(rat_num(turns)));
  return 2 * static_cast<long>(to_int64(floor_rat(turns))) + 1;
}

long cz_rotation_path(const std::vector<Rational>& turns) {
  long total = 0;
  for (const Rational& q : turns) total += w_function(q);
  return total;
}

IndexRecord cz_morse_bott(int n, int age, int sum_smaller_dims, int dim_b, std::int64_t winding) {
  require(dim_b % 2 == 1, ErrorKind::ParityViolation,
          "Morse-Bott manifold dimension must be odd, got " + std::to_string(dim_b));
  require(age >= 0 && sum_smaller_dims >= 0 && winding >= 0, ErrorKind::Internal,
          "cz_morse_bott: negative input");
  IndexRecord rec;
  rec.cz = n - 2L * age + 2L * sum_smaller_dims + (dim_b + 1) / 2 + 2L * winding * n;
  rec.mu = 2L * age - 2L * sum_smaller_dims - dim_b - 1 - 2L * winding * n;
  require(rec.mu == n - rec.cz - (dim_b + 1) / 2, ErrorKind::Internal,
          "Morse-Bott shift relation mu = n - CZ - 1/2 - dimB/2 violated");
  require(rec.mu % 2 == 0, ErrorKind::Internal, "Morse-Bott grading must be even");
  return rec;
}

ConstantOrbitBound constant_orbit_bound(int n, const std::vector<long>& weights,
                                        const Rational& slope_in_pi) {
  long sum = std::accumulate(weights.begin(), weights.end(), 0L);
  require(sum == -static_cast<long>(n), ErrorKind::WeightSumMismatch,
          "weights must sum to -n = " + std::to_string(-n) + ", got " + std::to_string(sum));
  ConstantOrbitBound out;
  for (long m : weights) {
    // angle -k*m in radians is -slope_in_pi*m/2 turns
    out.cz += w_function(Rational(-m) * slope_in_pi / 2);
  }
  out.mu = n - out.cz;
  out.bound = (Rational(3) - slope_in_pi) * n;
  out.within_bound = Rational(out.mu) <= out.bound;
  require(out.within_bound, ErrorKind::Internal,
          "constant-orbit grading exceeds the (3 - k/pi) n bound");
  return out;
}

}  // namespace mckay
