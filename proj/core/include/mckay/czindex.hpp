#pragma once

#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

struct IndexRecord {
  long cz = 0;
  long mu = 0;
};

// Conley-Zehnder index of the unitary path (e^{2*pi*i*s*t})_{t in [0,1]},
// with s measured in turns: W(2*pi*s) = 2*floor(s)+1 off the integers,
// and 2s on them. Exact rational floor; no floating point.
long w_function(const Rational& turns);

// Index of a diagonal rotation path: sum of W over the entries.
long cz_rotation_path(const std::vector<Rational>& turns);

// Index data of the Morse-Bott manifold B_{g,l+2*pi*k}:
//   CZ = n - 2*age + 2*sum_smaller_dims + dimB/2 + 1/2 + 2kn
//   mu = 2*age - 2*sum_smaller_dims - dimB - 1 - 2kn
// dimB must be odd (dimB = 2*dim V - 1); mu comes out even.
IndexRecord cz_morse_bott(int n, int age, int sum_smaller_dims, int dim_b, std::int64_t winding);

struct ConstantOrbitBound {
  long cz = 0;
  long mu = 0;
  Rational bound;       // (3 - k/pi) * n
  bool within_bound = false;
};

// Grading bound for a constant orbit with linearized weights m_j under the
// Hamiltonian of slope k = slope_in_pi * pi; requires sum m_j = -n.
ConstantOrbitBound constant_orbit_bound(int n, const std::vector<long>& weights,
                                        const Rational& slope_in_pi);

}  // namespace mckay
