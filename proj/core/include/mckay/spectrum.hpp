#pragma once

#include <map>
#include <vector>

#include "mckay/groups.hpp"

namespace mckay {

// Angle of a unit-modulus eigenvalue as a rational number of turns,
// normalized into (0, 1]; q = 1 encodes eigenvalue 1.
struct TurnFraction {
  Rational value;

  bool operator==(const TurnFraction& o) const { return value == o.value; }
  bool operator!=(const TurnFraction& o) const { return value != o.value; }
  bool operator<(const TurnFraction& o) const { return value < o.value; }
};

TurnFraction turn_fraction(const Rational& q);  // reduces into (0,1]

struct SpectrumEntry {
  TurnFraction q;
  int mult = 0;
};

struct EigenSpectrum {
  std::vector<SpectrumEntry> entries;  // sorted by q ascending
  int total_dim = 0;

  int multiplicity_of(const Rational& q) const;
  // Sum of q*mult; an integer exactly when det = 1.
  Rational weighted_angle_sum() const;
};

struct ClassSpectrum {
  std::size_t class_index = 0;
  EigenSpectrum spectrum;
  int age = 0;
  TurnFraction min_q;
};

struct IsotropyData {
  std::size_t class_index = 0;
  TurnFraction q;
  std::uint64_t generic_gv_order = 0;   // |G_v| for generic v in the eigenspace
  std::uint64_t fiber_size = 0;         // |C_G(g)| / |G_v|
  std::uint64_t orbit_multiplicity = 0; // q * |G_v|, an integer for short orbits
  // Values of |G_v| attained over special directions, one representative per
  // C_G(g)-orbit; only populated for ambient dimension n <= 3.
  std::vector<std::uint64_t> attained_gv_orders;
};

// Exact spectrum of one element: for each k in 1..r (r the element order),
// the nullity of g - zeta_r^k over Q(zeta_lcm(N,r)).
EigenSpectrum eigen_spectrum(const MatrixGroup& group, std::size_t element_index);

// age = sum (1-q)*mult; throws NonIntegerAge when the input is not from SL.
int age_of(const EigenSpectrum& spectrum);

ClassSpectrum class_spectrum(const MatrixGroup& group, std::size_t class_index);
std::vector<ClassSpectrum> class_spectra(const MatrixGroup& group);

// age value -> number of conjugacy classes with that age.
std::map<int, std::uint64_t> age_census(const MatrixGroup& group);

IsotropyData isotropy(const MatrixGroup& group, std::size_t class_index, const Rational& q,
                      bool with_strata = false);

}  // namespace mckay
