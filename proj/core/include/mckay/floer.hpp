#pragma once

#include <optional>

#include "mckay/czindex.hpp"
#include "mckay/spectrum.hpp"

namespace mckay {

// One Morse-Bott manifold B_{g, 2*pi*(q+k)} of Reeb orbits.
struct MorseBottOrbit {
  std::size_t class_index = 0;
  TurnFraction q;            // primitive angle in (0,1]
  std::int64_t winding = 0;  // k; period in turns is q + k
  Rational period;
  int dim_v = 0;   // complex dimension of the eigenspace
  int dim_b = 0;   // 2*dim_v - 1
  long cz = 0;
  long mu = 0;
  long mu_max = 0;  // mu + dim_b, the grading of the top generator
  std::optional<IsotropyData> isotropy;
};

struct GradedRankTable {
  std::map<long, long> ranks;
  std::map<long, std::vector<std::size_t>> provenance;  // degree -> orbit indices

  void add(long degree, long count = 1);
  void add(long degree, std::size_t orbit_index);
  long rank_at(long degree) const;
  long total_rank() const;
  std::vector<long> support() const;
  bool operator==(const GradedRankTable& o) const { return ranks == o.ranks; }
};

struct FSummand {
  std::size_t class_index = 0;
  long mu_g = 0;                     // 2*age - 1
  std::vector<long> covered_degrees; // descending odd run mu_g, mu_g-2, ...
};

enum class IsotropyMode { None, Generic, WithStrata };

// All Morse-Bott orbit families with period q + k <= slope (in turns),
// sorted by period then class index. Requires a free action off the origin.
std::vector<MorseBottOrbit> orbit_catalog(const MatrixGroup& group, const Rational& slope,
                                          IsotropyMode isotropy_mode = IsotropyMode::Generic);

// Plain page: each family contributes rank one in degrees mu and mu + dimB.
GradedRankTable e1_plain(const std::vector<MorseBottOrbit>& catalog);

// Equivariant page: each family contributes dim_v generators in the odd
// degrees mu+1, mu+3, ..., mu + 2*dim_v - 1.
GradedRankTable e1_equivariant(const std::vector<MorseBottOrbit>& catalog);

// Per class, the equivariant generators must tile the odd degrees downward
// from mu_g = 2*age - 1 with multiplicity one inside the slope horizon.
std::vector<FSummand> stack_f_summands(const MatrixGroup& group,
                                       const std::vector<MorseBottOrbit>& catalog);

// SH_+ ranks: rank 1 at mu_g per summand, all even degrees zero.
GradedRankTable gysin_solve(const std::vector<FSummand>& summands);

bool parity_degeneration(const GradedRankTable& equivariant_table);

}  // namespace mckay
