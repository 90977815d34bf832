#include "mckay/floer.hpp"

#include <algorithm>

#include "mckay/errors.hpp"

namespace mckay {

void GradedRankTable::add(long degree, long count) { ranks[degree] += count; }

void GradedRankTable::add(long degree, std::size_t orbit_index) {
  ranks[degree] += 1;
  provenance[degree].push_back(orbit_index);
}

long GradedRankTable::rank_at(long degree) const {
  auto it = ranks.find(degree);
  return it == ranks.end() ? 0 : it->second;
}

long GradedRankTable::total_rank() const {
  long total = 0;
  for (const auto& [deg, rank] : ranks) total += rank;
  return total;
}

std::vector<long> GradedRankTable::support() const {
  std::vector<long> out;
  for (const auto& [deg, rank] : ranks)
    if (rank != 0) out.push_back(deg);
  return out;
}

std::vector<MorseBottOrbit> orbit_catalog(const MatrixGroup& group, const Rational& slope,
                                          IsotropyMode isotropy_mode) {
  ValidationReport validation = group.validate();
  require(validation.isolated, ErrorKind::NotIsolated,
          "the group does not act freely away from 0; no orbit catalog");
  require(slope > 0, ErrorKind::Internal, "slope must be positive");

  std::vector<MorseBottOrbit> catalog;
  std::vector<ClassSpectrum> spectra = class_spectra(group);
  for (const ClassSpectrum& cs : spectra) {
    int sum_smaller = 0;
    for (const SpectrumEntry& entry : cs.spectrum.entries) {
      std::optional<IsotropyData> iso;
      if (isotropy_mode != IsotropyMode::None)
        iso = isotropy(group, cs.class_index, entry.q.value,
                       isotropy_mode == IsotropyMode::WithStrata);
      for (std::int64_t k = 0; Rational(k) + entry.q.value <= slope; ++k) {
        MorseBottOrbit orbit;
        orbit.class_index = cs.class_index;
        orbit.q = entry.q;
        orbit.winding = k;
        orbit.period = entry.q.value + Rational(k);
        orbit.dim_v = entry.mult;
        orbit.dim_b = 2 * entry.mult - 1;
        IndexRecord rec = cz_morse_bott(group.dim(), cs.age, sum_smaller, orbit.dim_b, k);
        orbit.cz = rec.cz;
        orbit.mu = rec.mu;
        orbit.mu_max = rec.mu + orbit.dim_b;
        orbit.isotropy = iso;
        catalog.push_back(std::move(orbit));
      }
      sum_smaller += entry.mult;
    }
  }
  std::sort(catalog.begin(), catalog.end(), [](const MorseBottOrbit& a, const MorseBottOrbit& b) {
    if (a.period != b.period) return a.period < b.period;
    return a.class_index < b.class_index;
  });
  return catalog;
}

GradedRankTable e1_plain(const std::vector<MorseBottOrbit>& catalog) {
  GradedRankTable table;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    table.add(catalog[i].mu, i);
    table.add(catalog[i].mu_max, i);
  }
  return table;
}

GradedRankTable e1_equivariant(const std::vector<MorseBottOrbit>& catalog) {
  GradedRankTable table;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (int j = 0; j < catalog[i].dim_v; ++j) table.add(catalog[i].mu + 1 + 2 * j, i);
  }
  return table;
}

std::vector<FSummand> stack_f_summands(const MatrixGroup& group,
                                       const std::vector<MorseBottOrbit>& catalog) {
  std::vector<ClassSpectrum> spectra = class_spectra(group);
  std::vector<FSummand> summands;
  GradedRankTable unioned;

  for (const ClassSpectrum& cs : spectra) {
    long mu_g = 2L * cs.age - 1;
    std::vector<long> degrees;
    for (const MorseBottOrbit& orbit : catalog) {
      if (orbit.class_index != cs.class_index) continue;
      for (int j = 0; j < orbit.dim_v; ++j) degrees.push_back(orbit.mu + 1 + 2 * j);
    }
    std::sort(degrees.rbegin(), degrees.rend());
    require(!degrees.empty() && degrees.front() == mu_g, ErrorKind::CoverageGap,
            "class " + std::to_string(cs.class_index) +
                " does not reach its top grading 2*age - 1 = " + std::to_string(mu_g) +
                " (is the catalog slope at least one turn?)");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      long expected = mu_g - 2 * static_cast<long>(i);
      if (degrees[i] > expected)
        fail(ErrorKind::CoverageOverlap, "class " + std::to_string(cs.class_index) +
                                             " covers degree " + std::to_string(degrees[i]) +
                                             " more than once");
      if (degrees[i] < expected)
        fail(ErrorKind::CoverageGap, "class " + std::to_string(cs.class_index) +
                                         " misses degree " + std::to_string(expected));
    }
    FSummand summand;
    summand.class_index = cs.class_index;
    summand.mu_g = mu_g;
    summand.covered_degrees = std::move(degrees);
    for (long d : summand.covered_degrees) unioned.add(d);
    summands.push_back(std::move(summand));
  }

  GradedRankTable equivariant = e1_equivariant(catalog);
  require(unioned == equivariant, ErrorKind::Internal,
          "per-class coverage does not reassemble the equivariant page");
  return summands;
}

GradedRankTable gysin_solve(const std::vector<FSummand>& summands) {
  GradedRankTable table;
  for (const FSummand& s : summands) table.add(s.mu_g);
  return table;
}

bool parity_degeneration(const GradedRankTable& equivariant_table) {
  for (const auto& [degree, rank] : equivariant_table.ranks) {
    if (rank != 0 && degree % 2 == 0) return false;
  }
  return true;
}

}  // namespace mckay
