#pragma once

#include <string>

#include "mckay/floer.hpp"

namespace mckay {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct McKayReport {
  // group summary
  std::uint64_t group_order = 0;
  int n = 0;
  std::int64_t field_order = 1;
  std::size_t class_count = 0;

  ValidationReport validation;
  std::map<int, std::uint64_t> age_census;
  std::vector<ClassSpectrum> class_spectra;

  // predicted H*(Y): betti[k] = dim H^{2k}, odd degrees vanish
  std::vector<std::uint64_t> betti;
  std::uint64_t euler = 0;

  bool obstructed = false;
  std::string obstruction_reason;

  // coefficient assumption: characteristic zero, or coprime to all of these
  std::vector<std::uint64_t> characteristic_exclusions;  // primes <= |G|

  // Floer pipeline output; empty when the action is not free off 0.
  bool floer_enabled = false;
  std::string scope_warning;
  Rational slope;
  std::vector<MorseBottOrbit> catalog;
  GradedRankTable sc_plus_page;
  GradedRankTable esc_plus_page;
  std::vector<FSummand> f_summands;
  GradedRankTable sh_plus;

  std::vector<CheckResult> checks;
  bool checks_pass() const;
};

// Full prediction pipeline. Throws NotSL when a generator has determinant
// != 1; a non-free action degrades to the census/Betti part with a warning.
McKayReport predict(const MatrixGroup& group, const Rational& slope = Rational(3));

// True when no crepant resolution can exist: b2 = 0 while higher even
// cohomology is populated.
bool obstruction_flag(const McKayReport& report, std::string* reason = nullptr);

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

}  // namespace mckay
