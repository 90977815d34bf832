#include "mckay/mckay.hpp"

#include <algorithm>

#include "mckay/errors.hpp"

namespace mckay {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  std::vector<bool> sieve(bound + 1, true);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (!sieve[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= bound; q += p) sieve[q] = false;
  }
  return primes;
}

bool McKayReport::checks_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

bool obstruction_flag(const McKayReport& report, std::string* reason) {
  std::uint64_t b2 = report.betti.size() > 1 ? report.betti[1] : 0;
  std::uint64_t higher = 0;
  for (std::size_t k = 1; k < report.betti.size(); ++k) higher += report.betti[k];
  bool obstructed = b2 == 0 && higher > 0;
  if (reason) {
    *reason = obstructed
                  ? "b_2 = 0 while higher even cohomology is nonzero: the exceptional "
                    "locus of a crepant resolution would be a positive-dimensional "
                    "projective variety with no Kahler class"
                  : "";
  }
  return obstructed;
}

namespace {

void run_pipeline_checks(const MatrixGroup& group, McKayReport& report) {
  auto push = [&](const std::string& name, bool pass, const std::string& detail = "") {
    report.checks.push_back(CheckResult{name, pass, detail});
  };

  // ages are integers in range with age 0 only for the identity class
  bool age_zero_only_identity = true;
  for (const ClassSpectrum& cs : report.class_spectra) {
    const ConjClass& cls = group.conjugacy_classes()[cs.class_index];
    if (cs.age == 0 && cls.rep_index != 0) age_zero_only_identity = false;
  }
  if (report.validation.isolated) push("age_zero_only_for_identity", age_zero_only_identity);

  push("b0_is_1", !report.betti.empty() && report.betti[0] == 1);

  std::uint64_t census_total = 0;
  for (const auto& [age, count] : report.age_census) census_total += count;
  push("census_total_is_class_count", census_total == report.class_count);

  if (report.validation.isolated) {
    // age duality on classes paired by inversion
    bool duality = true;
    for (const ClassSpectrum& cs : report.class_spectra) {
      const ConjClass& cls = group.conjugacy_classes()[cs.class_index];
      if (cls.rep_index == 0) continue;
      std::size_t inv_class = group.class_index_of(group.inverse(cls.rep_index));
      if (cs.age + report.class_spectra[inv_class].age != group.dim()) duality = false;
    }
    push("age_duality", duality);

    // |Conj_k| = |Conj_{n-k}| over the non-identity classes (only the
    // identity has age 0 when the action is free off 0)
    bool census_symmetry = true;
    for (int k = 1; k < group.dim(); ++k) {
      auto a = report.age_census.find(k);
      auto b = report.age_census.find(group.dim() - k);
      std::uint64_t ca = a == report.age_census.end() ? 0 : a->second;
      std::uint64_t cb = b == report.age_census.end() ? 0 : b->second;
      if (ca != cb) census_symmetry = false;
    }
    push("census_inversion_symmetry", census_symmetry);
  }

  if (!report.floer_enabled) return;

  // catalog-side age recomputation: sum over short orbits of
  // (1-q) * dim V equals the class age
  bool catalog_age = true;
  for (const ClassSpectrum& cs : report.class_spectra) {
    Rational acc = 0;
    for (const MorseBottOrbit& orbit : report.catalog) {
      if (orbit.class_index != cs.class_index || orbit.winding != 0) continue;
      acc += (Rational(1) - orbit.q.value) * orbit.dim_v;
    }
    if (acc != cs.age) catalog_age = false;
  }
  push("catalog_age_consistency", catalog_age);

  bool windings_ok = true, mu_even = true, dim_ok = true, mult_ok = true;
  for (const MorseBottOrbit& orbit : report.catalog) {
    if (orbit.mu % 2 != 0 || orbit.mu_max % 2 == 0) mu_even = false;
    if (orbit.dim_b != 2 * orbit.dim_v - 1) dim_ok = false;
    if (orbit.isotropy) {
      Rational m = orbit.q.value * Rational(orbit.isotropy->generic_gv_order);
      if (!is_integer(m) || m < 1) mult_ok = false;
    }
    if (orbit.winding > 0) {
      for (const MorseBottOrbit& base : report.catalog) {
        if (base.class_index == orbit.class_index && base.q == orbit.q && base.winding == 0) {
          if (orbit.mu != base.mu - 2 * orbit.winding * group.dim()) windings_ok = false;
          if (orbit.cz != base.cz + 2 * orbit.winding * group.dim()) windings_ok = false;
        }
      }
    }
  }
  push("mu_even_mu_max_odd", mu_even);
  push("dim_b_is_2d_minus_1", dim_ok);
  push("orbit_multiplicity_integral", mult_ok);
  push("winding_shift_2kn", windings_ok);

  push("equivariant_page_odd", parity_degeneration(report.esc_plus_page));
  push("f_summand_count_is_class_count", report.f_summands.size() == report.class_count);

  bool summand_grading = true;
  for (const FSummand& s : report.f_summands) {
    for (const ClassSpectrum& cs : report.class_spectra)
      if (cs.class_index == s.class_index && s.mu_g != 2L * cs.age - 1) summand_grading = false;
  }
  push("summand_top_grading_2age_minus_1", summand_grading);

  bool gysin_census = true;
  for (const auto& [age, count] : report.age_census) {
    if (report.sh_plus.rank_at(2L * age - 1) != static_cast<long>(count)) gysin_census = false;
  }
  for (const auto& [deg, rank] : report.sh_plus.ranks)
    if (deg % 2 == 0 && rank != 0) gysin_census = false;
  push("gysin_rank_matches_census", gysin_census);

  bool betti_match = true;
  for (std::size_t k = 0; k < report.betti.size(); ++k) {
    if (report.sh_plus.rank_at(2L * static_cast<long>(k) - 1) !=
        static_cast<long>(report.betti[k]))
      betti_match = false;
  }
  push("sh_plus_matches_betti", betti_match);
}

}  // namespace

McKayReport predict(const MatrixGroup& group, const Rational& slope) {
  McKayReport report;
  report.group_order = group.size();
  report.n = group.dim();
  report.field_order = group.field_order();
  report.class_count = group.conjugacy_classes().size();
  report.validation = group.validate();
  report.slope = slope;

  require(report.validation.in_sl, ErrorKind::NotSL,
          "the group is not inside SL(n, C); no McKay prediction");

  report.class_spectra = class_spectra(group);
  for (const ClassSpectrum& cs : report.class_spectra) report.age_census[cs.age] += 1;

  report.betti.assign(static_cast<std::size_t>(group.dim()), 0);
  for (const auto& [age, count] : report.age_census) {
    require(age >= 0 && age < group.dim(), ErrorKind::Internal, "age out of [0, n)");
    report.betti[static_cast<std::size_t>(age)] += count;
  }
  report.euler = 0;
  for (std::uint64_t b : report.betti) report.euler += b;

  report.characteristic_exclusions = primes_up_to(report.group_order);
  report.obstructed = report.validation.isolated && obstruction_flag(report, &report.obstruction_reason);

  if (report.validation.isolated) {
    report.floer_enabled = true;
    report.catalog = orbit_catalog(group, slope,
                                   group.dim() <= 3 ? IsotropyMode::WithStrata
                                                    : IsotropyMode::Generic);
    report.sc_plus_page = e1_plain(report.catalog);
    report.esc_plus_page = e1_equivariant(report.catalog);
    report.f_summands = stack_f_summands(group, report.catalog);
    report.sh_plus = gysin_solve(report.f_summands);
  } else {
    report.scope_warning =
        "the action is not free away from 0 (non-isolated singularity): the "
        "age census and Betti prediction stand, but the Reeb-orbit pipeline "
        "is disabled";
  }

  run_pipeline_checks(group, report);
  require(report.checks_pass(), ErrorKind::Internal, "pipeline invariant check failed");
  return report;
}

}  // namespace mckay
