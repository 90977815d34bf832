#include <doctest.h>

#include <numeric>

#include "mckay/io.hpp"
#include "mckay/mckay.hpp"

using namespace mckay;

namespace {

McKayReport analyze(const char* name) { return predict(build_group(builtin(name))); }

// Ages of Z/m acting by diag(zeta^w) computed from the weights alone,
// via floor arithmetic: age(g^j) = sum_i (1 - frac'(j w_i / m)) with
// frac' into (0,1]. Independent of the matrix pipeline.
std::map<int, std::uint64_t> lens_census_oracle(std::int64_t m,
                                                const std::vector<std::int64_t>& weights) {
  std::map<int, std::uint64_t> census;
  for (std::int64_t j = 0; j < m; ++j) {
    std::int64_t twice_sum = 0;  // accumulate age in units of 1/m
    std::int64_t age_units = 0;
    (void)twice_sum;
    for (std::int64_t w : weights) {
      std::int64_t r = (j * w) % m;
      if (r < 0) r += m;
      std::int64_t q_units = r == 0 ? m : r;  // q = q_units/m in (0,1]
      age_units += m - q_units;
    }
    REQUIRE(age_units % m == 0);
    census[static_cast<int>(age_units / m)] += 1;
  }
  return census;
}

}  // namespace

TEST_CASE("predictions for the worked examples") {
  McKayReport z2 = analyze("cyclic_A1");
  CHECK(z2.betti == std::vector<std::uint64_t>{1, 1});
  CHECK(z2.euler == 2);
  CHECK_FALSE(z2.obstructed);

  McKayReport q8 = analyze("binary_dihedral_D4");
  CHECK(q8.betti == std::vector<std::uint64_t>{1, 4});
  CHECK(q8.euler == 5);

  McKayReport z3 = analyze("c3z3");
  CHECK(z3.betti == std::vector<std::uint64_t>{1, 1, 1});
  CHECK_FALSE(z3.obstructed);

  McKayReport trivial = analyze("trivial3");
  CHECK(trivial.betti == std::vector<std::uint64_t>{1, 0, 0});
  CHECK_FALSE(trivial.obstructed);
}

TEST_CASE("lens 1/7(1,2,4) against the weight oracle") {
  GroupSpec spec = parse_group_spec(R"({"lens":{"m":7,"weights":[1,2,4]}})");
  McKayReport report = predict(build_group(spec));
  CHECK(report.betti == std::vector<std::uint64_t>{1, 3, 3});
  CHECK(report.euler == 7);
  CHECK(report.age_census == lens_census_oracle(7, {1, 2, 4}));
}

TEST_CASE("obstruction flag") {
  McKayReport c4 = analyze("c4_pm1");
  CHECK(c4.age_census == std::map<int, std::uint64_t>{{0, 1}, {2, 1}});
  CHECK(c4.betti == std::vector<std::uint64_t>{1, 0, 1, 0});
  CHECK(c4.obstructed);
  CHECK_FALSE(analyze("c3z3").obstructed);
  CHECK_FALSE(analyze("trivial2").obstructed);
}

TEST_CASE("non-SL input aborts") {
  GroupSpec spec = parse_group_spec(
      R"({"n":2,"cyclotomic_order":2,"generators":[[["1","0"],["0","z"]]]})");
  MatrixGroup g = build_group(spec);
  try {
    (void)predict(g);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSL);
    CHECK(e.exit_code() == 1);
  }
}

TEST_CASE("non-isolated input degrades to the census prediction") {
  GroupSpec spec = parse_group_spec(
      R"({"n":3,"cyclotomic_order":3,"generators":[[["z","0","0"],["0","z^2","0"],["0","0","1"]]]})");
  McKayReport report = predict(build_group(spec));
  CHECK_FALSE(report.validation.isolated);
  CHECK_FALSE(report.floer_enabled);
  CHECK(report.catalog.empty());
  CHECK_FALSE(report.scope_warning.empty());
  CHECK(report.betti.size() == 3);
  CHECK(std::accumulate(report.betti.begin(), report.betti.end(), std::uint64_t{0}) ==
        report.class_count);
}

TEST_CASE("characteristic exclusions are the primes up to |G|") {
  McKayReport q8 = analyze("binary_dihedral_D4");
  CHECK(q8.characteristic_exclusions == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(1).empty());
}

TEST_CASE("census symmetry and b0 for isolated groups") {
  for (const char* name : {"cyclic_A4", "binary_tetrahedral", "c4_pm1"}) {
    McKayReport r = analyze(name);
    CHECK(r.betti[0] == 1);
    for (int k = 1; k < r.n; ++k) {
      auto a = r.age_census.find(k), b = r.age_census.find(r.n - k);
      std::uint64_t ca = a == r.age_census.end() ? 0 : a->second;
      std::uint64_t cb = b == r.age_census.end() ? 0 : b->second;
      CHECK(ca == cb);
    }
  }
}

TEST_CASE("pipeline checks all pass on the builtins") {
  for (const char* name : {"cyclic_A1", "cyclic_A3", "binary_dihedral_D4", "binary_octahedral",
                           "c3z3", "c4_pm1", "trivial2"}) {
    McKayReport r = analyze(name);
    CHECK(r.checks_pass());
    CHECK(r.sh_plus.total_rank() == static_cast<long>(r.class_count));
  }
}
