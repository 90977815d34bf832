#include <doctest.h>

#include "mckay/io.hpp"
#include "mckay/oracles.hpp"
#include "mckay/spectrum.hpp"

using namespace mckay;

namespace {

EigenSpectrum make_spectrum(std::initializer_list<std::pair<Rational, int>> entries) {
  EigenSpectrum s;
  for (const auto& [q, m] : entries) {
    s.entries.push_back(SpectrumEntry{TurnFraction{q}, m});
    s.total_dim += m;
  }
  return s;
}

}  // namespace

TEST_CASE("spectra of scalar matrices") {
  MatrixGroup z2 = build_group(builtin("cyclic_A1"));
  EigenSpectrum minus_i = eigen_spectrum(z2, 1);
  REQUIRE(minus_i.entries.size() == 1);
  CHECK(minus_i.entries[0].q.value == Rational(1, 2));
  CHECK(minus_i.entries[0].mult == 2);

  MatrixGroup z3 = build_group(builtin("c3z3"));
  EigenSpectrum zeta_diag = eigen_spectrum(z3, 1);
  REQUIRE(zeta_diag.entries.size() == 1);
  CHECK(zeta_diag.entries[0].q.value == Rational(1, 3));
  CHECK(zeta_diag.entries[0].mult == 3);
}

TEST_CASE("spectrum of quaternion i") {
  MatrixGroup q8 = build_group(builtin("binary_dihedral_D4"));
  // generator 0 is diag(i, -i)
  EigenSpectrum s = eigen_spectrum(q8, q8.generator_indices()[0]);
  REQUIRE(s.entries.size() == 2);
  CHECK(s.entries[0].q.value == Rational(1, 4));
  CHECK(s.entries[0].mult == 1);
  CHECK(s.entries[1].q.value == Rational(3, 4));
  CHECK(s.entries[1].mult == 1);
}

TEST_CASE("age values") {
  CHECK(age_of(make_spectrum({{Rational(1), 4}})) == 0);          // identity in SL(4)
  CHECK(age_of(make_spectrum({{Rational(1, 2), 2}})) == 1);       // -I in SL(2)
  CHECK(age_of(make_spectrum({{Rational(1, 2), 4}})) == 2);       // -I in SL(4)
  CHECK(age_of(make_spectrum({{Rational(1, 3), 3}})) == 2);       // diag(z3,z3,z3)
  CHECK(age_of(make_spectrum({{Rational(2, 3), 3}})) == 1);       // its inverse
  CHECK_THROWS_AS((void)age_of(make_spectrum({{Rational(1, 3), 1}, {Rational(1), 1}})), Error);
}

TEST_CASE("age census of the worked examples") {
  std::map<int, std::uint64_t> z2 = age_census(build_group(builtin("cyclic_A1")));
  CHECK(z2 == std::map<int, std::uint64_t>{{0, 1}, {1, 1}});

  std::map<int, std::uint64_t> z3 = age_census(build_group(builtin("c3z3")));
  CHECK(z3 == std::map<int, std::uint64_t>{{0, 1}, {1, 1}, {2, 1}});

  std::map<int, std::uint64_t> q8 = age_census(build_group(builtin("binary_dihedral_D4")));
  CHECK(q8 == std::map<int, std::uint64_t>{{0, 1}, {1, 4}});
}

TEST_CASE("isotropy of the +-I example") {
  MatrixGroup z2 = build_group(builtin("cyclic_A1"));
  std::size_t minus_class = z2.class_index_of(1);

  IsotropyData half = isotropy(z2, minus_class, Rational(1, 2));
  CHECK(half.generic_gv_order == 2);
  CHECK(half.fiber_size == 1);
  CHECK(half.orbit_multiplicity == 1);  // primitive half-turn orbits

  IsotropyData full = isotropy(z2, z2.class_index_of(0), Rational(1));
  CHECK(full.generic_gv_order == 2);
  CHECK(full.orbit_multiplicity == 2);  // iterates of great circles

  MatrixGroup trivial = build_group(builtin("trivial2"));
  IsotropyData t = isotropy(trivial, 0, Rational(1));
  CHECK(t.generic_gv_order == 1);
  CHECK(t.orbit_multiplicity == 1);

  CHECK_THROWS_AS((void)isotropy(z2, minus_class, Rational(1, 3)), Error);
  try {
    (void)isotropy(z2, minus_class, Rational(1, 3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnEigenvalue);
  }
}

TEST_CASE("strata report for small ambient dimension") {
  MatrixGroup z2 = build_group(builtin("cyclic_A1"));
  IsotropyData data = isotropy(z2, z2.class_index_of(1), Rational(1, 2), /*with_strata=*/true);
  CHECK(data.attained_gv_orders == std::vector<std::uint64_t>{2});

  MatrixGroup lens = build_group(parse_group_spec(R"({"lens":{"m":7,"weights":[1,2,4]}})"));
  IsotropyData d7 = isotropy(lens, 1, Rational(1, 7), /*with_strata=*/true);
  CHECK(d7.generic_gv_order == 7);
  CHECK(d7.attained_gv_orders == std::vector<std::uint64_t>{7});
}

TEST_CASE("oracles agree with the exact spectrum on the builtins") {
  for (const char* name : {"cyclic_A1", "cyclic_A4", "binary_dihedral_D4", "binary_dihedral_D6",
                           "binary_tetrahedral", "binary_octahedral", "binary_icosahedral",
                           "c3z3", "c4_pm1", "trivial3"}) {
    MatrixGroup g = build_group(builtin(name));
    for (std::size_t i = 0; i < g.size(); ++i) {
      EigenSpectrum exact = eigen_spectrum(g, i);
      CHECK(spectra_equal(exact, trace_dft_spectrum(g, i)));
      CHECK(spectra_equal(exact, float_snap_spectrum(g, i)));
    }
  }
}

TEST_CASE("spectra are conjugation invariant") {
  MatrixGroup g = build_group(builtin("binary_tetrahedral"));
  for (const ConjClass& cls : g.conjugacy_classes()) {
    EigenSpectrum ref = eigen_spectrum(g, cls.rep_index);
    for (std::size_t m : cls.member_indices) CHECK(spectra_equal(ref, eigen_spectrum(g, m)));
  }
}

TEST_CASE("age duality on the builtins") {
  for (const char* name : {"cyclic_A2", "binary_dihedral_D5", "binary_octahedral", "c3z3"}) {
    MatrixGroup g = build_group(builtin(name));
    for (std::size_t i = 1; i < g.size(); ++i) {
      int a = age_of(eigen_spectrum(g, i));
      int b = age_of(eigen_spectrum(g, g.inverse(i)));
      CHECK(a + b == g.dim());
    }
  }
}

TEST_CASE("weighted angle sums are integral exactly for SL inputs") {
  MatrixGroup g = build_group(builtin("binary_octahedral"));
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(is_integer(eigen_spectrum(g, i).weighted_angle_sum()));
}
