#include <doctest.h>

#include <algorithm>
#include <set>

#include "mckay/floer.hpp"
#include "mckay/io.hpp"

using namespace mckay;

namespace {

std::multiset<long> mu_multiset(const std::vector<MorseBottOrbit>& catalog) {
  std::multiset<long> out;
  for (const MorseBottOrbit& o : catalog) out.insert(o.mu);
  return out;
}

}  // namespace

TEST_CASE("T*CP^1 catalog at slope 2") {
  MatrixGroup g = build_group(builtin("cyclic_A1"));
  std::vector<MorseBottOrbit> catalog = orbit_catalog(g, Rational(2));
  REQUIRE(catalog.size() == 4);
  CHECK(mu_multiset(catalog) == std::multiset<long>{-2, -4, -6, -8});
  std::multiset<long> maxima;
  for (const MorseBottOrbit& o : catalog) maxima.insert(o.mu_max);
  CHECK(maxima == std::multiset<long>{1, -1, -3, -5});

  GradedRankTable plain = e1_plain(catalog);
  for (long d : {-8L, -6L, -5L, -4L, -3L, -2L, -1L, 1L}) CHECK(plain.rank_at(d) == 1);
  CHECK(plain.total_rank() == 8);
}

TEST_CASE("C^3/Z_3 catalog at slope 2") {
  MatrixGroup g = build_group(builtin("c3z3"));
  std::vector<MorseBottOrbit> catalog = orbit_catalog(g, Rational(2));
  REQUIRE(catalog.size() == 6);
  CHECK(mu_multiset(catalog) == std::multiset<long>{-6, -4, -2, -12, -10, -8});
}

TEST_CASE("trivial group catalog") {
  MatrixGroup g = build_group(builtin("trivial3"));
  std::vector<MorseBottOrbit> catalog = orbit_catalog(g, Rational(1));
  REQUIRE(catalog.size() == 1);
  CHECK(catalog[0].q.value == Rational(1));
  CHECK(catalog[0].dim_v == 3);
  CHECK(catalog[0].dim_b == 5);
  CHECK(catalog[0].mu == -6);  // -2n
}

TEST_CASE("catalog refuses non-isolated groups") {
  GroupSpec spec = parse_group_spec(
      R"({"n":3,"cyclotomic_order":3,"generators":[[["z","0","0"],["0","z^2","0"],["0","0","1"]]]})");
  MatrixGroup g = build_group(spec);
  try {
    (void)orbit_catalog(g, Rational(1));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIsolated);
  }
}

TEST_CASE("plain page of C^3/Z_3 at slope 1") {
  MatrixGroup g = build_group(builtin("c3z3"));
  GradedRankTable plain = e1_plain(orbit_catalog(g, Rational(1)));
  for (long d : {-6L, -4L, -2L, -1L, 1L, 3L}) CHECK(plain.rank_at(d) == 1);
  CHECK(plain.total_rank() == 6);
  CHECK(e1_plain({}).total_rank() == 0);
}

TEST_CASE("equivariant pages") {
  MatrixGroup z2 = build_group(builtin("cyclic_A1"));
  std::vector<MorseBottOrbit> catalog = orbit_catalog(z2, Rational(1, 2));
  REQUIRE(catalog.size() == 1);  // just the first -I family
  GradedRankTable eq = e1_equivariant(catalog);
  CHECK(eq.rank_at(-1) == 1);
  CHECK(eq.rank_at(1) == 1);
  CHECK(eq.total_rank() == 2);

  MatrixGroup z3 = build_group(builtin("c3z3"));
  GradedRankTable eq3 = e1_equivariant(orbit_catalog(z3, Rational(1)));
  // three shifted copies of H*(CP^2): {-5,-3,-1}, {-3,-1,1}, {-1,1,3}
  CHECK(eq3.rank_at(-5) == 1);
  CHECK(eq3.rank_at(-3) == 2);
  CHECK(eq3.rank_at(-1) == 3);
  CHECK(eq3.rank_at(1) == 2);
  CHECK(eq3.rank_at(3) == 1);
  CHECK(parity_degeneration(eq3));

  GradedRankTable bad;
  bad.add(0L, 1L);
  CHECK_FALSE(parity_degeneration(bad));
  CHECK(parity_degeneration(GradedRankTable{}));
}

TEST_CASE("f-summands and the gysin solve") {
  MatrixGroup z2 = build_group(builtin("cyclic_A1"));
  std::vector<MorseBottOrbit> catalog = orbit_catalog(z2, Rational(3));
  std::vector<FSummand> summands = stack_f_summands(z2, catalog);
  REQUIRE(summands.size() == 2);
  std::multiset<long> tops;
  for (const FSummand& s : summands) tops.insert(s.mu_g);
  CHECK(tops == std::multiset<long>{-1, 1});

  GradedRankTable sh = gysin_solve(summands);
  CHECK(sh.rank_at(-1) == 1);
  CHECK(sh.rank_at(1) == 1);

  MatrixGroup z3 = build_group(builtin("c3z3"));
  std::vector<FSummand> s3 = stack_f_summands(z3, orbit_catalog(z3, Rational(3)));
  std::multiset<long> tops3;
  for (const FSummand& s : s3) tops3.insert(s.mu_g);
  CHECK(tops3 == std::multiset<long>{-1, 1, 3});

  MatrixGroup trivial = build_group(builtin("trivial2"));
  std::vector<FSummand> st = stack_f_summands(trivial, orbit_catalog(trivial, Rational(3)));
  REQUIRE(st.size() == 1);
  CHECK(st[0].mu_g == -1);
}

TEST_CASE("A_k cyclic groups have total SH+ rank k+1") {
  for (std::int64_t k : {1, 2, 3, 5}) {
    MatrixGroup g = build_group(builtin("cyclic_A" + std::to_string(k)));
    std::vector<FSummand> summands = stack_f_summands(g, orbit_catalog(g, Rational(3)));
    CHECK(gysin_solve(summands).total_rank() == k + 1);
  }
}

TEST_CASE("catalog invariants") {
  MatrixGroup g = build_group(builtin("binary_dihedral_D5"));
  std::vector<ClassSpectrum> spectra = class_spectra(g);
  std::vector<MorseBottOrbit> catalog = orbit_catalog(g, Rational(2));

  // ages recomputed from the short orbits
  for (const ClassSpectrum& cs : spectra) {
    Rational acc = 0;
    for (const MorseBottOrbit& o : catalog)
      if (o.class_index == cs.class_index && o.winding == 0)
        acc += (Rational(1) - o.q.value) * o.dim_v;
    CHECK(acc == cs.age);
  }

  // winding iterates shift by 2kn; parities as stated
  for (const MorseBottOrbit& o : catalog) {
    CHECK(o.mu % 2 == 0);
    CHECK(o.mu_max % 2 != 0);
    CHECK(o.dim_b == 2 * o.dim_v - 1);
    if (o.winding > 0) {
      for (const MorseBottOrbit& base : catalog)
        if (base.class_index == o.class_index && base.q == o.q && base.winding == 0)
          CHECK(o.mu == base.mu - 2 * o.winding * g.dim());
    }
  }

  // periods sorted
  CHECK(std::is_sorted(catalog.begin(), catalog.end(),
                       [](const MorseBottOrbit& a, const MorseBottOrbit& b) {
                         return a.period < b.period;
                       }));

  // with slope 1 every family is short and contributes two plain generators,
  // all in degrees >= -2n
  std::vector<MorseBottOrbit> short_catalog = orbit_catalog(g, Rational(1));
  GradedRankTable plain = e1_plain(short_catalog);
  long total = 0;
  for (const auto& [deg, rank] : plain.ranks) {
    CHECK(deg >= -2 * g.dim());
    total += rank;
  }
  CHECK(total == 2 * static_cast<long>(short_catalog.size()));
}
