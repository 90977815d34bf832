// Acceptance suite: one line per criterion, exit nonzero on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "mckay/io.hpp"
#include "mckay/oracles.hpp"

using namespace mckay;

namespace {

struct Harness {
  int failures = 0;

  void run(const std::string& name, double time_limit_seconds,
           const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string message;
    bool pass = true;
    try {
      body();
    } catch (const std::exception& e) {
      pass = false;
      message = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pass && time_limit_seconds > 0 && elapsed > time_limit_seconds) {
      pass = false;
      message = "time limit exceeded";
    }
    if (!pass) ++failures;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  " << name << "  (" << elapsed << " s)";
    if (!message.empty()) line << "  -- " << message;
    std::cout << line.str() << "\n";
  }
};

void expect(bool cond, const std::string& message) {
  if (!cond) throw std::runtime_error(message);
}

std::vector<std::set<long>> page_columns(const McKayReport& report, PageKind kind) {
  Diagram d = make_diagram(report, kind);
  std::vector<std::set<long>> cols;
  for (const DiagramColumn& c : d.columns) cols.emplace_back(c.degrees.begin(), c.degrees.end());
  return cols;
}

std::string show_columns(const std::vector<std::set<long>>& cols) {
  std::ostringstream out;
  for (const auto& c : cols) {
    out << "{";
    for (long d : c) out << d << " ";
    out << "} ";
  }
  return out.str();
}

McKayReport analyze_builtin(const std::string& name, const Rational& slope = Rational(3)) {
  return predict(build_group(builtin(name)), slope);
}

void criterion_tcp1() {
  McKayReport report = analyze_builtin("cyclic_A1", Rational(5, 2));
  std::vector<std::set<long>> sc = page_columns(report, PageKind::Sc);
  std::vector<std::set<long>> expected_sc = {
      {-2, 1}, {-4, -1}, {-6, -3}, {-8, -5}, {-10, -7}};
  expect(sc == expected_sc, "SC columns differ: " + show_columns(sc));
  std::vector<std::set<long>> eq = page_columns(report, PageKind::EscPlus);
  std::vector<std::set<long>> expected_eq = {
      {-1, 1}, {-3, -1}, {-5, -3}, {-7, -5}, {-9, -7}};
  expect(eq == expected_eq, "equivariant columns differ: " + show_columns(eq));
}

void criterion_c3z3() {
  McKayReport report = analyze_builtin("c3z3", Rational(2));
  std::multiset<long> first, second, maxima;
  for (const MorseBottOrbit& o : report.catalog) {
    if (o.winding == 0) {
      first.insert(o.mu);
      maxima.insert(o.mu_max);
    } else {
      second.insert(o.mu);
    }
  }
  expect(first == std::multiset<long>{-6, -4, -2}, "first-period mu multiset differs");
  expect(maxima == std::multiset<long>{-1, 1, 3}, "first-period maxima differ");
  expect(second == std::multiset<long>{-12, -10, -8}, "second-period mu multiset differs");

  std::vector<std::set<long>> eq = page_columns(report, PageKind::EscPlus);
  std::multiset<std::set<long>> eq_cols(eq.begin(), eq.end());
  std::multiset<std::set<long>> expected;
  expected.insert({-5, -3, -1});
  expected.insert({-3, -1, 1});
  expected.insert({-1, 1, 3});
  for (const std::set<long>& col : expected)
    expect(eq_cols.count(col) == 1, "equivariant column missing");
  expect(report.betti == std::vector<std::uint64_t>{1, 1, 1}, "betti differs from H*(CP^2)");
}

void expect_ade(const std::string& name, std::size_t classes, std::vector<std::uint64_t> betti) {
  McKayReport report = analyze_builtin(name);
  expect(report.class_count == classes, name + ": class count " +
                                            std::to_string(report.class_count) + " != " +
                                            std::to_string(classes));
  expect(report.betti == betti, name + ": betti prediction differs");
}

void criterion_ade() {
  for (std::uint64_t k = 1; k <= 5; ++k)
    expect_ade("cyclic_A" + std::to_string(k), k + 1, {1, k});
  expect_ade("binary_dihedral_D4", 5, {1, 4});
  expect_ade("binary_tetrahedral", 7, {1, 6});
  expect_ade("binary_octahedral", 8, {1, 7});
  expect_ade("binary_icosahedral", 9, {1, 8});
}

const std::vector<std::string>& isolated_builtins() {
  static const std::vector<std::string> names = {
      "cyclic_A1",          "cyclic_A2",         "cyclic_A3",
      "cyclic_A5",          "binary_dihedral_D4", "binary_dihedral_D5",
      "binary_dihedral_D6", "binary_tetrahedral", "binary_octahedral",
      "binary_icosahedral", "c3z3",              "c4_pm1",
      "trivial2",           "trivial3"};
  return names;
}

void criterion_f_summands() {
  for (const std::string& name : isolated_builtins()) {
    McKayReport report = analyze_builtin(name);
    expect(report.f_summands.size() == report.class_count,
           name + ": summand count != |Conj(G)|");
    for (const FSummand& s : report.f_summands) {
      int age = report.class_spectra[s.class_index].age;
      expect(s.mu_g == 2L * age - 1, name + ": mu_g != 2 age - 1");
      for (std::size_t i = 0; i < s.covered_degrees.size(); ++i)
        expect(s.covered_degrees[i] == s.mu_g - 2 * static_cast<long>(i),
               name + ": covered degrees not a gap-free odd run");
    }
    for (const auto& [age, count] : report.age_census)
      expect(report.sh_plus.rank_at(2L * age - 1) == static_cast<long>(count),
             name + ": gysin rank at 2k-1 != |Conj_k|");
  }
}

void criterion_obstruction() {
  McKayReport report = analyze_builtin("c4_pm1");
  expect(report.age_census == std::map<int, std::uint64_t>{{0, 1}, {2, 1}},
         "ages of {+-I_4} differ from {0, 2}");
  expect(report.betti.size() == 4 && report.betti[0] == 1 && report.betti[1] == 0 &&
             report.betti[2] == 1 && report.betti[3] == 0,
         "betti differs from (1, 0, 1)");
  expect(report.obstructed, "obstruction flag not raised");
}

std::vector<GroupSpec> random_lens_specs(int count, std::int64_t max_m) {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<std::int64_t> m_dist(2, max_m);
  std::uniform_int_distribution<int> n_dist(2, 4);
  std::vector<GroupSpec> specs;
  while (static_cast<int>(specs.size()) < count) {
    std::int64_t m = m_dist(rng);
    int n = n_dist(rng);
    std::vector<std::int64_t> weights;
    for (int i = 0; i + 1 < n; ++i) {
      std::int64_t w = 0;
      do {
        w = std::uniform_int_distribution<std::int64_t>(1, m - 1)(rng);
      } while (std::gcd(w, m) != 1);
      weights.push_back(w);
    }
    std::int64_t last = std::accumulate(weights.begin(), weights.end(), std::int64_t{0}) % m;
    last = (m - last) % m;
    if (last == 0) last = m;  // weight m acts trivially only for m = 1
    if (std::gcd(last, m) != 1) continue;
    weights.push_back(last);
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Lens;
    spec.lens_m = m;
    spec.lens_weights = weights;
    spec.n = n;
    spec.cyclotomic_order = m;
    specs.push_back(std::move(spec));
  }
  return specs;
}

void property_checks(const MatrixGroup& group, bool run_oracles) {
  // age integrality and duality on every element
  std::vector<int> ages(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) ages[i] = age_of(eigen_spectrum(group, i));
  for (std::size_t i = 1; i < group.size(); ++i)
    expect(ages[i] + ages[group.inverse(i)] == group.dim(), "age duality fails");
  expect(ages[0] == 0, "identity age nonzero");

  // Burnside cross-check
  std::uint64_t fixed = 0;
  for (std::size_t g = 0; g < group.size(); ++g) {
    std::vector<std::size_t> row = group.left_multiplication_row(g);
    for (std::size_t h = 0; h < group.size(); ++h)
      if (group.product(h, g) == row[h]) ++fixed;
  }
  expect(fixed == group.conjugacy_classes().size() * group.size(), "Burnside count fails");

  // mu parity and equivariant-page parity
  std::vector<MorseBottOrbit> catalog = orbit_catalog(group, Rational(1), IsotropyMode::None);
  for (const MorseBottOrbit& o : catalog)
    expect(o.mu % 2 == 0, "mu(B) not even");
  expect(parity_degeneration(e1_equivariant(catalog)), "equivariant page has even support");

  if (run_oracles) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      EigenSpectrum exact = eigen_spectrum(group, i);
      expect(spectra_equal(exact, trace_dft_spectrum(group, i)), "trace DFT disagrees");
      expect(spectra_equal(exact, float_snap_spectrum(group, i, 1e-6)),
             "float snap disagrees");
    }
  } else {
    // the float oracle is cheap enough to run everywhere
    for (std::size_t i = 0; i < group.size(); ++i)
      expect(spectra_equal(eigen_spectrum(group, i), float_snap_spectrum(group, i, 1e-6)),
             "float snap disagrees");
  }
}

void criterion_property_suite() {
  for (const std::string& name : isolated_builtins())
    property_checks(build_group(builtin(name)), /*run_oracles=*/true);
  for (const GroupSpec& spec : random_lens_specs(50, 100))
    property_checks(build_group(spec), /*run_oracles=*/false);
}

void criterion_filtration() {
  MatrixGroup group = build_group(builtin("cyclic_A1"));
  GroupSpec spec = builtin("cyclic_A1");
  spec.has_profile = true;
  spec.profile_final_slope_turns = Rational(9, 4);  // 4.5 pi, off the period lattice
  HamiltonianProfile profile = profile_for_group(group, spec, Rational(3));
  ProfileReport report = verify_profile(profile);
  for (const ProfileCheck& c : report.checks) expect(c.pass, "profile check fails: " + c.name);
  double last = 0.0;
  for (const FilterValue& v : report.slice_values) {
    expect(v.t < last - 1e-9, "slice values not strictly ordered");
    last = v.t;
  }
  expect(report.slice_values.size() >= 4, "expected at least four orbit slices");
}

void criterion_lens_7() {
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::Lens;
  spec.lens_m = 7;
  spec.lens_weights = {1, 2, 4};
  spec.n = 3;
  spec.cyclotomic_order = 7;
  McKayReport report = predict(build_group(spec));
  expect(report.betti == std::vector<std::uint64_t>{1, 3, 3}, "betti differs from (1,3,3)");
  expect(report.euler == 7, "euler differs from 7");

  // independent oracle over the weight arithmetic
  std::map<int, std::uint64_t> oracle;
  for (std::int64_t j = 0; j < 7; ++j) {
    std::int64_t units = 0;
    for (std::int64_t w : {1, 2, 4}) {
      std::int64_t r = (j * w) % 7;
      std::int64_t q_units = r == 0 ? 7 : r;
      units += 7 - q_units;
    }
    expect(units % 7 == 0, "oracle age not integral");
    oracle[static_cast<int>(units / 7)] += 1;
  }
  expect(report.age_census == oracle, "census differs from the weight oracle");
}

}  // namespace

int main() {
  Harness h;
  h.run("1 T*CP^1 golden pages (slope 5/2)", 1.0, criterion_tcp1);
  h.run("2 C^3/Z_3 golden gradings", 1.0, criterion_c3z3);
  h.run("3 ADE class counts and Betti numbers", 10.0, criterion_ade);
  h.run("4 F-summand stacking and Gysin ranks", 30.0, criterion_f_summands);
  h.run("5 {+-I_4} obstruction", 1.0, criterion_obstruction);
  h.run("6 property suite (builtins + 50 lens groups)", 30.0, criterion_property_suite);
  h.run("7 filtration profile for cyclic_A1", 1.0, criterion_filtration);
  h.run("8 lens 1/7(1,2,4) with weight oracle", 1.0, criterion_lens_7);
  if (h.failures > 0) {
    std::cout << h.failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
