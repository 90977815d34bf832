#include <charconv>

#include "mckay/io.hpp"

namespace mckay {

namespace {

GroupSpec explicit_spec(int n, std::int64_t order,
                        std::vector<std::vector<std::vector<std::string>>> gens,
                        std::string name) {
  GroupSpec spec;
  spec.kind = GroupSpec::Kind::Explicit;
  spec.n = n;
  spec.cyclotomic_order = order;
  spec.generator_entries = std::move(gens);
  spec.builtin_name = std::move(name);
  return spec;
}

bool parse_suffix(const std::string& name, const std::string& prefix, std::int64_t& value) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
  const char* begin = name.data() + prefix.size();
  const char* end = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc() && ptr == end && value > 0;
}

}  // namespace

GroupSpec builtin(const std::string& name) {
  std::int64_t k = 0;
  if (parse_suffix(name, "cyclic_A", k)) {
    // Z/(k+1) inside SL(2): diag(zeta, zeta^-1), the A_k surface singularity
    std::int64_t m = k + 1;
    return explicit_spec(
        2, m, {{{"z", "0"}, {"0", "z^" + std::to_string(m - 1)}}}, name);
  }
  if (parse_suffix(name, "binary_dihedral_D", k)) {
    require(k >= 4, ErrorKind::UnknownBuiltin,
            "binary_dihedral_D<k> needs k >= 4 (order 4(k-2))");
    std::int64_t two_m = 2 * (k - 2);
    return explicit_spec(2, two_m,
                         {{{"z", "0"}, {"0", "z^" + std::to_string(two_m - 1)}},
                          {{"0", "1"}, {"-1", "0"}}},
                         name);
  }
  if (name == "binary_tetrahedral") {
    // quaternion i = diag(i, -i) and the order-3 rotation (-1+i+j+k)/2
    return explicit_spec(2, 4,
                         {{{"z", "0"}, {"0", "z^3"}},
                          {{"-1/2 + 1/2*z", "1/2 + 1/2*z"},
                           {"-1/2 + 1/2*z", "-1/2 - 1/2*z"}}},
                         name);
  }
  if (name == "binary_octahedral") {
    // adds the order-8 element diag(zeta_8, zeta_8^-1) to the tetrahedral pair
    return explicit_spec(2, 8,
                         {{{"z", "0"}, {"0", "z^7"}},
                          {{"-1/2 + 1/2*z^2", "1/2 + 1/2*z^2"},
                           {"-1/2 + 1/2*z^2", "-1/2 - 1/2*z^2"}}},
                         name);
  }
  if (name == "binary_icosahedral") {
    // over Q(zeta_5): diag(zeta_10^3, zeta_10^7) with zeta_10 = -zeta_5^3,
    // and the reflection-like element (1/sqrt5) [[-(z-z^4), z^2-z^3],
    // [z^2-z^3, z-z^4]] with sqrt5 = z - z^2 - z^3 + z^4
    const std::string inv_sqrt5 = "1/5 * (z - z^2 - z^3 + z^4)";
    return explicit_spec(
        2, 5,
        {{{"-1*z^4", "0"}, {"0", "-1*z"}},
         {{inv_sqrt5 + " * (z^4 - z)", inv_sqrt5 + " * (z^2 - z^3)"},
          {inv_sqrt5 + " * (z^2 - z^3)", inv_sqrt5 + " * (z - z^4)"}}},
        name);
  }
  if (name == "c3z3") {
    // Z/3 acting diagonally on C^3 by third roots of unity
    return explicit_spec(3, 3, {{{"z", "0", "0"}, {"0", "z", "0"}, {"0", "0", "z"}}}, name);
  }
  if (name == "c4_pm1") {
    // {+-I} inside SL(4)
    return explicit_spec(4, 2,
                         {{{"z", "0", "0", "0"},
                           {"0", "z", "0", "0"},
                           {"0", "0", "z", "0"},
                           {"0", "0", "0", "z"}}},
                         name);
  }
  if (parse_suffix(name, "trivial", k)) {
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::Explicit;
    spec.n = static_cast<int>(k);
    spec.cyclotomic_order = 1;
    spec.builtin_name = name;
    return spec;  // no generators: the trivial group in SL(n)
  }
  fail(ErrorKind::UnknownBuiltin, "unknown builtin group '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> builtin_catalog() {
  return {
      {"cyclic_A<k>", "Z/(k+1) in SL(2), the A_k surface singularity (e.g. cyclic_A1 = {+-I})"},
      {"binary_dihedral_D<k>", "binary dihedral group of order 4(k-2), k >= 4 (D4 = quaternions)"},
      {"binary_tetrahedral", "binary tetrahedral group, order 24 (E6)"},
      {"binary_octahedral", "binary octahedral group, order 48 (E7)"},
      {"binary_icosahedral", "binary icosahedral group, order 120 (E8)"},
      {"c3z3", "Z/3 acting diagonally on C^3"},
      {"c4_pm1", "{+-I} in SL(4); admits no crepant resolution"},
      {"trivial<n>", "trivial group in SL(n)"},
  };
}

}  // namespace mckay
