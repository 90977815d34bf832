// Command-line driver: analyze | diagram | check | profile | list-builtins.
// Exit codes: 0 success, 1 validation failure, 2 parse error, 3 internal
// assertion failure, 4 resource cap.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mckay/io.hpp"
#include "mckay/oracles.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mckay::Error(mckay::ErrorKind::Parse, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

mckay::Rational parse_slope(const std::string& text) {
  mckay::Rational q = mckay::parse_rational(text);
  if (q <= 0) throw mckay::Error(mckay::ErrorKind::Parse, "slope must be positive");
  return q;
}

struct LoadedGroup {
  mckay::GroupSpec spec;
  mckay::MatrixGroup group;
};

LoadedGroup load_group(const std::string& path) {
  mckay::GroupSpec spec = mckay::parse_group_spec(read_file(path));
  return LoadedGroup{spec, mckay::build_group(spec, mckay::closure_cap_from_env())};
}

int run_analyze(const std::string& path, const std::string& slope, const std::string& format) {
  LoadedGroup loaded = load_group(path);
  mckay::McKayReport report = mckay::predict(loaded.group, parse_slope(slope));
  std::cout << mckay::emit_report(report, format);
  return 0;
}

int run_diagram(const std::string& path, const std::string& page, bool svg,
                const std::string& slope) {
  LoadedGroup loaded = load_group(path);
  mckay::McKayReport report = mckay::predict(loaded.group, parse_slope(slope));
  mckay::PageKind kind;
  if (page == "sc")
    kind = mckay::PageKind::Sc;
  else if (page == "sc+")
    kind = mckay::PageKind::ScPlus;
  else if (page == "esc+")
    kind = mckay::PageKind::EscPlus;
  else
    throw mckay::Error(mckay::ErrorKind::Parse, "unknown page '" + page + "'");
  mckay::Diagram d = mckay::make_diagram(report, kind);
  std::cout << (svg ? mckay::render_svg(d) : mckay::render_ascii(d));
  return 0;
}

int run_check(const std::string& path, const std::string& slope) {
  LoadedGroup loaded = load_group(path);
  const mckay::MatrixGroup& group = loaded.group;
  bool all = true;
  auto line = [&](const std::string& name, bool pass, const std::string& detail = "") {
    all = all && pass;
    std::cout << (pass ? "pass" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
  };

  // pipeline invariants
  mckay::McKayReport report = mckay::predict(group, parse_slope(slope));
  for (const mckay::CheckResult& c : report.checks) line(c.name, c.pass, c.detail);

  // closure determinism and fixed point
  {
    std::vector<mckay::CycMatrix> gens;
    for (std::size_t gi : group.generator_indices()) gens.push_back(group.element(gi));
    mckay::MatrixGroup again = mckay::MatrixGroup::close(gens, mckay::closure_cap_from_env());
    bool same = again.size() == group.size();
    for (std::size_t i = 0; same && i < group.size(); ++i)
      if (!(again.element(i) == group.element(i))) same = false;
    line("closure_deterministic", same);

    std::vector<mckay::CycMatrix> all_elements;
    for (std::size_t i = 0; i < group.size(); ++i) all_elements.push_back(group.element(i));
    mckay::MatrixGroup reclosed = mckay::MatrixGroup::close(all_elements, group.size());
    line("reclosure_fixed_point", reclosed.size() == group.size());
  }

  // Burnside: #classes * |G| = sum over g of |centralizer(g)|
  {
    std::uint64_t total = 0;
    for (std::size_t g = 0; g < group.size(); ++g) {
      std::vector<std::size_t> row = group.left_multiplication_row(g);
      for (std::size_t h = 0; h < group.size(); ++h)
        if (group.product(h, g) == row[h]) ++total;
    }
    line("burnside_class_count", total == group.conjugacy_classes().size() * group.size());
  }

  // spectrum oracles and conjugation invariance
  {
    bool dft = true, snap = true, conj_inv = true;
    for (const mckay::ConjClass& cls : group.conjugacy_classes()) {
      mckay::EigenSpectrum ref = mckay::eigen_spectrum(group, cls.rep_index);
      for (std::size_t m : cls.member_indices) {
        mckay::EigenSpectrum s = mckay::eigen_spectrum(group, m);
        if (!mckay::spectra_equal(s, ref)) conj_inv = false;
        if (!mckay::spectra_equal(s, mckay::trace_dft_spectrum(group, m))) dft = false;
        if (!mckay::spectra_equal(s, mckay::float_snap_spectrum(group, m))) snap = false;
      }
    }
    line("spectrum_conjugation_invariant", conj_inv);
    line("spectrum_trace_dft_agrees", dft);
    line("spectrum_float_snap_agrees", snap);
  }

  std::cout << (all ? "all checks passed" : "CHECK FAILURES") << "\n";
  if (!all) throw mckay::Error(mckay::ErrorKind::Internal, "invariant or oracle check failed");
  return 0;
}

int run_profile(const std::string& path, const std::string& slope) {
  LoadedGroup loaded = load_group(path);
  mckay::HamiltonianProfile profile =
      mckay::profile_for_group(loaded.group, loaded.spec, parse_slope(slope));
  mckay::ProfileReport report = mckay::verify_profile(profile);
  std::cout << "profile: R0 = " << profile.r0 << ", R1 = " << profile.r1
            << ", final slope = " << mckay::rat_string(profile.final_slope_turns)
            << " turns\n";
  for (const mckay::ProfileCheck& c : report.checks) {
    std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
  std::cout << "slice filtration values:";
  for (const mckay::FilterValue& v : report.slice_values) std::cout << " " << v.t;
  std::cout << "\n";
  if (!report.all_pass()) {
    std::cout << "profile checks FAILED\n";
    return 1;
  }
  std::cout << "profile admissible\n";
  return 0;
}

int run_list_builtins() {
  for (const auto& [name, description] : mckay::builtin_catalog())
    std::cout << name << "\n    " << description << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact McKay-correspondence calculator for finite subgroups of SL(n,C)"};
  app.require_subcommand(1);

  std::string file, slope = "3", format = "json", page = "sc";
  bool svg = false, ascii = false;

  CLI::App* analyze = app.add_subcommand("analyze", "full prediction report");
  analyze->add_option("file", file)->required();
  analyze->add_option("--slope", slope, "orbit horizon in turns (rational)");
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* diagram = app.add_subcommand("diagram", "render a spectral-sequence page");
  diagram->add_option("file", file)->required();
  diagram->add_option("--page", page)->required()->check(CLI::IsMember({"sc", "sc+", "esc+"}));
  diagram->add_flag("--svg", svg);
  diagram->add_flag("--ascii", ascii);
  diagram->add_option("--slope", slope);

  CLI::App* check = app.add_subcommand("check", "full invariant and oracle suite");
  check->add_option("file", file)->required();
  check->add_option("--slope", slope);

  CLI::App* profile = app.add_subcommand("profile", "verify the filtration profile");
  profile->add_option("file", file)->required();
  profile->add_option("--slope", slope);

  app.add_subcommand("list-builtins", "list the built-in group catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("analyze")) return run_analyze(file, slope, format);
    if (app.got_subcommand("diagram")) return run_diagram(file, page, svg && !ascii, slope);
    if (app.got_subcommand("check")) return run_check(file, slope);
    if (app.got_subcommand("profile")) return run_profile(file, slope);
    if (app.got_subcommand("list-builtins")) return run_list_builtins();
  } catch (const mckay::Error& e) {
    std::cerr << "error (" << mckay::error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
