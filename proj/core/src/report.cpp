#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "mckay/io.hpp"

namespace mckay {

namespace {

using ojson = nlohmann::ordered_json;

std::string q_string(const Rational& q) { return rat_string(q); }

ojson table_json(const GradedRankTable& table) {
  ojson obj = ojson::object();
  for (const auto& [degree, rank] : table.ranks)
    if (rank != 0) obj[std::to_string(degree)] = rank;
  return obj;
}

ojson report_json(const McKayReport& r) {
  ojson doc;
  doc["group"] = {{"order", r.group_order},
                  {"n", r.n},
                  {"field_order", r.field_order},
                  {"class_count", r.class_count},
                  {"euler", r.euler},
                  {"slope", q_string(r.slope)},
                  {"basis_labelling", "non-canonical"}};
  ojson validation = {{"in_sl", r.validation.in_sl},
                      {"isolated", r.validation.isolated},
                      {"small", r.validation.small},
                      {"obstructed", r.obstructed}};
  if (r.obstructed) validation["obstruction_reason"] = r.obstruction_reason;
  if (!r.scope_warning.empty()) validation["scope_warning"] = r.scope_warning;
  ojson notes = ojson::array();
  for (const std::string& n : r.validation.notes) notes.push_back(n);
  validation["notes"] = notes;
  ojson excl = ojson::array();
  for (std::uint64_t p : r.characteristic_exclusions) excl.push_back(p);
  validation["characteristic_exclusions"] = excl;
  doc["validation"] = validation;

  ojson classes = ojson::array();
  for (const ClassSpectrum& cs : r.class_spectra) {
    ojson spectrum = ojson::array();
    for (const SpectrumEntry& e : cs.spectrum.entries)
      spectrum.push_back({{"q", q_string(e.q.value)}, {"mult", e.mult}});
    ojson cls = {{"index", cs.class_index},
                 {"age", cs.age},
                 {"min_q", q_string(cs.min_q.value)},
                 {"mu_g", 2 * cs.age - 1},
                 {"spectrum", spectrum}};
    classes.push_back(cls);
  }
  doc["classes"] = classes;

  ojson orbits = ojson::array();
  for (const MorseBottOrbit& o : r.catalog) {
    ojson orbit = {{"class", o.class_index}, {"q", q_string(o.q.value)},
                   {"k", o.winding},        {"period", q_string(o.period)},
                   {"dim_v", o.dim_v},      {"dim_b", o.dim_b},
                   {"cz", o.cz},            {"mu", o.mu},
                   {"mu_max", o.mu_max}};
    if (o.isotropy) {
      ojson iso = {{"gv_order", o.isotropy->generic_gv_order},
                   {"fiber", o.isotropy->fiber_size},
                   {"multiplicity", o.isotropy->orbit_multiplicity}};
      if (!o.isotropy->attained_gv_orders.empty()) {
        ojson attained = ojson::array();
        for (std::uint64_t v : o.isotropy->attained_gv_orders) attained.push_back(v);
        iso["attained_gv_orders"] = attained;
      }
      orbit["isotropy"] = iso;
    }
    orbits.push_back(orbit);
  }
  doc["orbits"] = orbits;

  ojson pages;
  ojson constants = ojson::array();
  for (std::size_t k = 0; k < r.betti.size(); ++k)
    if (r.betti[k] != 0) constants.push_back({{"degree", 2 * k}, {"rank", r.betti[k]}});
  pages["constants"] = {{"flag", "prediction"}, {"ranks", constants}};
  pages["sc_plus"] = table_json(r.sc_plus_page);
  pages["esc_plus"] = table_json(r.esc_plus_page);
  doc["pages"] = pages;

  ojson summands = ojson::array();
  for (const FSummand& s : r.f_summands) {
    ojson covered = ojson::array();
    for (long d : s.covered_degrees) covered.push_back(d);
    summands.push_back({{"class", s.class_index}, {"mu_g", s.mu_g}, {"covered", covered}});
  }
  doc["f_summands"] = summands;

  ojson betti = ojson::array();
  for (std::uint64_t b : r.betti) betti.push_back(b);
  doc["betti"] = betti;
  doc["sh_plus"] = table_json(r.sh_plus);

  ojson checks = ojson::array();
  for (const CheckResult& c : r.checks) {
    ojson check = {{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) check["detail"] = c.detail;
    checks.push_back(check);
  }
  doc["checks"] = checks;
  doc["version"] = "1";
  return doc;
}

void expect(bool cond, const std::string& message) {
  if (!cond) throw ParseError(0, "report schema", "report schema violation: " + message);
}

}  // namespace

std::string emit_report(const McKayReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report_json(report).dump(2) + "\n";

  std::ostringstream out;
  out << "group: order " << report.group_order << ", n = " << report.n << ", "
      << report.class_count << " conjugacy classes\n";
  out << "validation: in_sl=" << (report.validation.in_sl ? "yes" : "no")
      << " isolated=" << (report.validation.isolated ? "yes" : "no")
      << " small=" << (report.validation.small ? "yes" : "no") << "\n";
  for (const std::string& note : report.validation.notes) out << "  note: " << note << "\n";
  if (!report.scope_warning.empty()) out << "warning: " << report.scope_warning << "\n";
  out << "age census:";
  for (const auto& [age, count] : report.age_census) out << " " << age << ":" << count;
  out << "\nbetti (H^0, H^2, ...):";
  for (std::uint64_t b : report.betti) out << " " << b;
  out << "\neuler characteristic: " << report.euler << "\n";
  out << "obstructed: " << (report.obstructed ? "yes" : "no");
  if (report.obstructed) out << " (" << report.obstruction_reason << ")";
  out << "\n";
  if (report.floer_enabled) {
    out << "orbit catalog to slope " << rat_string(report.slope) << ": " << report.catalog.size()
        << " Morse-Bott families\n";
    out << "SH+ ranks:";
    for (const auto& [deg, rank] : report.sh_plus.ranks)
      if (rank != 0) out << " [" << deg << "]:" << rank;
    out << "\nF-summands:";
    for (const FSummand& s : report.f_summands)
      out << " C" << s.class_index << "@" << s.mu_g;
    out << "\n";
  }
  out << "checks: " << (report.checks_pass() ? "all pass" : "FAILURES") << "\n";
  for (const CheckResult& c : report.checks)
    out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << "\n";
  return out.str();
}

std::string emit_report(const McKayReport& report, const std::string& format_name) {
  if (format_name == "json") return emit_report(report, ReportFormat::Json);
  if (format_name == "text") return emit_report(report, ReportFormat::Text);
  fail(ErrorKind::UnsupportedFormat, "unsupported report format '" + format_name +
                                         "' (expected json or text)");
}

void validate_report_json(const std::string& json_text) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(static_cast<std::size_t>(e.byte), "JSON", e.what());
  }
  const char* keys[] = {"group",      "validation", "classes", "orbits", "pages",
                        "f_summands", "betti",      "sh_plus", "checks", "version"};
  for (const char* key : keys) expect(doc.contains(key), std::string("missing key ") + key);
  expect(doc["betti"].is_array(), "betti must be an array");
  expect(doc["version"].is_string(), "version must be a string");
  for (const auto& cls : doc["classes"]) {
    expect(cls.contains("age") && cls.contains("spectrum"), "class entry incomplete");
    for (const auto& entry : cls["spectrum"]) {
      expect(entry.contains("q") && entry.contains("mult"), "spectrum entry incomplete");
      parse_rational(entry["q"].get<std::string>());  // throws if malformed
    }
  }
  for (const auto& [deg, rank] : doc["sh_plus"].items()) {
    expect(!deg.empty(), "sh_plus degree key empty");
    (void)std::stol(deg);
    expect(rank.is_number_integer(), "sh_plus ranks must be integers");
  }
}

HamiltonianProfile profile_for_group(const MatrixGroup& group, const GroupSpec& spec,
                                     const Rational& horizon) {
  std::vector<MorseBottOrbit> catalog = orbit_catalog(group, horizon, IsotropyMode::None);
  std::vector<Rational> periods;
  for (const MorseBottOrbit& orbit : catalog) periods.push_back(orbit.period);
  std::sort(periods.begin(), periods.end());
  periods.erase(std::unique(periods.begin(), periods.end()), periods.end());

  Rational final_slope;
  if (spec.has_profile) {
    final_slope = spec.profile_final_slope_turns;
  } else {
    // just past the horizon, off the period lattice (2 pi/|G|) Z
    final_slope = horizon + Rational(1, 2 * static_cast<std::int64_t>(group.size()));
  }
  return make_standard_profile(periods, final_slope, group.size());
}

}  // namespace mckay
