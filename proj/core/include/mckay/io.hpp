#pragma once

#include <string>
#include <vector>

#include "mckay/filtration.hpp"
#include "mckay/mckay.hpp"

namespace mckay {

struct GroupSpec {
  enum class Kind { Explicit, Lens, Builtin };
  Kind kind = Kind::Explicit;

  // explicit
  int n = 0;
  std::int64_t cyclotomic_order = 1;
  std::vector<std::vector<std::vector<std::string>>> generator_entries;

  // lens: Z/m acting by diag(zeta_m^w) for the weight vector w
  std::int64_t lens_m = 0;
  std::vector<std::int64_t> lens_weights;

  // builtin
  std::string builtin_name;

  // optional filtration profile request (final slope in turns)
  bool has_profile = false;
  Rational profile_final_slope_turns;
};

// Matrix-entry expression grammar over zeta_N ("z"):
//   rational ::= int | int "/" int
//   atom     ::= rational | "z" | "z^" int | "(" expr ")"
//   term     ::= atom ("*" atom)*
//   expr     ::= term (("+"|"-") term)*
// Whitespace-insensitive; U+2212 is accepted for "-". Errors carry the
// offending byte offset and the expected-token set.
Cyclotomic parse_entry(const std::string& text, std::int64_t order);
std::string print_entry(const Cyclotomic& value);

// Group specification file: UTF-8 JSON, one of
//   {"n":2, "cyclotomic_order":4, "generators":[[["0","z"],["z","0"]]]}
//   {"lens":{"m":7, "weights":[1,2,4]}}
//   {"builtin":"cyclic_A1"}
// with an optional "profile": {"final_slope_turns":"13/4"}.
GroupSpec parse_group_spec(const std::string& json_text);
std::string print_group_spec(const GroupSpec& spec);  // canonical JSON

GroupSpec builtin(const std::string& name);
// Concrete names plus one-line descriptions of the parameterized families.
std::vector<std::pair<std::string, std::string>> builtin_catalog();

// Generator matrices of a spec (lens and builtin expand to explicit form).
std::vector<CycMatrix> spec_generators(const GroupSpec& spec);
MatrixGroup build_group(const GroupSpec& spec, std::size_t cap = kDefaultClosureCap);

// Closure cap from the MCKAY_CAP environment variable, else the default.
std::size_t closure_cap_from_env();

enum class PageKind { Sc, ScPlus, EscPlus };

struct DiagramColumn {
  std::string class_label;
  Rational period;
  std::vector<long> degrees;  // descending
};

struct Diagram {
  PageKind kind = PageKind::Sc;
  bool constants_column = false;
  std::vector<long> constants_degrees;  // descending even degrees of H*(Y)
  std::vector<DiagramColumn> columns;   // ordered by period
};

Diagram make_diagram(const McKayReport& report, PageKind kind);
std::string render_ascii(const Diagram& diagram);
std::string render_svg(const Diagram& diagram);

enum class ReportFormat { Json, Text };
std::string emit_report(const McKayReport& report, ReportFormat format);
std::string emit_report(const McKayReport& report, const std::string& format_name);

// Schema check for emitted JSON reports; throws ParseError on violations.
void validate_report_json(const std::string& json_text);

// Standard profile for a group: periods from the orbit catalog at the given
// slope horizon, final slope from the group file or a default avoiding the period
// lattice (2 pi/|G|) Z.
HamiltonianProfile profile_for_group(const MatrixGroup& group, const GroupSpec& spec,
                                     const Rational& horizon = Rational(3));

}  // namespace mckay
