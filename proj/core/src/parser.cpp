#include <cctype>
#include <cstdlib>
#include <nlohmann/json.hpp>

#include "mckay/io.hpp"

namespace mckay {

namespace {

// Recursive-descent parser for the entry grammar. Single pass over the
// bytes; positions are byte offsets into the entry string.
class EntryParser {
public:
  EntryParser(const std::string& text, std::int64_t order) : text_(text), order_(order) {}

  Cyclotomic parse() {
    Cyclotomic value = expr();
    skip_ws();
    if (pos_ != text_.size()) throw_expected("end of input");
    return value;
  }

private:
  Cyclotomic expr() {
    Cyclotomic acc = term();
    for (;;) {
      skip_ws();
      if (consume('+')) {
        acc += term();
      } else if (consume_minus()) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Cyclotomic term() {
    Cyclotomic acc = atom();
    for (;;) {
      skip_ws();
      if (consume('*'))
        acc *= atom();
      else
        return acc;
    }
  }

  Cyclotomic atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw_expected("rational, 'z' or '('");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Cyclotomic inner = expr();
      skip_ws();
      if (!consume(')')) throw_expected("')'");
      return inner;
    }
    if (c == 'z') {
      ++pos_;
      std::int64_t power = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        power = integer();
      }
      return Cyclotomic::root_of_unity(order_, power);
    }
    return Cyclotomic::rational(rational(), order_);
  }

  Rational rational() {
    BigInt num = BigInt(integer());
    skip_ws();
    if (consume('/')) {
      std::int64_t den = integer();
      if (den == 0) throw_expected("nonzero denominator");
      return Rational(num, BigInt(den));
    }
    return Rational(num);
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || is_unicode_minus())) {
      negative = true;
      pos_ += text_[pos_] == '-' ? 1 : 3;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw_expected("integer");
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value < 0) throw ParseError(start, "integer", "integer literal overflows");
      ++pos_;
    }
    return negative ? -value : value;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool is_unicode_minus() const {
    // U+2212 in UTF-8
    return pos_ + 2 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xE2 &&
           static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
           static_cast<unsigned char>(text_[pos_ + 2]) == 0x92;
  }

  bool consume_minus() {
    if (consume('-')) return true;
    if (is_unicode_minus()) {
      pos_ += 3;
      return true;
    }
    return false;
  }

  [[noreturn]] void throw_expected(const std::string& expected) {
    throw ParseError(pos_, expected,
                     "parse error at position " + std::to_string(pos_) + ": expected " +
                         expected);
  }

  const std::string& text_;
  std::int64_t order_;
  std::size_t pos_ = 0;
};

std::string coeff_term(const Rational& c, std::size_t power, bool leading) {
  std::string sign;
  Rational a = c;
  if (c < 0) {
    sign = leading ? "-" : " - ";
    a = -c;
  } else {
    sign = leading ? "" : " + ";
  }
  std::string mag;
  if (power == 0) {
    mag = rat_num(a).str();
    if (rat_den(a) != 1) mag += "/" + rat_den(a).str();
  } else {
    std::string z = power == 1 ? "z" : ("z^" + std::to_string(power));
    if (a == 1 && !(leading && c < 0)) {
      // a bare "-z" is not grammatical at the head of an expression
      mag = z;
    } else {
      mag = rat_num(a).str();
      if (rat_den(a) != 1) mag += "/" + rat_den(a).str();
      mag += "*" + z;
    }
  }
  return sign + mag;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError(0, "rational 'a/b'", "cannot parse rational '" + text + "'");
  }
}

Cyclotomic parse_entry(const std::string& text, std::int64_t order) {
  return EntryParser(text, order).parse();
}

std::string print_entry(const Cyclotomic& value) {
  const std::vector<Rational>& c = value.coeffs();
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out += coeff_term(c[i], i, out.empty());
  }
  return out.empty() ? "0" : out;
}

namespace {

using nlohmann::json;

[[noreturn]] void spec_error(const std::string& message) {
  throw ParseError(0, "group spec", message);
}

}  // namespace

GroupSpec parse_group_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(static_cast<std::size_t>(e.byte), "JSON",
                     std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) spec_error("group spec must be a JSON object");

  GroupSpec spec;
  if (doc.contains("builtin")) {
    if (!doc["builtin"].is_string()) spec_error("'builtin' must be a string");
    spec = builtin(doc["builtin"].get<std::string>());
  } else if (doc.contains("lens")) {
    const json& lens = doc["lens"];
    if (!lens.is_object() || !lens.contains("m") || !lens.contains("weights"))
      spec_error("'lens' needs integer 'm' and a 'weights' array");
    spec.kind = GroupSpec::Kind::Lens;
    spec.lens_m = lens["m"].get<std::int64_t>();
    if (spec.lens_m < 1) spec_error("lens 'm' must be positive");
    for (const json& w : lens["weights"]) spec.lens_weights.push_back(w.get<std::int64_t>());
    if (spec.lens_weights.empty()) spec_error("lens 'weights' must be nonempty");
    spec.n = static_cast<int>(spec.lens_weights.size());
    spec.cyclotomic_order = spec.lens_m;
  } else if (doc.contains("generators")) {
    spec.kind = GroupSpec::Kind::Explicit;
    if (!doc.contains("n") || !doc.contains("cyclotomic_order"))
      spec_error("explicit spec needs 'n', 'cyclotomic_order' and 'generators'");
    spec.n = doc["n"].get<int>();
    spec.cyclotomic_order = doc["cyclotomic_order"].get<std::int64_t>();
    if (spec.n < 1) spec_error("'n' must be positive");
    if (spec.cyclotomic_order < 1) spec_error("'cyclotomic_order' must be positive");
    for (const json& gen : doc["generators"]) {
      std::vector<std::vector<std::string>> rows;
      if (!gen.is_array() || static_cast<int>(gen.size()) != spec.n)
        spec_error("each generator must be an n x n matrix of entry strings");
      for (const json& row : gen) {
        if (!row.is_array() || static_cast<int>(row.size()) != spec.n)
          spec_error("each generator must be an n x n matrix of entry strings");
        std::vector<std::string> entries;
        for (const json& e : row) {
          if (!e.is_string()) spec_error("matrix entries must be expression strings");
          entries.push_back(e.get<std::string>());
        }
        rows.push_back(std::move(entries));
      }
      spec.generator_entries.push_back(std::move(rows));
    }
  } else {
    spec_error("group spec must contain 'builtin', 'lens' or 'generators'");
  }

  if (doc.contains("profile")) {
    const json& prof = doc["profile"];
    if (!prof.is_object() || !prof.contains("final_slope_turns"))
      spec_error("'profile' needs 'final_slope_turns'");
    spec.has_profile = true;
    spec.profile_final_slope_turns = parse_rational(prof["final_slope_turns"].get<std::string>());
  }
  return spec;
}

std::string print_group_spec(const GroupSpec& spec) {
  nlohmann::ordered_json doc;
  switch (spec.kind) {
    case GroupSpec::Kind::Builtin:
      doc["builtin"] = spec.builtin_name;
      break;
    case GroupSpec::Kind::Lens:
      doc["lens"] = {{"m", spec.lens_m}, {"weights", spec.lens_weights}};
      break;
    case GroupSpec::Kind::Explicit: {
      doc["n"] = spec.n;
      doc["cyclotomic_order"] = spec.cyclotomic_order;
      nlohmann::ordered_json gens = nlohmann::ordered_json::array();
      for (const auto& gen : spec.generator_entries) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : gen) rows.push_back(row);
        gens.push_back(rows);
      }
      doc["generators"] = gens;
      break;
    }
  }
  if (spec.has_profile)
    doc["profile"] = {{"final_slope_turns", rat_string(spec.profile_final_slope_turns)}};
  return doc.dump(2) + "\n";
}

std::vector<CycMatrix> spec_generators(const GroupSpec& spec) {
  std::vector<CycMatrix> gens;
  switch (spec.kind) {
    case GroupSpec::Kind::Builtin:
      return spec_generators(builtin(spec.builtin_name));
    case GroupSpec::Kind::Lens: {
      CycMatrix g(spec.n, spec.lens_m);
      for (int i = 0; i < spec.n; ++i)
        g.at(i, i) = Cyclotomic::root_of_unity(spec.lens_m,
                                               spec.lens_weights[static_cast<std::size_t>(i)]);
      gens.push_back(std::move(g));
      return gens;
    }
    case GroupSpec::Kind::Explicit: {
      for (const auto& entries : spec.generator_entries) {
        CycMatrix g(spec.n, spec.cyclotomic_order);
        for (int i = 0; i < spec.n; ++i)
          for (int j = 0; j < spec.n; ++j)
            g.at(i, j) = parse_entry(entries[static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(j)],
                                     spec.cyclotomic_order);
        gens.push_back(std::move(g));
      }
      return gens;
    }
  }
  fail(ErrorKind::Internal, "unknown spec kind");
}

MatrixGroup build_group(const GroupSpec& spec, std::size_t cap) {
  std::vector<CycMatrix> gens = spec_generators(spec);
  if (gens.empty()) gens.push_back(CycMatrix::identity(spec.n, spec.cyclotomic_order));
  return MatrixGroup::close(std::move(gens), cap);
}

std::size_t closure_cap_from_env() {
  const char* env = std::getenv("MCKAY_CAP");
  if (!env || !*env) return kDefaultClosureCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefaultClosureCap;
  return static_cast<std::size_t>(v);
}

}  // namespace mckay
