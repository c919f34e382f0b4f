#include "waring/certificate_io.hpp"

#include <cctype>
#include <limits>
#include <set>

#include <json.hpp>

#include "waring/error.hpp"

namespace waring {

namespace {

using Json = nlohmann::ordered_json;

const char* kind_name(BoundKind kind) { return kind == BoundKind::lower ? "lower" : "upper"; }

Json exponents_json(const Monomial& m) {
  Json arr = Json::array();
  for (unsigned e : m.exponents()) arr.push_back(e);
  return arr;
}

// Strict field access: every lookup names the field in the error.
const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object()) throw ParseError(std::string("expected an object holding '") + name + "'");
  const auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

void expect_keys(const Json& obj, std::initializer_list<const char*> keys, const char* what) {
  if (!obj.is_object()) throw ParseError(std::string(what) + ": expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ParseError(std::string(what) + ": unknown field '" + key + "'");
  }
  if (obj.size() != allowed.size()) throw ParseError(std::string(what) + ": missing fields");
}

unsigned get_unsigned(const Json& v, const char* what) {
  if (!v.is_number_unsigned()) throw ParseError(std::string(what) + ": expected a non-negative integer");
  const auto x = v.get<std::uint64_t>();
  if (x > std::numeric_limits<unsigned>::max()) throw ParseError(std::string(what) + ": value too large");
  return static_cast<unsigned>(x);
}

std::string get_string(const Json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + ": expected a string");
  return v.get<std::string>();
}

const Json& get_array(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + ": expected an array");
  return v;
}

Monomial get_exponents(const Json& v, std::size_t count, const char* what) {
  get_array(v, what);
  if (v.size() != count) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(count) + " exponents");
  }
  std::vector<unsigned> exps;
  for (const auto& e : v) exps.push_back(get_unsigned(e, what));
  return Monomial(std::move(exps));
}

RingElement get_element(const Tower& tower, const Json& v, const char* what) {
  const std::string text = get_string(v, what);
  try {
    return RingElement::parse(tower, text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string serialize(const Certificate& cert) {
  Json j;
  j["format"] = "waring-certificate";
  j["formatVersion"] = kCertificateFormatVersion;
  j["variables"] = *cert.variables;
  j["k"] = cert.k;
  j["target"] = exponents_json(cert.target);
  Json tower = Json::array();
  for (std::size_t i = 0; i < cert.tower->generator_count(); ++i) {
    Json level;
    level["name"] = cert.tower->names()[i];
    level["degree"] = cert.tower->degrees()[i];
    Json lower = Json::array();
    for (const auto& c : cert.tower->defining_lower(i)) lower.push_back(c.to_string());
    level["definingPoly"] = std::move(lower);
    tower.push_back(std::move(level));
  }
  j["tower"] = std::move(tower);
  Json summands = Json::array();
  for (const auto& s : cert.summands) {
    Json entry;
    entry["scalar"] = s.scalar.to_string();
    Json form = Json::array();
    for (const auto& [m, c] : s.form.terms()) {
      Json term;
      term["exponents"] = exponents_json(m);
      term["coefficient"] = c.to_string();
      form.push_back(std::move(term));
    }
    entry["form"] = std::move(form);
    summands.push_back(std::move(entry));
  }
  j["summands"] = std::move(summands);
  j["verified"] = cert.verified;
  Json provenance = Json::array();
  for (const auto& r : cert.provenance) {
    Json rec;
    rec["rule"] = r.rule;
    rec["statement"] = r.statement;
    rec["kind"] = kind_name(r.kind);
    rec["bound"] = r.bound;
    provenance.push_back(std::move(rec));
  }
  j["provenance"] = std::move(provenance);
  return j.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  expect_keys(j, {"format", "formatVersion", "variables", "k", "target", "tower", "summands", "verified",
                  "provenance"},
              "certificate");
  if (get_string(field(j, "format"), "format") != "waring-certificate") {
    throw ParseError("format: not a waring certificate");
  }
  if (get_unsigned(field(j, "formatVersion"), "formatVersion") !=
      static_cast<unsigned>(kCertificateFormatVersion)) {
    throw ParseError("formatVersion: unsupported version");
  }

  std::vector<std::string> names;
  for (const auto& v : get_array(field(j, "variables"), "variables")) names.push_back(get_string(v, "variables"));
  Variables vars;
  try {
    vars = make_variables(std::move(names));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("variables: ") + e.what());
  }

  Certificate cert;
  cert.variables = vars;
  cert.k = get_unsigned(field(j, "k"), "k");
  cert.target = get_exponents(field(j, "target"), vars->size(), "target");

  Tower tower = ExtensionTower::rationals();
  for (const auto& level : get_array(field(j, "tower"), "tower")) {
    expect_keys(level, {"name", "degree", "definingPoly"}, "tower level");
    const std::string name = get_string(field(level, "name"), "tower name");
    const unsigned degree = get_unsigned(field(level, "degree"), "tower degree");
    const Json& lower = get_array(field(level, "definingPoly"), "definingPoly");
    if (lower.size() != degree) throw ParseError("tower level '" + name + "': definingPoly length differs from degree");
    std::vector<RingElement> defining;
    for (const auto& c : lower) defining.push_back(get_element(tower, c, "definingPoly"));
    defining.emplace_back(tower, 1);
    try {
      tower = ExtensionTower::extend(tower, name, defining);
    } catch (const InvalidArgument& e) {
      throw ParseError("tower level '" + name + "': " + e.what());
    }
  }
  cert.tower = tower;

  for (const auto& entry : get_array(field(j, "summands"), "summands")) {
    expect_keys(entry, {"scalar", "form"}, "summand");
    RingElement scalar = get_element(tower, field(entry, "scalar"), "scalar");
    Polynomial form(vars, tower);
    const Monomial* previous = nullptr;
    Monomial last;
    for (const auto& term : get_array(field(entry, "form"), "form")) {
      expect_keys(term, {"exponents", "coefficient"}, "form term");
      Monomial m = get_exponents(field(term, "exponents"), vars->size(), "form exponents");
      RingElement c = get_element(tower, field(term, "coefficient"), "form coefficient");
      if (c.is_zero()) throw ParseError("form: zero coefficient");
      if (previous && !grlex_greater(*previous, m)) throw ParseError("form: terms not in strict grlex order");
      form.add_term(m, c);
      last = std::move(m);
      previous = &last;
    }
    cert.summands.push_back({std::move(scalar), std::move(form)});
  }

  const Json& verified = field(j, "verified");
  if (!verified.is_boolean()) throw ParseError("verified: expected a boolean");
  cert.verified = verified.get<bool>();

  for (const auto& rec : get_array(field(j, "provenance"), "provenance")) {
    expect_keys(rec, {"rule", "statement", "kind", "bound"}, "provenance record");
    RuleRecord r;
    r.rule = get_string(field(rec, "rule"), "rule");
    r.statement = get_string(field(rec, "statement"), "statement");
    const std::string kind = get_string(field(rec, "kind"), "kind");
    if (kind == "lower") {
      r.kind = BoundKind::lower;
    } else if (kind == "upper") {
      r.kind = BoundKind::upper;
    } else {
      throw ParseError("kind: expected \"lower\" or \"upper\"");
    }
    r.bound = get_unsigned(field(rec, "bound"), "bound");
    cert.provenance.push_back(std::move(r));
  }
  return cert;
}

Monomial parse_monomial(std::string_view text) {
  auto fail = [&](const std::string& why) -> Monomial {
    throw ParseError("monomial '" + std::string(text) + "': " + why);
  };
  auto read_number = [&](std::string_view s) -> unsigned {
    if (s.empty()) fail("missing number");
    unsigned long long v = 0;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        fail(ch == '-' ? "negative exponent" : "unexpected character '" + std::string(1, ch) + "'");
      }
      v = v * 10 + static_cast<unsigned>(ch - '0');
      if (v > 100000) fail("number too large");
    }
    return static_cast<unsigned>(v);
  };

  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return fail("empty");
  if (text[first] != 'x') {
    std::vector<unsigned> exps;
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      const auto b = tok.find_first_not_of(" \t");
      const auto e = tok.find_last_not_of(" \t");
      exps.push_back(read_number(b == std::string_view::npos ? std::string_view{} : tok.substr(b, e - b + 1)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return Monomial(std::move(exps));
  }

  std::vector<unsigned> exps;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ' ' || ch == '\t' || ch == '*') {
      ++pos;
      continue;
    }
    if (ch != 'x') fail("expected a variable x<i>");
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    const unsigned index = read_number(text.substr(pos + 1, end - pos - 1));
    if (index > 1000) fail("variable index too large");
    unsigned e = 1;
    pos = end;
    if (pos < text.size() && text[pos] == '^') {
      end = ++pos;
      while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '*') ++end;
      e = read_number(text.substr(pos, end - pos));
      pos = end;
    } else if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '*') {
      fail("unexpected character '" + std::string(1, text[pos]) + "'");
    }
    if (exps.size() <= index) exps.resize(index + 1, 0);
    exps[index] += e;
    any = true;
  }
  if (!any) fail("no variables");
  return Monomial(std::move(exps));
}

}  // namespace waring
