#include "manna/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "manna/errors.hpp"

namespace manna {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

size_t line_of_offset(const std::string& text, size_t offset) {
  size_t line = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ":" +
                     std::to_string(line_of_offset(text, e.byte)) +
                     ": JSON parse error: " + e.what());
  }
}

Rat rat_of(const json& v, const std::string& origin) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  throw InputError(origin + ": rationals must be integers or \"p/q\" strings");
}

json rat_json(const Rat& r) { return json(r.str()); }

json vec_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& r : v) out.push_back(rat_json(r));
  return out;
}

json mat_json(const RatMat& m) {
  json out = json::array();
  for (const RatVec& row : m) out.push_back(vec_json(row));
  return out;
}

RatVec vec_of(const json& v, const std::string& origin) {
  if (!v.is_array()) throw InputError(origin + ": expected an array");
  RatVec out;
  for (const json& x : v) out.push_back(rat_of(x, origin));
  return out;
}

RatMat mat_of(const json& v, const std::string& origin) {
  if (!v.is_array()) throw InputError(origin + ": expected an array of rows");
  RatMat out;
  for (const json& row : v) out.push_back(vec_of(row, origin));
  return out;
}

std::vector<std::string> names_of(const json& v, const std::string& origin,
                                  const char* what) {
  if (!v.is_array())
    throw InputError(origin + ": '" + what + "' must be an array of names");
  std::vector<std::string> out;
  for (const json& x : v) {
    if (!x.is_string())
      throw InputError(origin + ": '" + what + "' entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

Problem problem_from_json(const std::string& text, const std::string& origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object() || !doc.contains("utilities"))
    throw InputError(origin + ": expected an object with a 'utilities' matrix");
  Problem p;
  p.u = mat_of(doc.at("utilities"), origin);
  if (doc.contains("agents"))
    p.agents = names_of(doc.at("agents"), origin, "agents");
  else
    for (size_t i = 0; i < p.u.size(); ++i)
      p.agents.push_back(std::to_string(i + 1));
  if (doc.contains("items")) {
    p.items = names_of(doc.at("items"), origin, "items");
  } else {
    const size_t m = p.u.empty() ? 0 : p.u[0].size();
    for (size_t a = 0; a < m; ++a)
      p.items.push_back(std::string(1, static_cast<char>('a' + a % 26)));
  }
  try {
    p.validate();
    require_no_null_columns(p);
  } catch (const InputError& e) {
    throw InputError(origin + ": " + e.what());
  }
  return p;
}

Problem load_problem(const std::string& path) {
  return problem_from_json(read_file(path), path);
}

std::string problem_to_json(const Problem& p) {
  json doc;
  doc["agents"] = p.agents;
  doc["items"] = p.items;
  doc["utilities"] = mat_json(p.u);
  return doc.dump(2) + "\n";
}

CompetitiveDivision division_from_json(const std::string& text,
                                       const Problem& p,
                                       const std::string& origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object() || !doc.contains("allocation") ||
      !doc.contains("prices") || !doc.contains("budget"))
    throw InputError(origin +
                     ": expected 'allocation', 'prices' and 'budget' fields");
  CompetitiveDivision d;
  d.allocation = mat_of(doc.at("allocation"), origin);
  d.prices = vec_of(doc.at("prices"), origin);
  const json& b = doc.at("budget");
  if (!b.is_number_integer() ||
      (b.get<int>() != -1 && b.get<int>() != 0 && b.get<int>() != 1))
    throw InputError(origin + ": 'budget' must be -1, 0 or 1");
  d.budget = static_cast<Budget>(b.get<int>());
  try {
    validate_allocation(p, d.allocation);
    if (d.prices.size() != p.num_items())
      throw InputError("price vector size mismatch");
    d.profile = utility_profile(p, d.allocation);
  } catch (const InputError& e) {
    throw InputError(origin + ": " + e.what());
  }
  if (doc.contains("profile")) {
    const RatVec declared = vec_of(doc.at("profile"), origin);
    if (declared != d.profile)
      throw InputError(origin +
                       ": declared profile does not match the allocation");
  }
  return d;
}

CompetitiveDivision load_division(const std::string& path, const Problem& p) {
  return division_from_json(read_file(path), p, path);
}

std::string division_to_json(const Problem& p, const CompetitiveDivision& d) {
  json doc;
  doc["allocation"] = mat_json(d.allocation);
  doc["prices"] = vec_json(d.prices);
  doc["budget"] = budget_value(d.budget);
  doc["profile"] = vec_json(d.profile);
  (void)p;
  return doc.dump(2) + "\n";
}

std::string classification_to_json(const Classification& cls) {
  json doc;
  doc["kind"] = to_string(cls.kind);
  doc["value"] = cls.lpValue ? json(cls.lpValue->str()) : json(nullptr);
  return doc.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& report) {
  json checks, witnesses;
  for (const auto& [name, r] : report.entries()) {
    checks[name] = r->pass;
    if (!r->pass) witnesses[name] = r->witness;
  }
  json doc;
  doc["checks"] = checks;
  doc["witnesses"] = witnesses;
  doc["pass"] = report.all_pass();
  return doc.dump(2) + "\n";
}

std::string profile_to_string(const UtilityProfile& profile) {
  std::string out;
  for (size_t i = 0; i < profile.size(); ++i) {
    if (i) out += " ";
    out += profile[i].str();
  }
  return out;
}

}  // namespace manna
