#include "scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace torschain::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

void allow_only(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) fail(path, "unknown field \"" + k + "\"");
  }
}

Rational rational_field(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (!v.is_string()) fail(path, "expected a rational written as \"a/b\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

std::vector<std::string> names_field(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected a list of indecomposable names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a name");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::vector<int> ints_field(const json& v, const std::string& path, int expected) {
  if (!v.is_array() || static_cast<int>(v.size()) != expected) {
    fail(path, "expected a list of " + std::to_string(expected) + " integers");
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) fail(path + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(v[i].get<int>());
  }
  return out;
}

template <typename F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    fail(path, msg);
  }
}

}  // namespace

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    auto a = cur.find_first_not_of(' ');
    auto b = cur.find_last_not_of(' ');
    out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
  }
  return out;
}

std::pair<int, std::string> parse_quiver(const std::string& text) {
  if (text.size() < 2 || text[0] != 'A') throw InputError("quiver must look like \"A3:>>\"");
  const auto colon = text.find(':');
  const std::string digits = text.substr(1, colon == std::string::npos ? std::string::npos : colon - 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("quiver must look like \"A3:>>\"");
  }
  const int n = std::stoi(digits);
  std::string orientation = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (colon == std::string::npos && n > 1) orientation = std::string(static_cast<std::size_t>(n - 1), '>');
  return {n, orientation};
}

DimVector parse_dims(const std::string& text, int vertices) {
  DimVector out;
  for (const auto& part : split_list(text)) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bound \"" + text + "\" must be a comma-separated list of non-negative integers");
    }
    out.push_back(std::stoi(part));
  }
  if (static_cast<int>(out.size()) != vertices) {
    throw InputError("bound \"" + text + "\" needs " + std::to_string(vertices) + " entries");
  }
  return out;
}

StepChain Scenario::chain(const std::string& name) const {
  if (auto it = chains.find(name); it != chains.end()) return it->second;
  if (name == "trivial") return trivial_chain(*universe);
  if (name.rfind("mgs:", 0) == 0) {
    const std::string digits = name.substr(4);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("chain \"" + name + "\": expected mgs:<k>");
    }
    const auto all = enumerate_mgs(enumerate_lattice(*universe), *universe);
    const auto k = std::stoul(digits);
    if (k < 1 || k > all.size()) {
      throw InputError("chain \"" + name + "\": there are " + std::to_string(all.size()) + " maximal green sequences");
    }
    return mgs_to_chain(all[k - 1], *universe);
  }
  throw InputError("unknown chain \"" + name + "\"");
}

TorsionClass Scenario::torsion_class(const std::string& name) const {
  if (auto it = classes.find(name); it != classes.end()) return it->second;
  throw InputError("unknown class \"" + name + "\"");
}

const StabilityForm& Scenario::form(const std::string& name) const {
  if (auto it = forms.find(name); it != forms.end()) return it->second;
  throw InputError("unknown form \"" + name + "\"");
}

DimVector Scenario::bound(const std::string& text) const {
  if (auto it = bounds.find(text); it != bounds.end()) return it->second;
  return parse_dims(text, universe->table().quiver().vertex_count());
}

namespace {

StepChain parse_chain(const json& v, const Scenario& s, const std::string& path) {
  const Universe& u = *s.universe;
  if (v.is_array()) {
    std::vector<ChainSpec> spec;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string pp = path + "[" + std::to_string(i) + "]";
      const json& piece = v[i];
      if (!piece.is_object()) fail(pp, "expected an object with \"end\" and a class");
      allow_only(piece, {"end", "class", "generators", "torsion_class"}, pp);
      ChainSpec cs;
      cs.end = rational_field(require(piece, "end", pp), pp + ".end");
      const int given = static_cast<int>(piece.contains("class")) + static_cast<int>(piece.contains("generators")) +
                        static_cast<int>(piece.contains("torsion_class"));
      if (given != 1) fail(pp, "give exactly one of \"class\", \"generators\", \"torsion_class\"");
      if (piece.contains("class")) {
        cs.members = with_path(pp + ".class", [&] { return u.parse_members(names_field(piece["class"], pp + ".class")); });
      } else if (piece.contains("generators")) {
        cs.members = with_path(pp + ".generators",
                               [&] { return u.parse_members(names_field(piece["generators"], pp + ".generators")); });
        cs.generators = true;
      } else {
        const json& ref = piece["torsion_class"];
        if (!ref.is_string()) fail(pp + ".torsion_class", "expected a class name");
        cs.members = with_path(pp + ".torsion_class", [&] { return s.torsion_class(ref.get<std::string>()); });
      }
      spec.push_back(cs);
    }
    return with_path(path, [&] { return make_step_chain(spec, u); });
  }
  if (!v.is_object()) fail(path, "expected a list of pieces or a constructor object");
  if (v.contains("torsion_pair")) {
    allow_only(v, {"torsion_pair", "r1", "r2"}, path);
    const json& t = v["torsion_pair"];
    TorsionClass cls;
    if (t.is_string()) {
      cls = with_path(path + ".torsion_pair", [&] { return s.torsion_class(t.get<std::string>()); });
    } else {
      cls = with_path(path + ".torsion_pair", [&] {
        return tors_closure(u.parse_members(names_field(t, path + ".torsion_pair")), u);
      });
    }
    const Rational r1 = v.contains("r1") ? rational_field(v["r1"], path + ".r1") : Rational(1, 3);
    const Rational r2 = v.contains("r2") ? rational_field(v["r2"], path + ".r2") : Rational(2, 3);
    return with_path(path, [&] { return chain_from_torsion_pair(cls, r1, r2, u); });
  }
  if (v.contains("stability")) {
    allow_only(v, {"stability"}, path);
    const json& f = v["stability"];
    if (!f.is_string()) fail(path + ".stability", "expected a form name");
    return with_path(path, [&] { return chain_from_stability(s.form(f.get<std::string>()), u); });
  }
  fail(path, "expected \"torsion_pair\" or \"stability\"");
}

}  // namespace

Scenario parse_scenario_text(std::string_view text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": not valid JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw InputError(origin + ": top level must be an object");
  allow_only(doc, {"quiver", "p", "classes", "forms", "chains", "bounds", "guards", "description"}, origin);

  Scenario s;
  const json& q = require(doc, "quiver", origin);
  if (!q.is_string()) fail("quiver", "expected a string like \"A3:>>\"");
  s.quiver = q.get<std::string>();
  const json& p = require(doc, "p", origin);
  if (!p.is_number_integer()) fail("p", "expected an integer prime");
  s.p = p.get<int>();
  const auto [n, orientation] = with_path("quiver", [&] { return parse_quiver(s.quiver); });
  s.universe = with_path("quiver", [&] {
    if (!is_supported_prime(s.p)) fail("p", "supported primes are 2, 3, 5, 7");
    return std::make_unique<Universe>(IndecTable::type_a(n, orientation, s.p));
  });
  const Universe& u = *s.universe;

  if (doc.contains("guards")) {
    const json& g = doc["guards"];
    if (!g.is_object()) fail("guards", "expected an object");
    allow_only(g, {"max_total"}, "guards");
    if (g.contains("max_total")) {
      if (!g["max_total"].is_number_integer() || g["max_total"].get<int>() < 1) {
        fail("guards.max_total", "expected a positive integer");
      }
      s.guards.max_total = g["max_total"].get<int>();
    }
  }
  if (doc.contains("bounds")) {
    if (!doc["bounds"].is_object()) fail("bounds", "expected an object");
    for (const auto& [name, v] : doc["bounds"].items()) {
      const std::vector<int> b = ints_field(v, "bounds." + name, n);
      for (int x : b) {
        if (x < 0) fail("bounds." + name, "entries must be non-negative");
      }
      s.bounds[name] = b;
    }
  }
  if (doc.contains("classes")) {
    if (!doc["classes"].is_object()) fail("classes", "expected an object");
    for (const auto& [name, v] : doc["classes"].items()) {
      const std::string path = "classes." + name;
      s.classes[name] = with_path(path, [&] { return tors_closure(u.parse_members(names_field(v, path)), u); });
    }
  }
  if (doc.contains("forms")) {
    if (!doc["forms"].is_object()) fail("forms", "expected an object");
    for (const auto& [name, v] : doc["forms"].items()) {
      const std::string path = "forms." + name;
      if (!v.is_object()) fail(path, "expected {\"theta\": [...], \"rho\": [...]}");
      allow_only(v, {"theta", "rho"}, path);
      auto theta = ints_field(require(v, "theta", path), path + ".theta", n);
      auto rho = ints_field(require(v, "rho", path), path + ".rho", n);
      s.forms.emplace(name, with_path(path, [&] { return make_form(theta, rho, u); }));
    }
  }
  if (doc.contains("chains")) {
    if (!doc["chains"].is_object()) fail("chains", "expected an object");
    for (const auto& [name, v] : doc["chains"].items()) {
      if (name == "trivial" || name.rfind("mgs:", 0) == 0) fail("chains." + name, "name is reserved");
      s.chains.emplace(name, parse_chain(v, s, "chains." + name));
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path);
}

}  // namespace torschain::cli
