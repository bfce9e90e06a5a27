#include "zgu/group_data.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace zgu {

namespace {

using nlohmann::json;

Cyclotomic parse_cyclotomic_literal(const json& j) {
  if (j.is_string()) return Cyclotomic(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Cyclotomic(static_cast<long>(j.get<long long>()));
  if (j.is_object()) {
    if (!j.contains("conductor") || !j.contains("coeffs"))
      throw SchemaError("cyclotomic literal needs 'conductor' and 'coeffs'");
    if (!j["conductor"].is_number_integer() || j["conductor"].get<long long>() < 1)
      throw SchemaError("cyclotomic literal conductor must be a positive integer");
    const long n = static_cast<long>(j["conductor"].get<long long>());
    if (!j["coeffs"].is_object()) throw SchemaError("cyclotomic literal coeffs must be an object");
    Cyclotomic acc(n, std::vector<Rational>(euler_phi(n), Rational(0)));
    for (const auto& [key, val] : j["coeffs"].items()) {
      long k;
      try {
        std::size_t pos = 0;
        k = std::stol(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw SchemaError("cyclotomic coefficient key is not an integer: '" + key + "'");
      }
      if (k < 0 || k >= n)
        throw SchemaError("cyclotomic coefficient exponent " + key + " outside [0, conductor)");
      Rational c = val.is_string() ? parse_rational(val.get<std::string>())
                                   : Rational(static_cast<long>(val.get<long long>()));
      acc = acc + c * root_power(n, k);
    }
    return acc;
  }
  throw SchemaError("unrecognized cyclotomic literal");
}

long require_positive_int(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw SchemaError(what + " must be a positive integer");
  return static_cast<long>(j.get<long long>());
}

}  // namespace

int CharacterTable::class_index(const std::string& name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == name) return static_cast<int>(i);
  return -1;
}

int CharacterTable::character_index(const std::string& name) const {
  for (std::size_t i = 0; i < characters.size(); ++i)
    if (characters[i].name == name) return static_cast<int>(i);
  return -1;
}

CharacterTable load_table(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("group document must be an object");
  for (const char* field : {"name", "order", "classes", "characters"})
    if (!doc.contains(field)) throw SchemaError(std::string("missing field '") + field + "'");

  CharacterTable table;
  if (!doc["name"].is_string()) throw SchemaError("'name' must be a string");
  table.group_name = doc["name"].get<std::string>();
  table.group_order = require_positive_int(doc["order"], "'order'");

  if (!doc["classes"].is_array() || doc["classes"].empty())
    throw SchemaError("'classes' must be a non-empty array");
  for (const auto& jc : doc["classes"]) {
    ConjClass c;
    if (!jc.contains("name") || !jc["name"].is_string())
      throw SchemaError("class entry needs a string 'name'");
    c.name = jc["name"].get<std::string>();
    if (!jc.contains("element_order") || !jc.contains("centralizer_order"))
      throw SchemaError("class '" + c.name + "' needs element_order and centralizer_order");
    c.element_order = require_positive_int(jc["element_order"], "element_order of " + c.name);
    c.centralizer_order =
        require_positive_int(jc["centralizer_order"], "centralizer_order of " + c.name);
    table.classes.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < table.classes.size(); ++i)
    for (std::size_t j = i + 1; j < table.classes.size(); ++j)
      if (table.classes[i].name == table.classes[j].name)
        throw SchemaError("duplicate class name '" + table.classes[i].name + "'");
  if (table.classes[0].element_order != 1)
    throw SchemaError("first class must be the identity class");

  // second pass: power maps reference class names
  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    const auto& jc = doc["classes"][i];
    if (!jc.contains("power_maps")) continue;
    if (!jc["power_maps"].is_object()) throw SchemaError("power_maps must be an object");
    for (const auto& [key, val] : jc["power_maps"].items()) {
      long p;
      try {
        p = std::stol(key);
      } catch (const std::exception&) {
        throw SchemaError("power map key is not an integer: '" + key + "'");
      }
      if (p < 2) throw SchemaError("power map key must be a prime >= 2");
      if (!val.is_string()) throw SchemaError("power map value must be a class name");
      int target = table.class_index(val.get<std::string>());
      if (target < 0)
        throw SchemaError("power map of '" + table.classes[i].name +
                          "' references unknown class '" + val.get<std::string>() + "'");
      table.classes[i].power_maps[p] = target;
    }
  }

  if (!doc["characters"].is_array()) throw SchemaError("'characters' must be an array");
  for (const auto& jch : doc["characters"]) {
    Character ch;
    if (!jch.contains("name") || !jch["name"].is_string())
      throw SchemaError("character entry needs a string 'name'");
    ch.name = jch["name"].get<std::string>();
    if (!jch.contains("values") || !jch["values"].is_array() ||
        jch["values"].size() != table.classes.size())
      throw SchemaError("character '" + ch.name + "' needs one value per class");
    for (const auto& jv : jch["values"]) ch.values.push_back(parse_cyclotomic_literal(jv));
    table.characters.push_back(std::move(ch));
  }

  if (doc.contains("permutation_generators")) {
    if (!doc["permutation_generators"].is_array())
      throw SchemaError("'permutation_generators' must be an array");
    for (const auto& jg : doc["permutation_generators"]) {
      if (!jg.is_array()) throw SchemaError("each permutation must be an array of cycles");
      std::vector<std::vector<long>> cycles;
      for (const auto& jcyc : jg) {
        if (!jcyc.is_array()) throw SchemaError("each cycle must be an array of points");
        std::vector<long> cyc;
        for (const auto& jp : jcyc) cyc.push_back(require_positive_int(jp, "cycle point"));
        cycles.push_back(std::move(cyc));
      }
      table.permutation_generators.push_back(std::move(cycles));
    }
  }
  return table;
}

CharacterTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_table(ss.str());
}

std::vector<std::string> validate(const CharacterTable& table) {
  std::vector<std::string> violations;
  auto flag = [&violations](const std::string& msg) { violations.push_back(msg); };

  const std::size_t k = table.classes.size();

  long identity_classes = 0;
  for (const auto& c : table.classes)
    if (c.element_order == 1) ++identity_classes;
  if (identity_classes != 1) flag("expected exactly one identity class, found " +
                                  std::to_string(identity_classes));

  long size_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = table.classes[i];
    if (table.group_order % c.centralizer_order != 0) {
      flag("class " + c.name + ": centralizer order " + std::to_string(c.centralizer_order) +
           " does not divide |G| = " + std::to_string(table.group_order));
      continue;
    }
    size_sum += table.class_size(static_cast<int>(i));
  }
  if (size_sum != table.group_order)
    flag("class sizes sum to " + std::to_string(size_sum) + ", expected |G| = " +
         std::to_string(table.group_order));

  if (table.characters.size() != k)
    flag("table has " + std::to_string(table.characters.size()) + " characters for " +
         std::to_string(k) + " classes");

  // degrees and the degree-square sum
  Rational degree_sum(0);
  for (const auto& ch : table.characters) {
    const Cyclotomic& deg = ch.values[0];
    if (!deg.is_rational() || !is_integral(deg.coeffs()[0]) || deg.coeffs()[0] <= 0) {
      flag("character " + ch.name + ": degree " + to_string(deg) +
           " is not a positive integer");
      continue;
    }
    degree_sum += deg.coeffs()[0] * deg.coeffs()[0];
  }
  if (degree_sum != Rational(table.group_order))
    flag("sum of squared degrees is " + to_string(degree_sum) + ", expected " +
         std::to_string(table.group_order));

  // character values must lie in Q(zeta_m) for m the class element order
  for (const auto& ch : table.characters) {
    for (std::size_t i = 0; i < k && i < ch.values.size(); ++i) {
      try {
        value_at_conductor(ch.values[i], table.classes[i].element_order);
      } catch (const NotInSubfieldError&) {
        flag("character " + ch.name + " at class " + table.classes[i].name +
             ": value " + to_string(ch.values[i]) + " is not in Q(zeta_" +
             std::to_string(table.classes[i].element_order) + ")");
      }
    }
  }

  // second orthogonality, diagonal: sum_chi |chi(C)|^2 = |C_G(C)|
  for (std::size_t i = 0; i < k; ++i) {
    Cyclotomic sum(0);
    bool usable = true;
    for (const auto& ch : table.characters) {
      if (ch.values.size() != k) { usable = false; break; }
      sum = sum + ch.values[i] * conjugate(ch.values[i]);
    }
    if (usable && sum != Cyclotomic(table.classes[i].centralizer_order))
      flag("column " + table.classes[i].name + ": second orthogonality sum " + to_string(sum) +
           " != centralizer order " + std::to_string(table.classes[i].centralizer_order));
  }

  // first orthogonality: sum_C |C| chi(C) conj(psi(C)) = delta |G|
  for (std::size_t a = 0; a < table.characters.size(); ++a) {
    for (std::size_t b = a; b < table.characters.size(); ++b) {
      const auto& chi = table.characters[a];
      const auto& psi = table.characters[b];
      if (chi.values.size() != k || psi.values.size() != k) continue;
      Cyclotomic sum = Cyclotomic(0);
      for (std::size_t i = 0; i < k; ++i)
        sum = sum + Rational(table.class_size(static_cast<int>(i))) *
                        (chi.values[i] * conjugate(psi.values[i]));
      Cyclotomic expect(a == b ? table.group_order : 0);
      if (sum != expect)
        flag("characters " + chi.name + ", " + psi.name + ": first orthogonality sum " +
             to_string(sum) + " != " + to_string(expect));
    }
  }

  // power-map presence for primes dividing the exponent, and order coherence
  const long e = exponent(table);
  const auto exponent_primes = prime_divisors(e);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = table.classes[i];
    for (long p : exponent_primes)
      if (!c.power_maps.count(p))
        flag("class " + c.name + ": missing power map for prime " + std::to_string(p));
    for (const auto& [p, target] : c.power_maps) {
      if (target < 0 || target >= static_cast<int>(k)) {
        flag("class " + c.name + ": power map target out of range");
        continue;
      }
      const long m = c.element_order;
      const long expect = (m % p == 0) ? m / p : m;
      if (table.classes[target].element_order != expect)
        flag("class " + c.name + ": " + std::to_string(p) + "-power map lands in class of order " +
             std::to_string(table.classes[target].element_order) + ", expected " +
             std::to_string(expect));
    }
  }

  return violations;
}

long exponent(const CharacterTable& table) {
  long e = 1;
  for (const auto& c : table.classes) e = std::lcm(e, c.element_order);
  return e;
}

std::vector<int> classes_dividing(const CharacterTable& table, long m) {
  std::vector<int> out;
  for (std::size_t i = 0; i < table.classes.size(); ++i)
    if (m % table.classes[i].element_order == 0) out.push_back(static_cast<int>(i));
  return out;
}

int power_class(const CharacterTable& table, int c, long k) {
  const long m = table.classes[c].element_order;
  long r = mod_positive(k, m);
  if (r == 0) {
    for (std::size_t i = 0; i < table.classes.size(); ++i)
      if (table.classes[i].element_order == 1) return static_cast<int>(i);
    throw Error("table has no identity class");
  }
  int cur = c;
  for (long p : prime_divisors(r)) {
    long q = r;
    while (q % p == 0) {
      auto it = table.classes[cur].power_maps.find(p);
      if (it == table.classes[cur].power_maps.end())
        throw MissingPowerMapError("class " + table.classes[cur].name +
                                   " has no power map for prime " + std::to_string(p));
      cur = it->second;
      q /= p;
    }
  }
  return cur;
}

std::set<long> spectrum(const CharacterTable& table) {
  std::set<long> orders;
  for (const auto& c : table.classes) orders.insert(c.element_order);
  return orders;
}

PrimeGraph prime_graph(const CharacterTable& table) {
  return prime_graph_of_orders(spectrum(table));
}

PrimeGraph prime_graph_of_orders(const std::set<long>& orders) {
  PrimeGraph g;
  for (long n : orders)
    for (long p : prime_divisors(n))
      if (orders.count(p)) g.vertices.insert(p);
  for (long p : g.vertices)
    for (long q : g.vertices)
      if (p < q && orders.count(p * q)) g.edges.insert({p, q});
  return g;
}

std::string to_string(const PrimeGraph& g) {
  std::ostringstream os;
  os << "vertices {";
  bool first = true;
  for (long p : g.vertices) {
    if (!first) os << ", ";
    os << p;
    first = false;
  }
  os << "}, edges {";
  first = true;
  for (const auto& [p, q] : g.edges) {
    if (!first) os << ", ";
    os << "{" << p << "," << q << "}";
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace zgu
