#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "zgu/cyclotomic.hpp"

namespace zgu {

struct ConjClass {
  std::string name;
  long element_order = 1;
  long centralizer_order = 1;
  std::map<long, int> power_maps;  // prime -> index of the class of g^p
};

struct Character {
  std::string name;
  std::vector<Cyclotomic> values;  // one per class, in class order
};

/// Conjugacy-class data plus the ordinary character table of a finite group.
/// Tables are input data: load_table only parses, validate() checks the
/// mathematical consistency in exact arithmetic.
struct CharacterTable {
  std::string group_name;
  long group_order = 1;
  std::vector<ConjClass> classes;
  std::vector<Character> characters;
  std::vector<std::vector<std::vector<long>>> permutation_generators;  // cycle lists, optional

  long class_size(int c) const { return group_order / classes[c].centralizer_order; }
  int class_index(const std::string& name) const;
  int character_index(const std::string& name) const;
};

/// Parse a group data document. Structural errors only: ParseError for
/// malformed text, SchemaError for missing fields or bad references.
CharacterTable load_table(const std::string& text);
CharacterTable load_table_file(const std::string& path);

/// Exact consistency checks: class sizes, degree squares, both orthogonality
/// relations, subfield membership of character values, power-map coherence.
/// Violations are data, not errors; an empty list means the table is valid.
std::vector<std::string> validate(const CharacterTable& table);

long exponent(const CharacterTable& table);

/// Classes whose element order divides m, in table order.
std::vector<int> classes_dividing(const CharacterTable& table, long m);

/// Index of the class of g^k for g in class c, by composing prime power
/// maps of k mod |g|. Throws MissingPowerMapError when a needed prime map
/// is absent from the data.
int power_class(const CharacterTable& table, int c, long k);

/// Set of element orders realized in G.
std::set<long> spectrum(const CharacterTable& table);

struct PrimeGraph {
  std::set<long> vertices;
  std::set<std::pair<long, long>> edges;
  bool operator==(const PrimeGraph&) const = default;
};

PrimeGraph prime_graph(const CharacterTable& table);
/// Prime graph of an arbitrary order set (shared with the solver verdicts).
PrimeGraph prime_graph_of_orders(const std::set<long>& orders);

std::string to_string(const PrimeGraph& g);

}  // namespace zgu
