#pragma once

#include <map>
#include <optional>
#include <vector>

#include "zgu/group_data.hpp"

namespace zgu {

/// Permutation of {0..degree-1} stored as the image vector.
using Permutation = std::vector<int>;

Permutation perm_identity(int degree);
/// (f*g)(x) = f(g(x)), matching the representation convention rho(fg) = rho(f) rho(g).
Permutation perm_compose(const Permutation& f, const Permutation& g);
Permutation perm_inverse(const Permutation& f);
/// Builds a permutation from 1-based cycle lists.
Permutation perm_from_cycles(const std::vector<std::vector<long>>& cycles, int degree);
long perm_order(const Permutation& f);

struct EnumLimits {
  int max_degree = 512;
  long max_order = 10000;
};

struct ComputedClass {
  long element_order = 1;
  long size = 1;
  long centralizer_order = 1;
  std::map<long, int> power_maps;  // prime -> computed class index
  int representative = 0;          // element index
};

/// Full enumeration of the group generated by a set of permutations, with
/// conjugacy classes, honest centralizer counts, and prime power maps.
struct EnumeratedGroup {
  int degree = 0;
  std::vector<Permutation> elements;  // index 0 = identity
  std::vector<int> inverse;
  std::vector<int> class_of;          // element index -> computed class index
  std::vector<ComputedClass> classes;
  std::map<Permutation, int> element_index;

  long order() const { return static_cast<long>(elements.size()); }
  int index_of(const Permutation& p) const;
  int mult(int a, int b) const;
  long group_exponent() const;
};

/// Throws GroupTooLargeError when a cap is exceeded.
EnumeratedGroup enumerate_group(const std::vector<Permutation>& generators,
                                const EnumLimits& limits = {});

/// Convenience entry point matching the data-file generator encoding.
EnumeratedGroup enumerate_group_from_cycles(
    const std::vector<std::vector<std::vector<long>>>& cycle_lists, const EnumLimits& limits = {});

std::vector<ComputedClass> classes_from_permutations(
    const std::vector<std::vector<std::vector<long>>>& cycle_lists, const EnumLimits& limits = {});

/// Assignment of computed classes to table classes by the signature
/// (element order, class size) refined by power-map consistency. `ambiguous`
/// is set when more than one consistent assignment exists (classes matched
/// up to signature only, e.g. a pair swapped by an outer automorphism).
struct ClassMatch {
  std::vector<int> table_class;  // computed class index -> table class index
  bool ambiguous = false;
};

std::optional<ClassMatch> match_classes(const EnumeratedGroup& group, const CharacterTable& table);

}  // namespace zgu
