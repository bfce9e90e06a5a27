#pragma once

#include <optional>

#include "zgu/group_data.hpp"
#include "zgu/perm_group.hpp"

namespace zgu {

/// Explicit multiplication table of G, with elements aligned to the
/// conjugacy classes of a loaded CharacterTable. Index 0 is the identity.
struct GroupTable {
  EnumeratedGroup enumeration;
  std::vector<std::vector<int>> mult;  // order x order element indices
  std::vector<int> class_of;           // element index -> table class index
  std::vector<long> element_orders;
  bool match_ambiguous = false;

  long order() const { return enumeration.order(); }
  int inverse(int g) const { return enumeration.inverse[g]; }
};

/// Builds the table from the group file's permutation generators; throws
/// SchemaError when generators are absent and TableMismatchError when the
/// generated group does not fit the declared class data.
GroupTable build_group_table(const CharacterTable& table, const EnumLimits& limits = {});

/// Exact-rational-coefficient element of QG over an explicit GroupTable.
class GroupRingElement {
 public:
  explicit GroupRingElement(const GroupTable& table)
      : table_(&table), coeffs_(table.order(), Rational(0)) {}

  static GroupRingElement basis(const GroupTable& table, int g);
  static GroupRingElement identity(const GroupTable& table) { return basis(table, 0); }

  const GroupTable& table() const { return *table_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational& operator[](int g) { return coeffs_[g]; }
  const Rational& operator[](int g) const { return coeffs_[g]; }

  bool is_integral() const;
  bool is_zero() const;

 private:
  const GroupTable* table_;
  std::vector<Rational> coeffs_;
};

bool operator==(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a);
/// Convolution product over the multiplication table.
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(const Rational& s, const GroupRingElement& a);

Rational augmentation(const GroupRingElement& a);

/// eps_C(a) per table class, in class order; sums to augmentation(a).
std::vector<Rational> partial_augmentations(const GroupRingElement& a, std::size_t num_classes);

/// a = b modulo the commutator submodule [RG, RG], i.e. all partial
/// augmentations of a - b vanish.
bool congruent_mod_commutators(const GroupRingElement& a, const GroupRingElement& b,
                               std::size_t num_classes);

/// Least m <= cap with u^m = 1, or nullopt when u is not torsion within cap.
std::optional<long> element_order(const GroupRingElement& u, long cap);

/// |C_G(g)| * eps_c(u^j) for g in class c: the double-action character value.
Rational double_action_character(const CharacterTable& table, const GroupRingElement& u, long j,
                                 int c);

struct MrswWitness {
  long divisor = 1;
  int class_index = 0;
  Rational value;
};

struct MrswResult {
  bool rationally_conjugate = false;
  std::map<long, int> target_classes;  // divisor -> class carrying the single 1
  std::optional<MrswWitness> witness;
};

/// Nonnegativity of the partial augmentations of u^d for every d | n decides
/// rational conjugacy to a group element. The two-argument form computes the
/// order itself (cap = exponent); the three-argument form trusts the caller.
MrswResult mrsw_check(const CharacterTable& table, const GroupRingElement& u);
MrswResult mrsw_check(const CharacterTable& table, const GroupRingElement& u, long n);

/// Identity coefficient of an idempotent e (which lies in (0,1) for
/// e outside {0,1}); nullopt marks the trivial idempotents 0 and 1.
/// Throws NotIdempotentError when e*e != e.
std::optional<Rational> idempotent_identity_coefficient(const GroupRingElement& e);

}  // namespace zgu
