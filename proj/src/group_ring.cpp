#include "zgu/group_ring.hpp"

namespace zgu {

GroupTable build_group_table(const CharacterTable& table, const EnumLimits& limits) {
  if (table.permutation_generators.empty())
    throw SchemaError("group file '" + table.group_name + "' has no permutation generators");
  GroupTable gt;
  gt.enumeration = enumerate_group_from_cycles(table.permutation_generators, limits);
  if (gt.enumeration.order() != table.group_order)
    throw TableMismatchError("generators produce a group of order " +
                             std::to_string(gt.enumeration.order()) + ", file declares " +
                             std::to_string(table.group_order));
  auto match = match_classes(gt.enumeration, table);
  if (!match)
    throw TableMismatchError("computed conjugacy classes do not match the declared class data");
  gt.match_ambiguous = match->ambiguous;

  const long n = gt.enumeration.order();
  gt.class_of.resize(n);
  for (long g = 0; g < n; ++g)
    gt.class_of[g] = match->table_class[gt.enumeration.class_of[g]];
  gt.element_orders.resize(n);
  for (long g = 0; g < n; ++g) gt.element_orders[g] = perm_order(gt.enumeration.elements[g]);
  gt.mult.assign(n, std::vector<int>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) gt.mult[a][b] = gt.enumeration.mult(static_cast<int>(a),
                                                                     static_cast<int>(b));
  return gt;
}

GroupRingElement GroupRingElement::basis(const GroupTable& table, int g) {
  GroupRingElement e(table);
  e.coeffs_[g] = 1;
  return e;
}

bool GroupRingElement::is_integral() const {
  for (const auto& c : coeffs_)
    if (!zgu::is_integral(c)) return false;
  return true;
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return &a.table() == &b.table() && a.coeffs() == b.coeffs();
}

namespace {

void require_same_table(const GroupRingElement& a, const GroupRingElement& b) {
  if (&a.table() != &b.table())
    throw TableMismatchError("group ring elements live over different tables");
}

}  // namespace

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_table(a, b);
  GroupRingElement r(a.table());
  for (long g = 0; g < a.table().order(); ++g) r[g] = a[g] + b[g];
  return r;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_table(a, b);
  GroupRingElement r(a.table());
  for (long g = 0; g < a.table().order(); ++g) r[g] = a[g] - b[g];
  return r;
}

GroupRingElement operator-(const GroupRingElement& a) {
  GroupRingElement r(a.table());
  for (long g = 0; g < a.table().order(); ++g) r[g] = -a[g];
  return r;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_table(a, b);
  GroupRingElement r(a.table());
  const long n = a.table().order();
  for (long g = 0; g < n; ++g) {
    if (a[g] == 0) continue;
    for (long h = 0; h < n; ++h) {
      if (b[h] == 0) continue;
      r[a.table().mult[g][h]] += a[g] * b[h];
    }
  }
  return r;
}

GroupRingElement operator*(const Rational& s, const GroupRingElement& a) {
  GroupRingElement r(a.table());
  for (long g = 0; g < a.table().order(); ++g) r[g] = s * a[g];
  return r;
}

Rational augmentation(const GroupRingElement& a) {
  Rational sum(0);
  for (const auto& c : a.coeffs()) sum += c;
  return sum;
}

std::vector<Rational> partial_augmentations(const GroupRingElement& a, std::size_t num_classes) {
  std::vector<Rational> eps(num_classes, Rational(0));
  for (long g = 0; g < a.table().order(); ++g) eps[a.table().class_of[g]] += a[g];
  return eps;
}

bool congruent_mod_commutators(const GroupRingElement& a, const GroupRingElement& b,
                               std::size_t num_classes) {
  auto eps = partial_augmentations(a - b, num_classes);
  for (const auto& e : eps)
    if (e != 0) return false;
  return true;
}

std::optional<long> element_order(const GroupRingElement& u, long cap) {
  const GroupRingElement one = GroupRingElement::identity(u.table());
  GroupRingElement w = u;
  for (long m = 1; m <= cap; ++m) {
    if (w == one) return m;
    w = w * u;
  }
  return std::nullopt;
}

Rational double_action_character(const CharacterTable& table, const GroupRingElement& u, long j,
                                 int c) {
  GroupRingElement w = GroupRingElement::identity(u.table());
  for (long i = 0; i < j; ++i) w = w * u;
  auto eps = partial_augmentations(w, table.classes.size());
  return Rational(table.classes[c].centralizer_order) * eps[c];
}

MrswResult mrsw_check(const CharacterTable& table, const GroupRingElement& u) {
  if (augmentation(u) != 1) throw NotNormalizedError("mrsw_check requires augmentation 1");
  auto n = element_order(u, exponent(table));
  if (!n)
    throw NotTorsionError("element is not torsion within the exponent cap " +
                          std::to_string(exponent(table)));
  return mrsw_check(table, u, *n);
}

MrswResult mrsw_check(const CharacterTable& table, const GroupRingElement& u, long n) {
  if (augmentation(u) != 1) throw NotNormalizedError("mrsw_check requires augmentation 1");
  MrswResult result;
  result.rationally_conjugate = true;
  GroupRingElement power = GroupRingElement::identity(u.table());
  for (long d = 1; d <= n; ++d) {
    power = power * u;
    if (n % d != 0) continue;
    auto eps = partial_augmentations(power, table.classes.size());
    int target = -1;
    for (std::size_t c = 0; c < eps.size(); ++c) {
      if (eps[c] < 0) {
        result.rationally_conjugate = false;
        result.witness = MrswWitness{d, static_cast<int>(c), eps[c]};
        result.target_classes.clear();
        return result;
      }
      if (eps[c] != 0) target = static_cast<int>(c);
    }
    result.target_classes[d] = target;
  }
  return result;
}

std::optional<Rational> idempotent_identity_coefficient(const GroupRingElement& e) {
  if (!(e * e == e)) throw NotIdempotentError("element is not idempotent");
  if (e.is_zero() || e == GroupRingElement::identity(e.table())) return std::nullopt;
  return e[0];
}

}  // namespace zgu
