#include "zgu/scenarios.hpp"

#include <algorithm>

namespace zgu {

namespace {

struct Mat2 {
  Integer a, b, c, d;
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

std::vector<Integer> flatten(long aug, long sgn, const Mat2& m) {
  if (m.b % 3 != 0) throw Error("internal: matrix entry (1,2) not divisible by 3");
  return {Integer(aug), Integer(sgn), m.a, m.b / 3, m.c, m.d};
}

}  // namespace

std::vector<std::vector<Integer>> s3_wedderburn_images() {
  const Mat2 one{1, 0, 0, 1};
  const Mat2 ra{-2, -3, 1, 1};
  const Mat2 rb{1, 0, -1, -1};
  const Mat2 ra2 = ra * ra;
  return {flatten(1, 1, one),      flatten(1, 1, ra),           flatten(1, 1, ra2),
          flatten(1, -1, rb),      flatten(1, -1, ra * rb),     flatten(1, -1, ra2 * rb)};
}

std::vector<std::vector<Integer>> s3_congruence_generators() {
  auto vec = [](std::initializer_list<long> xs) {
    std::vector<Integer> v;
    for (long x : xs) v.emplace_back(x);
    return v;
  };
  return {vec({1, 1, 1, 0, 0, 1}), vec({0, 2, 0, 0, 0, 2}), vec({0, 0, 3, 0, 0, 0}),
          vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 0, 3})};
}

S3LatticeScenario run_s3_lattice() {
  S3LatticeScenario s;
  s.image_lattice = hnf(s3_wedderburn_images());
  s.congruence_lattice = hnf(s3_congruence_generators());
  s.equal = (s.image_lattice == s.congruence_lattice);
  s.index = lattice_index(s.image_lattice);
  return s;
}

S3UnitScenario run_s3_unit(const CharacterTable& s3) {
  // the group is rebuilt from the presentation a = (123), b = (12) and
  // matched against the supplied class data
  Permutation a = perm_from_cycles({{1, 2, 3}}, 3);
  Permutation b = perm_from_cycles({{1, 2}}, 3);
  Permutation a2 = perm_compose(a, a);
  std::vector<Permutation> words = {perm_identity(3), a, a2, b, perm_compose(a, b),
                                    perm_compose(a2, b)};
  CharacterTable local = s3;
  local.permutation_generators = {{{1, 2, 3}}, {{1, 2}}};
  GroupTable gt = build_group_table(local);

  auto coeffs = solve_preimage(s3_wedderburn_images(), {1, -1, 1, 0, 0, -1});
  if (!coeffs) throw Error("the target image is not in the lattice; wrong group file?");

  GroupRingElement u(gt);
  for (std::size_t i = 0; i < words.size(); ++i)
    u[gt.enumeration.index_of(words[i])] += Rational((*coeffs)[i]);

  S3UnitScenario s;
  s.word_coefficients = *coeffs;
  auto order = element_order(u, exponent(s3));
  if (!order) throw Error("constructed element is not torsion; wrong group file?");
  s.order = *order;
  s.partial_augmentations = partial_augmentations(u, s3.classes.size());
  s.identity_coefficient_zero = (u[0] == 0);
  s.mrsw = mrsw_check(s3, u);

  PABranch measured;
  measured.order = s.order;
  GroupRingElement power = GroupRingElement::identity(gt);
  for (long d = 1; d <= s.order; ++d) {
    power = power * u;
    if (s.order % d != 0) continue;
    auto eps = partial_augmentations(power, s3.classes.size());
    PAVector v;
    v.effective_order = s.order / d;
    for (int c : admissible_classes(s3, s.order / d)) v.entries[c] = eps[c].get_num();
    measured.assignments[d] = v;
  }
  auto results = solve_all(s3);
  const auto& sols = results.at(s.order).solutions;
  s.is_unique_order_solution =
      sols.size() == 1 && std::find(sols.begin(), sols.end(), measured) != sols.end();
  return s;
}

A5Order5Scenario run_a5_order5(const CharacterTable& a5) {
  const Cyclotomic expected = -(root_power(5, 1) + root_power(5, 4));
  int character = -1;
  for (std::size_t i = 0; i < a5.characters.size() && character < 0; ++i) {
    if (!(a5.characters[i].values[0] == Cyclotomic(3))) continue;
    for (std::size_t c = 0; c < a5.classes.size(); ++c)
      if (a5.classes[c].element_order == 5 && a5.characters[i].values[c] == expected)
        character = static_cast<int>(i);
  }
  if (character < 0)
    throw Error("group file has no degree-3 character with value -z5-z5^4 at an order-5 class");

  A5Order5Scenario s;
  s.character = a5.characters[character].name;
  SolveOptions options;
  options.characters = {character};
  std::map<long, SolutionSet> proper;
  proper[1] = solve_order(a5, 1, {}, options);
  s.solutions = solve_order(a5, 5, proper, options);

  PABranch branch;
  branch.order = 5;
  PAVector identity;
  identity.effective_order = 1;
  for (int c : admissible_classes(a5, 1)) identity.entries[c] = 1;
  branch.assignments[5] = identity;
  auto forms = build_multiplicity_forms(a5, character, 5, branch);
  s.form_i1 = forms[1];
  s.form_i2 = forms[2];
  return s;
}

}  // namespace zgu
