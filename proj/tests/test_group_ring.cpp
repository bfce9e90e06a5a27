#include "zgu/group_ring.hpp"

#include <numeric>
#include <random>

#include "doctest.h"
#include "zgu/lattice.hpp"

using namespace zgu;

namespace {

struct Fixture {
  CharacterTable table;
  GroupTable group;
  explicit Fixture(const std::string& name)
      : table(load_table_file(std::string(ZGU_DATA_DIR) + "/" + name)),
        group(build_group_table(table)) {}
};

Fixture& s3() {
  static Fixture f("s3.json");
  return f;
}
Fixture& s4() {
  static Fixture f("s4.json");
  return f;
}
Fixture& c6() {
  static Fixture f("c6.json");
  return f;
}

// The six S3 elements as permutations, in the word order 1, a, a^2, b, ab, a^2 b.
std::vector<Permutation> s3_words(int degree) {
  Permutation a = perm_from_cycles({{1, 2, 3}}, degree);
  Permutation b = perm_from_cycles({{1, 2}}, degree);
  Permutation aa = perm_compose(a, a);
  return {perm_identity(degree), a, aa, b, perm_compose(a, b), perm_compose(aa, b)};
}

// Wedderburn images (aug, sgn, rho) flattened with the (1,2) entry divided
// by 3, in the same word order.
std::vector<std::vector<Integer>> s3_images() {
  std::vector<std::vector<long>> raw = {{1, 1, 1, 0, 0, 1},   {1, 1, -2, -1, 1, 1},
                                        {1, 1, 1, 1, -1, -2}, {1, -1, 1, 0, -1, -1},
                                        {1, -1, 1, 1, 0, -1}, {1, -1, -2, -1, 1, 2}};
  std::vector<std::vector<Integer>> out;
  for (auto& r : raw) out.emplace_back(r.begin(), r.end());
  return out;
}

// Constructs the order-2 unit with image (1, -1, diag(1, -1)) by solving the
// integer linear system over the images of the group elements.
GroupRingElement s3_unit(const GroupTable& gt) {
  std::vector<Integer> target = {1, -1, 1, 0, 0, -1};
  auto coeffs = solve_preimage(s3_images(), target);
  REQUIRE(coeffs.has_value());
  auto words = s3_words(gt.enumeration.degree);
  GroupRingElement u(gt);
  for (std::size_t i = 0; i < words.size(); ++i)
    u[gt.enumeration.index_of(words[i])] += Rational((*coeffs)[i]);
  return u;
}

GroupRingElement word_element(const GroupTable& gt, const Permutation& p) {
  return GroupRingElement::basis(gt, gt.enumeration.index_of(p));
}

long rational_rank(std::vector<std::vector<Rational>> m) {
  long rank = 0;
  const long rows = static_cast<long>(m.size());
  const long cols = rows == 0 ? 0 : static_cast<long>(m[0].size());
  for (long c = 0; c < cols && rank < rows; ++c) {
    long sel = -1;
    for (long r = rank; r < rows; ++r)
      if (m[r][c] != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    for (long r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (long cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

GroupRingElement random_element(std::mt19937& rng, const GroupTable& gt) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  GroupRingElement x(gt);
  for (long g = 0; g < gt.order(); ++g) x[g] = coeff(rng);
  return x;
}

}  // namespace

TEST_CASE("basis elements multiply by the group law") {
  for (Fixture* f : {&s3(), &s4()}) {
    const GroupTable& gt = f->group;
    for (int g = 0; g < gt.order(); ++g) {
      auto prod = GroupRingElement::basis(gt, g) * GroupRingElement::basis(gt, gt.inverse(g));
      CHECK(prod == GroupRingElement::identity(gt));
    }
  }
}

TEST_CASE("products expand correctly") {
  const GroupTable& gt = s3().group;
  auto words = s3_words(gt.enumeration.degree);
  GroupRingElement one = GroupRingElement::identity(gt);
  GroupRingElement a = word_element(gt, words[1]);
  GroupRingElement a2 = word_element(gt, words[2]);
  CHECK((one + a) * (one - a) == one - a2);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    GroupRingElement x = random_element(rng, gt);
    GroupRingElement y = random_element(rng, gt);
    GroupRingElement z = random_element(rng, gt);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(augmentation(x * y) == augmentation(x) * augmentation(y));
  }
}

TEST_CASE("augmentation") {
  const GroupTable& gt = s3().group;
  for (int g = 0; g < gt.order(); ++g)
    CHECK(augmentation(GroupRingElement::basis(gt, g)) == 1);
  auto words = s3_words(gt.enumeration.degree);
  GroupRingElement x = Rational(2) * word_element(gt, words[1]) - word_element(gt, words[3]);
  CHECK(augmentation(x) == 1);
}

TEST_CASE("the order-2 unit of ZS3") {
  const Fixture& f = s3();
  GroupRingElement u = s3_unit(f.group);
  CHECK(u.is_integral());
  CHECK(augmentation(u) == 1);
  CHECK(u * u == GroupRingElement::identity(f.group));
  CHECK(element_order(u, 6) == 2);
  CHECK(u[0] == 0);  // identity coefficient vanishes

  auto eps = partial_augmentations(u, f.table.classes.size());
  CHECK(eps == std::vector<Rational>{0, 1, 0});

  auto result = mrsw_check(f.table, u);
  CHECK(result.rationally_conjugate);
  CHECK(result.target_classes.at(1) == f.table.class_index("2a"));
  CHECK(result.target_classes.at(2) == f.table.class_index("1a"));

  // u is NOT a trivial unit: its support has three elements
  int support = 0;
  for (const auto& c : u.coeffs())
    if (c != 0) ++support;
  CHECK(support == 5);
}

TEST_CASE("partial augmentations") {
  const Fixture& f = s3();
  const GroupTable& gt = f.group;
  auto words = s3_words(gt.enumeration.degree);
  for (int g = 0; g < gt.order(); ++g) {
    auto eps = partial_augmentations(GroupRingElement::basis(gt, g), f.table.classes.size());
    for (std::size_t c = 0; c < eps.size(); ++c)
      CHECK(eps[c] == (static_cast<int>(c) == gt.class_of[g] ? 1 : 0));
  }
  GroupRingElement diff = word_element(gt, words[1]) - word_element(gt, words[3]);  // a - b
  auto eps = partial_augmentations(diff, f.table.classes.size());
  CHECK(eps == std::vector<Rational>{0, -1, 1});
}

TEST_CASE("congruence modulo commutators") {
  const Fixture& f = s3();
  const GroupTable& gt = f.group;
  const std::size_t k = f.table.classes.size();
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gt.order() - 1));
  for (int trial = 0; trial < 20; ++trial) {
    int g = pick(rng), h = pick(rng), x = pick(rng), y = pick(rng);
    int conj = gt.mult[gt.mult[h][g]][gt.inverse(h)];
    CHECK(congruent_mod_commutators(GroupRingElement::basis(gt, g),
                                    GroupRingElement::basis(gt, conj), k));
    GroupRingElement bracket = GroupRingElement::basis(gt, gt.mult[x][y]) -
                               GroupRingElement::basis(gt, gt.mult[y][x]);
    CHECK(congruent_mod_commutators(GroupRingElement::basis(gt, g),
                                    GroupRingElement::basis(gt, g) + bracket, k));
  }
  auto words = s3_words(gt.enumeration.degree);
  CHECK_FALSE(congruent_mod_commutators(GroupRingElement::identity(gt),
                                        word_element(gt, words[3]), k));
}

TEST_CASE("element order and a non-torsion element") {
  const Fixture& f = s3();
  const GroupTable& gt = f.group;
  CHECK(element_order(GroupRingElement::identity(gt), 1) == 1);

  auto words = s3_words(gt.enumeration.degree);
  GroupRingElement one = GroupRingElement::identity(gt);
  GroupRingElement a = word_element(gt, words[1]);
  GroupRingElement a2 = word_element(gt, words[2]);
  GroupRingElement b = word_element(gt, words[3]);
  // v = (a - a^2)(1 - b) squares to zero, so 1 + v is a non-torsion unit
  GroupRingElement v = (a - a2) * (one - b);
  CHECK_FALSE(v.is_zero());
  CHECK((v * v).is_zero());
  GroupRingElement w = one + v;
  CHECK(augmentation(w) == 1);
  CHECK_FALSE(element_order(w, 6).has_value());
  CHECK_FALSE(element_order(w, 24).has_value());
}

TEST_CASE("double action character values") {
  const Fixture& f = s3();
  const GroupTable& gt = f.group;
  for (int g = 0; g < gt.order(); ++g) {
    const int c = gt.class_of[g];
    CHECK(double_action_character(f.table, GroupRingElement::basis(gt, g), 1, c) ==
          Rational(f.table.classes[c].centralizer_order));
  }
  GroupRingElement u = s3_unit(gt);
  CHECK(double_action_character(f.table, u, 1, f.table.class_index("2a")) == 2);
  CHECK(double_action_character(f.table, u, 0, f.table.class_index("1a")) == 6);
}

TEST_CASE("mrsw_check") {
  const Fixture& f = s3();
  const GroupTable& gt = f.group;

  SUBCASE("trivial units are rationally conjugate with the right targets") {
    for (int g = 0; g < gt.order(); ++g) {
      auto r = mrsw_check(f.table, GroupRingElement::basis(gt, g));
      CHECK(r.rationally_conjugate);
      for (const auto& [d, target] : r.target_classes) {
        int power = g;
        for (long i = 1; i < d; ++i) power = gt.mult[power][g];
        CHECK(target == gt.class_of[power]);
      }
    }
  }

  SUBCASE("negative partial augmentation is a witness") {
    auto words = s3_words(gt.enumeration.degree);
    GroupRingElement w =
        Rational(2) * word_element(gt, words[1]) - word_element(gt, words[3]);  // 2a - b
    auto r = mrsw_check(f.table, w, 2);
    CHECK_FALSE(r.rationally_conjugate);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->divisor == 1);
    CHECK(r.witness->class_index == f.table.class_index("2a"));
    CHECK(r.witness->value == -1);
  }

  SUBCASE("normalization is required") {
    GroupRingElement minus = -GroupRingElement::identity(gt);
    CHECK_THROWS_AS(mrsw_check(f.table, minus), NotNormalizedError);
  }
}

TEST_CASE("idempotent identity coefficients") {
  const Fixture& f = s3();
  const GroupTable& gt = f.group;

  GroupRingElement ghat(gt);
  for (long g = 0; g < gt.order(); ++g) ghat[g] = make_rational(1, 6);
  CHECK(idempotent_identity_coefficient(ghat) == make_rational(1, 6));

  CHECK_FALSE(idempotent_identity_coefficient(GroupRingElement::identity(gt)).has_value());
  CHECK_FALSE(idempotent_identity_coefficient(GroupRingElement(gt)).has_value());

  auto words = s3_words(gt.enumeration.degree);
  GroupRingElement half = make_rational(1, 2) *
                          (GroupRingElement::identity(gt) + word_element(gt, words[3]));
  CHECK(idempotent_identity_coefficient(half) == make_rational(1, 2));

  CHECK_THROWS_AS(idempotent_identity_coefficient(word_element(gt, words[1])),
                  NotIdempotentError);
}

TEST_CASE("subgroup idempotents have coefficient 1/|H| and integral index") {
  const Fixture& f = s3();
  const GroupTable& gt = f.group;
  auto words = s3_words(gt.enumeration.degree);
  // subgroups <a>, <b>, <ab>, <a^2 b>, S3 itself
  std::vector<std::vector<int>> subgroups;
  for (int g = 1; g < gt.order(); ++g) {
    std::vector<int> h{0};
    int cur = g;
    while (cur != 0) {
      h.push_back(cur);
      cur = gt.mult[cur][g];
    }
    subgroups.push_back(h);
  }
  std::vector<int> all(gt.order());
  std::iota(all.begin(), all.end(), 0);
  subgroups.push_back(all);

  for (const auto& h : subgroups) {
    GroupRingElement hhat(gt);
    for (int g : h) hhat[g] = make_rational(1, static_cast<long>(h.size()));
    auto coeff = idempotent_identity_coefficient(hhat);
    REQUIRE(coeff.has_value());
    CHECK(*coeff == make_rational(1, static_cast<long>(h.size())));
    CHECK(*coeff > 0);
    CHECK(*coeff < 1);
    Rational index = Rational(gt.order()) * (*coeff);
    CHECK(is_integral(index));
  }
}

TEST_CASE("Berman-Higman on concrete torsion units") {
  const Fixture& f3 = s3();
  GroupRingElement u = s3_unit(f3.group);

  std::vector<GroupRingElement> units;
  units.push_back(u);
  units.push_back(-u);
  for (int g = 0; g < f3.group.order(); ++g) {
    GroupRingElement conj = GroupRingElement::basis(f3.group, g) * u *
                            GroupRingElement::basis(f3.group, f3.group.inverse(g));
    units.push_back(conj);
    if (g != 0) units.push_back(GroupRingElement::basis(f3.group, g));
  }
  for (const auto& w : units) {
    auto order = element_order(w, 12);
    bool is_pm_one = (w == GroupRingElement::identity(f3.group)) ||
                     (w == -GroupRingElement::identity(f3.group));
    if (order.has_value() || element_order(-w, 12).has_value())
      if (!is_pm_one) CHECK(w[0] == 0);
  }

  // the same unit embedded in ZS4 via S3 <= S4
  const Fixture& f4 = s4();
  auto words4 = s3_words(f4.group.enumeration.degree);
  auto coeffs = solve_preimage(s3_images(), {1, -1, 1, 0, 0, -1});
  REQUIRE(coeffs.has_value());
  GroupRingElement u4(f4.group);
  for (std::size_t i = 0; i < words4.size(); ++i)
    u4[f4.group.enumeration.index_of(words4[i])] += Rational((*coeffs)[i]);
  CHECK(u4 * u4 == GroupRingElement::identity(f4.group));
  CHECK(u4[0] == 0);
  for (int g = 0; g < f4.group.order(); ++g) {
    GroupRingElement conj = GroupRingElement::basis(f4.group, g) * u4 *
                            GroupRingElement::basis(f4.group, f4.group.inverse(g));
    CHECK(element_order(conj, 12) == 2);
    CHECK(conj[0] == 0);
  }
}

TEST_CASE("bounded search in ZC6 finds only trivial normalized torsion units") {
  const Fixture& f = c6();
  const GroupTable& gt = f.group;
  const long n = gt.order();
  long found = 0;

  // all integral elements with coefficients in {-1,0,1}
  for (long mask = 0; mask < 729; ++mask) {
    long m = mask;
    GroupRingElement x(gt);
    long aug = 0;
    for (long g = 0; g < n; ++g) {
      long c = (m % 3) - 1;
      m /= 3;
      x[g] = c;
      aug += c;
    }
    if (aug != 1) continue;
    if (!element_order(x, 6).has_value()) continue;
    // must be a single basis element
    int support = 0;
    for (const auto& c : x.coeffs())
      if (c != 0) ++support;
    CHECK(support == 1);
    ++found;
  }
  CHECK(found == n);

  // support-two elements with larger coefficients
  for (long g = 0; g < n; ++g) {
    for (long h = g + 1; h < n; ++h) {
      for (long cg = -3; cg <= 3; ++cg) {
        long ch = 1 - cg;
        if (std::abs(ch) > 3 || cg == 0 || ch == 0) continue;
        GroupRingElement x(gt);
        x[g] = cg;
        x[h] = ch;
        CHECK_FALSE(element_order(x, 6).has_value());
      }
    }
  }
}

TEST_CASE("finite subgroups are linearly independent") {
  const Fixture& f = s3();
  GroupRingElement u = s3_unit(f.group);
  std::vector<std::vector<Rational>> rows;
  rows.push_back(GroupRingElement::identity(f.group).coeffs());
  rows.push_back(u.coeffs());
  CHECK(rational_rank(rows) == 2);
}

TEST_CASE("a conjugated copy of G is a group basis of ZG") {
  const Fixture& f = s3();
  const GroupTable& gt = f.group;
  auto words = s3_words(gt.enumeration.degree);
  GroupRingElement one = GroupRingElement::identity(gt);
  GroupRingElement a = word_element(gt, words[1]);
  GroupRingElement a2 = word_element(gt, words[2]);
  GroupRingElement b = word_element(gt, words[3]);
  GroupRingElement v = (a - a2) * (one - b);  // nilpotent, so 1 + v is a unit
  GroupRingElement x = one + v;
  GroupRingElement x_inv = one - v;
  REQUIRE(x * x_inv == one);

  std::vector<std::vector<Integer>> coeff_rows;
  bool differs_from_g = false;
  for (int g = 0; g < gt.order(); ++g) {
    GroupRingElement h = x * GroupRingElement::basis(gt, g) * x_inv;
    CHECK(augmentation(h) == 1);
    CHECK(element_order(h, 6) == gt.element_orders[g]);
    std::vector<Integer> row;
    for (const auto& c : h.coeffs()) {
      REQUIRE(is_integral(c));
      row.push_back(c.get_num());
    }
    if (!(h == GroupRingElement::basis(gt, g))) differs_from_g = true;
    coeff_rows.push_back(std::move(row));
  }
  CHECK(differs_from_g);
  // |H| = |G| forces H to span ZG over Z: the coefficient lattice is all of Z^6
  IntegerLattice span = hnf(coeff_rows);
  CHECK(lattice_index(span) == 1);
}

TEST_CASE("partial augmentations of coprime powers relabel by the inverse exponent") {
  for (Fixture* f : {&s3(), &c6()}) {
    const GroupTable& gt = f->group;
    const std::size_t k = f->table.classes.size();
    for (int g = 0; g < gt.order(); ++g) {
      const long n = gt.element_orders[g];
      for (long kk = 1; kk < n; ++kk) {
        if (std::gcd(kk, n) != 1) continue;
        long l = 1;
        while ((kk * l) % n != 1) ++l;
        int gk = 0;
        for (long i = 0; i < kk; ++i) gk = gt.mult[gk][g];
        auto lhs = partial_augmentations(GroupRingElement::basis(gt, gk), k);
        auto base = partial_augmentations(GroupRingElement::basis(gt, g), k);
        for (std::size_t c = 0; c < k; ++c) {
          // displayed form: eps_C(u^k) = sum over preimages D with D^k = C
          Rational preimage_sum(0);
          for (std::size_t d = 0; d < k; ++d)
            if (power_class(f->table, static_cast<int>(d), kk) == static_cast<int>(c))
              preimage_sum += base[d];
          CHECK(lhs[c] == preimage_sum);
          // pointwise form, valid on classes of order dividing |g|
          if (n % f->table.classes[c].element_order == 0)
            CHECK(lhs[c] == base[power_class(f->table, static_cast<int>(c), l)]);
        }
      }
    }
  }
  // and for the non-trivial order-2 unit, where only k = 1 is coprime
  const Fixture& f = s3();
  GroupRingElement u = s3_unit(f.group);
  auto eps = partial_augmentations(u, f.table.classes.size());
  for (std::size_t c = 0; c < eps.size(); ++c)
    CHECK(eps[c] == eps[power_class(f.table, static_cast<int>(c), 1)]);
}
