#include "zgu/lattice.hpp"

#include <random>

#include "doctest.h"

using namespace zgu;

namespace {

std::vector<Integer> vec(std::vector<long> xs) {
  std::vector<Integer> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = xs[i];
  return out;
}

std::vector<std::vector<Integer>> mat(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Integer>> out;
  for (auto& r : rows) out.push_back(vec(r));
  return out;
}

// The six images of S3 under (aug, sgn, rho) with the (1,2) matrix entry
// stored divided by 3, in element order 1, a, a^2, b, ab, a^2 b.
std::vector<std::vector<Integer>> s3_images() {
  return mat({{1, 1, 1, 0, 0, 1},
              {1, 1, -2, -1, 1, 1},
              {1, 1, 1, 1, -1, -2},
              {1, -1, 1, 0, -1, -1},
              {1, -1, 1, 1, 0, -1},
              {1, -1, -2, -1, 1, 2}});
}

// x = y mod 2, x = a mod 3, y = d mod 3 on coordinates (x, y, a, b, c, d).
std::vector<std::vector<Integer>> s3_congruence_generators() {
  return mat({{1, 1, 1, 0, 0, 1},
              {0, 2, 0, 0, 0, 2},
              {0, 0, 3, 0, 0, 0},
              {0, 0, 0, 1, 0, 0},
              {0, 0, 0, 0, 1, 0},
              {0, 0, 0, 0, 0, 3}});
}

}  // namespace

TEST_CASE("hnf of generators spanning all of Z^2") {
  // (1,0) = 2*(2,0) + (0,3) - 3*(1,1), so these rows generate the full
  // lattice; confirmed by the exhaustive small-coefficient search below.
  auto rows = mat({{2, 0}, {0, 3}, {1, 1}});
  bool found_e1 = false;
  for (long a = -5; a <= 5 && !found_e1; ++a)
    for (long b = -5; b <= 5 && !found_e1; ++b)
      for (long c = -5; c <= 5 && !found_e1; ++c)
        found_e1 = (2 * a + c == 1) && (3 * b + c == 0);
  REQUIRE(found_e1);

  IntegerLattice lattice = hnf(rows);
  CHECK(lattice.basis == mat({{1, 0}, {0, 1}}));
  CHECK(lattice_index(lattice) == 1);
}

TEST_CASE("hnf basics") {
  CHECK(hnf(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).basis ==
        mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(hnf(mat({{4, 6}, {4, 6}, {4, 6}})) == hnf(mat({{4, 6}})));
  // index-3 sublattice containing (1,1)
  IntegerLattice sub = hnf(mat({{1, 1}, {0, 3}}));
  CHECK(sub.basis == mat({{1, 1}, {0, 3}}));
  CHECK(lattice_index(sub) == 3);
  CHECK(lattice_membership(sub, vec({1, 4})));
  CHECK_FALSE(lattice_membership(sub, vec({1, 0})));
  // rank-deficient input keeps only the span
  IntegerLattice line = hnf(mat({{2, 4}, {3, 6}}));
  CHECK(line.basis == mat({{1, 2}}));
  CHECK(lattice_index(line) == 0);
}

TEST_CASE("hnf preserves the span") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::vector<Integer>> rows(4, std::vector<Integer>(3));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    IntegerLattice lattice = hnf(rows);
    for (const auto& r : rows) CHECK(lattice_membership(lattice, r));
    // idempotence and canonicity
    CHECK(hnf(lattice.basis) == lattice);
    // random integer combinations stay inside
    std::vector<Integer> combo(3, Integer(0));
    for (const auto& r : rows) {
      long c = entry(rng);
      for (std::size_t j = 0; j < 3; ++j) combo[j] += c * r[j];
    }
    CHECK(lattice_membership(lattice, combo));
  }
}

TEST_CASE("membership in the S3 image lattice") {
  IntegerLattice lattice = hnf(s3_images());
  CHECK(lattice_membership(lattice, vec({1, -1, 1, 0, 0, -1})));
  CHECK_FALSE(lattice_membership(lattice, vec({1, 0, 0, 0, 0, 0})));
  CHECK(lattice_membership(lattice, vec({0, 0, 0, 0, 0, 0})));
  CHECK_THROWS_AS(lattice_membership(lattice, vec({1, 2})), DimensionMismatchError);
}

TEST_CASE("the image lattice equals the congruence lattice") {
  IntegerLattice from_images = hnf(s3_images());
  IntegerLattice from_congruences = hnf(s3_congruence_generators());
  CHECK(from_images == from_congruences);
  CHECK(lattice_index(from_images) == 18);
}

TEST_CASE("solve_preimage") {
  auto gens = s3_images();

  SUBCASE("identity image maps back") {
    auto coeffs = solve_preimage(gens, vec({1, 1, 1, 0, 0, 1}));
    REQUIRE(coeffs.has_value());
    std::vector<Integer> rebuilt(6, Integer(0));
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t j = 0; j < 6; ++j) rebuilt[j] += (*coeffs)[g] * gens[g][j];
    CHECK(rebuilt == vec({1, 1, 1, 0, 0, 1}));
    CHECK(*coeffs == vec({1, 0, 0, 0, 0, 0}));
  }

  SUBCASE("the order-2 unit's image") {
    auto coeffs = solve_preimage(gens, vec({1, -1, 1, 0, 0, -1}));
    REQUIRE(coeffs.has_value());
    // unique since the six images are linearly independent
    CHECK(*coeffs == vec({0, 1, -1, 1, 1, -1}));
  }

  SUBCASE("targets outside the lattice") {
    CHECK_FALSE(solve_preimage(gens, vec({1, 0, 0, 0, 0, 0})).has_value());
  }

  SUBCASE("reconstruction on random members") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> c(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Integer> target(6, Integer(0));
      for (const auto& g : gens) {
        long x = c(rng);
        for (std::size_t j = 0; j < 6; ++j) target[j] += x * g[j];
      }
      auto coeffs = solve_preimage(gens, target);
      REQUIRE(coeffs.has_value());
      std::vector<Integer> rebuilt(6, Integer(0));
      for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t j = 0; j < 6; ++j) rebuilt[j] += (*coeffs)[g] * gens[g][j];
      CHECK(rebuilt == target);
    }
  }
}
