#pragma once

#include "zgu/group_ring.hpp"
#include "zgu/help_core.hpp"
#include "zgu/lattice.hpp"

namespace zgu {

/// Wedderburn images (aug, sgn, rho) of the six S3 elements, flattened to
/// integer vectors with the (1,2) matrix entry stored divided by 3, in the
/// element order 1, a, a^2, b, ab, a^2 b. rho is the degree-2 representation
///   rho(a) = (-2 -3; 1 1),  rho(b) = (1 0; -1 -1).
std::vector<std::vector<Integer>> s3_wedderburn_images();

/// Generators of the congruence lattice x = y mod 2, x = a mod 3, y = d mod 3
/// on coordinates (x, y, a, b, c, d).
std::vector<std::vector<Integer>> s3_congruence_generators();

struct S3LatticeScenario {
  IntegerLattice image_lattice;
  IntegerLattice congruence_lattice;
  bool equal = false;
  Integer index;
};

/// Recomputes the image of ZS3 under the Wedderburn map as an integer
/// lattice and verifies the congruence description generates the same one.
S3LatticeScenario run_s3_lattice();

struct S3UnitScenario {
  std::vector<Integer> word_coefficients;  // on 1, a, a^2, b, ab, a^2 b
  long order = 0;
  std::vector<Rational> partial_augmentations;  // per table class
  bool identity_coefficient_zero = false;
  MrswResult mrsw;
  bool is_unique_order_solution = false;  // matches the solver's only branch
};

/// Constructs the unit with image (1, -1, diag(1, -1)) by solving the integer
/// system over the images of the group elements, then verifies its order,
/// partial augmentations and rational conjugacy, and checks the measured
/// tuple against the solver's order-2 solution set.
S3UnitScenario run_s3_unit(const CharacterTable& s3);

struct A5Order5Scenario {
  std::string character;
  MultiplicityForm form_i1, form_i2;
  SolutionSet solutions;
};

/// Reruns the order-5 computation with the single degree-3 character whose
/// value at an order-5 class is -zeta_5 - zeta_5^{-1}.
A5Order5Scenario run_a5_order5(const CharacterTable& a5);

}  // namespace zgu
