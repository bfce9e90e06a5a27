#pragma once

#include <optional>
#include <vector>

#include "zgu/numeric.hpp"

namespace zgu {

/// Row lattice in Hermite normal form: rows in echelon order, positive
/// pivots, entries above each pivot reduced into [0, pivot).
struct IntegerLattice {
  long ambient_dimension = 0;
  std::vector<std::vector<Integer>> basis;

  bool operator==(const IntegerLattice&) const = default;
};

/// Hermite normal form of the row span; the span is unchanged.
IntegerLattice hnf(std::vector<std::vector<Integer>> rows);

/// Exact membership by back-substitution against the HNF basis.
bool lattice_membership(const IntegerLattice& lattice, const std::vector<Integer>& v);

/// Integer coefficients expressing `target` in the given generators, or
/// nullopt when the target lies outside their span. Uses HNF row reduction
/// with unimodular bookkeeping.
std::optional<std::vector<Integer>> solve_preimage(
    const std::vector<std::vector<Integer>>& generators, const std::vector<Integer>& target);

/// Index [Z^n : L] for a full-rank lattice (product of the HNF pivots);
/// zero when the rank is deficient.
Integer lattice_index(const IntegerLattice& lattice);

}  // namespace zgu
