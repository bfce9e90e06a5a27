#pragma once

#include <map>
#include <set>

#include "zgu/group_data.hpp"

namespace zgu {

/// Integer partial augmentations of one power u^d, keyed by class index.
/// Entries cover exactly the admissible classes for the effective order
/// (zero entries are stored, so equal vectors have equal key sets).
struct PAVector {
  long effective_order = 1;
  std::map<int, Integer> entries;

  bool operator==(const PAVector&) const = default;
  bool is_trivial() const;  // 0/1 vector with a single 1
};

bool operator<(const PAVector& a, const PAVector& b);

/// Assignment of a PAVector to every divisor power u^d of a candidate unit
/// of order `order`; the vector at d has effective order order/d, and d =
/// order always maps to the identity-class vector.
struct PABranch {
  long order = 1;
  std::map<long, PAVector> assignments;

  bool operator==(const PABranch&) const = default;
  bool is_trivial() const;
};

bool operator<(const PABranch& a, const PABranch& b);

/// One eigenvalue multiplicity as an affine form in the unknown top-level
/// partial augmentations: mu = sum_C coefficients[C] * eps_C + constant.
/// The constant collects the contributions of all proper-power terms.
struct MultiplicityForm {
  int character = 0;
  long root_exponent = 0;
  std::map<int, Rational> coefficients;
  Rational constant = Rational(0);
};

Rational evaluate(const MultiplicityForm& form, const PAVector& top);

enum class SolutionStatus { NoUnits, AllRationallyTrivial, Critical };
const char* to_string(SolutionStatus status);

struct SolutionSet {
  long order = 1;
  std::vector<PABranch> solutions;  // sorted lexicographically
  SolutionStatus status = SolutionStatus::NoUnits;
};

struct SolveOptions {
  /// Character indices to constrain with; empty means every character.
  std::vector<int> characters;
};

struct SolveStats {
  long branch_nodes = 0;  // decision points taken by the backtracking search
  long constraints = 0;   // linear constraint rows built
};

/// Classes that can carry a nonzero partial augmentation for a unit of
/// order m: element order divides m, and the identity class only for m = 1.
std::vector<int> admissible_classes(const CharacterTable& table, long m);

/// The n multiplicity forms (root exponents 0..n-1) of one character for a
/// candidate order n, with all proper-power vectors fixed by `branch`.
/// Throws NotInSubfieldError when a character value fails the conductor
/// restriction the formula requires.
std::vector<MultiplicityForm> build_multiplicity_forms(const CharacterTable& table, int character,
                                                       long n, const PABranch& branch);

/// Prime-power congruences on the class sums of v: for n = p^a the sum over
/// classes of order exactly p^b must be delta_{b,a} mod p; when n is not a
/// prime power every such sum must vanish mod p for every prime p | n.
bool cohn_livingstone_filter(const CharacterTable& table, long n, const PAVector& v);

/// The PABranch induced by the trivial unit of the given class.
PABranch trivial_branch(const CharacterTable& table, int cls);

/// Relabeling induced by u -> u^k for gcd(k, order) = 1; maps solutions to
/// solutions (the Galois action on the solution set).
PABranch relabel_branch(const CharacterTable& table, const PABranch& branch, long k);

/// Enumerates every integer partial-augmentation assignment for order n that
/// satisfies the augmentation sum, the multiplicity constraints of the
/// selected characters, and the Cohn-Livingstone congruences, on top of every
/// coherent combination of proper-divisor solutions. Throws
/// UnboundedSystemError when the selected characters leave a variable's
/// feasible interval infinite.
SolutionSet solve_order(const CharacterTable& table, long n,
                        const std::map<long, SolutionSet>& proper_solutions,
                        const SolveOptions& options = {}, SolveStats* stats = nullptr);

/// solve_order over every divisor of the exponent, in increasing order.
std::map<long, SolutionSet> solve_all(const CharacterTable& table,
                                      const SolveOptions& options = {},
                                      SolveStats* stats = nullptr);

enum class VerdictValue { Positive, Inconclusive };
const char* to_string(VerdictValue verdict);

struct Verdicts {
  VerdictValue zp1 = VerdictValue::Inconclusive;
  VerdictValue spp = VerdictValue::Inconclusive;
  VerdictValue pgq = VerdictValue::Inconclusive;
  std::set<long> surviving_orders;
  std::set<long> group_spectrum;
  PrimeGraph unit_graph;
  PrimeGraph group_graph;
  std::vector<PABranch> critical;  // surviving non-trivial branches
};

Verdicts verdicts(const std::map<long, SolutionSet>& results, const CharacterTable& table);

}  // namespace zgu
