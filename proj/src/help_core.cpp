#include "zgu/help_core.hpp"

#include <algorithm>
#include <optional>

#include "zgu/cyclotomic.hpp"

namespace zgu {

bool PAVector::is_trivial() const {
  int ones = 0;
  for (const auto& [cls, value] : entries) {
    if (value == 1) ++ones;
    else if (value != 0) return false;
  }
  return ones == 1;
}

bool operator<(const PAVector& a, const PAVector& b) {
  if (a.effective_order != b.effective_order) return a.effective_order < b.effective_order;
  return std::lexicographical_compare(
      a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
      [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second < y.second;
      });
}

bool PABranch::is_trivial() const {
  for (const auto& [d, vec] : assignments)
    if (!vec.is_trivial()) return false;
  return true;
}

bool operator<(const PABranch& a, const PABranch& b) {
  if (a.order != b.order) return a.order < b.order;
  return std::lexicographical_compare(
      a.assignments.begin(), a.assignments.end(), b.assignments.begin(), b.assignments.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

Rational evaluate(const MultiplicityForm& form, const PAVector& top) {
  Rational value = form.constant;
  for (const auto& [cls, coeff] : form.coefficients) {
    auto it = top.entries.find(cls);
    if (it != top.entries.end()) value += coeff * Rational(it->second);
  }
  return value;
}

const char* to_string(SolutionStatus status) {
  switch (status) {
    case SolutionStatus::NoUnits: return "NoUnits";
    case SolutionStatus::AllRationallyTrivial: return "AllRationallyTrivial";
    case SolutionStatus::Critical: return "Critical";
  }
  return "?";
}

const char* to_string(VerdictValue verdict) {
  return verdict == VerdictValue::Positive ? "Positive" : "Inconclusive";
}

std::vector<int> admissible_classes(const CharacterTable& table, long m) {
  std::vector<int> out;
  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    const long o = table.classes[i].element_order;
    if (m == 1 ? o == 1 : (m % o == 0 && o > 1)) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

PAVector identity_vector(const CharacterTable& table) {
  PAVector v;
  v.effective_order = 1;
  for (int c : admissible_classes(table, 1)) v.entries[c] = 1;
  return v;
}

Rational character_degree(const CharacterTable& table, int character) {
  int identity = admissible_classes(table, 1).front();
  return value_at_conductor(table.characters[character].values[identity], 1).rational_value();
}

}  // namespace

std::vector<MultiplicityForm> build_multiplicity_forms(const CharacterTable& table, int character,
                                                       long n, const PABranch& branch) {
  const Character& chi = table.characters[character];
  std::vector<MultiplicityForm> forms(n);

  // proper-power contributions: S_d = sum_C eps_C(u^d) chi(C) at conductor n/d
  std::vector<std::pair<long, Cyclotomic>> proper_sums;  // (d, S_d)
  for (long d : divisors_of(n)) {
    if (d == 1) continue;
    const long m = n / d;
    auto it = branch.assignments.find(d);
    if (it == branch.assignments.end())
      throw Error("branch is missing the assignment for divisor " + std::to_string(d));
    Cyclotomic sum(m, std::vector<Rational>(euler_phi(m), Rational(0)));
    for (const auto& [cls, eps] : it->second.entries) {
      if (eps == 0) continue;
      sum = sum + Rational(eps) * value_at_conductor(chi.values[cls], m);
    }
    proper_sums.emplace_back(d, sum);
  }

  const auto admissible = admissible_classes(table, n);
  std::vector<Cyclotomic> lifted;
  lifted.reserve(admissible.size());
  for (int cls : admissible) lifted.push_back(value_at_conductor(chi.values[cls], n));

  const Rational inv_n = make_rational(1, n);
  for (long i = 0; i < n; ++i) {
    MultiplicityForm& form = forms[i];
    form.character = character;
    form.root_exponent = i;
    for (std::size_t a = 0; a < admissible.size(); ++a)
      form.coefficients[admissible[a]] =
          inv_n * trace_to_rationals(lifted[a] * root_power(n, -i));
    Rational constant(0);
    for (const auto& [d, sum] : proper_sums)
      constant += trace_to_rationals(sum * root_power(n / d, -i));
    form.constant = inv_n * constant;
  }
  return forms;
}

bool cohn_livingstone_filter(const CharacterTable& table, long n, const PAVector& v) {
  if (n == 1) return true;
  auto order_sum = [&](long target_order) {
    Integer sum(0);
    for (const auto& [cls, value] : v.entries)
      if (table.classes[cls].element_order == target_order) sum += value;
    return sum;
  };
  const auto primes = prime_divisors(n);
  if (primes.size() == 1) {
    const long p = primes[0];
    long a = 0;
    for (long m = n; m % p == 0; m /= p) ++a;
    for (long b = 0, pb = 1; b <= a; ++b, pb *= p) {
      Integer want(b == a ? 1 : 0);
      if ((order_sum(pb) - want) % p != 0) return false;
    }
    return true;
  }
  for (long p : primes)
    for (long pb = p; n % pb == 0; pb *= p)
      if (order_sum(pb) % p != 0) return false;
  return true;
}

PABranch trivial_branch(const CharacterTable& table, int cls) {
  const long n = table.classes[cls].element_order;
  PABranch branch;
  branch.order = n;
  for (long d : divisors_of(n)) {
    PAVector v;
    v.effective_order = n / d;
    for (int c : admissible_classes(table, n / d)) v.entries[c] = 0;
    v.entries.at(power_class(table, cls, d)) = 1;
    branch.assignments[d] = v;
  }
  return branch;
}

PABranch relabel_branch(const CharacterTable& table, const PABranch& branch, long k) {
  PABranch out;
  out.order = branch.order;
  for (const auto& [d, vec] : branch.assignments) {
    PAVector w;
    w.effective_order = vec.effective_order;
    for (const auto& [cls, value] : vec.entries) w.entries[cls] = 0;
    for (const auto& [cls, value] : vec.entries)
      w.entries.at(power_class(table, cls, k)) += value;
    out.assignments[d] = w;
  }
  return out;
}

namespace {

// One scaled constraint: 0 <= sum coeff*x + constant <= upper, and the
// affine value must vanish modulo `modulus`.
struct Row {
  std::vector<Integer> coeff;
  Integer constant;
  Integer upper;
  Integer modulus;
};

struct Box {
  std::vector<std::optional<Integer>> lo, hi;
};

// Initial finite box for the variables. Every constraint is two-sided, so
// after eliminating the last variable through sum(eps) = 1 the feasible
// region is bounded iff the reduced coefficient matrix has full column rank;
// in that case interval arithmetic through an inverted independent square
// subsystem yields a sound outer box. Returns nullopt when the region has a
// recession direction (the UnboundedSystem diagnostic).
std::optional<Box> initial_box(const std::vector<Row>& char_rows, std::size_t nvars) {
  Box box;
  box.lo.assign(nvars, std::nullopt);
  box.hi.assign(nvars, std::nullopt);
  if (nvars == 1) {
    box.lo[0] = 1;  // forced by the augmentation sum
    box.hi[0] = 1;
    return box;
  }
  const std::size_t m = nvars - 1;

  // reduced rows: coeff'_j = t_j - t_last, constant' = s + t_last, in [0, U]
  struct Reduced {
    std::vector<Rational> coeff;
    Rational constant;
    Rational upper;
  };
  std::vector<Reduced> reduced;
  for (const auto& row : char_rows) {
    Reduced r;
    r.coeff.resize(m);
    bool nonzero = false;
    for (std::size_t j = 0; j < m; ++j) {
      r.coeff[j] = Rational(row.coeff[j] - row.coeff[nvars - 1]);
      if (r.coeff[j] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    r.constant = Rational(row.constant + row.coeff[nvars - 1]);
    r.upper = Rational(row.upper);
    reduced.push_back(std::move(r));
  }

  // greedy selection of m independent rows by Gaussian elimination
  std::vector<std::size_t> selected;
  std::vector<std::vector<Rational>> elim;
  for (std::size_t r = 0; r < reduced.size() && selected.size() < m; ++r) {
    std::vector<Rational> cand = reduced[r].coeff;
    for (std::size_t e = 0; e < elim.size(); ++e) {
      std::size_t pivot = 0;
      while (pivot < m && elim[e][pivot] == 0) ++pivot;
      if (pivot < m && cand[pivot] != 0) {
        Rational f = cand[pivot] / elim[e][pivot];
        for (std::size_t j = 0; j < m; ++j) cand[j] -= f * elim[e][j];
      }
    }
    bool nonzero = false;
    for (const auto& x : cand)
      if (x != 0) { nonzero = true; break; }
    if (nonzero) {
      elim.push_back(std::move(cand));
      selected.push_back(r);
    }
  }
  if (selected.size() < m) return std::nullopt;

  // invert the selected square system exactly
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(2 * m, Rational(0)));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < m; ++j) aug[r][j] = reduced[selected[r]].coeff[j];
    aug[r][m + r] = 1;
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t sel = col;
    while (sel < m && aug[sel][col] == 0) ++sel;
    if (sel == m) return std::nullopt;
    std::swap(aug[sel], aug[col]);
    Rational inv = 1 / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (std::size_t j = 0; j < 2 * m; ++j) aug[r][j] -= f * aug[col][j];
    }
  }

  // y = inverse * (z - c) with z_k in [0, U_k]
  Rational sum_lo(0), sum_hi(0);
  for (std::size_t j = 0; j < m; ++j) {
    Rational lo(0), hi(0);
    for (std::size_t k = 0; k < m; ++k) {
      const Rational& w = aug[j][m + k];
      if (w == 0) continue;
      const Rational& c = reduced[selected[k]].constant;
      const Rational& u = reduced[selected[k]].upper;
      Rational at_zero = w * (-c);
      Rational at_upper = w * (u - c);
      if (at_zero <= at_upper) {
        lo += at_zero;
        hi += at_upper;
      } else {
        lo += at_upper;
        hi += at_zero;
      }
    }
    box.lo[j] = ceil_rational(lo);
    box.hi[j] = floor_rational(hi);
    sum_lo += lo;
    sum_hi += hi;
  }
  box.lo[nvars - 1] = ceil_rational(Rational(1) - sum_hi);
  box.hi[nvars - 1] = floor_rational(Rational(1) - sum_lo);
  return box;
}

// Tightens `box` against every row to a fixpoint. Returns false when some
// interval becomes empty.
bool propagate(const std::vector<Row>& rows, Box& box) {
  const std::size_t nvars = box.lo.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < nvars; ++j) {
        const Integer& c = row.coeff[j];
        if (c == 0) continue;
        // extreme values of the other terms
        Integer others_min(0), others_max(0);
        bool min_finite = true, max_finite = true;
        for (std::size_t t = 0; t < nvars && (min_finite || max_finite); ++t) {
          if (t == j || row.coeff[t] == 0) continue;
          const Integer& ct = row.coeff[t];
          const auto& lo_end = (ct > 0) ? box.lo[t] : box.hi[t];
          const auto& hi_end = (ct > 0) ? box.hi[t] : box.lo[t];
          if (lo_end) others_min += ct * (*lo_end); else min_finite = false;
          if (hi_end) others_max += ct * (*hi_end); else max_finite = false;
        }
        if (max_finite) {
          // c*x >= -constant - others_max
          Integer bound = -row.constant - others_max;
          if (c > 0) {
            Integer lo = ceil_div(bound, c);
            if (!box.lo[j] || lo > *box.lo[j]) { box.lo[j] = lo; changed = true; }
          } else {
            Integer hi = floor_div(bound, c);
            if (!box.hi[j] || hi < *box.hi[j]) { box.hi[j] = hi; changed = true; }
          }
        }
        if (min_finite) {
          // c*x <= upper - constant - others_min
          Integer bound = row.upper - row.constant - others_min;
          if (c > 0) {
            Integer hi = floor_div(bound, c);
            if (!box.hi[j] || hi < *box.hi[j]) { box.hi[j] = hi; changed = true; }
          } else {
            Integer lo = ceil_div(bound, c);
            if (!box.lo[j] || lo > *box.lo[j]) { box.lo[j] = lo; changed = true; }
          }
        }
        if (box.lo[j] && box.hi[j] && *box.lo[j] > *box.hi[j]) return false;
      }
    }
  }
  return true;
}

struct Searcher {
  const std::vector<Row>& rows;
  SolveStats* stats;
  std::vector<std::vector<Integer>> found;

  void search(Box box) {
    if (!propagate(rows, box)) return;
    const std::size_t nvars = box.lo.size();
    long pick = -1;
    Integer best_width(-1);
    for (std::size_t j = 0; j < nvars; ++j) {
      if (!box.lo[j] || !box.hi[j])
        throw Error("internal: search entered with an unbounded interval");
      Integer width = *box.hi[j] - *box.lo[j];
      if (width > 0 && (pick < 0 || width < best_width)) {
        pick = static_cast<long>(j);
        best_width = width;
      }
    }
    if (pick < 0) {
      // fully assigned: exact divisibility checks
      std::vector<Integer> assignment(nvars);
      for (std::size_t j = 0; j < nvars; ++j) assignment[j] = *box.lo[j];
      for (const auto& row : rows) {
        Integer value = row.constant;
        for (std::size_t j = 0; j < nvars; ++j) value += row.coeff[j] * assignment[j];
        if (value < 0 || value > row.upper || value % row.modulus != 0) return;
      }
      found.push_back(std::move(assignment));
      return;
    }
    if (stats) ++stats->branch_nodes;
    for (Integer v = *box.lo[pick]; v <= *box.hi[pick]; ++v) {
      Box child = box;
      child.lo[pick] = v;
      child.hi[pick] = v;
      search(std::move(child));
    }
  }
};

std::vector<int> selected_characters(const CharacterTable& table, const SolveOptions& options) {
  if (!options.characters.empty()) return options.characters;
  std::vector<int> all(table.characters.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return all;
}

// All coherent combinations of one solution branch per prime divisor,
// assembled into assignments for every proper divisor d > 1 of n.
std::vector<std::map<long, PAVector>> proper_assignments(
    long n, const std::map<long, SolutionSet>& proper_solutions) {
  const auto primes = prime_divisors(n);
  std::vector<std::map<long, PAVector>> combos;
  std::vector<std::size_t> pick(primes.size(), 0);
  while (true) {
    std::map<long, PAVector> assignment;
    bool coherent = true;
    for (long d : divisors_of(n)) {
      if (d == 1) continue;
      std::optional<PAVector> vec;
      for (std::size_t pi = 0; pi < primes.size() && coherent; ++pi) {
        if (d % primes[pi] != 0) continue;
        const PABranch& branch =
            proper_solutions.at(n / primes[pi]).solutions[pick[pi]];
        const PAVector& candidate = branch.assignments.at(d / primes[pi]);
        if (!vec) vec = candidate;
        else if (!(*vec == candidate)) coherent = false;
      }
      if (!coherent) break;
      assignment[d] = *vec;
    }
    if (coherent) combos.push_back(std::move(assignment));
    // advance the mixed-radix counter over solution picks
    std::size_t i = 0;
    for (; i < primes.size(); ++i) {
      if (++pick[i] < proper_solutions.at(n / primes[i]).solutions.size()) break;
      pick[i] = 0;
    }
    if (i == primes.size()) break;
  }
  return combos;
}

}  // namespace

SolutionSet solve_order(const CharacterTable& table, long n,
                        const std::map<long, SolutionSet>& proper_solutions,
                        const SolveOptions& options, SolveStats* stats) {
  SolutionSet result;
  result.order = n;
  if (n == 1) {
    PABranch branch;
    branch.order = 1;
    branch.assignments[1] = identity_vector(table);
    result.solutions.push_back(std::move(branch));
    result.status = SolutionStatus::AllRationallyTrivial;
    return result;
  }

  for (long p : prime_divisors(n)) {
    auto it = proper_solutions.find(n / p);
    if (it == proper_solutions.end())
      throw Error("solve_order(" + std::to_string(n) + ") needs the solution set for order " +
                  std::to_string(n / p));
    if (it->second.status == SolutionStatus::NoUnits) {
      result.status = SolutionStatus::NoUnits;
      return result;
    }
  }

  const auto characters = selected_characters(table, options);
  const auto admissible = admissible_classes(table, n);
  const std::size_t nvars = admissible.size();

  for (auto& assignment : proper_assignments(n, proper_solutions)) {
    PABranch partial;
    partial.order = n;
    partial.assignments = assignment;

    std::vector<Row> char_rows;
    bool combo_feasible = true;
    for (int chi : characters) {
      const Rational deg = character_degree(table, chi);
      auto forms = build_multiplicity_forms(table, chi, n, partial);
      for (const auto& form : forms) {
        // scale mu = sum coeff*eps + constant to integer coefficients; the
        // scaled value must land in [0, scale*n*deg] and vanish mod scale*n
        Integer scale(1);
        for (const auto& [cls, coeff] : form.coefficients)
          scale = lcm_integer(scale, coeff.get_den());
        scale = lcm_integer(scale, form.constant.get_den());
        Row row;
        row.coeff.assign(nvars, Integer(0));
        bool any_coeff = false;
        for (std::size_t j = 0; j < nvars; ++j) {
          Rational scaled = Rational(scale) * Rational(n) * form.coefficients.at(admissible[j]);
          row.coeff[j] = scaled.get_num();
          if (row.coeff[j] != 0) any_coeff = true;
        }
        Rational scaled_const = Rational(scale) * Rational(n) * form.constant;
        row.constant = scaled_const.get_num();
        row.modulus = scale * n;
        Rational scaled_upper = Rational(scale) * Rational(n) * deg;
        row.upper = scaled_upper.get_num();
        if (!any_coeff) {
          // constant multiplicity, fixed entirely by the proper powers
          if (row.constant < 0 || row.constant > row.upper ||
              row.constant % row.modulus != 0) {
            combo_feasible = false;
            break;
          }
          continue;
        }
        char_rows.push_back(std::move(row));
      }
      if (!combo_feasible) break;
    }
    if (!combo_feasible) continue;

    auto box = initial_box(char_rows, nvars);
    if (!box)
      throw UnboundedSystemError("the selected characters leave the order-" + std::to_string(n) +
                                 " system unbounded; add more characters");

    std::vector<Row> rows;
    Row sum_row;  // augmentation: sum eps = 1
    sum_row.coeff.assign(nvars, Integer(1));
    sum_row.constant = -1;
    sum_row.upper = 0;
    sum_row.modulus = 1;
    rows.push_back(std::move(sum_row));
    for (auto& row : char_rows) rows.push_back(std::move(row));
    if (stats) stats->constraints += static_cast<long>(rows.size());

    Searcher searcher{rows, stats, {}};
    searcher.search(std::move(*box));

    for (const auto& assignment_values : searcher.found) {
      PAVector top;
      top.effective_order = n;
      for (std::size_t j = 0; j < nvars; ++j) top.entries[admissible[j]] = assignment_values[j];
      if (!cohn_livingstone_filter(table, n, top)) continue;
      // eigenvalue count per character: sum_i mu_i = chi(1), an internal
      // identity of the trace machinery
      bool consistent = true;
      for (int chi : characters) {
        Rational total(0);
        for (const auto& form : build_multiplicity_forms(table, chi, n, partial))
          total += evaluate(form, top);
        if (total != character_degree(table, chi)) { consistent = false; break; }
      }
      if (!consistent)
        throw Error("multiplicity sum mismatch: trace computation is inconsistent");
      PABranch full = partial;
      full.assignments[1] = std::move(top);
      result.solutions.push_back(std::move(full));
    }
  }

  std::sort(result.solutions.begin(), result.solutions.end());
  result.solutions.erase(std::unique(result.solutions.begin(), result.solutions.end()),
                         result.solutions.end());
  if (result.solutions.empty()) {
    result.status = SolutionStatus::NoUnits;
  } else {
    result.status = SolutionStatus::AllRationallyTrivial;
    for (const auto& branch : result.solutions)
      if (!branch.is_trivial()) {
        result.status = SolutionStatus::Critical;
        break;
      }
  }
  return result;
}

std::map<long, SolutionSet> solve_all(const CharacterTable& table, const SolveOptions& options,
                                      SolveStats* stats) {
  std::map<long, SolutionSet> results;
  for (long n : divisors_of(exponent(table)))
    results[n] = solve_order(table, n, results, options, stats);
  return results;
}

Verdicts verdicts(const std::map<long, SolutionSet>& results, const CharacterTable& table) {
  Verdicts v;
  v.group_spectrum = spectrum(table);
  bool any_critical = false;
  for (const auto& [n, set] : results) {
    if (!set.solutions.empty()) v.surviving_orders.insert(n);
    if (set.status == SolutionStatus::Critical) any_critical = true;
    for (const auto& branch : set.solutions)
      if (!branch.is_trivial()) v.critical.push_back(branch);
  }
  v.zp1 = any_critical ? VerdictValue::Inconclusive : VerdictValue::Positive;
  v.spp = (v.surviving_orders == v.group_spectrum) ? VerdictValue::Positive
                                                   : VerdictValue::Inconclusive;
  v.group_graph = prime_graph(table);
  v.unit_graph = prime_graph_of_orders(v.surviving_orders);
  v.pgq = (v.unit_graph == v.group_graph) ? VerdictValue::Positive : VerdictValue::Inconclusive;
  return v;
}

}  // namespace zgu
