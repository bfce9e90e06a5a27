#include "zgu/lattice.hpp"

namespace zgu {

namespace {

// Row-reduce `rows` to HNF in place. When `transform` is non-null it starts
// as the identity and receives the same row operations, so that afterwards
// transform * original = reduced.
long hnf_in_place(std::vector<std::vector<Integer>>& rows,
                  std::vector<std::vector<Integer>>* transform) {
  if (rows.empty()) return 0;
  const long m = static_cast<long>(rows.size());
  const long dim = static_cast<long>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<long>(r.size()) != dim)
      throw DimensionMismatchError("lattice generators have inconsistent lengths");

  auto row_op = [&](long dst, long src, const Integer& q) {
    for (long c = 0; c < dim; ++c) rows[dst][c] -= q * rows[src][c];
    if (transform)
      for (long c = 0; c < m; ++c) (*transform)[dst][c] -= q * (*transform)[src][c];
  };
  auto row_swap = [&](long a, long b) {
    std::swap(rows[a], rows[b]);
    if (transform) std::swap((*transform)[a], (*transform)[b]);
  };
  auto row_negate = [&](long a) {
    for (auto& x : rows[a]) x = -x;
    if (transform)
      for (auto& x : (*transform)[a]) x = -x;
  };

  long rank = 0;
  for (long col = 0; col < dim && rank < m; ++col) {
    // Euclidean elimination below the pivot row
    while (true) {
      long best = -1;
      for (long r = rank; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        if (best < 0 || cmp(abs(rows[r][col]), abs(rows[best][col])) < 0) best = r;
      }
      if (best < 0) break;
      row_swap(rank, best);
      bool others = false;
      for (long r = rank + 1; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        others = true;
        row_op(r, rank, floor_div(rows[r][col], rows[rank][col]));
      }
      if (!others) break;
    }
    if (rows[rank][col] == 0) continue;
    if (rows[rank][col] < 0) row_negate(rank);
    for (long r = 0; r < rank; ++r) {
      Integer q = floor_div(rows[r][col], rows[rank][col]);
      if (q != 0) row_op(r, rank, q);
    }
    ++rank;
  }
  return rank;
}

// Back-substitute v against HNF rows; returns per-row coefficients, or
// nullopt when v is outside the span.
std::optional<std::vector<Integer>> reduce_against(
    const std::vector<std::vector<Integer>>& basis, std::vector<Integer> v) {
  std::vector<Integer> coeffs(basis.size(), Integer(0));
  for (std::size_t r = 0; r < basis.size(); ++r) {
    long pivot_col = -1;
    for (std::size_t c = 0; c < basis[r].size(); ++c)
      if (basis[r][c] != 0) {
        pivot_col = static_cast<long>(c);
        break;
      }
    if (pivot_col < 0) continue;
    const Integer& pivot = basis[r][pivot_col];
    if (v[pivot_col] % pivot != 0) return std::nullopt;
    Integer q = v[pivot_col] / pivot;
    if (q != 0)
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * basis[r][c];
    coeffs[r] = q;
  }
  for (const auto& x : v)
    if (x != 0) return std::nullopt;
  return coeffs;
}

}  // namespace

IntegerLattice hnf(std::vector<std::vector<Integer>> rows) {
  IntegerLattice lattice;
  lattice.ambient_dimension = rows.empty() ? 0 : static_cast<long>(rows[0].size());
  long rank = hnf_in_place(rows, nullptr);
  rows.resize(rank);
  lattice.basis = std::move(rows);
  return lattice;
}

bool lattice_membership(const IntegerLattice& lattice, const std::vector<Integer>& v) {
  if (static_cast<long>(v.size()) != lattice.ambient_dimension)
    throw DimensionMismatchError("vector length does not match the ambient dimension");
  return reduce_against(lattice.basis, v).has_value();
}

std::optional<std::vector<Integer>> solve_preimage(
    const std::vector<std::vector<Integer>>& generators, const std::vector<Integer>& target) {
  if (generators.empty()) return std::nullopt;
  const long m = static_cast<long>(generators.size());
  if (generators[0].size() != target.size())
    throw DimensionMismatchError("target length does not match the generators");

  std::vector<std::vector<Integer>> rows = generators;
  std::vector<std::vector<Integer>> transform(m, std::vector<Integer>(m, Integer(0)));
  for (long i = 0; i < m; ++i) transform[i][i] = 1;
  long rank = hnf_in_place(rows, &transform);
  rows.resize(rank);

  auto coeffs_on_basis = reduce_against(rows, target);
  if (!coeffs_on_basis) return std::nullopt;
  std::vector<Integer> coeffs(m, Integer(0));
  for (long r = 0; r < rank; ++r) {
    if ((*coeffs_on_basis)[r] == 0) continue;
    for (long c = 0; c < m; ++c) coeffs[c] += (*coeffs_on_basis)[r] * transform[r][c];
  }
  return coeffs;
}

Integer lattice_index(const IntegerLattice& lattice) {
  if (static_cast<long>(lattice.basis.size()) != lattice.ambient_dimension) return 0;
  Integer index(1);
  for (const auto& row : lattice.basis) {
    for (const auto& x : row)
      if (x != 0) {
        index *= x;
        break;
      }
  }
  return index;
}

}  // namespace zgu
