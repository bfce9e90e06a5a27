#include "zgu/perm_group.hpp"

#include <algorithm>
#include <numeric>

namespace zgu {

Permutation perm_identity(int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation perm_compose(const Permutation& f, const Permutation& g) {
  Permutation r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

Permutation perm_inverse(const Permutation& f) {
  Permutation r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<int>(i);
  return r;
}

Permutation perm_from_cycles(const std::vector<std::vector<long>>& cycles, int degree) {
  Permutation p = perm_identity(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      long from = cyc[i] - 1;
      long to = cyc[(i + 1) % cyc.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw SchemaError("cycle point outside permutation degree");
      p[from] = static_cast<int>(to);
    }
  }
  // reject overlapping cycles that stopped p being a bijection
  std::vector<char> seen(degree, 0);
  for (int img : p) {
    if (seen[img]) throw SchemaError("cycle lists do not define a permutation");
    seen[img] = 1;
  }
  return p;
}

long perm_order(const Permutation& f) {
  std::vector<char> seen(f.size(), 0);
  long order = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = f[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

int EnumeratedGroup::index_of(const Permutation& p) const {
  auto it = element_index.find(p);
  return it == element_index.end() ? -1 : it->second;
}

int EnumeratedGroup::mult(int a, int b) const {
  return index_of(perm_compose(elements[a], elements[b]));
}

long EnumeratedGroup::group_exponent() const {
  long e = 1;
  for (const auto& c : classes) e = std::lcm(e, c.element_order);
  return e;
}

EnumeratedGroup enumerate_group(const std::vector<Permutation>& generators,
                                const EnumLimits& limits) {
  EnumeratedGroup g;
  g.degree = generators.empty() ? 1 : static_cast<int>(generators[0].size());
  if (g.degree > limits.max_degree)
    throw GroupTooLargeError("permutation degree " + std::to_string(g.degree) + " exceeds cap " +
                             std::to_string(limits.max_degree));
  for (const auto& gen : generators)
    if (static_cast<int>(gen.size()) != g.degree)
      throw DimensionMismatchError("generators act on different point sets");

  // closure under right multiplication by generators
  g.elements.push_back(perm_identity(g.degree));
  g.element_index[g.elements[0]] = 0;
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = perm_compose(g.elements[head], gen);
      if (g.element_index.count(next)) continue;
      if (static_cast<long>(g.elements.size()) + 1 > limits.max_order)
        throw GroupTooLargeError("generated group exceeds order cap " +
                                 std::to_string(limits.max_order));
      g.element_index[next] = static_cast<int>(g.elements.size());
      g.elements.push_back(std::move(next));
    }
  }

  const long n = g.order();
  g.inverse.resize(n);
  for (long i = 0; i < n; ++i) g.inverse[i] = g.index_of(perm_inverse(g.elements[i]));

  // conjugacy classes: orbits of conjugation by the generators
  g.class_of.assign(n, -1);
  for (long start = 0; start < n; ++start) {
    if (g.class_of[start] >= 0) continue;
    const int cls = static_cast<int>(g.classes.size());
    std::vector<long> orbit{start};
    g.class_of[start] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& gen : generators) {
        Permutation conj =
            perm_compose(perm_compose(gen, g.elements[orbit[head]]), perm_inverse(gen));
        long idx = g.index_of(conj);
        if (g.class_of[idx] < 0) {
          g.class_of[idx] = cls;
          orbit.push_back(idx);
        }
      }
    }
    ComputedClass c;
    c.representative = static_cast<int>(start);
    c.size = static_cast<long>(orbit.size());
    c.element_order = perm_order(g.elements[start]);
    long centralizer = 0;
    for (long h = 0; h < n; ++h)
      if (perm_compose(g.elements[h], g.elements[start]) ==
          perm_compose(g.elements[start], g.elements[h]))
        ++centralizer;
    c.centralizer_order = centralizer;
    g.classes.push_back(std::move(c));
  }

  // prime power maps by direct powering of representatives
  for (long p : prime_divisors(g.group_exponent())) {
    for (auto& c : g.classes) {
      Permutation power = perm_identity(g.degree);
      for (long i = 0; i < p; ++i) power = perm_compose(power, g.elements[c.representative]);
      c.power_maps[p] = g.class_of[g.index_of(power)];
    }
  }
  return g;
}

EnumeratedGroup enumerate_group_from_cycles(
    const std::vector<std::vector<std::vector<long>>>& cycle_lists, const EnumLimits& limits) {
  long degree = 1;
  for (const auto& cycles : cycle_lists)
    for (const auto& cyc : cycles)
      for (long pt : cyc) degree = std::max(degree, pt);
  if (degree > limits.max_degree)
    throw GroupTooLargeError("permutation degree " + std::to_string(degree) + " exceeds cap " +
                             std::to_string(limits.max_degree));
  std::vector<Permutation> gens;
  for (const auto& cycles : cycle_lists)
    gens.push_back(perm_from_cycles(cycles, static_cast<int>(degree)));
  return enumerate_group(gens, limits);
}

std::vector<ComputedClass> classes_from_permutations(
    const std::vector<std::vector<std::vector<long>>>& cycle_lists, const EnumLimits& limits) {
  return enumerate_group_from_cycles(cycle_lists, limits).classes;
}

namespace {

bool assignment_consistent(const EnumeratedGroup& group, const CharacterTable& table,
                           const std::vector<int>& assign) {
  for (std::size_t c = 0; c < group.classes.size(); ++c) {
    if (assign[c] < 0) continue;
    for (const auto& [p, target] : group.classes[c].power_maps) {
      if (assign[target] < 0) continue;
      auto it = table.classes[assign[c]].power_maps.find(p);
      if (it == table.classes[assign[c]].power_maps.end()) continue;
      if (it->second != assign[target]) return false;
    }
  }
  return true;
}

void search_assignments(const EnumeratedGroup& group, const CharacterTable& table,
                        const std::vector<std::vector<int>>& candidates, std::size_t c,
                        std::vector<int>& assign, std::vector<char>& used,
                        std::vector<std::vector<int>>& found) {
  if (found.size() >= 2) return;
  if (c == group.classes.size()) {
    found.push_back(assign);
    return;
  }
  for (int t : candidates[c]) {
    if (used[t]) continue;
    assign[c] = t;
    used[t] = 1;
    if (assignment_consistent(group, table, assign))
      search_assignments(group, table, candidates, c + 1, assign, used, found);
    assign[c] = -1;
    used[t] = 0;
  }
}

}  // namespace

std::optional<ClassMatch> match_classes(const EnumeratedGroup& group, const CharacterTable& table) {
  if (group.classes.size() != table.classes.size()) return std::nullopt;
  if (group.order() != table.group_order) return std::nullopt;

  std::vector<std::vector<int>> candidates(group.classes.size());
  for (std::size_t c = 0; c < group.classes.size(); ++c) {
    for (std::size_t t = 0; t < table.classes.size(); ++t) {
      if (group.classes[c].element_order == table.classes[t].element_order &&
          group.classes[c].size == table.class_size(static_cast<int>(t)) &&
          group.classes[c].centralizer_order == table.classes[t].centralizer_order)
        candidates[c].push_back(static_cast<int>(t));
    }
    if (candidates[c].empty()) return std::nullopt;
  }

  std::vector<int> assign(group.classes.size(), -1);
  std::vector<char> used(table.classes.size(), 0);
  std::vector<std::vector<int>> found;
  search_assignments(group, table, candidates, 0, assign, used, found);
  if (found.empty()) return std::nullopt;
  ClassMatch match;
  match.table_class = found[0];
  match.ambiguous = found.size() > 1;
  return match;
}

}  // namespace zgu
