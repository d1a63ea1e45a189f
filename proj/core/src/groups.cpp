#include "dcat/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace dcat {

namespace {

constexpr const char* kPoint = "*";

// Assembles a one-object groupoid from element names and a multiplication
// function over element indices. names[0] must be the neutral element.
FiniteCategory one_object_group(std::string name,
                                const std::vector<std::string>& names,
                                const std::vector<std::vector<int>>& table) {
  FiniteCategory cat(std::move(name));
  cat.add_object(kPoint);
  for (const std::string& id : names) cat.add_arrow(id, kPoint, kPoint);
  cat.set_identity(kPoint, names[0]);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j)
      cat.set_composite(names[i], names[j], names[table[i][j]]);
  cat.mark_groupoid(true);
  return cat;
}

void check_order(int order) {
  if (order < 1 || order > kMaxGroupOrder)
    throw SizeLimitError("group order " + std::to_string(order) +
                         " outside [1, " + std::to_string(kMaxGroupOrder) +
                         "]");
}

// Permutations of {1..n} as 0-based images; composition is diagrammatic
// (apply the left factor first).
using Perm = std::vector<int>;

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

std::string cycle_name(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      out += std::to_string(i + 1);
      i = static_cast<std::size_t>(p[i]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteCategory build_cyclic(int n) {
  check_order(n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return one_object_group("C" + std::to_string(n), names, table);
}

FiniteCategory build_dihedral(int n) {
  if (n < 1) throw SizeLimitError("dihedral parameter must be positive");
  check_order(2 * n);
  // Element (i, j) is r^i s^j with r^n = s^2 = e and s r s = r^-1.
  auto encode = [n](int i, int j) { return j * n + i; };
  std::vector<std::string> names(2 * n);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < n; ++i) {
      std::string power =
          i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      std::string name;
      if (j == 0)
        name = power.empty() ? "e" : power;
      else
        name = power.empty() ? "s" : power + " s";
      names[encode(i, j)] = name;
    }
  }
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l): move r^k past s^j.
          int shift = j == 0 ? k : n - k;
          table[encode(i, j)][encode(k, l)] =
              encode((i + shift) % n, (j + l) % 2);
        }
  return one_object_group("D" + std::to_string(n), names, table);
}

FiniteCategory build_symmetric(int n) {
  if (n < 1 || n > 4)
    throw SizeLimitError("symmetric group builder supports 1 <= n <= 4");
  std::vector<Perm> perms;
  Perm base(n);
  std::iota(base.begin(), base.end(), 0);
  perms.push_back(base);
  while (std::next_permutation(base.begin(), base.end()))
    perms.push_back(base);
  // Neutral element first, the rest in generation order.
  std::sort(perms.begin(), perms.end(), [](const Perm& p, const Perm& q) {
    Perm id(p.size());
    std::iota(id.begin(), id.end(), 0);
    return (p == id) > (q == id);
  });
  std::map<Perm, int> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<int>(i);
    names.push_back(cycle_name(perms[i]));
  }
  std::vector<std::vector<int>> table(perms.size(),
                                      std::vector<int>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j)
      table[i][j] = index.at(perm_compose(perms[i], perms[j]));
  return one_object_group("S" + std::to_string(n), names, table);
}

FiniteCategory subgroup_closure(const FiniteCategory& cat,
                                const std::vector<ArrowId>& gens) {
  if (cat.num_objects() != 1 || !cat.is_groupoid())
    throw NotAGroupoidError("subgroup closure needs a one-object groupoid");
  const ObjectId point = cat.object_id(0);
  const ArrowId one = cat.identity_of(point);

  std::set<ArrowId> members{one};
  for (const ArrowId& g : gens) {
    cat.require_arrow(g);
    members.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ArrowId> snapshot(members.begin(), members.end());
    for (const ArrowId& a : snapshot)
      for (const ArrowId& b : snapshot)
        if (members.insert(cat.compose(a, b)).second) grew = true;
  }

  FiniteCategory sub(cat.name().empty() ? "subgroup"
                                        : "sub(" + cat.name() + ")");
  sub.add_object(point);
  for (const ArrowId& id : members) sub.add_arrow(id, point, point);
  sub.set_identity(point, one);
  for (const ArrowId& a : members)
    for (const ArrowId& b : members) sub.set_composite(a, b, cat.compose(a, b));
  sub.mark_groupoid(true);
  return sub;
}

}  // namespace dcat
