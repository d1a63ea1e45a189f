#ifndef DCAT_GROUPS_HPP
#define DCAT_GROUPS_HPP

#include <vector>

#include "dcat/category.hpp"

namespace dcat {

// Small-group builders. Each returns a one-object groupoid at object "*"
// whose hom monoid is the named group, with canonical element names:
// residues "0".."n-1" for cyclic groups, "e", "r", "r^2 s", ... for dihedral
// groups, and cycle notation "(12)", "(123)", ... for symmetric groups.
// Orders are capped at kMaxGroupOrder; build_symmetric additionally requires
// n <= 4. Violations throw SizeLimitError.

FiniteCategory build_cyclic(int n);
FiniteCategory build_dihedral(int n);  // order 2n
FiniteCategory build_symmetric(int n);

// The smallest subgroup of a one-object groupoid containing `gens`,
// returned as a FiniteCategory sharing the parent's object and arrow names.
FiniteCategory subgroup_closure(const FiniteCategory& cat,
                                const std::vector<ArrowId>& gens);

}  // namespace dcat

#endif  // DCAT_GROUPS_HPP
