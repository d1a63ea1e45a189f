#ifndef DCAT_FUNCTOR_HPP
#define DCAT_FUNCTOR_HPP

#include <map>
#include <string>

#include "dcat/category.hpp"
#include "dcat/diagnostics.hpp"

namespace dcat {

// An identity-on-objects morphism of categories, stored as its arrow map.
// The domain and codomain are supplied by context (a DoubleModule bundles
// them); the two categories must share one object set.
struct IdObjFunctor {
  std::map<ArrowId, ArrowId> arrow_map;

  const ArrowId& apply(const ArrowId& arrow) const {
    auto it = arrow_map.find(arrow);
    if (it == arrow_map.end()) throw UnknownArrowError(arrow);
    return it->second;
  }
};

// arrow_map = identity on the arrows of `cat`.
IdObjFunctor identity_functor(const FiniteCategory& cat);

// arrow_map sends each arrow of `sub` to the arrow of `sup` with the same
// id. Throws UnknownArrowError when a name is missing from `sup`.
IdObjFunctor inclusion_functor(const FiniteCategory& sub,
                               const FiniteCategory& sup);

// Empty report iff dom and cod have the same object set and the arrow map is
// total, preserves endpoints and identities, and preserves composition on
// every composable pair of dom.
DiagnosticReport validate_functor(const FiniteCategory& dom,
                                  const FiniteCategory& cod,
                                  const IdObjFunctor& f);

}  // namespace dcat

#endif  // DCAT_FUNCTOR_HPP
