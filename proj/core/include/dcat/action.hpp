#ifndef DCAT_ACTION_HPP
#define DCAT_ACTION_HPP

#include <map>
#include <string>
#include <utility>

#include "dcat/category.hpp"
#include "dcat/diagnostics.hpp"

namespace dcat {

// A right action of a category on a totally intransitive category: a table
// (m, h) -> m^h, defined exactly when m sits at src(h), with m^h landing at
// tgt(h). The table stores raw ids so that ill-typed candidates (a conjugate
// escaping the acted subcategory, say) can be represented and then rejected
// by validate_right_action with a witness.
struct RightAction {
  std::map<std::pair<ArrowId, ArrowId>, ArrowId> table;

  void set(const ArrowId& m, const ArrowId& h, const ArrowId& result) {
    table[{m, h}] = result;
  }

  const ArrowId* find(const ArrowId& m, const ArrowId& h) const {
    auto it = table.find({m, h});
    return it == table.end() ? nullptr : &it->second;
  }

  const ArrowId& apply(const ArrowId& m, const ArrowId& h) const {
    if (const ArrowId* r = find(m, h)) return *r;
    throw TypingError("action undefined on ('" + m + "', '" + h + "')");
  }
};

// The conjugation table m^h = h^-1 m h computed in `ambient`, over all
// type-correct pairs from `acted` x `actor`. Both categories must share
// arrow names with `ambient`, which must be a groupoid. Results are recorded
// verbatim, whether or not they lie in `acted`.
RightAction conjugation_action(const FiniteCategory& acted,
                               const FiniteCategory& actor,
                               const FiniteCategory& ambient);

// Empty report iff `acted` is totally intransitive, the table is defined
// exactly on type-correct pairs with results landing in the right hom
// monoid, and the four action laws hold on every defined entry:
//   (m m1)^h = m^h m1^h,  m^(hk) = (m^h)^k,  1^h = 1,  m^1 = m.
DiagnosticReport validate_right_action(const FiniteCategory& acted,
                                       const FiniteCategory& actor,
                                       const RightAction& action);

}  // namespace dcat

#endif  // DCAT_ACTION_HPP
