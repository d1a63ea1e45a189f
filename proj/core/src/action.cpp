#include "dcat/action.hpp"

namespace dcat {

RightAction conjugation_action(const FiniteCategory& acted,
                               const FiniteCategory& actor,
                               const FiniteCategory& ambient) {
  if (!ambient.is_groupoid())
    throw NotAGroupoidError("conjugation needs a groupoid ambient category");
  RightAction action;
  for (const auto& m : acted.arrows()) {
    if (m.src != m.tgt) continue;
    const ObjectId& at = acted.object_id(m.src);
    for (const auto& h : actor.arrows()) {
      if (actor.object_id(h.src) != at) continue;
      ArrowId inv_h = ambient.inverse_of(h.id);
      ArrowId conj = ambient.compose(ambient.compose(inv_h, m.id), h.id);
      action.set(m.id, h.id, conj);
    }
  }
  return action;
}

DiagnosticReport validate_right_action(const FiniteCategory& acted,
                                       const FiniteCategory& actor,
                                       const RightAction& action) {
  DiagnosticReport report;

  CheckResult intransitive("acted-intransitive");
  for (const auto& m : acted.arrows()) {
    ++intransitive.instances;
    if (m.src != m.tgt) {
      Witness w;
      w.bindings.emplace_back("m", m.id);
      w.detail = "acted category has an arrow with src != tgt";
      intransitive.add_violation(std::move(w));
    }
  }
  report.add(std::move(intransitive));

  // Defined exactly on type-correct pairs; results land in acted(tgt h).
  CheckResult typing("typing");
  const int n_m = acted.num_arrows();
  const int n_h = actor.num_arrows();
  for (int mi = 0; mi < n_m; ++mi) {
    if (acted.src(mi) != acted.tgt(mi)) continue;
    const ArrowId& m = acted.arrow_id(mi);
    const ObjectId& at = acted.object_id(acted.src(mi));
    for (int hi = 0; hi < n_h; ++hi) {
      const ArrowId& h = actor.arrow_id(hi);
      bool type_correct = actor.object_id(actor.src(hi)) == at;
      const ArrowId* result = action.find(m, h);
      ++typing.instances;
      if (type_correct && result == nullptr) {
        Witness w;
        w.bindings.emplace_back("m", m);
        w.bindings.emplace_back("h", h);
        w.detail = "action undefined on a type-correct pair";
        typing.add_violation(std::move(w));
      } else if (!type_correct && result != nullptr) {
        Witness w;
        w.bindings.emplace_back("m", m);
        w.bindings.emplace_back("h", h);
        w.detail = "action defined on an ill-typed pair";
        typing.add_violation(std::move(w));
      } else if (result != nullptr) {
        int ri = acted.arrow_index(*result);
        bool lands_well =
            ri >= 0 && acted.src(ri) == acted.tgt(ri) &&
            acted.object_id(acted.src(ri)) == actor.object_id(actor.tgt(hi));
        if (!lands_well) {
          Witness w;
          w.bindings.emplace_back("m", m);
          w.bindings.emplace_back("h", h);
          w.bindings.emplace_back("result", *result);
          w.detail = ri < 0 ? "result escapes the acted category"
                            : "result lands at the wrong object";
          typing.add_violation(std::move(w));
        }
      }
    }
  }
  // Entries keyed by ids that do not even name arrows.
  for (const auto& [key, value] : action.table) {
    if (!acted.has_arrow(key.first) || !actor.has_arrow(key.second)) {
      Witness w;
      w.bindings.emplace_back("m", key.first);
      w.bindings.emplace_back("h", key.second);
      w.bindings.emplace_back("result", value);
      w.detail = "table entry keyed by unknown arrows";
      typing.add_violation(std::move(w));
    }
  }
  report.add(std::move(typing));

  // Helper: defined, in-range application (index level); -1 otherwise.
  auto apply = [&](int mi, int hi) -> int {
    const ArrowId* r = action.find(acted.arrow_id(mi), actor.arrow_id(hi));
    return r == nullptr ? -1 : acted.arrow_index(*r);
  };

  CheckResult multiplicative("multiplicativity");
  for (int mi = 0; mi < n_m; ++mi) {
    if (acted.src(mi) != acted.tgt(mi)) continue;
    for (int m1 = 0; m1 < n_m; ++m1) {
      if (acted.src(m1) != acted.src(mi) || acted.src(m1) != acted.tgt(m1))
        continue;
      int mm1 = acted.composite_index(mi, m1);
      if (mm1 < 0) continue;
      for (int hi = 0; hi < n_h; ++hi) {
        if (actor.object_id(actor.src(hi)) != acted.object_id(acted.src(mi)))
          continue;
        ++multiplicative.instances;
        int lhs = apply(mm1, hi);
        int mh = apply(mi, hi);
        int m1h = apply(m1, hi);
        int rhs = (mh >= 0 && m1h >= 0) ? acted.composite_index(mh, m1h) : -1;
        if (lhs < 0 || lhs != rhs) {
          Witness w;
          w.bindings.emplace_back("m", acted.arrow_id(mi));
          w.bindings.emplace_back("m1", acted.arrow_id(m1));
          w.bindings.emplace_back("h", actor.arrow_id(hi));
          w.detail = "(m m1)^h != m^h m1^h";
          multiplicative.add_violation(std::move(w));
        }
      }
    }
  }
  report.add(std::move(multiplicative));

  CheckResult iteration("iteration");
  for (int mi = 0; mi < n_m; ++mi) {
    if (acted.src(mi) != acted.tgt(mi)) continue;
    for (int hi = 0; hi < n_h; ++hi) {
      if (actor.object_id(actor.src(hi)) != acted.object_id(acted.src(mi)))
        continue;
      for (int ki = 0; ki < n_h; ++ki) {
        if (actor.tgt(hi) != actor.src(ki)) continue;
        int hk = actor.composite_index(hi, ki);
        if (hk < 0) continue;
        ++iteration.instances;
        int lhs = apply(mi, hk);
        int mh = apply(mi, hi);
        int rhs = mh >= 0 ? apply(mh, ki) : -1;
        if (lhs < 0 || lhs != rhs) {
          Witness w;
          w.bindings.emplace_back("m", acted.arrow_id(mi));
          w.bindings.emplace_back("h", actor.arrow_id(hi));
          w.bindings.emplace_back("k", actor.arrow_id(ki));
          w.detail = "m^(hk) != (m^h)^k";
          iteration.add_violation(std::move(w));
        }
      }
    }
  }
  report.add(std::move(iteration));

  CheckResult units("unit-laws");
  // 1^h = 1 over identities of acted; m^1 = m over identities of actor.
  for (int x = 0; x < acted.num_objects(); ++x) {
    int one = acted.identity_index(x);
    if (one < 0) continue;
    for (int hi = 0; hi < n_h; ++hi) {
      if (actor.object_id(actor.src(hi)) != acted.object_id(x)) continue;
      ++units.instances;
      int image = apply(one, hi);
      int expected =
          acted.object_index(actor.object_id(actor.tgt(hi))) >= 0
              ? acted.identity_index(
                    acted.object_index(actor.object_id(actor.tgt(hi))))
              : -1;
      if (image < 0 || image != expected) {
        Witness w;
        w.bindings.emplace_back("h", actor.arrow_id(hi));
        w.detail = "1^h != 1";
        units.add_violation(std::move(w));
      }
    }
  }
  for (int mi = 0; mi < n_m; ++mi) {
    if (acted.src(mi) != acted.tgt(mi)) continue;
    int x_actor = actor.object_index(acted.object_id(acted.src(mi)));
    if (x_actor < 0) continue;
    int one = actor.identity_index(x_actor);
    if (one < 0) continue;
    ++units.instances;
    if (apply(mi, one) != mi) {
      Witness w;
      w.bindings.emplace_back("m", acted.arrow_id(mi));
      w.detail = "m^1 != m";
      units.add_violation(std::move(w));
    }
  }
  report.add(std::move(units));

  return report;
}

}  // namespace dcat
