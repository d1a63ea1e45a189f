#include "dcat/functor.hpp"

#include <algorithm>

namespace dcat {

IdObjFunctor identity_functor(const FiniteCategory& cat) {
  IdObjFunctor f;
  for (const auto& arrow : cat.arrows()) f.arrow_map[arrow.id] = arrow.id;
  return f;
}

IdObjFunctor inclusion_functor(const FiniteCategory& sub,
                               const FiniteCategory& sup) {
  IdObjFunctor f;
  for (const auto& arrow : sub.arrows()) {
    sup.require_arrow(arrow.id);
    f.arrow_map[arrow.id] = arrow.id;
  }
  return f;
}

DiagnosticReport validate_functor(const FiniteCategory& dom,
                                  const FiniteCategory& cod,
                                  const IdObjFunctor& f) {
  DiagnosticReport report;

  CheckResult objects("object-sets");
  ++objects.instances;
  if (dom.sorted_object_ids() != cod.sorted_object_ids()) {
    Witness w;
    w.detail = "domain and codomain do not share one object set";
    objects.add_violation(std::move(w));
  }
  report.add(std::move(objects));

  // Totality plus endpoint preservation; image arrows must exist in cod and
  // keep the same (shared) source and target objects.
  CheckResult endpoints("endpoints");
  for (const auto& arrow : dom.arrows()) {
    ++endpoints.instances;
    auto it = f.arrow_map.find(arrow.id);
    if (it == f.arrow_map.end()) {
      Witness w;
      w.bindings.emplace_back("f", arrow.id);
      w.detail = "arrow has no image";
      endpoints.add_violation(std::move(w));
      continue;
    }
    int image = cod.arrow_index(it->second);
    if (image < 0) {
      Witness w;
      w.bindings.emplace_back("f", arrow.id);
      w.bindings.emplace_back("image", it->second);
      w.detail = "image is not an arrow of the codomain";
      endpoints.add_violation(std::move(w));
      continue;
    }
    if (cod.object_id(cod.src(image)) != dom.object_id(arrow.src) ||
        cod.object_id(cod.tgt(image)) != dom.object_id(arrow.tgt)) {
      Witness w;
      w.bindings.emplace_back("f", arrow.id);
      w.bindings.emplace_back("image", it->second);
      w.detail = "image has different endpoints";
      endpoints.add_violation(std::move(w));
    }
  }
  // Entries for ids that are not arrows of the domain.
  for (const auto& [from, to] : f.arrow_map) {
    if (!dom.has_arrow(from)) {
      Witness w;
      w.bindings.emplace_back("entry", from);
      w.detail = "arrow map entry for an id outside the domain";
      endpoints.add_violation(std::move(w));
    }
  }
  report.add(std::move(endpoints));

  CheckResult identities("identities");
  for (const ObjectId& obj : dom.sorted_object_ids()) {
    int x_dom = dom.object_index(obj);
    int x_cod = cod.object_index(obj);
    if (x_cod < 0) continue;  // object-sets covers this
    int id_dom = dom.identity_index(x_dom);
    int id_cod = cod.identity_index(x_cod);
    if (id_dom < 0 || id_cod < 0) continue;
    ++identities.instances;
    auto it = f.arrow_map.find(dom.arrow_id(id_dom));
    if (it == f.arrow_map.end() || it->second != cod.arrow_id(id_cod)) {
      Witness w;
      w.bindings.emplace_back("object", obj);
      w.detail = "identity arrow not sent to the codomain identity";
      identities.add_violation(std::move(w));
    }
  }
  report.add(std::move(identities));

  CheckResult composition("composition");
  const int n = dom.num_arrows();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (dom.tgt(a) != dom.src(b)) continue;
      int ab = dom.composite_index(a, b);
      if (ab < 0) continue;  // validate_category's finding, not the functor's
      auto fa = f.arrow_map.find(dom.arrow_id(a));
      auto fb = f.arrow_map.find(dom.arrow_id(b));
      auto fab = f.arrow_map.find(dom.arrow_id(ab));
      if (fa == f.arrow_map.end() || fb == f.arrow_map.end() ||
          fab == f.arrow_map.end())
        continue;
      int ia = cod.arrow_index(fa->second);
      int ib = cod.arrow_index(fb->second);
      if (ia < 0 || ib < 0) continue;
      ++composition.instances;
      int image_comp = cod.tgt(ia) == cod.src(ib) ? cod.composite_index(ia, ib)
                                                  : -1;
      if (image_comp < 0 || cod.arrow_id(image_comp) != fab->second) {
        Witness w;
        w.bindings.emplace_back("f", dom.arrow_id(a));
        w.bindings.emplace_back("g", dom.arrow_id(b));
        w.detail = "image of fg differs from (image f)(image g)";
        composition.add_violation(std::move(w));
      }
    }
  }
  report.add(std::move(composition));

  return report;
}

}  // namespace dcat
