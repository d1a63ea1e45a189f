#include "dcat/category.hpp"

#include <algorithm>
#include <array>

namespace dcat {

int FiniteCategory::add_object(const ObjectId& id) {
  if (id.empty()) throw Error("object id must be non-empty");
  if (object_index_.count(id))
    throw Error("duplicate object id '" + id + "'");
  objects_.push_back(id);
  identity_.push_back(-1);
  int index = static_cast<int>(objects_.size()) - 1;
  object_index_.emplace(id, index);
  return index;
}

int FiniteCategory::add_arrow(const ArrowId& id, const ObjectId& src,
                              const ObjectId& tgt) {
  if (id.empty()) throw Error("arrow id must be non-empty");
  if (arrow_index_.count(id)) throw Error("duplicate arrow id '" + id + "'");
  if (num_arrows() >= kMaxArrows)
    throw SizeLimitError("arrow count would exceed the cap of " +
                         std::to_string(kMaxArrows));
  int s = require_object(src);
  int t = require_object(tgt);
  arrows_.push_back(Arrow{id, s, t});
  int index = static_cast<int>(arrows_.size()) - 1;
  arrow_index_.emplace(id, index);
  return index;
}

void FiniteCategory::set_identity(const ObjectId& obj, const ArrowId& arrow) {
  identity_[require_object(obj)] = require_arrow(arrow);
}

void FiniteCategory::set_composite(const ArrowId& f, const ArrowId& g,
                                   const ArrowId& fg) {
  int fi = require_arrow(f);
  int gi = require_arrow(g);
  int ri = require_arrow(fg);
  comp_[pair_key(fi, gi)] = ri;
}

int FiniteCategory::object_index(const ObjectId& id) const {
  auto it = object_index_.find(id);
  return it == object_index_.end() ? -1 : it->second;
}

int FiniteCategory::arrow_index(const ArrowId& id) const {
  auto it = arrow_index_.find(id);
  return it == arrow_index_.end() ? -1 : it->second;
}

int FiniteCategory::require_object(const ObjectId& id) const {
  int index = object_index(id);
  if (index < 0) throw UnknownObjectError(id);
  return index;
}

int FiniteCategory::require_arrow(const ArrowId& id) const {
  int index = arrow_index(id);
  if (index < 0) throw UnknownArrowError(id);
  return index;
}

int FiniteCategory::composite_index(int f, int g) const {
  auto it = comp_.find(pair_key(f, g));
  return it == comp_.end() ? -1 : it->second;
}

int FiniteCategory::inverse_index(int f) const {
  int id_src = identity_[arrows_[f].src];
  int id_tgt = identity_[arrows_[f].tgt];
  if (id_src < 0 || id_tgt < 0) return -1;
  for (int g = 0; g < num_arrows(); ++g) {
    if (composite_index(f, g) == id_src && composite_index(g, f) == id_tgt)
      return g;
  }
  return -1;
}

ObjectId FiniteCategory::source_of(const ArrowId& f) const {
  return objects_[arrows_[require_arrow(f)].src];
}

ObjectId FiniteCategory::target_of(const ArrowId& f) const {
  return objects_[arrows_[require_arrow(f)].tgt];
}

ArrowId FiniteCategory::identity_of(const ObjectId& obj) const {
  int id = identity_[require_object(obj)];
  if (id < 0) throw Error("no identity recorded at object '" + obj + "'");
  return arrows_[id].id;
}

ArrowId FiniteCategory::compose(const ArrowId& f, const ArrowId& g) const {
  int fi = require_arrow(f);
  int gi = require_arrow(g);
  if (arrows_[fi].tgt != arrows_[gi].src) throw NotComposableError(f, g);
  int r = composite_index(fi, gi);
  if (r < 0)
    throw Error("composition table has no entry for '" + f + "' then '" + g +
                "'");
  return arrows_[r].id;
}

ArrowId FiniteCategory::inverse_of(const ArrowId& f) const {
  if (!groupoid_)
    throw NotAGroupoidError("inverse requested in '" + name_ +
                            "', which is not marked as a groupoid");
  int g = inverse_index(require_arrow(f));
  if (g < 0)
    throw Error("no two-sided inverse found for arrow '" + f + "'");
  return arrows_[g].id;
}

bool FiniteCategory::is_totally_intransitive() const {
  return std::all_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.src == a.tgt; });
}

std::vector<ArrowId> FiniteCategory::hom_monoid(const ObjectId& obj) const {
  int x = require_object(obj);
  std::vector<ArrowId> result;
  for (const Arrow& a : arrows_) {
    if (a.src == x && a.tgt == x) result.push_back(a.id);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<ObjectId> FiniteCategory::sorted_object_ids() const {
  std::vector<ObjectId> ids = objects_;
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<ArrowId> FiniteCategory::sorted_arrow_ids() const {
  std::vector<ArrowId> ids;
  ids.reserve(arrows_.size());
  for (const Arrow& a : arrows_) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::array<ArrowId, 3>> FiniteCategory::sorted_composition_triples()
    const {
  std::vector<std::array<ArrowId, 3>> triples;
  triples.reserve(comp_.size());
  for (const auto& [key, r] : comp_) {
    int f = static_cast<int>(key >> 32);
    int g = static_cast<int>(key & 0xffffffffu);
    triples.push_back({arrows_[f].id, arrows_[g].id, arrows_[r].id});
  }
  std::sort(triples.begin(), triples.end());
  return triples;
}

namespace {

Witness arrow_witness(
    std::initializer_list<std::pair<const char*, const ArrowId*>> bindings,
    std::string detail) {
  Witness w;
  for (const auto& [key, value] : bindings) w.bindings.emplace_back(key, *value);
  w.detail = std::move(detail);
  return w;
}

}  // namespace

DiagnosticReport validate_category(const FiniteCategory& cat) {
  DiagnosticReport report;
  const int n_arr = cat.num_arrows();
  const int n_obj = cat.num_objects();

  CheckResult identities("identity-laws");
  for (int x = 0; x < n_obj; ++x) {
    ++identities.instances;
    int id = cat.identity_index(x);
    if (id < 0) {
      Witness w;
      w.bindings.emplace_back("object", cat.object_id(x));
      w.detail = "no identity arrow recorded";
      identities.add_violation(std::move(w));
      continue;
    }
    if (cat.src(id) != x || cat.tgt(id) != x) {
      Witness w;
      w.bindings.emplace_back("object", cat.object_id(x));
      w.bindings.emplace_back("identity", cat.arrow_id(id));
      w.detail = "identity arrow is not an endomorphism of its object";
      identities.add_violation(std::move(w));
    }
  }
  for (int f = 0; f < n_arr; ++f) {
    int id_src = cat.identity_index(cat.src(f));
    int id_tgt = cat.identity_index(cat.tgt(f));
    if (id_src >= 0) {
      ++identities.instances;
      if (cat.composite_index(id_src, f) != f) {
        identities.add_violation(arrow_witness({{"f", &cat.arrow_id(f)}},
                                               "id(src f) ; f != f"));
      }
    }
    if (id_tgt >= 0) {
      ++identities.instances;
      if (cat.composite_index(f, id_tgt) != f) {
        identities.add_violation(
            arrow_witness({{"f", &cat.arrow_id(f)}}, "f ; id(tgt f) != f"));
      }
    }
  }
  report.add(std::move(identities));

  // The table must be defined exactly on composable pairs, with the
  // composite running from src(f) to tgt(g).
  CheckResult domain("composition-domain");
  for (int f = 0; f < n_arr; ++f) {
    for (int g = 0; g < n_arr; ++g) {
      ++domain.instances;
      bool composable = cat.tgt(f) == cat.src(g);
      int r = cat.composite_index(f, g);
      if (composable && r < 0) {
        domain.add_violation(
            arrow_witness({{"f", &cat.arrow_id(f)}, {"g", &cat.arrow_id(g)}},
                          "composable pair has no table entry"));
      } else if (!composable && r >= 0) {
        domain.add_violation(
            arrow_witness({{"f", &cat.arrow_id(f)}, {"g", &cat.arrow_id(g)}},
                          "table entry on a non-composable pair"));
      } else if (r >= 0 && (cat.src(r) != cat.src(f) || cat.tgt(r) != cat.tgt(g))) {
        domain.add_violation(arrow_witness(
            {{"f", &cat.arrow_id(f)}, {"g", &cat.arrow_id(g)}, {"fg", &cat.arrow_id(r)}},
            "composite has wrong endpoints"));
      }
    }
  }
  report.add(std::move(domain));

  CheckResult assoc("associativity");
  for (int f = 0; f < n_arr; ++f) {
    for (int g = 0; g < n_arr; ++g) {
      if (cat.tgt(f) != cat.src(g)) continue;
      int fg = cat.composite_index(f, g);
      for (int h = 0; h < n_arr; ++h) {
        if (cat.tgt(g) != cat.src(h)) continue;
        ++assoc.instances;
        int gh = cat.composite_index(g, h);
        if (fg < 0 || gh < 0) continue;  // reported by composition-domain
        int left = cat.composite_index(fg, h);
        int right = cat.composite_index(f, gh);
        if (left != right || left < 0) {
          assoc.add_violation(arrow_witness(
              {{"f", &cat.arrow_id(f)}, {"g", &cat.arrow_id(g)}, {"h", &cat.arrow_id(h)}},
              "(fg)h != f(gh)"));
        }
      }
    }
  }
  report.add(std::move(assoc));

  if (cat.is_groupoid()) {
    CheckResult inverses("groupoid-inverses");
    for (int f = 0; f < n_arr; ++f) {
      ++inverses.instances;
      int id_src = cat.identity_index(cat.src(f));
      int id_tgt = cat.identity_index(cat.tgt(f));
      if (id_src < 0 || id_tgt < 0) continue;  // identity-laws covers this
      int found = 0;
      for (int g = 0; g < n_arr; ++g) {
        if (cat.composite_index(f, g) == id_src &&
            cat.composite_index(g, f) == id_tgt)
          ++found;
      }
      if (found != 1) {
        inverses.add_violation(arrow_witness(
            {{"f", &cat.arrow_id(f)}},
            found == 0 ? "no two-sided inverse" : "two-sided inverse not unique"));
      }
    }
    report.add(std::move(inverses));
  }

  return report;
}

}  // namespace dcat
