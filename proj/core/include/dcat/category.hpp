#ifndef DCAT_CATEGORY_HPP
#define DCAT_CATEGORY_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcat/diagnostics.hpp"
#include "dcat/errors.hpp"

namespace dcat {

using ObjectId = std::string;
using ArrowId = std::string;

// Caps that keep exhaustive law checking tractable at desk scale.
inline constexpr int kMaxArrows = 10000;
inline constexpr int kMaxGroupOrder = 48;

// A finite category given by explicit tables: objects, arrows with source
// and target, an identity arrow per object, and a partial composition table
// defined exactly on composable pairs. Composition is diagrammatic:
// compose(f, g) means "f then g" and is defined iff tgt(f) == src(g).
//
// Instances are built by add_* calls and treated as immutable afterwards;
// every algorithm in this library takes them by const reference.
class FiniteCategory {
 public:
  struct Arrow {
    ArrowId id;
    int src = -1;
    int tgt = -1;
  };

  FiniteCategory() = default;
  explicit FiniteCategory(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // -- construction ---------------------------------------------------------

  int add_object(const ObjectId& id);
  int add_arrow(const ArrowId& id, const ObjectId& src, const ObjectId& tgt);
  void set_identity(const ObjectId& obj, const ArrowId& arrow);
  // Records f;g = fg. Requires the three ids to exist; semantic soundness is
  // validate_category's job.
  void set_composite(const ArrowId& f, const ArrowId& g, const ArrowId& fg);
  void mark_groupoid(bool flag) { groupoid_ = flag; }

  // -- index-level access ---------------------------------------------------

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }

  bool has_object(const ObjectId& id) const { return object_index(id) >= 0; }
  bool has_arrow(const ArrowId& id) const { return arrow_index(id) >= 0; }
  int object_index(const ObjectId& id) const;
  int arrow_index(const ArrowId& id) const;
  int require_object(const ObjectId& id) const;
  int require_arrow(const ArrowId& id) const;

  const ObjectId& object_id(int obj) const { return objects_[obj]; }
  const ArrowId& arrow_id(int arrow) const { return arrows_[arrow].id; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int src(int arrow) const { return arrows_[arrow].src; }
  int tgt(int arrow) const { return arrows_[arrow].tgt; }
  int identity_index(int obj) const { return identity_[obj]; }
  // -1 when the pair has no table entry.
  int composite_index(int f, int g) const;
  // Two-sided inverse found by scanning the table; -1 when none exists.
  int inverse_index(int f) const;
  bool is_groupoid() const { return groupoid_; }

  // -- id-level operations --------------------------------------------------

  ObjectId source_of(const ArrowId& f) const;
  ObjectId target_of(const ArrowId& f) const;
  ArrowId identity_of(const ObjectId& obj) const;
  ArrowId compose(const ArrowId& f, const ArrowId& g) const;
  ArrowId inverse_of(const ArrowId& f) const;

  // True iff src == tgt for every arrow (the category is a union of monoids).
  bool is_totally_intransitive() const;

  // All arrows x -> x, sorted by id. Throws UnknownObjectError.
  std::vector<ArrowId> hom_monoid(const ObjectId& obj) const;

  std::vector<ObjectId> sorted_object_ids() const;
  std::vector<ArrowId> sorted_arrow_ids() const;

  // Deterministic iteration over the composition table, sorted by (f, g) id.
  std::vector<std::array<ArrowId, 3>> sorted_composition_triples() const;

 private:
  static std::uint64_t pair_key(int f, int g) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f)) << 32) |
           static_cast<std::uint32_t>(g);
  }

  std::string name_;
  std::vector<ObjectId> objects_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> arrow_index_;
  std::vector<int> identity_;  // per object, -1 when unset
  std::unordered_map<std::uint64_t, std::int32_t> comp_;
  bool groupoid_ = false;
};

// Checks every category law and returns one witness per violation found:
// identity arrows exist and satisfy the unit laws, the composition table is
// defined exactly on composable pairs with matching endpoints, composition
// is associative on all composable triples, and (when flagged as a groupoid)
// every arrow has a unique two-sided inverse.
DiagnosticReport validate_category(const FiniteCategory& cat);

}  // namespace dcat

#endif  // DCAT_CATEGORY_HPP
