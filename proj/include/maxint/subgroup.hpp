#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "maxint/bitset.hpp"
#include "maxint/group.hpp"

namespace maxint {

/// Smallest subset containing `seed` and the identity that is closed under
/// multiplication. If `limit` is nonzero the search stops as soon as the
/// closure exceeds `limit` elements (the partial set is returned).
Bitset closure(const Group& g, std::span<const ElementId> seed, std::size_t limit = 0);

/// A subgroup of a parent group, stored as a canonical element bit set.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, Bitset members);
  Subgroup(GroupPtr parent, Bitset members, std::vector<ElementId> gens);

  const Group& group() const { return *parent_; }
  const GroupPtr& group_ptr() const { return parent_; }
  const Bitset& members() const { return members_; }
  std::size_t order() const { return order_; }
  bool contains(ElementId x) const { return members_.test(x); }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == parent_->order(); }
  std::vector<ElementId> elements() const;

  /// A generating set; computed greedily on first use when not supplied.
  const std::vector<ElementId>& generators() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  struct GenCache {
    std::once_flag once;
    std::vector<ElementId> gens;
  };

  GroupPtr parent_;
  Bitset members_;
  std::size_t order_;
  std::shared_ptr<GenCache> gens_;
};

Subgroup whole(const GroupPtr& g);
Subgroup trivial(const GroupPtr& g);

Subgroup subgroup_from_generators(const GroupPtr& g, std::span<const ElementId> seed);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
/// <a, x>, reusing the generators of a.
Subgroup join(const Subgroup& a, ElementId x);

/// H^g = g^-1 H g
Subgroup conjugate_subgroup(const Subgroup& h, ElementId g);
bool is_normal(const Subgroup& h);
/// True iff h is normalised by every element of `ambient`.
bool is_normal_in(const Subgroup& h, const Subgroup& ambient);
Subgroup normalizer(const Subgroup& h);
Subgroup normalizer_in(const Subgroup& h, const Subgroup& ambient);
/// Intersection of the conjugates of h over a transversal of its normalizer.
Subgroup normal_core(const Subgroup& h);
/// Smallest normal subgroup of `ambient` containing `seed`.
Subgroup normal_closure(const Subgroup& ambient, std::span<const ElementId> seed);

/// The distinct conjugates H^g, g in G, in order of first appearance over g = 0, 1, ...
std::vector<Subgroup> conjugacy_class(const Subgroup& h);

}  // namespace maxint
