#pragma once

#include <string>
#include <vector>

#include "maxint/subgroup.hpp"

namespace maxint {

inline constexpr std::size_t kLatticeOrderCap = 2000;
inline constexpr std::size_t kSubgroupCountCap = 50000;

/// Every subgroup of g, sorted by (order, bit set). Built by joining cyclic
/// subgroups onto conjugacy-class representatives until nothing new appears.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t order_cap = kLatticeOrderCap,
                                    std::size_t count_cap = kSubgroupCountCap);

enum class Provenance { discovered, supplied };
std::string to_string(Provenance p);

/// Deduplicated maximal subgroups in canonical order (order descending, then
/// bit set), partitioned into conjugacy classes.
struct MaximalSet {
  GroupPtr group;
  std::vector<Subgroup> members;
  Provenance provenance = Provenance::discovered;
  /// classes[c] lists member indices; classes are ordered by first member.
  std::vector<std::vector<std::size_t>> classes;
  /// Optional label per class (supplied lists carry the source's type names).
  std::vector<std::string> class_labels;

  std::size_t size() const { return members.size(); }
  const Subgroup& operator[](std::size_t i) const { return members[i]; }
  std::vector<std::size_t> class_sizes() const;
};

MaximalSet maximal_subgroups(const GroupPtr& g, std::size_t order_cap = kLatticeOrderCap);

/// Checks every supplied subgroup with verify_maximal, orders them canonically
/// and groups them by conjugacy. `labels[i]` names the type of `subs[i]`.
/// Throws Error if a supplied subgroup is not maximal.
MaximalSet supplied_maximals(const GroupPtr& g, std::vector<Subgroup> subs,
                             std::vector<std::string> labels = {});

/// True iff <M, g> = G for one representative g of each (M, M) double coset
/// outside M.
bool verify_maximal(const Subgroup& m);

/// Intersection of all maximal subgroups. Throws TrivialGroup for |G| = 1.
Subgroup frattini(const MaximalSet& maximals);

}  // namespace maxint
