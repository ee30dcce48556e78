#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maxint/group_spec.hpp"
#include "maxint/lattice.hpp"

namespace maxint {

GroupPtr cyclic(std::size_t n);
GroupPtr elementary_abelian(std::size_t p, std::size_t k);
/// Direct product of cyclic groups of the given orders.
GroupPtr abelian(const std::vector<std::size_t>& factors);
/// Dihedral group of order 2n.
GroupPtr dihedral(std::size_t order);
GroupPtr sym(std::size_t n);
GroupPtr alt(std::size_t n);
/// x -> ax + b over the p-element field.
GroupPtr agl1(std::size_t p);
/// SL(2,3) acting on the 8 nonzero vectors of the plane over the 3-element field.
GroupPtr sl23();
GroupPtr direct_product(const std::vector<GroupPtr>& factors, std::size_t cap = kDefaultElementCap);
/// X ⋊ H where act(h, x) = x^h is an action of H by automorphisms of X.
GroupPtr semidirect(const GroupPtr& x, const GroupPtr& h,
                    const std::function<ElementId(ElementId h, ElementId x)>& act,
                    std::size_t cap = kDefaultElementCap);
/// C_m wr C_q as a permutation group on m*q points.
GroupPtr wreath_cyclic(std::size_t m, std::size_t q);
/// Permutation group from 1-based cycle strings.
GroupPtr perm_group(const std::vector<std::string>& gens, std::size_t degree);

/// Cycle strings of the right regular representation of g's generators.
std::vector<std::string> regular_representation(const Group& g);

struct Agl25 {
  GroupPtr group;
  MaximalSet maximals;  // supplied, classes labelled "type 1".."type 5"
  Subgroup socle;       // N, the translations
  Subgroup f;           // N times the scalar matrices
};
Agl25 agl25();

struct Sec2 {
  GroupPtr group;
  MaximalSet maximals;
  /// (i, p_i) for each i in I, in the order p, .., p^(a-1), q, .., q^(b-1)
  std::vector<std::pair<std::size_t, std::size_t>> moduli;
};
/// Throws CapExceeded with the computed order when it exceeds `cap`.
Sec2 sec2_family(std::size_t p, std::size_t q, std::size_t a, std::size_t b, std::size_t cap = kDefaultElementCap);

struct Sec3 {
  GroupPtr group;
  Subgroup complement;                  // H, the stabilizer of the origin
  std::vector<Subgroup> witness;        // H^{e_1}, .., H^{e_q}
  Subgroup translations;                // V
};
Sec3 sec3_family(std::size_t q, std::size_t p, std::size_t r, std::size_t cap = kDefaultElementCap);

/// A group built from a spec, with its supplied maximal subgroups if the
/// catalog knows them.
struct Built {
  GroupSpec spec;
  GroupPtr group;
  std::optional<MaximalSet> supplied;
  std::vector<Subgroup> witness;
};
Built build(const GroupSpec& spec);
inline Built build(std::string_view spec) { return build(GroupSpec::parse(spec)); }

/// Supplied maximals when present, otherwise discovered from the subgroup
/// lattice (CapExceeded above the lattice cap).
MaximalSet maximals_for(const Built& b);

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
  std::size_t order = 0;
  std::string tag;  // "nilpotent", "soluble" or "neither"
};
/// Deterministic curated list of small groups of order at most max_order.
std::vector<CatalogEntry> corpus(std::size_t max_order);

}  // namespace maxint
