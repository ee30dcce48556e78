#pragma once

#include <memory>
#include <vector>

#include "maxint/lattice.hpp"

namespace maxint {

/// Element/maximal incidence of a group. Elements lying in exactly the same
/// maximal subgroups are merged into one atom; every intersection of maximal
/// subgroups is a union of atoms, so family searches run on atom sets.
/// Atom 0 is the Frattini subgroup (the atom of the identity).
class Incidence {
 public:
  explicit Incidence(MaximalSet maximals);

  const MaximalSet& maximals() const { return maximals_; }
  const GroupPtr& group() const { return maximals_.group; }
  std::size_t maximal_count() const { return maximal_atoms_.size(); }
  std::size_t atom_count() const { return weights_.size(); }

  const Bitset& maximal(std::size_t i) const { return maximal_atoms_[i]; }
  const Bitset& top() const { return top_; }
  const Bitset& frattini() const { return frattini_; }

  std::size_t weight(const Bitset& atoms) const;
  std::size_t atom_weight(std::size_t a) const { return weights_[a]; }
  std::size_t atom_of(ElementId x) const { return atom_of_[x]; }

  /// Intersection of the listed maximals (top for an empty list).
  Bitset meet(std::span<const std::size_t> members) const;

  Bitset to_elements(const Bitset& atoms) const;
  Subgroup to_subgroup(const Bitset& atoms) const;
  /// Atoms meeting `elements`; exact when `elements` is a union of atoms.
  Bitset to_atoms(const Bitset& elements) const;

 private:
  MaximalSet maximals_;
  std::vector<std::uint32_t> atom_of_;
  std::vector<std::size_t> weights_;
  std::vector<Bitset> maximal_atoms_;
  Bitset top_;
  Bitset frattini_;
};

using IncidencePtr = std::shared_ptr<const Incidence>;

}  // namespace maxint
