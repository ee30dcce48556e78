#include "maxint/incidence.hpp"

#include <unordered_map>

namespace maxint {

Incidence::Incidence(MaximalSet maximals) : maximals_(std::move(maximals)) {
  const Group& g = *maximals_.group;
  const std::size_t n = g.order();
  const std::size_t k = maximals_.size();
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> ids;
  atom_of_.resize(n);
  for (ElementId x = 0; x < n; ++x) {
    Bitset key(k);
    for (std::size_t i = 0; i < k; ++i)
      if (maximals_.members[i].contains(x)) key.set(i);
    auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<std::uint32_t>(weights_.size()));
    if (inserted) weights_.push_back(0);
    atom_of_[x] = it->second;
    ++weights_[it->second];
  }
  const std::size_t atoms = weights_.size();
  top_ = Bitset(atoms, true);
  frattini_ = Bitset(atoms);
  frattini_.set(0);
  maximal_atoms_.assign(k, Bitset(atoms));
  for (std::size_t i = 0; i < k; ++i)
    maximals_.members[i].members().for_each([&](std::size_t x) { maximal_atoms_[i].set(atom_of_[x]); });
}

std::size_t Incidence::weight(const Bitset& atoms) const {
  std::size_t w = 0;
  atoms.for_each([&](std::size_t a) { w += weights_[a]; });
  return w;
}

Bitset Incidence::meet(std::span<const std::size_t> members) const {
  Bitset m = top_;
  for (auto i : members) m &= maximal_atoms_[i];
  return m;
}

Bitset Incidence::to_elements(const Bitset& atoms) const {
  Bitset out(atom_of_.size());
  for (std::size_t x = 0; x < atom_of_.size(); ++x)
    if (atoms.test(atom_of_[x])) out.set(x);
  return out;
}

Subgroup Incidence::to_subgroup(const Bitset& atoms) const { return Subgroup(group(), to_elements(atoms)); }

Bitset Incidence::to_atoms(const Bitset& elements) const {
  Bitset out(weights_.size());
  elements.for_each([&](std::size_t x) { out.set(atom_of_[x]); });
  return out;
}

}  // namespace maxint
