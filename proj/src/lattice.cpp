#include "maxint/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace maxint {

std::string to_string(Provenance p) { return p == Provenance::discovered ? "discovered" : "supplied"; }

std::vector<std::size_t> MaximalSet::class_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : classes) out.push_back(c.size());
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t order_cap, std::size_t count_cap) {
  const std::size_t n = g->order();
  if (n > order_cap)
    throw CapExceeded("subgroup lattice limited to order " + std::to_string(order_cap) + ", group has order " +
                      std::to_string(n));

  // one generator per cyclic subgroup
  std::vector<ElementId> cyclic_gens;
  {
    std::unordered_set<Bitset, BitsetHash> seen;
    for (ElementId x = 1; x < n; ++x) {
      const ElementId seed[] = {x};
      if (seen.insert(closure(*g, seed)).second) cyclic_gens.push_back(x);
    }
  }

  std::unordered_set<Bitset, BitsetHash> known;
  std::vector<Subgroup> found;
  std::vector<Subgroup> reps;
  auto add_class = [&](const Subgroup& h) {
    for (auto& c : conjugacy_class(h)) {
      if (known.insert(c.members()).second) found.push_back(std::move(c));
    }
    if (found.size() > count_cap)
      throw CapExceeded("more than " + std::to_string(count_cap) + " subgroups");
    reps.push_back(h);
  };
  add_class(trivial(g));
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const Subgroup h = reps[r];
    for (ElementId z : cyclic_gens) {
      if (h.contains(z)) continue;
      Subgroup k = join(h, z);
      if (!known.contains(k.members())) add_class(k);
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return found;
}

namespace {

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() > b.order();
  return a.members() < b.members();
}

void assign_classes(MaximalSet& ms) {
  std::unordered_map<Bitset, std::size_t, BitsetHash> where;
  for (std::size_t i = 0; i < ms.members.size(); ++i) where.emplace(ms.members[i].members(), i);
  std::vector<char> done(ms.members.size(), 0);
  for (std::size_t i = 0; i < ms.members.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> cls;
    for (const auto& c : conjugacy_class(ms.members[i])) {
      auto it = where.find(c.members());
      if (it == where.end()) throw Error("maximal subgroup list is not closed under conjugation");
      cls.push_back(it->second);
      done[it->second] = 1;
    }
    std::sort(cls.begin(), cls.end());
    ms.classes.push_back(std::move(cls));
  }
}

}  // namespace

MaximalSet maximal_subgroups(const GroupPtr& g, std::size_t order_cap) {
  MaximalSet ms;
  ms.group = g;
  ms.provenance = Provenance::discovered;
  if (g->order() == 1) return ms;
  const auto subs = all_subgroups(g, order_cap);
  const std::size_t n = g->order();
  for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
    const auto& h = subs[i];
    if (h.order() == n) continue;
    bool maximal = true;
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      const auto& k = subs[j];
      if (k.order() == n || k.order() == h.order() || k.order() % h.order() != 0) continue;
      if (h.members().is_subset_of(k.members())) {
        maximal = false;
        break;
      }
    }
    if (maximal) ms.members.push_back(h);
  }
  std::sort(ms.members.begin(), ms.members.end(), canonical_less);
  assign_classes(ms);
  return ms;
}

MaximalSet supplied_maximals(const GroupPtr& g, std::vector<Subgroup> subs, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != subs.size()) throw Error("label count does not match subgroup count");
  std::vector<std::size_t> idx(subs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return canonical_less(subs[a], subs[b]); });
  MaximalSet ms;
  ms.group = g;
  ms.provenance = Provenance::supplied;
  std::vector<std::string> member_labels;
  for (std::size_t i : idx) {
    if (subs[i].group_ptr() != g) throw ParentMismatch("supplied maximal from another group");
    if (!ms.members.empty() && ms.members.back() == subs[i]) continue;
    if (!verify_maximal(subs[i])) throw Error("supplied subgroup of order " + std::to_string(subs[i].order()) +
                                              " is not maximal");
    ms.members.push_back(subs[i]);
    member_labels.push_back(labels.empty() ? std::string() : labels[i]);
  }
  assign_classes(ms);
  if (!labels.empty())
    for (const auto& c : ms.classes) ms.class_labels.push_back(member_labels[c.front()]);
  return ms;
}

bool verify_maximal(const Subgroup& m) {
  const Group& g = m.group();
  if (m.is_whole()) return false;
  const auto& mg = m.generators();
  Bitset covered = m.members();
  for (ElementId x = 0; x < g.order(); ++x) {
    if (covered.test(x)) continue;
    if (!join(m, x).is_whole()) return false;
    // mark the double coset M x M
    std::vector<ElementId> stack{x};
    covered.set(x);
    while (!stack.empty()) {
      const ElementId y = stack.back();
      stack.pop_back();
      for (ElementId s : mg) {
        for (ElementId z : {g.mul(s, y), g.mul(y, s)}) {
          if (!covered.test(z)) {
            covered.set(z);
            stack.push_back(z);
          }
        }
      }
    }
  }
  return true;
}

Subgroup frattini(const MaximalSet& maximals) {
  if (maximals.group->order() == 1) throw TrivialGroup("the trivial group has no maximal subgroups");
  Bitset meet(maximals.group->order(), true);
  for (const auto& m : maximals.members) meet &= m.members();
  return Subgroup(maximals.group, std::move(meet));
}

}  // namespace maxint
