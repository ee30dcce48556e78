#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "maxint/dimensions.hpp"
#include "maxint/structure.hpp"

namespace maxint {

std::size_t base_size(const Subgroup& h, const Budget& budget) {
  if (!normal_core(h).is_trivial()) throw CoreNotTrivial("subgroup has a nontrivial core");
  if (h.is_trivial()) return 1;
  const auto conj = conjugacy_class(h);
  // the first conjugate may be taken to be H itself
  std::unordered_set<Bitset, BitsetHash> seen{h.members()};
  std::vector<Bitset> level{h.members()};
  for (std::size_t depth = 2;; ++depth) {
    std::vector<Bitset> next;
    for (const auto& s : level) {
      for (const auto& c : conj) {
        budget.tick("base_size");
        Bitset t = s & c.members();
        if (t.count() == 1) return depth;
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    if (next.empty()) throw Error("base search exhausted");
    level = std::move(next);
  }
}

AlmostSimpleInfo almost_simple_info(const Incidence& inc) {
  const GroupPtr& g = inc.group();
  const auto minimal = minimal_normal_subgroups(g);
  if (minimal.size() != 1) throw NotAlmostSimple("group does not have a unique minimal normal subgroup");
  const Subgroup& s = minimal.front();
  if (is_abelian(s) || !is_simple(s)) throw NotAlmostSimple("socle is not non-abelian simple");
  AlmostSimpleInfo info{s, {}};
  const auto& ms = inc.maximals();
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (normal_core(ms[i]).is_trivial()) info.core_free.push_back(i);
  return info;
}

std::size_t sigma_almost_simple(const Incidence& inc, const Budget& budget) {
  const auto info = almost_simple_info(inc);
  const auto& ms = inc.maximals();
  const Group& g = *inc.group();
  const Subgroup& s = info.socle;
  std::size_t best = 0;
  std::unordered_set<std::size_t> done_classes;
  for (std::size_t i : info.core_free) {
    // one representative per conjugacy class
    std::size_t cls = 0;
    for (std::size_t c = 0; c < ms.classes.size(); ++c)
      if (std::find(ms.classes[c].begin(), ms.classes[c].end(), i) != ms.classes[c].end()) cls = c;
    if (!done_classes.insert(cls).second) continue;

    // (Y ∩ S)^s for s in S, since S is normal
    const Bitset t = ms[i].members() & s.members();
    std::vector<Bitset> conj;
    std::unordered_set<Bitset, BitsetHash> seen;
    for (ElementId x : s.elements()) {
      Bitset c(g.order());
      t.for_each([&](std::size_t y) { c.set(g.conj(static_cast<ElementId>(y), x)); });
      if (seen.insert(c).second) conj.push_back(std::move(c));
    }
    std::unordered_map<Bitset, std::size_t, BitsetHash> memo;
    auto longest = [&](auto&& self, const Bitset& cur) -> std::size_t {
      if (auto it = memo.find(cur); it != memo.end()) return it->second;
      std::size_t v = 1;
      for (const auto& c : conj) {
        budget.tick("sigma");
        Bitset nxt = cur & c;
        if (nxt == cur) continue;
        v = std::max(v, 1 + self(self, nxt));
      }
      memo.emplace(cur, v);
      return v;
    };
    best = std::max(best, longest(longest, t));
  }
  return best;
}

std::size_t tau_almost_simple(const Incidence& inc, const Budget& budget) {
  const auto info = almost_simple_info(inc);
  if (inc.atom_weight(0) != 1) throw NotAlmostSimple("nontrivial Frattini subgroup");
  const Bitset& bottom = inc.frattini();
  std::unordered_set<Bitset, BitsetHash> seen{inc.top()};
  std::vector<Bitset> level{inc.top()};
  for (std::size_t depth = 1;; ++depth) {
    std::vector<Bitset> next;
    for (const auto& cur : level) {
      for (std::size_t i : info.core_free) {
        budget.tick("tau");
        Bitset t = cur & inc.maximal(i);
        if (t == bottom) return depth;
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    if (next.empty()) throw Error("core-free maximals do not meet trivially");
    level = std::move(next);
  }
}

}  // namespace maxint
