#include "maxint/exhaustive.hpp"

#include <algorithm>
#include <unordered_set>

#include "maxint/structure.hpp"

namespace maxint::exhaustive {

Values compute(const MaximalSet& ms, const Budget& budget) {
  const std::size_t k = ms.size();
  const Subgroup frat = frattini(ms);
  const std::size_t bound = omega(ms.group->order() / frat.order());
  auto meet_of = [&](const std::vector<std::size_t>& f) {
    Bitset m = whole(ms.group).members();
    for (auto i : f) m &= ms[i].members();
    return m;
  };
  auto irredundant = [&](const std::vector<std::size_t>& f) {
    const Bitset m = meet_of(f);
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<std::size_t> rest = f;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
      if (meet_of(rest) == m) return false;
    }
    return true;
  };

  Values v;
  v.mindim = SIZE_MAX;
  v.alpha = SIZE_MAX;
  std::unordered_set<Bitset, BitsetHash> nodes{whole(ms.group).members()};
  std::vector<std::size_t> f;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    budget.tick("exhaustive subsets");
    if (!f.empty()) {
      const Bitset m = meet_of(f);
      nodes.insert(m);
      if (m == frat.members()) v.alpha = std::min(v.alpha, f.size());
      if (irredundant(f)) {
        v.maxdim = std::max(v.maxdim, f.size());
        bool maximal = true;
        for (std::size_t j = 0; j < k && maximal; ++j) {
          if (std::find(f.begin(), f.end(), j) != f.end()) continue;
          f.push_back(j);
          if (irredundant(f)) maximal = false;
          f.pop_back();
        }
        if (maximal) v.mindim = std::min(v.mindim, f.size());
      }
    }
    if (f.size() == bound) return;
    for (std::size_t j = start; j < k; ++j) {
      f.push_back(j);
      self(self, j + 1);
      f.pop_back();
    }
  };
  rec(rec, 0);

  // all chains bottom -> top whose steps have no node strictly between
  std::vector<Bitset> list(nodes.begin(), nodes.end());
  auto strictly_inside = [](const Bitset& a, const Bitset& b) { return a.is_subset_of(b) && !(a == b); };
  auto cover = [&](const Bitset& a, const Bitset& b) {
    if (!strictly_inside(a, b)) return false;
    for (const auto& c : list)
      if (strictly_inside(a, c) && strictly_inside(c, b)) return false;
    return true;
  };
  std::vector<std::vector<std::size_t>> up(list.size());
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = 0; b < list.size(); ++b)
      if (cover(list[a], list[b])) up[a].push_back(b);
  v.menta = SIZE_MAX;
  const Bitset top = whole(ms.group).members();
  auto walk = [&](auto&& self, std::size_t cur, std::size_t len) -> void {
    budget.tick("exhaustive chains");
    if (list[cur] == top) {
      v.menta = std::min(v.menta, len);
      v.manta = std::max(v.manta, len);
      return;
    }
    for (auto n : up[cur]) self(self, n, len + 1);
  };
  const auto bottom = static_cast<std::size_t>(std::find(list.begin(), list.end(), frat.members()) - list.begin());
  walk(walk, bottom, 0);
  return v;
}

}  // namespace maxint::exhaustive
