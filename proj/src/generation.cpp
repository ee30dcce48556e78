#include <algorithm>
#include <unordered_map>

#include "maxint/dimensions.hpp"

namespace maxint {

// An irredundant generating set g_1..g_k gives maximals M_i containing
// <g_j : j != i> but not g_i, and that family is irredundant. Conversely, for
// an irredundant family with private parts D_i, any choice g_i in D_i is an
// irredundant set (dropping g_i leaves everything inside M_i). So m(G) is the
// largest k for which some irredundant k-family admits a generating choice.

namespace {

/// Labels each element by its cyclic subgroup; elements with equal labels
/// give the same join with any subgroup.
std::vector<std::uint32_t> cyclic_labels(const Group& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> label(n);
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> ids;
  for (ElementId x = 0; x < n; ++x) {
    Bitset c(n);
    ElementId p = 0;
    do {
      c.set(p);
      p = g.mul(p, x);
    } while (p != 0);
    label[x] = ids.try_emplace(std::move(c), static_cast<std::uint32_t>(ids.size())).first->second;
  }
  return label;
}

}  // namespace

GeneratingWitness m_invariant(const Incidence& inc, const Budget& budget, std::size_t order_cap) {
  const GroupPtr& g = inc.group();
  if (g->order() > order_cap)
    throw CapExceeded("m(G) search limited to order " + std::to_string(order_cap) + ", group has order " +
                      std::to_string(g->order()));
  if (g->order() == 1) return {};
  const std::size_t n = g->order();
  const auto label = cyclic_labels(*g);
  const std::size_t d = maxdim(inc, budget).value;

  GeneratingWitness out;
  for (std::size_t k = d; k >= 1 && out.value == 0; --k) {
    for_each_irredundant_of_size(
        inc, k,
        [&](std::span<const std::size_t> family) {
          // private parts as element lists, one per cyclic subgroup
          std::vector<std::pair<std::size_t, std::vector<ElementId>>> parts;
          for (std::size_t i = 0; i < k; ++i) {
            Bitset rest = inc.top();
            for (std::size_t j = 0; j < k; ++j)
              if (j != i) rest &= inc.maximal(family[j]);
            rest.subtract(inc.maximal(family[i]));
            std::vector<ElementId> reps;
            std::unordered_map<std::uint32_t, char> seen;
            for (ElementId x = 0; x < n; ++x)
              if (rest.test(inc.atom_of(x)) && seen.emplace(label[x], 1).second) reps.push_back(x);
            parts.emplace_back(i, std::move(reps));
          }
          std::sort(parts.begin(), parts.end(),
                    [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });

          // reachable <g_1..g_i>, each with one choice of generators
          struct Reach {
            Subgroup h;
            std::vector<ElementId> chosen;
          };
          std::vector<Reach> level{{trivial(g), {}}};
          for (std::size_t step = 0; step < k; ++step) {
            std::unordered_map<Bitset, std::size_t, BitsetHash> index;
            std::vector<Reach> next;
            const bool last = step + 1 == k;
            for (const auto& r : level) {
              for (ElementId x : parts[step].second) {
                budget.tick("m(G)");
                Subgroup h = r.h.contains(x) ? r.h : join(r.h, x);
                if (last && !h.is_whole()) continue;
                if (index.contains(h.members())) continue;
                index.emplace(h.members(), next.size());
                auto chosen = r.chosen;
                chosen.push_back(x);
                next.push_back({std::move(h), std::move(chosen)});
              }
            }
            level = std::move(next);
            if (level.empty()) return false;
          }
          out.value = k;
          out.maximals.assign(family.begin(), family.end());
          out.generators.assign(k, 0);
          for (std::size_t s = 0; s < k; ++s) out.generators[parts[s].first] = level.front().chosen[s];
          return true;
        },
        budget);
  }
  return out;
}

}  // namespace maxint
