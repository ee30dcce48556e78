#pragma once

// Brute-force reference computations. They touch the library only through
// Group::mul / Group::inv and never call its subgroup, lattice or search code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "maxint/group.hpp"
#include "maxint/subgroup.hpp"

namespace oracle {

using maxint::ElementId;
using maxint::Group;
using Set = std::vector<char>;

inline std::size_t count(const Set& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), 1)); }

inline Set meet(const Set& a, const Set& b) {
  Set out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

inline Set from(const maxint::Subgroup& h) {
  Set s(h.group().order(), 0);
  for (ElementId x = 0; x < h.group().order(); ++x) s[x] = h.contains(x);
  return s;
}

inline Set everything(const Group& g) { return Set(g.order(), 1); }

/// Words in the generators, breadth first from the identity.
inline Set generated(const Group& g, const std::vector<ElementId>& gens) {
  Set s(g.order(), 0);
  std::vector<ElementId> todo{0};
  s[0] = 1;
  for (std::size_t h = 0; h < todo.size(); ++h)
    for (auto x : gens) {
      const ElementId y = g.mul(todo[h], x);
      if (!s[y]) {
        s[y] = 1;
        todo.push_back(y);
      }
    }
  return s;
}

struct Sub {
  Set members;
  std::vector<ElementId> gens;
};

/// Every subgroup, grown one element at a time from the trivial subgroup.
inline std::vector<Set> subgroups(const Group& g) {
  std::vector<Sub> all{{generated(g, {}), {}}};
  std::set<Set> seen{all[0].members};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (ElementId x = 0; x < g.order(); ++x) {
      if (all[i].members[x]) continue;
      auto gens = all[i].gens;
      gens.push_back(x);
      Set s = generated(g, gens);
      if (seen.insert(s).second) all.push_back({std::move(s), std::move(gens)});
    }
  std::vector<Set> out;
  for (auto& s : all) out.push_back(std::move(s.members));
  return out;
}

inline std::vector<Set> maximals(const Group& g) {
  const auto subs = subgroups(g);
  std::vector<Set> out;
  for (const auto& a : subs) {
    if (count(a) == g.order()) continue;
    bool maximal = true;
    for (const auto& b : subs)
      if (b != a && count(b) < g.order() && subset(a, b)) maximal = false;
    if (maximal) out.push_back(a);
  }
  return out;
}

inline Set conjugate(const Group& g, const Set& h, ElementId x) {
  Set out(h.size(), 0);
  for (ElementId a = 0; a < g.order(); ++a)
    if (h[a]) out[g.mul(g.mul(g.inv(x), a), x)] = 1;
  return out;
}

inline Set core(const Group& g, const Set& h) {
  Set out = h;
  for (ElementId x = 0; x < g.order(); ++x) out = meet(out, conjugate(g, h, x));
  return out;
}

inline std::size_t prime_factors(std::size_t n) {
  std::size_t k = 0;
  for (std::size_t p = 2; p * p <= n; ++p)
    while (n % p == 0) n /= p, ++k;
  return k + (n > 1);
}

inline Set meet_of(const Group& g, const std::vector<Set>& ms, const std::vector<std::size_t>& f) {
  Set m = everything(g);
  for (auto i : f) m = meet(m, ms[i]);
  return m;
}

inline bool irredundant(const Group& g, const std::vector<Set>& ms, const std::vector<std::size_t>& f) {
  const Set m = meet_of(g, ms, f);
  for (std::size_t d = 0; d < f.size(); ++d) {
    auto rest = f;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(d));
    if (meet_of(g, ms, rest) == m) return false;
  }
  return true;
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t j = start; j < n; ++j) {
      cur.push_back(j);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

struct Dims {
  std::size_t maxdim = 0, mindim = 0, alpha = 0, menta = 0, manta = 0;
  std::set<Set> nodes;
};

/// Families of every size up to the length of the longest subgroup chain,
/// then every chain through the collected intersections.
inline Dims dims(const Group& g, const std::vector<Set>& ms) {
  Dims d;
  Set frat = everything(g);
  for (const auto& m : ms) frat = meet(frat, m);
  const std::size_t bound = prime_factors(g.order());
  d.mindim = d.alpha = SIZE_MAX;
  d.nodes.insert(everything(g));
  for (std::size_t k = 1; k <= bound && k <= ms.size(); ++k)
    subsets(ms.size(), k, [&](const std::vector<std::size_t>& f) {
      const Set m = meet_of(g, ms, f);
      d.nodes.insert(m);
      if (m == frat) d.alpha = std::min(d.alpha, k);
      if (!irredundant(g, ms, f)) return;
      d.maxdim = std::max(d.maxdim, k);
      for (std::size_t j = 0; j < ms.size(); ++j) {
        if (std::find(f.begin(), f.end(), j) != f.end()) continue;
        auto bigger = f;
        bigger.push_back(j);
        if (irredundant(g, ms, bigger)) return;
      }
      d.mindim = std::min(d.mindim, k);
    });

  const std::vector<Set> nodes(d.nodes.begin(), d.nodes.end());
  const std::size_t n = nodes.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) below[a][b] = a != b && subset(nodes[a], nodes[b]);
  // unrefinable steps: no node strictly between
  std::vector<std::vector<std::size_t>> steps(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!below[a][b]) continue;
      bool unrefinable = true;
      for (std::size_t c = 0; c < n && unrefinable; ++c)
        if (below[a][c] && below[c][b]) unrefinable = false;
      if (unrefinable) steps[a].push_back(b);
    }
  d.menta = SIZE_MAX;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t cur, std::size_t len) {
    if (count(nodes[cur]) == g.order()) {
      d.menta = std::min(d.menta, len);
      d.manta = std::max(d.manta, len);
      return;
    }
    for (auto nxt : steps[cur]) walk(nxt, len + 1);
  };
  walk(static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), frat) - nodes.begin()), 0);
  return d;
}

/// Largest irredundant generating set, by trying element subsets.
inline std::size_t m_invariant(const Group& g) {
  std::size_t best = 0;
  const std::size_t bound = prime_factors(g.order());
  for (std::size_t k = 1; k <= bound; ++k) {
    bool found = false;
    subsets(g.order(), k, [&](const std::vector<std::size_t>& idx) {
      if (found) return;
      std::vector<ElementId> gens(idx.begin(), idx.end());
      if (count(generated(g, gens)) != g.order()) return;
      for (std::size_t d = 0; d < k; ++d) {
        auto rest = gens;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(d));
        if (count(generated(g, rest)) == g.order()) return;
      }
      found = true;
    });
    if (found) best = k;
  }
  return best;
}

/// Least number of sets from `family` meeting in the identity (0 if none).
inline std::size_t least_trivial_meet(const Group& g, const std::vector<Set>& family) {
  for (std::size_t k = 1; k <= family.size(); ++k) {
    bool found = false;
    subsets(family.size(), k, [&](const std::vector<std::size_t>& f) {
      if (!found && count(meet_of(g, family, f)) == 1) found = true;
    });
    if (found) return k;
  }
  return 0;
}

inline std::vector<Set> conjugates(const Group& g, const Set& h) {
  std::set<Set> out;
  for (ElementId x = 0; x < g.order(); ++x) out.insert(conjugate(g, h, x));
  return {out.begin(), out.end()};
}

}  // namespace oracle
