#include "maxint/structure.hpp"

#include <algorithm>

namespace maxint {

std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::size_t omega(std::size_t n) {
  std::size_t k = 0;
  for (auto [p, e] : factorize(n)) k += e;
  return k;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Subgroup center(const GroupPtr& g) {
  Bitset out(g->order());
  const auto gens = whole(g).generators();
  for (ElementId x = 0; x < g->order(); ++x) {
    bool central = true;
    for (ElementId s : gens)
      if (g->mul(x, s) != g->mul(s, x)) {
        central = false;
        break;
      }
    if (central) out.set(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup commutator_subgroup(const Subgroup& h) {
  const Group& g = h.group();
  const auto& gens = h.generators();
  std::vector<ElementId> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const ElementId a = gens[i], b = gens[j];
      comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  return normal_closure(h, comms);
}

Subgroup commutator_subgroup(const GroupPtr& g) { return commutator_subgroup(whole(g)); }

std::vector<Subgroup> derived_series(const GroupPtr& g) {
  std::vector<Subgroup> series{whole(g)};
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> derived_length(const GroupPtr& g) {
  auto s = derived_series(g);
  if (!s.back().is_trivial()) return std::nullopt;
  return s.size() - 1;
}

bool is_abelian(const Subgroup& h) {
  const Group& g = h.group();
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_abelian(const GroupPtr& g) { return is_abelian(whole(g)); }

bool is_soluble(const GroupPtr& g) { return derived_series(g).back().is_trivial(); }

Subgroup sylow_subgroup(const Subgroup& ambient, std::size_t p) {
  std::size_t target = 1;
  {
    std::size_t m = ambient.order();
    while (m % p == 0) {
      m /= p;
      target *= p;
    }
  }
  if (p < 2 || target == 1) throw PNotDividing(std::to_string(p) + " does not divide the group order");
  const Group& g = ambient.group();
  Subgroup sub = trivial(ambient.group_ptr());
  while (sub.order() < target) {
    const Subgroup n = normalizer_in(sub, ambient);
    bool grown = false;
    for (ElementId x : n.elements()) {
      if (sub.contains(x)) continue;
      // order of x modulo sub
      std::size_t j = 1;
      ElementId y = x;
      while (!sub.contains(y)) {
        y = g.mul(y, x);
        ++j;
      }
      std::size_t q = j;
      while (q % p == 0) q /= p;
      if (q == 1) {
        sub = join(sub, x);
        grown = true;
        break;
      }
    }
    if (!grown) throw Error("sylow search stalled");
  }
  return sub;
}

Subgroup sylow_subgroup(const GroupPtr& g, std::size_t p) { return sylow_subgroup(whole(g), p); }

bool is_nilpotent(const Subgroup& h) {
  for (auto [p, e] : factorize(h.order())) {
    if (!is_normal_in(sylow_subgroup(h, p), h)) return false;
  }
  return true;
}

bool is_nilpotent(const GroupPtr& g) { return is_nilpotent(whole(g)); }

bool is_simple(const Subgroup& h) {
  if (h.is_trivial()) return false;
  const Group& g = h.group();
  Bitset done(g.order());
  for (ElementId x : h.elements()) {
    if (x == 0 || done.test(x)) continue;
    Subgroup n = normal_closure(h, std::span<const ElementId>(&x, 1));
    if (n.order() != h.order()) return false;
    // conjugates of x have the same normal closure
    h.members().for_each([&](std::size_t a) { done.set(g.conj(x, static_cast<ElementId>(a))); });
  }
  return true;
}

Subgroup fitting_subgroup(const GroupPtr& g) {
  Subgroup fit = trivial(g);
  for (auto [p, e] : factorize(g->order())) fit = join(fit, normal_core(sylow_subgroup(g, p)));
  return fit;
}

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g) {
  const Subgroup all = whole(g);
  std::vector<Subgroup> closures;
  Bitset seen(g->order());
  for (ElementId x = 1; x < g->order(); ++x) {
    if (seen.test(x)) continue;
    Subgroup n = normal_closure(all, std::span<const ElementId>(&x, 1));
    // conjugates of x have the same normal closure
    for (ElementId y = 0; y < g->order(); ++y) seen.set(g->conj(x, y));
    if (std::find(closures.begin(), closures.end(), n) == closures.end()) closures.push_back(std::move(n));
  }
  std::vector<Subgroup> out;
  for (const auto& a : closures) {
    bool minimal = true;
    for (const auto& b : closures)
      if (b.order() < a.order() && b.members().is_subset_of(a.members())) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

Quotient quotient(const Subgroup& n) {
  if (!is_normal(n)) throw NotNormal("quotient by a non-normal subgroup");
  const GroupPtr& gp = n.group_ptr();
  const Group& g = *gp;
  const auto nel = n.elements();
  std::vector<std::uint32_t> coset(g.order(), UINT32_MAX);
  std::vector<ElementId> rep;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset[x] != UINT32_MAX) continue;
    const auto c = static_cast<std::uint32_t>(rep.size());
    rep.push_back(x);
    for (ElementId m : nel) coset[g.mul(x, m)] = c;
  }
  std::vector<std::uint32_t> gens;
  for (ElementId s : g.generators()) gens.push_back(coset[s]);
  auto mul = [&](std::uint32_t a, std::uint32_t b) { return coset[g.mul(rep[a], rep[b])]; };
  auto [e, elems] = enumerate_elements<std::uint32_t>(gens, 0u, mul, rep.size());
  std::vector<ElementId> relabel(rep.size());
  for (std::size_t i = 0; i < elems.size(); ++i) relabel[elems[i]] = static_cast<ElementId>(i);
  Quotient q;
  q.group = std::make_shared<Group>(std::move(e), Backend::quotient);
  q.projection.resize(g.order());
  for (ElementId x = 0; x < g.order(); ++x) q.projection[x] = relabel[coset[x]];
  return q;
}

}  // namespace maxint
