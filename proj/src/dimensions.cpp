#include "maxint/dimensions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "maxint/structure.hpp"

namespace maxint {

namespace detail {

/// An irredundant family with, for each member x, the non-empty set of atoms
/// lying in every other member but not in x. A maximal M extends the family
/// irredundantly iff M misses part of the meet and meets every such set.
struct State {
  Family family;
  Bitset meet;
  std::vector<Bitset> private_parts;

  static State root(const Incidence& inc) { return State{{}, inc.top(), {}}; }

  bool can_add(const Incidence& inc, std::size_t m) const {
    const Bitset& mx = inc.maximal(m);
    if (meet.is_subset_of(mx)) return false;
    for (const auto& p : private_parts)
      if (!p.intersects(mx)) return false;
    return true;
  }

  State with(const Incidence& inc, std::size_t m) const {
    const Bitset& mx = inc.maximal(m);
    State c;
    c.family = family;
    c.family.push_back(m);
    c.meet = meet & mx;
    c.private_parts.reserve(private_parts.size() + 1);
    for (const auto& p : private_parts) c.private_parts.push_back(p & mx);
    Bitset fresh = meet;
    fresh.subtract(mx);
    c.private_parts.push_back(std::move(fresh));
    return c;
  }
};

std::vector<std::size_t> filter(const Incidence& inc, const State& s, std::span<const std::size_t> from) {
  std::vector<std::size_t> out;
  for (std::size_t m : from)
    if (s.can_add(inc, m)) out.push_back(m);
  return out;
}

}  // namespace detail

using detail::State;

namespace {

void require_nontrivial(const Incidence& inc, const char* what) {
  if (inc.group()->order() == 1) throw DegenerateGroup(std::string(what) + " undefined for the trivial group");
}

std::vector<std::size_t> all_indices(const Incidence& inc) {
  std::vector<std::size_t> v(inc.maximal_count());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

bool is_irredundant(const Incidence& inc, std::span<const std::size_t> family) {
  const Bitset full = inc.meet(family);
  for (std::size_t i = 0; i < family.size(); ++i) {
    Bitset rest = inc.top();
    for (std::size_t j = 0; j < family.size(); ++j)
      if (j != i) rest &= inc.maximal(family[j]);
    if (rest == full) return false;
  }
  // duplicates are redundant
  std::vector<std::size_t> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Family irredundant_core(const Incidence& inc, Family family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const Bitset target = inc.meet(family);
  for (std::size_t i = 0; i < family.size();) {
    Family rest = family;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (inc.meet(rest) == target)
      family = std::move(rest);
    else
      ++i;
  }
  return family;
}

bool is_maximal_irredundant(const Incidence& inc, std::span<const std::size_t> family) {
  if (!is_irredundant(inc, family)) throw NotIrredundant("family is redundant");
  State s = State::root(inc);
  for (auto m : family) s = s.with(inc, m);
  for (std::size_t m = 0; m < inc.maximal_count(); ++m) {
    if (std::find(family.begin(), family.end(), m) != family.end()) continue;
    if (s.can_add(inc, m)) return false;
  }
  return true;
}

SearchValue max_irredundant(const Incidence& inc, std::span<const std::size_t> allowed, const Bitset* target,
                            const Budget& budget) {
  const std::size_t floor_weight = inc.weight(target ? *target : inc.frattini());
  SearchValue best;
  std::unordered_map<std::size_t, std::size_t> omega_cache;
  auto chain_room = [&](const Bitset& meet) {
    const std::size_t ratio = inc.weight(meet) / floor_weight;
    auto it = omega_cache.find(ratio);
    if (it != omega_cache.end()) return it->second;
    return omega_cache[ratio] = omega(ratio);
  };

  auto rec = [&](auto&& self, const State& s, const std::vector<std::size_t>& cands) -> void {
    budget.tick("irredundant search");
    const std::size_t size = s.family.size();
    const bool hits = !target || s.meet == *target;
    if (hits && size > best.value) {
      best.value = size;
      best.witness = s.family;
    }
    if (size + cands.size() <= best.value) return;
    if (size + chain_room(s.meet) <= best.value) return;
    if (target) {
      if (!target->is_subset_of(s.meet)) return;
      Bitset reach = s.meet;
      for (auto c : cands) reach &= inc.maximal(c);
      if (reach != *target) return;
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (size + (cands.size() - i) <= best.value) return;
      State child = s.with(inc, cands[i]);
      auto next = detail::filter(inc, child, std::span(cands).subspan(i + 1));
      self(self, child, next);
    }
  };
  State root = State::root(inc);
  std::vector<std::size_t> cands(allowed.begin(), allowed.end());
  std::sort(cands.begin(), cands.end());
  rec(rec, root, cands);
  return best;
}

SearchValue maxdim(const Incidence& inc, const Budget& budget) {
  require_nontrivial(inc, "maxdim");
  const auto all = all_indices(inc);
  return max_irredundant(inc, all, nullptr, budget);
}

SearchValue mindim(const Incidence& inc, const Budget& budget) {
  require_nontrivial(inc, "mindim");
  const auto all = all_indices(inc);
  for (std::size_t k = 1; k <= inc.maximal_count(); ++k) {
    std::optional<Family> found;
    // `valid` holds every maximal (any index) that extends s irredundantly
    auto rec = [&](auto&& self, const State& s, const std::vector<std::size_t>& valid) -> void {
      budget.tick("mindim");
      if (found) return;
      const std::size_t size = s.family.size();
      if (size == k) {
        if (valid.empty()) found = s.family;
        return;
      }
      const std::size_t last = s.family.empty() ? 0 : s.family.back() + 1;
      auto first = std::lower_bound(valid.begin(), valid.end(), last);
      if (size + static_cast<std::size_t>(valid.end() - first) < k) return;
      for (auto it = first; it != valid.end() && !found; ++it) {
        State child = s.with(inc, *it);
        std::vector<std::size_t> next;
        for (auto j : valid)
          if (j != *it && child.can_add(inc, j)) next.push_back(j);
        self(self, child, next);
      }
    };
    rec(rec, State::root(inc), all);
    if (found) return {k, *found};
  }
  throw Error("mindim search failed to terminate");
}

SearchValue alpha(const Incidence& inc, const Budget& budget) {
  require_nontrivial(inc, "alpha");
  const Bitset& frat = inc.frattini();
  const std::size_t k = inc.maximal_count();
  std::size_t value = 0;
  {
    std::unordered_set<Bitset, BitsetHash> seen{inc.top()};
    std::vector<Bitset> level{inc.top()};
    for (std::size_t depth = 1; value == 0; ++depth) {
      std::vector<Bitset> next;
      for (const auto& s : level) {
        for (std::size_t m = 0; m < k; ++m) {
          budget.tick("alpha");
          Bitset t = s & inc.maximal(m);
          if (t == frat) {
            value = depth;
            break;
          }
          if (seen.insert(t).second) next.push_back(std::move(t));
        }
        if (value) break;
      }
      if (next.empty() && value == 0) throw Error("alpha search exhausted");
      level = std::move(next);
    }
  }
  // lexicographically least family of that size
  std::unordered_map<Bitset, std::map<std::size_t, std::size_t>, BitsetHash> failed;  // meet -> remaining -> min last
  Family fam;
  auto rec = [&](auto&& self, const Bitset& meet, std::size_t start, std::size_t remaining) -> bool {
    if (meet == frat) return true;
    if (remaining == 0) return false;
    auto& f = failed[meet];
    auto it = f.find(remaining);
    if (it != f.end() && it->second <= start) return false;
    for (std::size_t m = start; m < k; ++m) {
      budget.tick("alpha");
      Bitset t = meet & inc.maximal(m);
      if (t == meet) continue;
      fam.push_back(m);
      if (self(self, t, m + 1, remaining - 1)) return true;
      fam.pop_back();
    }
    auto [slot, fresh] = failed[meet].try_emplace(remaining, start);
    if (!fresh) slot->second = std::min(slot->second, start);
    return false;
  };
  rec(rec, inc.top(), 0, value);
  return {value, fam};
}

void for_each_irredundant(const Incidence& inc,
                          const std::function<void(std::span<const std::size_t>, const Bitset&, bool)>& visit,
                          const Budget& budget) {
  auto rec = [&](auto&& self, const State& s, const std::vector<std::size_t>& valid) -> void {
    budget.tick("irredundant enumeration");
    if (!s.family.empty()) visit(s.family, s.meet, valid.empty());
    const std::size_t last = s.family.empty() ? 0 : s.family.back() + 1;
    for (auto it = std::lower_bound(valid.begin(), valid.end(), last); it != valid.end(); ++it) {
      State child = s.with(inc, *it);
      std::vector<std::size_t> next;
      for (auto j : valid)
        if (j != *it && child.can_add(inc, j)) next.push_back(j);
      self(self, child, next);
    }
  };
  rec(rec, State::root(inc), all_indices(inc));
}

bool for_each_irredundant_of_size(const Incidence& inc, std::size_t k,
                                  const std::function<bool(std::span<const std::size_t>)>& visit,
                                  const Budget& budget) {
  bool stop = false;
  auto rec = [&](auto&& self, const State& s, const std::vector<std::size_t>& cands) -> void {
    budget.tick("irredundant enumeration");
    if (s.family.size() == k) {
      stop = visit(s.family);
      return;
    }
    if (s.family.size() + cands.size() < k) return;
    for (std::size_t i = 0; i < cands.size() && !stop; ++i) {
      State child = s.with(inc, cands[i]);
      self(self, child, detail::filter(inc, child, std::span(cands).subspan(i + 1)));
    }
  };
  rec(rec, State::root(inc), all_indices(inc));
  return stop;
}

Question2Result question2_check(const Incidence& inc, const Budget& budget) {
  require_nontrivial(inc, "question2_check");
  Question2Result r;
  const auto all = all_indices(inc);
  auto md = max_irredundant(inc, all, nullptr, budget);
  auto tr = max_irredundant(inc, all, &inc.frattini(), budget);
  r.maxdim = md.value;
  r.maxdim_witness = md.witness;
  r.max_trivializing_size = tr.value;
  r.trivializing_witness = tr.witness;
  r.answer = tr.value == md.value;
  return r;
}

Question1Result question1_check(const Incidence& inc, const Subgroup& n, const Budget& budget) {
  require_nontrivial(inc, "question1_check");
  if (n.group_ptr() != inc.group()) throw ParentMismatch("N is not a subgroup of this group");
  if (!is_normal(n)) throw NotNormal("N is not normal");
  const Bitset atoms = inc.to_atoms(n.members());
  if (inc.to_elements(atoms) != n.members()) throw Error("N is not an intersection of maximal subgroups");
  std::vector<std::size_t> containing;
  for (std::size_t i = 0; i < inc.maximal_count(); ++i)
    if (atoms.is_subset_of(inc.maximal(i))) containing.push_back(i);

  Question1Result r;
  r.delta = containing.empty() ? 0 : max_irredundant(inc, containing, nullptr, budget).value;
  r.d = maxdim(inc, budget).value;
  const std::size_t need = r.d - r.delta;
  const auto all = all_indices(inc);

  auto extendable = [&](const State& base) {
    bool ok = false;
    auto rec = [&](auto&& self, const State& s, const std::vector<std::size_t>& cands, std::size_t added) -> void {
      budget.tick("question1 extension");
      if (ok) return;
      if (added == need) {
        ok = true;
        return;
      }
      if (added + cands.size() < need) return;
      for (std::size_t i = 0; i < cands.size() && !ok; ++i) {
        State child = s.with(inc, cands[i]);
        self(self, child, detail::filter(inc, child, std::span(cands).subspan(i + 1)), added + 1);
      }
    };
    std::vector<std::size_t> rest;
    for (auto m : all)
      if (std::find(base.family.begin(), base.family.end(), m) == base.family.end()) rest.push_back(m);
    rec(rec, base, detail::filter(inc, base, rest), 0);
    return ok;
  };

  auto rec = [&](auto&& self, const State& s, const std::vector<std::size_t>& cands) -> void {
    budget.tick("question1");
    if (s.family.size() == r.delta) {
      ++r.families_checked;
      if (!extendable(s)) r.non_liftable.push_back(s.family);
      return;
    }
    if (s.family.size() + cands.size() < r.delta) return;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      State child = s.with(inc, cands[i]);
      self(self, child, detail::filter(inc, child, std::span(cands).subspan(i + 1)));
    }
  };
  rec(rec, State::root(inc), containing);
  return r;
}

// ---- classification ----------------------------------------------------------

namespace {

template <class F>
void fill(Field& field, const std::string& name, const ClassifyOptions& opt, F&& compute) {
  if (std::find(opt.skip.begin(), opt.skip.end(), name) != opt.skip.end()) {
    field.skipped = "requested";
    return;
  }
  try {
    compute(field);
  } catch (const Timeout& e) {
    field.value.reset();
    field.skipped = std::string("timeout: ") + e.what();
  } catch (const CapExceeded& e) {
    field.value.reset();
    field.skipped = std::string("cap: ") + e.what();
  }
}

}  // namespace

InvariantReport classify(const IncidencePtr& inc, const ClassifyOptions& options) {
  const MPoset poset = build_mposet(inc);
  return classify(inc, poset, options);
}

InvariantReport classify(const IncidencePtr& incp, const MPoset& poset, const ClassifyOptions& opt) {
  const Incidence& inc = *incp;
  const GroupPtr& g = inc.group();
  InvariantReport r;
  r.is_soluble = is_soluble(g);
  r.is_nilpotent = is_nilpotent(g);
  r.poset_nodes = poset.size();
  r.poset_covers = poset.covers().size();
  if (g->order() == 1) {
    for (Field* f : {&r.maxdim, &r.mindim, &r.menta, &r.manta, &r.alpha, &r.m}) f->skipped = "degenerate";
    r.frattini_order = 1;
    r.derived_length_mod_frattini = 0;
    return r;
  }
  const Subgroup frat = frattini(inc.maximals());
  r.frattini_order = frat.order();
  r.derived_length_mod_frattini = derived_length(quotient(frat).group);

  auto budget = [&] { return opt.budget_seconds > 0 ? Budget(opt.budget_seconds) : Budget(); };
  fill(r.menta, "menta", opt, [&](Field& f) {
    auto [v, w] = menta(poset);
    f.value = v;
    f.witness = w.nodes;
  });
  fill(r.manta, "manta", opt, [&](Field& f) {
    auto [v, w] = manta(poset);
    f.value = v;
    f.witness = w.nodes;
  });
  fill(r.maxdim, "maxdim", opt, [&](Field& f) {
    auto v = maxdim(inc, budget());
    f.value = v.value;
    f.witness = v.witness;
  });
  fill(r.mindim, "mindim", opt, [&](Field& f) {
    auto v = mindim(inc, budget());
    f.value = v.value;
    f.witness = v.witness;
  });
  fill(r.alpha, "alpha", opt, [&](Field& f) {
    auto v = alpha(inc, budget());
    f.value = v.value;
    f.witness = v.witness;
  });
  fill(r.m, "m", opt, [&](Field& f) {
    auto v = m_invariant(inc, budget(), opt.m_order_cap);
    f.value = v.value;
    f.witness.assign(v.generators.begin(), v.generators.end());
  });

  auto both = [](const Field& a, const Field& b) { return a.present() && b.present(); };
  if (both(r.mindim, r.maxdim)) r.is_minmax = *r.mindim.value == *r.maxdim.value;
  if (both(r.maxdim, r.menta)) r.is_strongly_minmax = *r.maxdim.value == *r.menta.value;
  if (both(r.menta, r.manta) && r.alpha.present())
    r.is_weakly_minmax = *r.menta.value == *r.manta.value && *r.manta.value == *r.alpha.value;

  auto require = [&](const Field& a, const char* an, const Field& b, const char* bn) {
    if (both(a, b) && *a.value > *b.value)
      r.relation_violations.push_back(std::string(an) + " > " + bn);
  };
  require(r.mindim, "mindim", r.menta, "menta");
  require(r.maxdim, "maxdim", r.manta, "manta");
  require(r.mindim, "mindim", r.alpha, "alpha");
  require(r.alpha, "alpha", r.manta, "manta");
  require(r.m, "m", r.maxdim, "maxdim");
  require(r.menta, "menta", r.manta, "manta");
  require(r.mindim, "mindim", r.maxdim, "maxdim");
  return r;
}

}  // namespace maxint
