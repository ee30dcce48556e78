#include "maxint/subgroup.hpp"

#include <algorithm>

namespace maxint {

namespace {

/// Extends the closed set `members` (listed in `list`, closed under `old_gens`)
/// to the closure under old_gens + extra.
void extend_closure(const Group& g, Bitset& members, std::vector<ElementId>& list,
                    std::span<const ElementId> old_gens, std::span<const ElementId> extra,
                    std::size_t limit = 0) {
  std::vector<ElementId> gens(old_gens.begin(), old_gens.end());
  gens.insert(gens.end(), extra.begin(), extra.end());
  const std::size_t old_size = list.size();
  for (std::size_t i = 0; i < old_size; ++i) {
    for (ElementId s : extra) {
      ElementId y = g.mul(list[i], s);
      if (!members.test(y)) {
        members.set(y);
        list.push_back(y);
      }
    }
  }
  for (std::size_t i = old_size; i < list.size(); ++i) {
    if (limit != 0 && list.size() > limit) return;
    for (ElementId s : gens) {
      ElementId y = g.mul(list[i], s);
      if (!members.test(y)) {
        members.set(y);
        list.push_back(y);
      }
    }
  }
}

std::vector<ElementId> greedy_generators(const Group& g, const Bitset& target) {
  std::vector<ElementId> gens;
  Bitset members(g.order());
  members.set(0);
  std::vector<ElementId> list{0};
  const std::size_t want = target.count();
  target.for_each([&](std::size_t x) {
    if (list.size() == want || members.test(x)) return;
    const ElementId e = static_cast<ElementId>(x);
    extend_closure(g, members, list, gens, std::span<const ElementId>(&e, 1));
    gens.push_back(e);
  });
  return gens;
}

}  // namespace

Bitset closure(const Group& g, std::span<const ElementId> seed, std::size_t limit) {
  Bitset members(g.order());
  members.set(0);
  std::vector<ElementId> list{0};
  std::vector<ElementId> gens;
  for (ElementId s : seed)
    if (s != 0) gens.push_back(s);
  extend_closure(g, members, list, {}, gens, limit);
  return members;
}

Subgroup::Subgroup(GroupPtr parent, Bitset members)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      order_(members_.count()),
      gens_(std::make_shared<GenCache>()) {}

Subgroup::Subgroup(GroupPtr parent, Bitset members, std::vector<ElementId> gens)
    : Subgroup(std::move(parent), std::move(members)) {
  std::call_once(gens_->once, [&] { gens_->gens = std::move(gens); });
}

std::vector<ElementId> Subgroup::elements() const {
  std::vector<ElementId> out;
  out.reserve(order_);
  members_.for_each([&](std::size_t x) { out.push_back(static_cast<ElementId>(x)); });
  return out;
}

const std::vector<ElementId>& Subgroup::generators() const {
  std::call_once(gens_->once, [&] { gens_->gens = greedy_generators(*parent_, members_); });
  return gens_->gens;
}

Subgroup whole(const GroupPtr& g) {
  std::vector<ElementId> gens(g->generators().begin(), g->generators().end());
  std::erase(gens, ElementId{0});
  return Subgroup(g, Bitset(g->order(), true), std::move(gens));
}

Subgroup trivial(const GroupPtr& g) {
  Bitset b(g->order());
  b.set(0);
  return Subgroup(g, std::move(b), {});
}

Subgroup subgroup_from_generators(const GroupPtr& g, std::span<const ElementId> seed) {
  std::vector<ElementId> gens;
  for (ElementId s : seed)
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  return Subgroup(g, closure(*g, gens), gens);
}

static void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.group_ptr() != b.group_ptr()) throw ParentMismatch("subgroups belong to different groups");
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return Subgroup(a.group_ptr(), a.members() & b.members());
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (b.members().is_subset_of(a.members())) return a;
  if (a.members().is_subset_of(b.members())) return b;
  const Group& g = a.group();
  Bitset members = a.members();
  std::vector<ElementId> list = a.elements();
  std::vector<ElementId> extra;
  for (ElementId x : b.generators())
    if (!members.test(x)) extra.push_back(x);
  extend_closure(g, members, list, a.generators(), extra);
  std::vector<ElementId> gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Subgroup(a.group_ptr(), std::move(members), std::move(gens));
}

Subgroup join(const Subgroup& a, ElementId x) {
  if (a.contains(x)) return a;
  Bitset members = a.members();
  std::vector<ElementId> list = a.elements();
  extend_closure(a.group(), members, list, a.generators(), std::span<const ElementId>(&x, 1));
  std::vector<ElementId> gens = a.generators();
  gens.push_back(x);
  return Subgroup(a.group_ptr(), std::move(members), std::move(gens));
}

Subgroup conjugate_subgroup(const Subgroup& h, ElementId g) {
  const Group& grp = h.group();
  Bitset out(grp.order());
  h.members().for_each([&](std::size_t x) { out.set(grp.conj(static_cast<ElementId>(x), g)); });
  return Subgroup(h.group_ptr(), std::move(out));
}

bool is_normal_in(const Subgroup& h, const Subgroup& ambient) {
  const Group& g = h.group();
  for (ElementId a : ambient.generators())
    for (ElementId x : h.generators())
      if (!h.contains(g.conj(x, a))) return false;
  return true;
}

bool is_normal(const Subgroup& h) { return is_normal_in(h, whole(h.group_ptr())); }

Subgroup normalizer_in(const Subgroup& h, const Subgroup& ambient) {
  const Group& g = h.group();
  const auto& hg = h.generators();
  Bitset out(g.order());
  ambient.members().for_each([&](std::size_t a) {
    for (ElementId x : hg)
      if (!h.contains(g.conj(x, static_cast<ElementId>(a)))) return;
    out.set(a);
  });
  return Subgroup(h.group_ptr(), std::move(out));
}

Subgroup normalizer(const Subgroup& h) { return normalizer_in(h, whole(h.group_ptr())); }

std::vector<Subgroup> conjugacy_class(const Subgroup& h) {
  const Group& g = h.group();
  const Subgroup n = normalizer(h);
  const auto nel = n.elements();
  Bitset covered(g.order());
  std::vector<Subgroup> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (covered.test(x)) continue;
    for (ElementId m : nel) covered.set(g.mul(m, x));
    out.push_back(x == 0 ? h : conjugate_subgroup(h, x));
  }
  return out;
}

Subgroup normal_core(const Subgroup& h) {
  Bitset core = h.members();
  for (const auto& c : conjugacy_class(h)) core &= c.members();
  return Subgroup(h.group_ptr(), std::move(core));
}

Subgroup normal_closure(const Subgroup& ambient, std::span<const ElementId> seed) {
  const Group& g = ambient.group();
  const auto& amb = ambient.generators();
  std::vector<ElementId> gens;
  Bitset members(g.order());
  members.set(0);
  std::vector<ElementId> list{0};
  std::vector<ElementId> pending(seed.begin(), seed.end());
  while (!pending.empty()) {
    std::vector<ElementId> extra;
    for (ElementId x : pending)
      if (!members.test(x) && std::find(extra.begin(), extra.end(), x) == extra.end()) extra.push_back(x);
    pending.clear();
    if (extra.empty()) break;
    extend_closure(g, members, list, gens, extra);
    gens.insert(gens.end(), extra.begin(), extra.end());
    for (ElementId x : gens)
      for (ElementId a : amb) {
        ElementId y = g.conj(x, a);
        if (!members.test(y)) pending.push_back(y);
      }
  }
  return Subgroup(ambient.group_ptr(), std::move(members), std::move(gens));
}

}  // namespace maxint
