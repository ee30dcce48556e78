#include <set>

#include "doctest.h"
#include "maxint/catalog.hpp"
#include "maxint/structure.hpp"
#include "oracles.hpp"

using namespace maxint;

namespace {

std::multiset<std::size_t> sorted(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

namespace {

std::set<oracle::Set> as_sets(const std::vector<Subgroup>& v) {
  std::set<oracle::Set> out;
  for (const auto& s : v) out.insert(oracle::from(s));
  return out;
}

Subgroup stabilizer(const GroupPtr& g, std::size_t pt) {
  Bitset m(g->order());
  for (ElementId a = 0; a < g->order(); ++a)
    if (g->points(a)[pt] == pt) m.set(a);
  return Subgroup(g, m);
}

}  // namespace

TEST_CASE("closure and generated subgroups") {
  const auto g = sym(4);
  const ElementId a = *g->find_permutation(parse_cycles("(1,2,3,4)", 4));
  const ElementId b = *g->find_permutation(parse_cycles("(1,3)", 4));
  CHECK(subgroup_from_generators(g, std::vector<ElementId>{a}).order() == 4);
  CHECK(subgroup_from_generators(g, std::vector<ElementId>{a, b}).order() == 8);
  CHECK(subgroup_from_generators(g, std::vector<ElementId>{}).is_trivial());
  const auto d8 = subgroup_from_generators(g, std::vector<ElementId>{a, b});
  CHECK(oracle::from(d8) == oracle::generated(*g, d8.generators()));
}

TEST_CASE("subgroup counts agree with the naive oracle") {
  for (auto [g, n] : {std::pair{abelian({2, 2, 2}), 16u}, {sym(4), 30u}, {alt(5), 59u}, {cyclic(12), 6u},
                      {dihedral(8), 10u}}) {
    const auto subs = all_subgroups(g);
    CHECK(subs.size() == n);
    const auto want = oracle::subgroups(*g);
    CHECK(as_sets(subs) == std::set<oracle::Set>(want.begin(), want.end()));
  }
}

TEST_CASE("maximal subgroups agree with the naive oracle") {
  for (const auto& e : corpus(120)) {
    INFO(e.name);
    const auto g = build(e.spec).group;
    if (g->order() == 1) continue;
    const auto ms = maximal_subgroups(g);
    const auto want = oracle::maximals(*g);
    CHECK(as_sets(ms.members) == std::set<oracle::Set>(want.begin(), want.end()));
    for (const auto& m : ms.members) CHECK(verify_maximal(m));
  }
}

TEST_CASE("maximal classes of small groups") {
  CHECK(maximal_subgroups(cyclic(6)).size() == 2);
  const auto s4 = maximal_subgroups(sym(4));
  CHECK(s4.size() == 8);
  CHECK(sorted(s4.class_sizes()) ==
        std::multiset<std::size_t>{1, 3, 4});
  const auto a5 = maximal_subgroups(alt(5));
  CHECK(a5.size() == 21);
  CHECK(sorted(a5.class_sizes()) ==
        std::multiset<std::size_t>{5, 6, 10});
  // canonical order: order descending
  for (std::size_t i = 1; i < a5.size(); ++i) CHECK(a5[i - 1].order() >= a5[i].order());
}

TEST_CASE("verify_maximal") {
  const auto g = sym(4);
  const auto a4 = commutator_subgroup(g);
  CHECK(verify_maximal(a4));
  CHECK_FALSE(verify_maximal(fitting_subgroup(g)));
  CHECK_FALSE(verify_maximal(whole(g)));
  CHECK(verify_maximal(stabilizer(g, 0)));
}

TEST_CASE("intersections, joins and normalizers") {
  const auto g = alt(5);
  const auto both = intersect(stabilizer(g, 0), stabilizer(g, 1));
  CHECK(both.order() == 3);
  CHECK(join(stabilizer(g, 0), stabilizer(g, 1)).is_whole());
  CHECK(normalizer(sylow_subgroup(g, 5)).order() == 10);
  CHECK(normal_core(stabilizer(g, 0)).is_trivial());
  CHECK(conjugacy_class(stabilizer(g, 0)).size() == 5);

  const auto s4 = sym(4);
  const auto d8 = sylow_subgroup(s4, 2);
  CHECK(intersect(d8, commutator_subgroup(s4)).order() == 4);
  CHECK(normal_core(d8).order() == 4);
  CHECK(normal_closure(whole(s4), std::vector<ElementId>{*s4->find_permutation(parse_cycles("(1,2)", 4))}).order() ==
        24);
  CHECK_THROWS_AS(intersect(d8, whole(sym(3))), ParentMismatch);
}

TEST_CASE("intersection, join and class-size laws on the lattice") {
  for (const auto& e : corpus(200)) {
    const auto g = build(e.spec).group;
    if (g->order() > 60) continue;  // pairwise checks are quadratic in the subgroup count
    INFO(e.name);
    const auto subs = all_subgroups(g);
    const auto known = as_sets(subs);
    bool closed = true;
    for (const auto& a : subs)
      for (const auto& b : subs) {
        const auto i = intersect(a, b), j = join(a, b);
        closed = closed && known.contains(oracle::from(i)) && known.contains(oracle::from(j));
        closed = closed && i.members().is_subset_of(a.members()) && a.members().is_subset_of(j.members());
      }
    CHECK(closed);
  }
  for (const auto& e : corpus(200)) {
    const auto g = build(e.spec).group;
    if (g->order() == 1) continue;
    INFO(e.name);
    for (const auto& m : maximal_subgroups(g).members)
      CHECK(conjugacy_class(m).size() == g->order() / normalizer(m).order());
  }
}

TEST_CASE("nothing lies strictly between a maximal and G") {
  for (const auto& e : corpus(200)) {
    const auto g = build(e.spec).group;
    if (g->order() == 1) continue;
    INFO(e.name);
    const auto subs = all_subgroups(g);
    const auto ms = maximal_subgroups(g);
    bool ok = true;
    for (const auto& m : ms.members)
      for (const auto& h : subs)
        if (m.members().is_subset_of(h.members()) && !(h == m) && !h.is_whole()) ok = false;
    CHECK(ok);
  }
}

TEST_CASE("Frattini subgroup") {
  CHECK(frattini(maximal_subgroups(cyclic(4))).order() == 2);
  CHECK(frattini(maximal_subgroups(cyclic(12))).order() == 2);
  CHECK(frattini(maximal_subgroups(cyclic(6))).order() == 1);
  CHECK(frattini(maximal_subgroups(sym(4))).order() == 1);
  CHECK(frattini(maximal_subgroups(dihedral(8))).order() == 2);
  CHECK(frattini(maximal_subgroups(abelian({2, 4}))).order() == 2);
  CHECK_THROWS_AS(frattini(maximal_subgroups(cyclic(1))), TrivialGroup);
  for (const auto& e : corpus(200)) {
    const auto g = build(e.spec).group;
    if (g->order() == 1) continue;
    INFO(e.name);
    const auto ms = maximal_subgroups(g);
    const auto f = frattini(ms);
    CHECK(is_normal(f));
    for (const auto& m : ms.members) CHECK(f.members().is_subset_of(m.members()));
  }
}

TEST_CASE("lattice cap") { CHECK_THROWS_AS(all_subgroups(sym(7)), CapExceeded); }
