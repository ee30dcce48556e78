#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "maxint/catalog.hpp"
#include "maxint/dimensions.hpp"
#include "maxint/exhaustive.hpp"
#include "maxint/structure.hpp"
#include "oracles.hpp"

using namespace maxint;

namespace {

IncidencePtr incidence(const GroupPtr& g) { return std::make_shared<const Incidence>(maximal_subgroups(g)); }
IncidencePtr incidence(const CatalogEntry& e) { return std::make_shared<const Incidence>(maximals_for(build(e.spec))); }

std::vector<oracle::Set> sets(const Incidence& inc) {
  std::vector<oracle::Set> out;
  for (const auto& m : inc.maximals().members) out.push_back(oracle::from(m));
  return out;
}

/// Reports for corpus(200), computed once.
const std::vector<std::pair<CatalogEntry, InvariantReport>>& reports() {
  static const auto all = [] {
    std::vector<std::pair<CatalogEntry, InvariantReport>> out;
    for (const auto& e : corpus(200)) out.emplace_back(e, classify(incidence(e)));
    return out;
  }();
  return all;
}

std::size_t index_of_order(const Incidence& inc, std::size_t order) {
  for (std::size_t i = 0; i < inc.maximal_count(); ++i)
    if (inc.maximals()[i].order() == order) return i;
  FAIL("no maximal of order " << order);
  return 0;
}

}  // namespace

TEST_CASE("irredundance on Sym(4)") {
  const auto inc = incidence(sym(4));
  const std::size_t a4 = index_of_order(*inc, 12);
  const std::size_t s3 = index_of_order(*inc, 6);
  const std::size_t d8 = index_of_order(*inc, 8);
  CHECK(is_irredundant(*inc, std::vector<std::size_t>{a4}));
  CHECK(is_irredundant(*inc, std::vector<std::size_t>{}));
  CHECK(is_irredundant(*inc, std::vector<std::size_t>{a4, d8}));
  // the three D8 meet in V4, and any two already do
  std::vector<std::size_t> d8s;
  for (std::size_t i = 0; i < inc->maximal_count(); ++i)
    if (inc->maximals()[i].order() == 8) d8s.push_back(i);
  REQUIRE(d8s.size() == 3);
  CHECK_FALSE(is_irredundant(*inc, d8s));
  CHECK(irredundant_core(*inc, d8s).size() == 2);
  CHECK(inc->meet(irredundant_core(*inc, d8s)) == inc->meet(d8s));
  CHECK_THROWS_AS(is_maximal_irredundant(*inc, d8s), NotIrredundant);
  CHECK_FALSE(is_maximal_irredundant(*inc, std::vector<std::size_t>{s3}));
  const auto top = maxdim(*inc);
  CHECK(is_maximal_irredundant(*inc, top.witness));
}

TEST_CASE("subsets of irredundant families are irredundant, and prefixes strictly decrease") {
  for (const auto& e : corpus(120)) {
    if (e.order == 1) continue;
    INFO(e.name);
    const auto inc = incidence(e);
    std::size_t visited = 0;
    bool heredity = true, strict = true;
    for_each_irredundant(*inc, [&](std::span<const std::size_t> f, const Bitset& meet, bool) {
      if (++visited > 2000) return;
      CHECK(meet == inc->meet(f));
      const std::size_t k = f.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) sub.push_back(f[i]);
        heredity = heredity && is_irredundant(*inc, sub);
      }
      // reverse order as well as the canonical one
      for (bool reverse : {false, true}) {
        std::vector<std::size_t> order(f.begin(), f.end());
        if (reverse) std::reverse(order.begin(), order.end());
        Bitset cur = inc->top();
        for (auto m : order) {
          Bitset nxt = cur & inc->maximal(m);
          strict = strict && !(nxt == cur);
          cur = nxt;
        }
      }
    });
    CHECK(heredity);
    CHECK(strict);
  }
}

TEST_CASE("pruned searches agree with unpruned enumeration") {
  for (const auto& e : corpus(120)) {
    if (e.order == 1) continue;
    INFO(e.name);
    const auto inc = incidence(e);
    const auto want = oracle::dims(*inc->group(), sets(*inc));
    const auto mx = maxdim(*inc), mn = mindim(*inc), al = alpha(*inc);
    CHECK(mx.value == want.maxdim);
    CHECK(mn.value == want.mindim);
    CHECK(al.value == want.alpha);
    CHECK(mx.witness.size() == mx.value);
    CHECK(is_irredundant(*inc, mx.witness));
    CHECK(is_maximal_irredundant(*inc, mn.witness));
    CHECK(inc->meet(al.witness) == inc->frattini());
    // the library's own exhaustive mode says the same
    const auto ex = exhaustive::compute(inc->maximals());
    CHECK(ex.maxdim == want.maxdim);
    CHECK(ex.mindim == want.mindim);
    CHECK(ex.alpha == want.alpha);
    CHECK(ex.menta == want.menta);
    CHECK(ex.manta == want.manta);
  }
}

TEST_CASE("restricted searches with a target meet") {
  const auto inc = incidence(sym(4));
  std::vector<std::size_t> all(inc->maximal_count());
  std::iota(all.begin(), all.end(), 0);
  const auto whole_search = max_irredundant(*inc, all, nullptr);
  CHECK(whole_search.value == maxdim(*inc).value);
  const auto to_frattini = max_irredundant(*inc, all, &inc->frattini());
  CHECK(inc->meet(to_frattini.witness) == inc->frattini());
  std::vector<std::size_t> only_a4{index_of_order(*inc, 12)};
  CHECK(max_irredundant(*inc, only_a4, nullptr).value == 1);
}

TEST_CASE("m(G) agrees with brute force over element subsets") {
  for (const auto& e : corpus(24)) {
    if (e.order == 1) continue;
    INFO(e.name);
    const auto inc = incidence(e);
    const auto w = m_invariant(*inc);
    CHECK(w.value == oracle::m_invariant(*inc->group()));
    // witness: generates, irredundant, g_i outside M_i but inside the other M_j
    REQUIRE(w.generators.size() == w.value);
    CHECK(oracle::count(oracle::generated(*inc->group(), w.generators)) == e.order);
    for (std::size_t i = 0; i < w.value; ++i)
      for (std::size_t j = 0; j < w.value; ++j)
        CHECK(inc->maximals()[w.maximals[j]].contains(w.generators[i]) == (i != j));
  }
  CHECK(m_invariant(*incidence(sym(3))).value == 2);
  CHECK(m_invariant(*incidence(abelian({2, 2, 2}))).value == 3);
  CHECK(m_invariant(*incidence(sym(4))).value == 3);
  CHECK(m_invariant(*incidence(cyclic(1))).value == 0);
  CHECK_THROWS_AS(m_invariant(*incidence(alt(5)), {}, 50), CapExceeded);
}

TEST_CASE("base sizes") {
  auto stab = [](const GroupPtr& g, std::size_t pt) {
    Bitset m(g->order());
    for (ElementId a = 0; a < g->order(); ++a)
      if (g->points(a)[pt] == pt) m.set(a);
    return Subgroup(g, m);
  };
  CHECK(base_size(stab(sym(5), 0)) == 4);
  CHECK(base_size(stab(alt(5), 0)) == 3);
  for (std::size_t p : {5, 7, 11}) CHECK(base_size(stab(agl1(p), 0)) == 2);
  const auto s5 = sym(5);
  CHECK_THROWS_AS(base_size(commutator_subgroup(s5)), CoreNotTrivial);
  for (const auto& g : {alt(5), sym(5), sym(4)}) {
    const auto h = stab(g, 0);
    CHECK(base_size(h) == oracle::least_trivial_meet(*g, oracle::conjugates(*g, oracle::from(h))));
  }
}

TEST_CASE("almost simple: sigma, tau and the base-size sandwich") {
  for (const auto& g : {alt(5), sym(5)}) {
    const auto inc = incidence(g);
    const auto info = almost_simple_info(*inc);
    CHECK(info.socle.order() == 60);
    CHECK(sigma_almost_simple(*inc) >= 3);
    const auto t = tau_almost_simple(*inc);
    CHECK(t <= 4);
    std::vector<oracle::Set> cf;
    for (auto i : info.core_free) cf.push_back(oracle::from(inc->maximals()[i]));
    CHECK(t == oracle::least_trivial_meet(*g, cf));
    const auto a = alpha(*inc).value, d = maxdim(*inc).value;
    for (auto i : info.core_free) {
      const auto b = base_size(inc->maximals()[i]);
      CHECK(a <= b);
      CHECK(b <= d);
    }
  }
  CHECK(tau_almost_simple(*incidence(alt(5))) == 2);
  CHECK(sigma_almost_simple(*incidence(alt(5))) == 3);
  CHECK_THROWS_AS(almost_simple_info(*incidence(sym(4))), NotAlmostSimple);
  CHECK_THROWS_AS(almost_simple_info(*incidence(build("prod:(cyclic:2)*(alt:5)").group)), NotAlmostSimple);
}

TEST_CASE("question2_check") {
  for (std::size_t n : {1, 2, 3, 4}) {
    const auto r = question2_check(*incidence(elementary_abelian(2, n)));
    CHECK(r.answer);
    CHECK(r.max_trivializing_size == n);
  }
  CHECK(question2_check(*incidence(elementary_abelian(3, 3))).answer);
  const auto s4 = question2_check(*incidence(sym(4)));
  CHECK(s4.answer);
  CHECK(s4.maxdim == 3);
}

TEST_CASE("question1_check runs and is only recorded") {
  const auto inc = incidence(sym(4));
  const auto r = question1_check(*inc, fitting_subgroup(inc->group()));
  CHECK(r.d == 3);
  CHECK(r.families_checked > 0);
  MESSAGE("Sym(4), N = V4: delta " << r.delta << ", d " << r.d << ", families " << r.families_checked
                                   << ", non-liftable " << r.non_liftable.size());
  CHECK_THROWS_AS(question1_check(*inc, sylow_subgroup(inc->group(), 3)), NotNormal);
}

TEST_CASE("classification of Sym(4) and Alt(5)") {
  const auto s4 = classify(incidence(sym(4)));
  for (const Field* f : {&s4.maxdim, &s4.mindim, &s4.menta, &s4.manta}) CHECK(f->value == 3u);
  CHECK(s4.is_minmax == true);
  CHECK(s4.is_strongly_minmax == true);
  CHECK(s4.is_weakly_minmax == true);
  CHECK(s4.is_soluble);
  CHECK(s4.derived_length_mod_frattini == 3u);

  const auto a5 = classify(incidence(alt(5)));
  CHECK(a5.menta.value == 3u);
  CHECK(a5.manta.value == 3u);
  CHECK(a5.alpha.value == 2u);
  CHECK(a5.is_weakly_minmax == false);
  CHECK_FALSE(a5.is_soluble);
  CHECK_FALSE(a5.derived_length_mod_frattini.has_value());
}

TEST_CASE("skipping fields leaves the others unchanged") {
  const auto inc = incidence(sym(4));
  const auto full = classify(inc);
  ClassifyOptions opt;
  opt.skip = {"m", "alpha"};
  const auto part = classify(inc, opt);
  CHECK(part.m.skipped == "requested");
  CHECK(part.alpha.skipped == "requested");
  CHECK_FALSE(part.is_weakly_minmax.has_value());
  CHECK(part.maxdim.value == full.maxdim.value);
  CHECK(part.menta.value == full.menta.value);
  CHECK(part.is_strongly_minmax == full.is_strongly_minmax);
}

TEST_CASE("the trivial group is degenerate") {
  const auto r = classify(incidence(cyclic(1)));
  CHECK(r.maxdim.skipped == "degenerate");
  CHECK(r.menta.skipped == "degenerate");
  CHECK_THROWS_AS(maxdim(*incidence(cyclic(1))), DegenerateGroup);
}

TEST_CASE("proven relations hold across the corpus") {
  for (const auto& [e, r] : reports()) {
    if (e.order == 1) continue;
    INFO(e.name);
    CHECK(r.relation_violations.empty());
    const auto v = [](const Field& f) { return f.value.value(); };
    CHECK(v(r.mindim) <= v(r.menta));
    CHECK(v(r.maxdim) <= v(r.manta));
    CHECK(v(r.mindim) <= v(r.alpha));
    CHECK(v(r.alpha) <= v(r.manta));
    CHECK(v(r.m) <= v(r.maxdim));
    const auto g = build(e.spec).group;
    if (is_nilpotent(quotient(fitting_subgroup(g)).group)) CHECK(v(r.menta) >= v(r.m));
    if (r.is_weakly_minmax == true) {
      CHECK(r.is_soluble);
      CHECK(r.derived_length_mod_frattini.value() <= 3);
    }
    if (e.tag == "nilpotent") CHECK(r.is_strongly_minmax == true);
  }
}

TEST_CASE("the core of every maximal irredundant intersection is the Frattini subgroup") {
  for (const auto& e : corpus(200)) {
    if (e.order == 1) continue;
    INFO(e.name);
    const auto inc = incidence(e);
    const auto frat = inc->to_subgroup(inc->frattini());
    std::set<Bitset> meets;
    for_each_irredundant(*inc, [&](std::span<const std::size_t>, const Bitset& meet, bool maximal) {
      if (maximal) meets.insert(meet);
    });
    for (const auto& m : meets) CHECK(normal_core(inc->to_subgroup(m)) == frat);
  }
}

TEST_CASE("families of a fixed size") {
  const auto inc = incidence(sym(4));
  std::size_t n3 = 0;
  for_each_irredundant_of_size(*inc, 3, [&](std::span<const std::size_t> f) {
    CHECK(is_irredundant(*inc, f));
    ++n3;
    return false;
  });
  CHECK(n3 > 0);
  CHECK_FALSE(for_each_irredundant_of_size(*inc, 4, [](auto) { return true; }));
  CHECK(for_each_irredundant_of_size(*inc, 2, [](auto) { return true; }));
}

TEST_CASE("searches honour the budget") {
  const auto a = agl25();
  const Incidence inc(a.maximals);
  CHECK_THROWS_AS(maxdim(inc, Budget(1e-9)), Timeout);
}
