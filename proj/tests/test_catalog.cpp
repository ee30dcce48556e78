#include <set>

#include "doctest.h"
#include "maxint/catalog.hpp"
#include "maxint/dimensions.hpp"
#include "maxint/structure.hpp"

using namespace maxint;

namespace {

std::multiset<std::size_t> sorted(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("spec round trip") {
  for (const char* text : {"cyclic:12", "abelian:2x2x3", "dihedral:8", "sym:4", "alt:5", "agl1:7", "agl25", "sl23",
                           "sec2:p=2,q=3,a=2,b=2", "sec3:q=3,p=2,r=3", "wr:2,3",
                           "prod:(cyclic:2)*(dihedral:8)", "prod:(sym:3)*(sym:3)*(sym:3)",
                           "perm:gens=(1,2,3);(1,2)"}) {
    INFO(text);
    const auto s = GroupSpec::parse(text);
    CHECK(GroupSpec::parse(s.to_string()) == s);
    CHECK(GroupSpec::parse(s.to_string()).to_string() == s.to_string());
  }
  // cycle text is canonicalised
  CHECK(GroupSpec::parse("perm:gens=(1 2 3);(1 2)").to_string() == GroupSpec::parse("perm:gens=(1,2,3);(1,2)").to_string());
  for (const auto& e : corpus(400)) CHECK(GroupSpec::parse(e.spec.to_string()) == e.spec);
}

TEST_CASE("malformed specs") {
  for (const char* text : {"", "sym", "sym:x", "cyclic:", "foo:3", "prod:(sym:3)", "prod:sym:3*sym:3",
                           "sec2:p=2,q=3,a=2", "sec2:p=2,q=3,a=2,b=2,z=1", "perm:gens=(1,2", "perm:gens=(0,1)",
                           "perm:(1,2)", "abelian:", "sl23:4"}) {
    INFO(text);
    CHECK_THROWS_AS(GroupSpec::parse(text), ParseError);
  }
}

TEST_CASE("orders of catalog constructions") {
  CHECK(build("sym:4").group->order() == 24);
  CHECK(build("perm:gens=(1,2,3,4,5);(1,2)").group->order() == 120);
  CHECK(build("prod:(cyclic:2)*(dihedral:8)").group->order() == 16);
  CHECK(build("wr:3,2").group->order() == 18);
  CHECK_THROWS_AS(build("sym:12"), CapExceeded);
}

TEST_CASE("AGL(2,5) and its supplied maximals") {
  const auto a = agl25();
  CHECK(a.group->order() == 12000);
  CHECK(a.maximals.size() == 47);
  CHECK(a.maximals.provenance == Provenance::supplied);
  const auto sizes = sorted(a.maximals.class_sizes());
  CHECK(sizes == std::multiset<std::size_t>{25, 1, 5, 6, 10});
  std::set<std::string> labels(a.maximals.class_labels.begin(), a.maximals.class_labels.end());
  CHECK(labels == std::set<std::string>{"type 1", "type 2", "type 3", "type 4", "type 5"});
  for (const auto& m : a.maximals.members) CHECK(verify_maximal(m));

  CHECK(a.socle.order() == 25);
  CHECK(is_normal(a.socle));
  CHECK(a.f.order() == 100);
  const auto fn = quotient(Subgroup(a.f.group_ptr(), a.f.members()));
  CHECK(fn.group->order() == 120);
  // F/N is the scalar group, cyclic of order 4
  const auto n_in_f = quotient(a.socle);
  std::size_t longest = 0;
  for (ElementId x = 0; x < a.group->order(); ++x)
    if (a.f.contains(x)) longest = std::max(longest, n_in_f.group->element_order(n_in_f.projection[x]));
  CHECK(longest == 4);
  // G/F is Sym(5): its maximal classes have sizes 1, 5, 6, 10
  const auto gf = maximal_subgroups(fn.group);
  const auto q = sorted(gf.class_sizes());
  CHECK(q == std::multiset<std::size_t>{1, 5, 6, 10});
  // type 1 maximals are the complements, of order 480
  for (const auto& m : a.maximals.members)
    if (m.order() == 480) CHECK(intersect(m, a.socle).is_trivial());
}

TEST_CASE("the sec2 family") {
  const auto s = sec2_family(2, 3, 2, 2);
  CHECK(s.group->order() == 8892);
  CHECK(s.maximals.size() == 34);
  for (const auto& m : s.maximals.members) CHECK(verify_maximal(m));
  CHECK(s.moduli.size() == 2);
  CHECK_THROWS_AS(sec2_family(2, 3, 4, 4, 100000), CapExceeded);
}

TEST_CASE("the sec3 family") {
  const auto s = sec3_family(3, 2, 3);
  CHECK(s.group->order() == 3 * 3 * 3 * 8 * 3);  // r^q p^q q
  CHECK(s.translations.order() == 27);
  CHECK(is_normal(s.translations));
  CHECK(s.complement.order() == 24);
  CHECK(s.witness.size() == 3);
  for (const auto& h : s.witness) CHECK(verify_maximal(h));
  try {
    sec3_family(11, 5, 11);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    const std::string msg = e.what();
    CHECK(msg.find("has order") != std::string::npos);
    CHECK(msg.find("cap") != std::string::npos);
  }
}

TEST_CASE("supplied maximals are checked") {
  const auto g = sym(4);
  CHECK_THROWS_AS(supplied_maximals(g, {fitting_subgroup(g)}), Error);
  const auto ok = supplied_maximals(g, {commutator_subgroup(g)}, {"index 2"});
  CHECK(ok.size() == 1);
  CHECK(ok.class_labels == std::vector<std::string>{"index 2"});
}

TEST_CASE("corpus contents") {
  const auto c200 = corpus(200);
  CHECK(c200.size() >= 25);
  CHECK(corpus(400).size() >= 30);
  std::size_t nilpotent = 0;
  std::set<std::string> names;
  for (const auto& e : c200) {
    CHECK(e.order <= 200);
    nilpotent += e.tag == "nilpotent";
    CHECK(names.insert(e.name).second);
  }
  CHECK(nilpotent >= 10);
  for (const char* n : {"D8", "Q8", "C2xD8", "Sym(4)", "Alt(5)", "Sym(5)", "PSL(2,7)"}) CHECK(names.contains(n));
  for (std::size_t i = 1; i < c200.size(); ++i) CHECK(c200[i - 1].order <= c200[i].order);
}

TEST_CASE("corpus determinism") {
  const auto a = corpus(200), b = corpus(200);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].spec == b[i].spec);
    // identical element indexing: same multiplication table
    const auto g = build(a[i].spec).group, h = build(b[i].spec).group;
    bool same = g->order() == h->order();
    for (ElementId x = 0; same && x < g->order(); ++x)
      for (ElementId y = 0; same && y < g->order(); ++y) same = g->mul(x, y) == h->mul(x, y);
    CHECK(same);
  }
}

TEST_CASE("Q8 is quaternion") {
  const auto e = [] {
    for (const auto& x : corpus(8))
      if (x.name == "Q8") return x;
    return CatalogEntry{};
  }();
  const auto g = build(e.spec).group;
  REQUIRE(g->order() == 8);
  std::size_t involutions = 0;
  for (ElementId x = 0; x < 8; ++x) involutions += g->element_order(x) == 2;
  CHECK(involutions == 1);
  CHECK_FALSE(is_abelian(g));
}

TEST_CASE("PSL(2,7) and PGL(2,7)") {
  for (const auto& e : corpus(400)) {
    if (e.name == "PSL(2,7)") {
      CHECK(e.order == 168);
      CHECK(is_simple(whole(build(e.spec).group)));
    }
    if (e.name == "PGL(2,7)") {
      CHECK(e.order == 336);
      const auto g = build(e.spec).group;
      CHECK(commutator_subgroup(g).order() == 168);
    }
  }
}
