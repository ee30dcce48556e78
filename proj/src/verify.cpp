#include "maxint/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "maxint/exhaustive.hpp"
#include "maxint/structure.hpp"

namespace maxint {

namespace {

struct Context {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": expected " << want << ", got " << got;
      failures.push_back(s.str());
    }
  }
  void at_least(std::size_t got, std::size_t bound, const std::string& what) {
    if (got < bound) failures.push_back(what + ": expected >= " + std::to_string(bound) + ", got " + std::to_string(got));
  }
  void at_most(std::size_t got, std::size_t bound, const std::string& what) {
    if (got > bound) failures.push_back(what + ": expected <= " + std::to_string(bound) + ", got " + std::to_string(got));
  }
};

struct Loaded {
  Built built;
  IncidencePtr inc;
};

Loaded load(const std::string& spec) {
  Built b = build(spec);
  auto inc = std::make_shared<const Incidence>(maximals_for(b));
  return {std::move(b), std::move(inc)};
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::optional<std::size_t> index_of(const MaximalSet& ms, const Subgroup& h) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ms[i] == h) return i;
  return std::nullopt;
}

using Check = std::function<void(Context&, const Budget&, const VerifyOptions&)>;

struct Spec {
  std::string id;
  std::string name;
  double budget;
  Check run;
};

std::vector<Spec> checks() {
  std::vector<Spec> out;
  out.push_back({"1", "Alt(5) chain lengths and alpha", 5, [](Context& c, const Budget& b, const VerifyOptions& o) {
                   auto [built, inc] = load("alt:5");
                   ClassifyOptions co;
                   co.skip = {"m"};
                   const auto r = classify(inc, co);
                   c.equal(r.menta.value.value_or(0), o.expect.alt5_menta, "menta(Alt(5))");
                   c.equal(r.manta.value.value_or(0), o.expect.alt5_manta, "manta(Alt(5))");
                   c.equal(alpha(*inc, b).value, o.expect.alt5_alpha, "alpha(Alt(5))");
                   c.expect(r.is_weakly_minmax == false, "Alt(5) must not be weakly minmax");
                   c.expect(!r.is_soluble, "Alt(5) must be insoluble");
                 }});
  out.push_back({"2", "Sym(4) minmax flags", 5, [](Context& c, const Budget&, const VerifyOptions& o) {
                   auto [built, inc] = load("sym:4");
                   ClassifyOptions co;
                   co.skip = {"m"};
                   const auto r = classify(inc, co);
                   c.expect(r.is_minmax == true, "Sym(4) minmax");
                   c.expect(r.is_strongly_minmax == true, "Sym(4) strongly minmax");
                   c.expect(r.is_weakly_minmax == true, "Sym(4) weakly minmax");
                   for (const auto* f : {&r.mindim, &r.maxdim, &r.menta, &r.manta})
                     c.equal(f->value.value_or(0), o.expect.sym4_common, "Sym(4) common value");
                 }});
  out.push_back({"3", "nilpotent corpus is strongly minmax", 30, [](Context& c, const Budget&, const VerifyOptions& o) {
                   std::size_t count = 0;
                   for (const auto& e : corpus(kLatticeOrderCap)) {
                     if (e.tag != "nilpotent" || e.order > 400) continue;
                     ++count;
                     auto [built, inc] = load(e.spec.to_string());
                     ClassifyOptions co;
                     co.skip = {"m", "mindim", "alpha"};
                     const auto r = classify(inc, co);
                     c.expect(r.is_strongly_minmax == true, e.name + " should be strongly minmax");
                   }
                   c.at_least(count, o.expect.nilpotent_min_entries, "nilpotent entries");
                 }});
  out.push_back({"4", "AGL(2,5) trivializing families", 1200, [](Context& c, const Budget& b, const VerifyOptions& o) {
                   auto g = agl25();
                   const auto& ms = g.maximals;
                   auto got = ms.class_sizes(), want = o.expect.agl25_classes;
                   std::sort(got.begin(), got.end());
                   std::sort(want.begin(), want.end());
                   c.equal(join_sizes(got), join_sizes(want), "AGL(2,5) class sizes");
                   c.equal(ms.size(), std::size_t{47}, "AGL(2,5) maximal count");
                   bool verified = true;
                   for (const auto& m : ms.members) verified = verified && verify_maximal(m);
                   c.expect(verified, "every supplied AGL(2,5) maximal verifies");
                   const Incidence inc(ms);
                   const auto q = question2_check(inc, b);
                   c.at_least(q.maxdim, o.expect.agl25_maxdim_at_least, "maxdim(AGL(2,5))");
                   c.equal(q.max_trivializing_size, o.expect.agl25_trivializing, "largest trivialising family");
                   c.expect(!q.answer, "question2_check(AGL(2,5)) must be false");
                 }});
  out.push_back({"5", "sec2 family at (2,3,2,2)", 600, [](Context& c, const Budget& b, const VerifyOptions& o) {
                   auto g = sec2_family(2, 3, 2, 2);
                   const Incidence inc(g.maximals);
                   auto incp = std::make_shared<const Incidence>(g.maximals);
                   const auto poset = build_mposet(incp, kNodeCap, b);
                   c.equal(g.group->order(), std::size_t{8892}, "order");
                   c.equal(mindim(inc, b).value, o.expect.sec2_dim, "mindim");
                   c.equal(maxdim(inc, b).value, o.expect.sec2_dim, "maxdim");
                   c.equal(menta(poset).first, o.expect.sec2_chain, "menta");
                   c.equal(manta(poset).first, o.expect.sec2_chain, "manta");
                 }});
  out.push_back({"6", "sec3 family G(3,2,3)", 300, [](Context& c, const Budget& b, const VerifyOptions& o) {
                   auto g = sec3_family(3, 2, 3);
                   c.equal(g.group->order(), std::size_t{648}, "order");
                   auto incp = std::make_shared<const Incidence>(maximal_subgroups(g.group));
                   Family fam;
                   for (const auto& h : g.witness) {
                     auto i = index_of(incp->maximals(), h);
                     c.expect(i.has_value(), "witness member is maximal");
                     if (i) fam.push_back(*i);
                   }
                   c.expect(fam.size() == g.witness.size() && is_irredundant(*incp, fam), "witness family irredundant");
                   c.at_least(maxdim(*incp, b).value, o.expect.sec3_maxdim_at_least, "maxdim");
                   c.at_most(menta(build_mposet(incp, kNodeCap, b)).first, o.expect.sec3_menta_at_most, "menta");
                 }});
  out.push_back({"7", "Sym(5) maxdim and m", 120, [](Context& c, const Budget& b, const VerifyOptions& o) {
                   auto [built, inc] = load("sym:5");
                   c.equal(maxdim(*inc, b).value, o.expect.sym5_maxdim, "maxdim(Sym(5))");
                   c.equal(m_invariant(*inc, b).value, o.expect.sym5_maxdim, "m(Sym(5))");
                   c.at_most(menta(build_mposet(inc, kNodeCap, b)).first, o.expect.sym5_menta_at_most, "menta(Sym(5))");
                 }});
  out.push_back({"8", "property scan to order 200", 900, [](Context& c, const Budget&, const VerifyOptions& o) {
                   ScanOptions so;
                   so.max_order = 200;
                   so.threads = o.threads;
                   const auto res = scan(so);
                   c.at_least(res.rows.size(), o.expect.scan_min_entries, "scan entries");
                   for (const auto& r : res.rows) {
                     for (const auto& v : r.violations) c.expect(false, r.entry.name + ": " + v);
                     c.expect(r.error.empty(), r.entry.name + ": " + r.error);
                     for (const auto* f : {&r.report.maxdim, &r.report.mindim, &r.report.menta, &r.report.manta,
                                           &r.report.alpha, &r.report.m})
                       c.expect(f->present(), r.entry.name + ": field skipped (" + f->skipped + ")");
                   }
                 }});
  out.push_back({"9", "almost simple sigma and tau", 600, [](Context& c, const Budget& b, const VerifyOptions& o) {
                   const std::vector<std::pair<std::string, std::string>> groups = {
                       {"Alt(5)", "alt:5"}, {"Sym(5)", "sym:5"}, {"Alt(6)", "alt:6"}, {"Sym(6)", "sym:6"}};
                   std::vector<std::pair<std::string, std::string>> all = groups;
                   for (const auto& e : corpus(kLatticeOrderCap))
                     if (e.name == "PGL(2,7)") all.emplace_back(e.name, e.spec.to_string());
                   for (const auto& [name, spec] : all) {
                     auto [built, inc] = load(spec);
                     c.at_least(sigma_almost_simple(*inc, b), o.expect.sigma_at_least, "sigma(" + name + ")");
                     const auto t = tau_almost_simple(*inc, b);
                     c.at_most(t, o.expect.tau_at_most, "tau(" + name + ")");
                     if (name == "Alt(5)") c.equal(t, o.expect.alt5_tau, "tau(Alt(5))");
                   }
                 }});
  out.push_back({"10", "pruned searches match exhaustive enumeration", 600,
                 [](Context& c, const Budget& b, const VerifyOptions&) {
                   for (const auto& e : corpus(120)) {
                     auto [built, inc] = load(e.spec.to_string());
                     const auto ref = exhaustive::compute(inc->maximals(), b);
                     const auto poset = build_mposet(inc, kNodeCap, b);
                     c.equal(maxdim(*inc, b).value, ref.maxdim, e.name + " maxdim");
                     c.equal(mindim(*inc, b).value, ref.mindim, e.name + " mindim");
                     c.equal(alpha(*inc, b).value, ref.alpha, e.name + " alpha");
                     c.equal(menta(poset).first, ref.menta, e.name + " menta");
                     c.equal(manta(poset).first, ref.manta, e.name + " manta");
                   }
                 }});
  out.push_back({"11", "m(Sym(3)^3)", 1800, [](Context& c, const Budget& b, const VerifyOptions& o) {
                   auto [built, inc] = load("prod:(sym:3)*(sym:3)*(sym:3)");
                   c.equal(m_invariant(*inc, b).value, o.expect.sym3cubed_m, "m(Sym(3)^3)");
                 }});
  return out;
}

}  // namespace

std::vector<CheckResult> verify_paper(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& spec : checks()) {
    if (!options.full && spec.budget > 60) continue;
    CheckResult r{spec.id, spec.name, false, {}, 0, spec.budget};
    Context ctx;
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.run(ctx, Budget(spec.budget), options);
    } catch (const std::exception& e) {
      ctx.failures.push_back(std::string("error: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > spec.budget) ctx.failures.push_back("exceeded budget of " + std::to_string(spec.budget) + " s");
    r.passed = ctx.failures.empty();
    for (std::size_t i = 0; i < ctx.failures.size(); ++i) r.detail += (i ? "; " : "") + ctx.failures[i];
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_checks(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << std::setw(3) << c.id << "  " << std::left << std::setw(48) << c.name
        << std::right << std::fixed << std::setprecision(2) << std::setw(9) << c.seconds << " s";
    if (!c.passed) {
      ++failed;
      out << "  " << c.detail;
    }
    out << '\n';
  }
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace maxint
