// maxint: invariants of maximal-subgroup intersections for small finite groups.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "maxint/report.hpp"
#include "maxint/scan.hpp"
#include "maxint/verify.hpp"

using namespace maxint;

namespace {

enum Exit { kOk = 0, kCheckFail = 1, kParse = 2, kCap = 3, kTimeout = 4 };

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

/// flag > environment > default
struct Config {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  double budget = 300;

  void from_env() {
    if (const char* t = std::getenv("MAXINT_THREADS")) threads = std::max<std::size_t>(1, std::stoul(t));
    if (const char* b = std::getenv("MAXINT_BUDGET_SECONDS")) budget = std::stod(b);
  }
};

IncidencePtr load_incidence(const Built& b) { return std::make_shared<const Incidence>(maximals_for(b)); }

int cmd_invariants(const std::string& spec, const std::vector<std::string>& skip, const Config& cfg, bool json) {
  const auto start = std::chrono::steady_clock::now();
  const Built built = build(spec);
  auto inc = load_incidence(built);
  const MPoset poset = build_mposet(inc, kNodeCap, Budget(cfg.budget));
  ClassifyOptions opt;
  opt.skip = skip;
  opt.budget_seconds = cfg.budget;
  const auto r = classify(inc, poset, opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Json doc = make_report(built, *inc, r, RunSettings{cfg.budget, cfg.threads, skip}, secs);
  if (json)
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << format_report(doc);
  int code = kOk;
  for (const Field* f : {&r.maxdim, &r.mindim, &r.menta, &r.manta, &r.alpha, &r.m}) {
    if (f->skipped.rfind("timeout", 0) == 0) code = kTimeout;
    if (f->skipped.rfind("cap", 0) == 0 && code == kOk) code = kCap;
  }
  if (!r.relation_violations.empty()) code = kCheckFail;
  return code;
}

int cmd_poset(const std::string& spec, const std::string& dot, const std::string& json, bool witnesses,
              const Config& cfg) {
  const Built built = build(spec);
  auto inc = load_incidence(built);
  const MPoset poset = build_mposet(inc, kNodeCap, Budget(cfg.budget));
  if (!dot.empty()) {
    std::ofstream(dot) << to_dot(poset, witnesses);
  }
  if (!json.empty()) {
    std::ofstream(json) << to_json(poset).dump(2) << '\n';
  }
  std::cout << poset.size() << " nodes, " << poset.covers().size() << " covers, bottom order "
            << poset.nodes()[poset.bottom()].order << ", top order " << poset.nodes()[poset.top()].order << '\n';
  return kOk;
}

int cmd_verify(bool full, const Config& cfg) {
  VerifyOptions opt;
  opt.full = full;
  opt.threads = cfg.threads;
  const auto checks = verify_paper(opt);
  std::cout << format_checks(checks);
  for (const auto& c : checks)
    if (!c.passed) return kCheckFail;
  return kOk;
}

int cmd_scan(std::size_t max_order, const std::vector<std::string>& checks, bool json, const Config& cfg) {
  if (max_order > kLatticeOrderCap)
    throw CapExceeded("scan order " + std::to_string(max_order) + " exceeds the lattice cap of " +
                      std::to_string(kLatticeOrderCap));
  ScanOptions opt;
  opt.max_order = max_order;
  if (!checks.empty()) opt.checks = checks;
  for (const auto& c : opt.checks)
    if (std::find(kScanChecks.begin(), kScanChecks.end(), c) == kScanChecks.end())
      throw ParseError("unknown check '" + c + "'");
  opt.threads = cfg.threads;
  opt.budget_seconds = cfg.budget;
  const auto res = scan(opt);
  if (json)
    std::cout << scan_json(res).dump(2) << '\n';
  else
    std::cout << format_scan(res);
  return res.violation_count() ? kCheckFail : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maxint: intersections of maximal subgroups in small finite groups"};
  app.require_subcommand(1);
  Config cfg;
  cfg.from_env();
  std::optional<std::size_t> threads;
  std::optional<double> budget;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "worker threads (env MAXINT_THREADS)");
    sub->add_option("--budget-seconds", budget, "time budget per search (env MAXINT_BUDGET_SECONDS)");
  };

  std::string spec, skip, dot, json_path, checks;
  bool json = false, witnesses = false, fast = false, full = false;
  std::size_t max_order = 200;

  auto* inv = app.add_subcommand("invariants", "compute the invariants of a group");
  inv->add_option("spec", spec, "group spec, e.g. sym:4 or prod:(cyclic:2)*(dihedral:8)")->required();
  inv->add_option("--skip", skip, "comma-separated fields to skip (maxdim,mindim,menta,manta,alpha,m)");
  inv->add_flag("--json", json, "machine-readable output");
  common(inv);

  auto* pos = app.add_subcommand("poset", "export the poset of maximal intersections");
  pos->add_option("spec", spec, "group spec")->required();
  pos->add_option("--dot", dot, "write DOT to this path");
  pos->add_option("--json", json_path, "write JSON to this path");
  pos->add_flag("--witnesses", witnesses, "label DOT nodes with witnessing families");
  common(pos);

  auto* ver = app.add_subcommand("verify-paper", "run the reproduction checks");
  auto* g = ver->add_option_group("mode");
  g->add_flag("--fast", fast, "checks budgeted at 60 s or less");
  g->add_flag("--full", full, "every check");
  g->require_option(1);
  common(ver);

  auto* sc = app.add_subcommand("scan", "check proven relations over the corpus");
  sc->add_option("--max-order", max_order, "largest group order")->required();
  sc->add_option("--check", checks, "comma-separated checks: facile,frate,sandwich,fit2,weakminmax,quofra,quat");
  sc->add_flag("--json", json, "machine-readable output");
  common(sc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  if (threads) cfg.threads = std::max<std::size_t>(1, *threads);
  if (budget) cfg.budget = *budget;

  try {
    if (*inv) return cmd_invariants(spec, split_list(skip), cfg, json);
    if (*pos) return cmd_poset(spec, dot, json_path, witnesses, cfg);
    if (*ver) return cmd_verify(full, cfg);
    if (*sc) return cmd_scan(max_order, split_list(checks), json, cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const Timeout& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kTimeout;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFail;
  }
  return kOk;
}
