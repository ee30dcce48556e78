#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "maxint/verify.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + MAXINT_CLI + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::ordered_json without_timing(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  j.erase("timing");
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("invariants sym:4").code == 0);
  CHECK(run("invariants sym:").code == 2);
  CHECK(run("invariants nonsense:3").code == 2);
  CHECK(run("bogus-command").code == 2);
  CHECK(run("invariants sym:4 --threads notanumber").code == 2);
  CHECK(run("scan --max-order 50 --check nope").code == 2);
  CHECK(run("invariants sym:12").code == 3);
  CHECK(run("invariants 'perm:gens=(1,2,3,4,5,6,7,8,9,10,11,12);(1,2)'").code == 3);
  CHECK(run("invariants agl25 --budget-seconds 0.000001").code == 4);
  CHECK(run("invariants agl25", "MAXINT_BUDGET_SECONDS=0.000001").code == 4);
  // flag beats environment
  CHECK(run("invariants sym:3 --budget-seconds 60", "MAXINT_BUDGET_SECONDS=0.000001").code == 0);
}

TEST_CASE("invariants report") {
  const auto r = run("invariants alt:5 --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["order"] == 60);
  CHECK(j["invariants"]["menta"]["value"] == 3);
  CHECK(j["invariants"]["manta"]["value"] == 3);
  CHECK(j["invariants"]["alpha"]["value"] == 2);
  CHECK(j["flags"]["weakly_minmax"] == false);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "spec", "order", "backend", "maximals", "frattini_order", "poset",
                                         "invariants", "flags", "derived_length_mod_frattini",
                                         "relation_violations", "caps", "timing"});
  const auto text = run("invariants sym:4");
  CHECK(text.out.find("maxdim") != std::string::npos);
}

TEST_CASE("JSON is stable across runs and thread counts") {
  const auto a = run("invariants sym:4 --json --threads 1");
  const auto b = run("invariants sym:4 --json --threads 1");
  const auto c = run("invariants sym:4 --json --threads 4");
  CHECK(without_timing(a.out).dump() == without_timing(b.out).dump());
  auto va = without_timing(a.out), vc = without_timing(c.out);
  CHECK(va["invariants"].dump() == vc["invariants"].dump());
  const auto s1 = run("scan --max-order 60 --json --threads 1");
  const auto s4 = run("scan --max-order 60 --json --threads 4");
  auto strip = [](const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    for (auto& row : j["rows"]) row.erase("seconds");
    j.erase("timing");
    return j.dump();
  };
  CHECK(strip(s1.out) == strip(s4.out));
}

TEST_CASE("--skip never changes other values") {
  const auto all = without_timing(run("invariants sym:4 --json").out);
  const auto part = without_timing(run("invariants sym:4 --json --skip m,alpha").out);
  CHECK(part["invariants"]["m"]["skipped"] == "requested");
  CHECK(part["invariants"]["alpha"]["skipped"] == "requested");
  for (const char* f : {"maxdim", "mindim", "menta", "manta"}) CHECK(part["invariants"][f] == all["invariants"][f]);
}

TEST_CASE("poset export") {
  const std::string dot = "test_cli_sym3.dot", json = "test_cli_alt5.json";
  auto r = run("poset sym:3 --dot " + dot);
  CHECK(r.code == 0);
  CHECK(r.out.find("6 nodes, 8 covers") == 0);
  const std::string d = slurp(dot);
  std::size_t nodes = 0, edges = 0;
  for (std::size_t pos = 0; (pos = d.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = d.find("->", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(nodes == 6);
  CHECK(edges == 8);

  CHECK(run("poset cyclic:9").out.find("2 nodes, 1 covers") == 0);

  r = run("poset alt:5 --json " + json);
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(slurp(json));
  CHECK(j["nodes"][j["bottom"].get<std::size_t>()]["order"] == 1);
  CHECK(j["nodes"][j["top"].get<std::size_t>()]["order"] == 60);
  std::remove(dot.c_str());
  std::remove(json.c_str());
}

TEST_CASE("verify-paper and scan through the binary") {
  const auto v = run("verify-paper --fast");
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("PASS") != std::string::npos);
  CHECK(run("verify-paper").code == 2);
  const auto s = run("scan --max-order 100 --check facile,sandwich");
  CHECK(s.code == 0);
}

TEST_CASE("a tampered expectation fails and names the check") {
  maxint::VerifyOptions opt;
  opt.expect.alt5_menta = 2;
  const auto checks = maxint::verify_paper(opt);
  bool found = false;
  for (const auto& c : checks)
    if (c.id == "1") {
      found = true;
      CHECK_FALSE(c.passed);
      CHECK(c.detail.find("menta") != std::string::npos);
      CHECK(maxint::format_checks({c}).find("FAIL") != std::string::npos);
    } else {
      CHECK(c.passed);
    }
  CHECK(found);
}
