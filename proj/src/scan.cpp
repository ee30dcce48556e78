#include "maxint/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "maxint/structure.hpp"

namespace maxint {

std::size_t ScanResult::violation_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.violations.size();
  return n;
}

namespace {

bool wants(const ScanOptions& o, const char* check) {
  return std::find(o.checks.begin(), o.checks.end(), check) != o.checks.end();
}

std::size_t val(const Field& f) { return *f.value; }

}  // namespace

ScanRow scan_entry(const CatalogEntry& entry, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ScanRow row{entry, {}, {}, {}, {}, 0};
  auto budget = [&] { return Budget(options.budget_seconds); };
  try {
    const Built built = build(entry.spec);
    const GroupPtr& g = built.group;
    auto inc = std::make_shared<const Incidence>(maximals_for(built));
    const MPoset poset = build_mposet(inc, kNodeCap, budget());
    ClassifyOptions copt;
    copt.budget_seconds = options.budget_seconds;
    if (!wants(options, "sandwich") && !wants(options, "fit2") && !wants(options, "quat")) copt.skip.push_back("m");
    row.report = classify(inc, poset, copt);
    const auto& r = row.report;
    auto& bad = row.violations;
    auto have = [](std::initializer_list<const Field*> fs) {
      return std::all_of(fs.begin(), fs.end(), [](const Field* f) { return f->present(); });
    };

    if (wants(options, "facile")) {
      if (have({&r.mindim, &r.menta}) && val(r.mindim) > val(r.menta)) bad.push_back("facile: mindim > menta");
      if (have({&r.maxdim, &r.manta}) && val(r.maxdim) > val(r.manta)) bad.push_back("facile: maxdim > manta");
    }
    if (wants(options, "sandwich")) {
      if (have({&r.mindim, &r.alpha}) && val(r.mindim) > val(r.alpha)) bad.push_back("sandwich: mindim > alpha");
      if (have({&r.alpha, &r.manta}) && val(r.alpha) > val(r.manta)) bad.push_back("sandwich: alpha > manta");
      if (have({&r.m, &r.maxdim}) && val(r.m) > val(r.maxdim)) bad.push_back("sandwich: m > maxdim");
    }
    if (wants(options, "frate")) {
      const Bitset frat = inc->to_elements(inc->frattini());
      std::unordered_map<Bitset, bool, BitsetHash> ok;
      std::size_t failures = 0;
      for_each_irredundant(
          *inc,
          [&](std::span<const std::size_t>, const Bitset& meet, bool is_maximal) {
            if (!is_maximal) return;
            auto it = ok.find(meet);
            if (it == ok.end())
              it = ok.emplace(meet, normal_core(inc->to_subgroup(meet)).members() == frat).first;
            if (!it->second) ++failures;
          },
          budget());
      if (failures) bad.push_back("frate: " + std::to_string(failures) + " maximal irredundant families");
    }
    if (wants(options, "fit2") && have({&r.menta, &r.m})) {
      const Quotient q = quotient(fitting_subgroup(g));
      if (is_nilpotent(q.group) && val(r.menta) < val(r.m)) bad.push_back("fit2: menta < m");
    }
    const bool weak = r.is_weakly_minmax.value_or(false);
    if (wants(options, "weakminmax") && weak) {
      if (!r.is_soluble) bad.push_back("weakminmax: insoluble");
      else if (!r.derived_length_mod_frattini || *r.derived_length_mod_frattini > 3)
        bad.push_back("weakminmax: derived length of G/Frat exceeds 3");
    }
    if (wants(options, "quofra") && weak) {
      for (std::size_t i = 1; i < poset.size(); ++i) {
        const Subgroup n = inc->to_subgroup(poset.nodes()[i].atoms);
        if (!is_normal(n)) continue;
        const Quotient q = quotient(n);
        if (q.group->order() == 1) continue;
        auto qinc = std::make_shared<const Incidence>(maximal_subgroups(q.group));
        const MPoset qp = build_mposet(qinc, kNodeCap, budget());
        const auto a = alpha(*qinc, budget()).value;
        if (menta(qp).first != a || manta(qp).first != a)
          bad.push_back("quofra: G/N not weakly minmax for |N| = " + std::to_string(n.order()));
      }
    }
    if (wants(options, "quat") && have({&r.m, &r.menta}) && val(r.m) > val(r.menta))
      row.observations.push_back("m > menta");
  } catch (const Error& e) {
    row.error = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

ScanResult scan(const ScanOptions& options) {
  const auto entries = corpus(options.max_order);
  ScanResult result;
  result.rows.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) result.rows[i] = scan_entry(entries[i], options);
  };
  const std::size_t t = std::max<std::size_t>(1, std::min(options.threads, entries.size()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < t; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return result;
}

std::string format_scan(const ScanResult& result) {
  std::ostringstream out;
  auto cell = [](const Field& f) { return f.present() ? std::to_string(*f.value) : std::string("-"); };
  out << std::left << std::setw(16) << "group" << std::right << std::setw(6) << "order" << std::setw(11) << "tag"
      << std::setw(7) << "mindim" << std::setw(7) << "maxdim" << std::setw(6) << "menta" << std::setw(6) << "manta"
      << std::setw(6) << "alpha" << std::setw(4) << "m"
      << "  notes\n";
  for (const auto& r : result.rows) {
    out << std::left << std::setw(16) << r.entry.name << std::right << std::setw(6) << r.entry.order << std::setw(11)
        << r.entry.tag << std::setw(7) << cell(r.report.mindim) << std::setw(7) << cell(r.report.maxdim)
        << std::setw(6) << cell(r.report.menta) << std::setw(6) << cell(r.report.manta) << std::setw(6)
        << cell(r.report.alpha) << std::setw(4) << cell(r.report.m) << "  ";
    std::string notes;
    for (const auto& v : r.violations) notes += "VIOLATION " + v + "; ";
    for (const auto& v : r.observations) notes += v + "; ";
    if (!r.error.empty()) notes += "error: " + r.error;
    out << notes << '\n';
  }
  out << result.rows.size() << " groups, " << result.violation_count() << " violations\n";
  return out.str();
}

Json scan_json(const ScanResult& result) {
  Json j;
  j["schema"] = 1;
  auto rows = Json::array();
  for (const auto& r : result.rows) {
    Json rj;
    rj["name"] = r.entry.name;
    rj["spec"] = r.entry.spec.to_string();
    rj["order"] = r.entry.order;
    rj["tag"] = r.entry.tag;
    rj["maxdim"] = field_json(r.report.maxdim);
    rj["mindim"] = field_json(r.report.mindim);
    rj["menta"] = field_json(r.report.menta);
    rj["manta"] = field_json(r.report.manta);
    rj["alpha"] = field_json(r.report.alpha);
    rj["m"] = field_json(r.report.m);
    rj["violations"] = r.violations;
    rj["observations"] = r.observations;
    rj["error"] = r.error;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  j["violation_count"] = result.violation_count();
  return j;
}

}  // namespace maxint
