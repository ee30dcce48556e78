#include "maxint/report.hpp"

#include <iomanip>
#include <sstream>

namespace maxint {

Json field_json(const Field& f) {
  Json j;
  if (f.present()) {
    j["value"] = *f.value;
    j["witness"] = f.witness;
  } else {
    j["skipped"] = f.skipped;
  }
  return j;
}

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json make_report(const Built& built, const Incidence& inc, const InvariantReport& r, const RunSettings& settings,
                 double seconds) {
  const auto& ms = inc.maximals();
  Json j;
  j["schema"] = 1;
  j["spec"] = built.spec.to_string();
  j["order"] = built.group->order();
  j["backend"] = to_string(built.group->backend());
  Json maximals;
  maximals["count"] = ms.size();
  maximals["provenance"] = to_string(ms.provenance);
  auto classes = Json::array();
  const auto sizes = ms.class_sizes();
  for (std::size_t c = 0; c < ms.classes.size(); ++c) {
    Json cj;
    cj["label"] = c < ms.class_labels.size() ? ms.class_labels[c] : std::string();
    cj["subgroup_order"] = ms[ms.classes[c].front()].order();
    cj["size"] = sizes[c];
    classes.push_back(std::move(cj));
  }
  maximals["classes"] = std::move(classes);
  j["maximals"] = std::move(maximals);
  j["frattini_order"] = r.frattini_order;
  j["poset"] = {{"nodes", r.poset_nodes}, {"covers", r.poset_covers}};
  Json inv;
  inv["maxdim"] = field_json(r.maxdim);
  inv["mindim"] = field_json(r.mindim);
  inv["menta"] = field_json(r.menta);
  inv["manta"] = field_json(r.manta);
  inv["alpha"] = field_json(r.alpha);
  inv["m"] = field_json(r.m);
  j["invariants"] = std::move(inv);
  Json flags;
  flags["minmax"] = optional_bool(r.is_minmax);
  flags["strongly_minmax"] = optional_bool(r.is_strongly_minmax);
  flags["weakly_minmax"] = optional_bool(r.is_weakly_minmax);
  flags["soluble"] = r.is_soluble;
  flags["nilpotent"] = r.is_nilpotent;
  j["flags"] = std::move(flags);
  j["derived_length_mod_frattini"] =
      r.derived_length_mod_frattini ? Json(*r.derived_length_mod_frattini) : Json("insoluble");
  j["relation_violations"] = r.relation_violations;
  j["caps"] = {{"element_cap", kDefaultElementCap},
               {"lattice_cap", kLatticeOrderCap},
               {"node_cap", kNodeCap},
               {"budget_seconds", settings.budget_seconds}};
  j["timing"] = {{"seconds", seconds}, {"threads", settings.threads}};
  return j;
}

std::string format_report(const Json& j) {
  std::ostringstream out;
  auto row = [&](const std::string& k, const std::string& v) { out << std::left << std::setw(22) << k << v << '\n'; };
  row("spec", j["spec"].get<std::string>());
  row("order", std::to_string(j["order"].get<std::size_t>()));
  std::string classes;
  for (const auto& c : j["maximals"]["classes"]) classes += (classes.empty() ? "" : " ") + std::to_string(c["size"].get<std::size_t>());
  row("maximals", std::to_string(j["maximals"]["count"].get<std::size_t>()) + " (" +
                      j["maximals"]["provenance"].get<std::string>() + "; classes " + classes + ")");
  row("frattini order", std::to_string(j["frattini_order"].get<std::size_t>()));
  row("poset", std::to_string(j["poset"]["nodes"].get<std::size_t>()) + " nodes, " +
                   std::to_string(j["poset"]["covers"].get<std::size_t>()) + " covers");
  for (const auto& [name, f] : j["invariants"].items()) {
    if (f.contains("value")) {
      std::string w;
      for (const auto& x : f["witness"]) w += (w.empty() ? "" : ",") + std::to_string(x.get<std::size_t>());
      row(name, std::to_string(f["value"].get<std::size_t>()) + "  [" + w + "]");
    } else {
      row(name, "skipped (" + f["skipped"].get<std::string>() + ")");
    }
  }
  for (const auto& [name, v] : j["flags"].items()) row(name, v.is_null() ? "unknown" : v.get<bool>() ? "yes" : "no");
  const auto& dl = j["derived_length_mod_frattini"];
  row("derived length G/Frat", dl.is_string() ? dl.get<std::string>() : std::to_string(dl.get<std::size_t>()));
  for (const auto& v : j["relation_violations"]) row("VIOLATION", v.get<std::string>());
  std::ostringstream t;
  t << std::fixed << std::setprecision(2) << j["timing"]["seconds"].get<double>() << " s";
  row("time", t.str());
  return out.str();
}

}  // namespace maxint
