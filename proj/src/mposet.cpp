#include "maxint/mposet.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace maxint {

MPoset::MPoset(IncidencePtr inc, std::vector<MPosetNode> nodes) : inc_(std::move(inc)), nodes_(std::move(nodes)) {
  std::vector<Bitset> sets;
  std::vector<std::size_t> orders;
  for (const auto& n : nodes_) {
    sets.push_back(n.atoms);
    orders.push_back(n.order);
  }
  covers_ = hasse(sets, orders);
  up_.assign(nodes_.size(), {});
  down_.assign(nodes_.size(), {});
  for (auto [lo, hi] : covers_) {
    up_[lo].push_back(hi);
    down_[hi].push_back(lo);
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());
}

std::optional<std::size_t> MPoset::find(const Bitset& atoms) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].atoms == atoms) return i;
  return std::nullopt;
}

namespace {

/// Greedily drops members whose removal leaves the intersection unchanged.
std::vector<std::size_t> minimise_witness(const Incidence& inc, std::vector<std::size_t> family) {
  const Bitset target = inc.meet(family);
  for (std::size_t i = 0; i < family.size();) {
    std::vector<std::size_t> rest = family;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (inc.meet(rest) == target)
      family = std::move(rest);
    else
      ++i;
  }
  return family;
}

}  // namespace

MPoset build_mposet(IncidencePtr inc, std::size_t node_cap, const Budget& budget) {
  const Incidence& in = *inc;
  std::vector<MPosetNode> nodes;
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  auto add = [&](Bitset atoms, std::vector<std::size_t> witness) {
    if (index.contains(atoms)) return;
    if (nodes.size() >= node_cap)
      throw NodeCapExceeded("poset exceeds node cap of " + std::to_string(node_cap));
    index.emplace(atoms, nodes.size());
    const std::size_t order = in.weight(atoms);
    nodes.push_back({std::move(atoms), order, std::move(witness)});
  };
  add(in.top(), {});
  for (std::size_t i = 0; i < in.maximal_count(); ++i) add(in.maximal(i), {i});
  for (std::size_t head = 1; head < nodes.size(); ++head) {
    for (std::size_t i = 0; i < in.maximal_count(); ++i) {
      budget.tick("build_mposet");
      Bitset next = nodes[head].atoms & in.maximal(i);
      if (next == nodes[head].atoms || index.contains(next)) continue;
      auto w = nodes[head].witness;
      w.push_back(i);
      std::sort(w.begin(), w.end());
      add(std::move(next), minimise_witness(in, std::move(w)));
    }
  }
  std::sort(nodes.begin(), nodes.end(), [](const MPosetNode& a, const MPosetNode& b) {
    if (a.order != b.order) return a.order > b.order;
    return a.atoms < b.atoms;
  });
  return MPoset(std::move(inc), std::move(nodes));
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const std::vector<Bitset>& nodes,
                                                       const std::vector<std::size_t>& orders) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = nodes.size();
  std::vector<std::size_t> accepted;
  for (std::size_t a = 0; a < n; ++a) {
    accepted.clear();
    // candidates by increasing order; a strictly larger node is a cover iff it
    // contains no already accepted cover
    for (std::size_t b = a; b-- > 0;) {
      if (orders[b] <= orders[a] || orders[b] % orders[a] != 0) continue;
      if (!nodes[a].is_subset_of(nodes[b])) continue;
      bool minimal = true;
      for (std::size_t c : accepted)
        if (nodes[c].is_subset_of(nodes[b])) {
          minimal = false;
          break;
        }
      if (minimal) {
        accepted.push_back(b);
        out.emplace_back(a, b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::size_t, ChainWitness> menta(const MPoset& poset) {
  if (poset.incidence().group()->order() == 1) throw DegenerateGroup("menta undefined for the trivial group");
  const std::size_t n = poset.size();
  std::vector<std::size_t> dist(n, SIZE_MAX), prev(n, SIZE_MAX);
  std::deque<std::size_t> queue{poset.bottom()};
  dist[poset.bottom()] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : poset.upper_covers(v)) {
      if (dist[u] != SIZE_MAX) continue;
      dist[u] = dist[v] + 1;
      prev[u] = v;
      queue.push_back(u);
    }
  }
  ChainWitness w;
  for (std::size_t v = poset.top(); v != SIZE_MAX; v = prev[v]) w.nodes.push_back(v);
  std::reverse(w.nodes.begin(), w.nodes.end());
  return {dist[poset.top()], std::move(w)};
}

std::pair<std::size_t, ChainWitness> manta(const MPoset& poset) {
  if (poset.incidence().group()->order() == 1) throw DegenerateGroup("manta undefined for the trivial group");
  const std::size_t n = poset.size();
  std::vector<std::size_t> best(n, 0), prev(n, SIZE_MAX);
  std::vector<char> reached(n, 0);
  reached[poset.bottom()] = 1;
  // indices decrease as order increases, so this is a topological order
  for (std::size_t v = n; v-- > 0;) {
    if (!reached[v]) continue;
    for (std::size_t u : poset.upper_covers(v)) {
      if (!reached[u] || best[v] + 1 > best[u]) {
        best[u] = best[v] + 1;
        prev[u] = v;
        reached[u] = 1;
      }
    }
  }
  ChainWitness w;
  for (std::size_t v = poset.top(); v != SIZE_MAX; v = prev[v]) w.nodes.push_back(v);
  std::reverse(w.nodes.begin(), w.nodes.end());
  return {best[poset.top()], std::move(w)};
}

std::string to_dot(const MPoset& poset, bool with_witnesses) {
  std::ostringstream out;
  out << "digraph M {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& node = poset.nodes()[i];
    out << "  n" << i << " [label=\"order " << node.order;
    if (with_witnesses && !node.witness.empty()) {
      out << "\\n{";
      for (std::size_t j = 0; j < node.witness.size(); ++j) out << (j ? "," : "") << "M" << node.witness[j];
      out << "}";
    }
    out << "\"];\n";
  }
  for (auto [lo, hi] : poset.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json to_json(const MPoset& poset) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["group_order"] = poset.incidence().group()->order();
  j["maximal_count"] = poset.incidence().maximal_count();
  j["top"] = poset.top();
  j["bottom"] = poset.bottom();
  auto nodes = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& node = poset.nodes()[i];
    nlohmann::ordered_json nj;
    nj["id"] = i;
    nj["order"] = node.order;
    nj["witness"] = node.witness;
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  auto covers = nlohmann::ordered_json::array();
  for (auto [lo, hi] : poset.covers()) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  return j;
}

}  // namespace maxint
