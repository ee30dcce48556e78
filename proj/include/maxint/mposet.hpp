#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "maxint/incidence.hpp"

namespace maxint {

inline constexpr std::size_t kNodeCap = 200000;

struct MPosetNode {
  Bitset atoms;
  std::size_t order = 0;
  /// An irredundant family of maximal indices meeting in this node; empty for the top.
  std::vector<std::size_t> witness;
};

struct ChainWitness {
  /// Node indices from the bottom to the top along cover edges.
  std::vector<std::size_t> nodes;
  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

/// The poset of G together with all intersections of its maximal subgroups.
/// Nodes are sorted by order descending (then bit set), so node 0 is G and
/// the last node is the Frattini subgroup.
class MPoset {
 public:
  MPoset(IncidencePtr inc, std::vector<MPosetNode> nodes);

  const Incidence& incidence() const { return *inc_; }
  const IncidencePtr& incidence_ptr() const { return inc_; }
  const std::vector<MPosetNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t top() const { return 0; }
  std::size_t bottom() const { return nodes_.size() - 1; }
  std::optional<std::size_t> find(const Bitset& atoms) const;

  /// (lower, upper) pairs of the cover relation, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_[i]; }

 private:
  IncidencePtr inc_;
  std::vector<MPosetNode> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
};

/// Worklist closure of {G} and the maximals under intersection with maximals.
MPoset build_mposet(IncidencePtr inc, std::size_t node_cap = kNodeCap, const Budget& budget = {});

/// Transitive reduction of containment among the given atom sets (sorted by
/// order descending); returns (lower, upper) pairs.
std::vector<std::pair<std::size_t, std::size_t>> hasse(const std::vector<Bitset>& nodes,
                                                       const std::vector<std::size_t>& orders);

/// Shortest unrefinable chain from the Frattini subgroup to G.
std::pair<std::size_t, ChainWitness> menta(const MPoset& poset);
/// Longest unrefinable chain from the Frattini subgroup to G.
std::pair<std::size_t, ChainWitness> manta(const MPoset& poset);

std::string to_dot(const MPoset& poset, bool with_witnesses = false);
nlohmann::ordered_json to_json(const MPoset& poset);

}  // namespace maxint
