#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maxint/mposet.hpp"

namespace maxint {

/// Maximal subgroups referenced by index into an Incidence's MaximalSet,
/// kept sorted in canonical order.
using Family = std::vector<std::size_t>;

/// True iff dropping any single member enlarges the intersection. Single drops
/// suffice: if some proper subfamily T has the same meet, so does F minus any
/// member outside T.
bool is_irredundant(const Incidence& inc, std::span<const std::size_t> family);
/// Subfamily with the same intersection that is irredundant (greedy single removal).
Family irredundant_core(const Incidence& inc, Family family);
/// True iff no maximal outside the family can be added keeping it irredundant.
/// Throws NotIrredundant if the family itself is redundant.
bool is_maximal_irredundant(const Incidence& inc, std::span<const std::size_t> family);

struct SearchValue {
  std::size_t value = 0;
  Family witness;
};

/// Largest irredundant family (branch and bound over canonical order).
SearchValue maxdim(const Incidence& inc, const Budget& budget = {});
/// Smallest maximal irredundant family (iterative deepening).
SearchValue mindim(const Incidence& inc, const Budget& budget = {});
/// Fewest maximals meeting in the Frattini subgroup (breadth-first over meets).
SearchValue alpha(const Incidence& inc, const Budget& budget = {});

/// Largest irredundant family restricted to the `allowed` maximals, optionally
/// required to meet exactly in `target`.
SearchValue max_irredundant(const Incidence& inc, std::span<const std::size_t> allowed,
                            const Bitset* target, const Budget& budget = {});

/// Calls `visit(family, meet, is_maximal)` for every irredundant family in
/// canonical order (the empty family excluded).
void for_each_irredundant(const Incidence& inc,
                          const std::function<void(std::span<const std::size_t>, const Bitset&, bool)>& visit,
                          const Budget& budget = {});

/// Calls `visit(family)` for every irredundant family of exactly k members in
/// canonical order; stops early when `visit` returns true and then returns true.
bool for_each_irredundant_of_size(const Incidence& inc, std::size_t k,
                                  const std::function<bool(std::span<const std::size_t>)>& visit,
                                  const Budget& budget = {});

struct Question2Result {
  bool answer = false;
  /// Largest irredundant family meeting in the Frattini subgroup.
  std::size_t max_trivializing_size = 0;
  Family trivializing_witness;
  std::size_t maxdim = 0;
  Family maxdim_witness;
};
Question2Result question2_check(const Incidence& inc, const Budget& budget = {});

struct Question1Result {
  std::size_t delta = 0;  // maxdim(G/N)
  std::size_t d = 0;      // maxdim(G)
  std::size_t families_checked = 0;
  std::vector<Family> non_liftable;
};
/// For each irredundant family of size maxdim(G/N) among maximals containing N,
/// searches all maximals of G for an irredundant extension of size maxdim(G).
Question1Result question1_check(const Incidence& inc, const Subgroup& n, const Budget& budget = {});

struct GeneratingWitness {
  std::size_t value = 0;
  std::vector<ElementId> generators;
  Family maximals;
};
/// Largest size of an irredundant generating set, with one such set and
/// maximals M_i such that each generator lies in every M_j except M_i.
GeneratingWitness m_invariant(const Incidence& inc, const Budget& budget = {},
                              std::size_t order_cap = kLatticeOrderCap);

/// Least number of conjugates of the core-free subgroup H meeting trivially.
std::size_t base_size(const Subgroup& h, const Budget& budget = {});

struct AlmostSimpleInfo {
  Subgroup socle;
  std::vector<std::size_t> core_free;  // indices of core-free maximals
};
/// Checks that X has a unique minimal normal subgroup and that it is
/// non-abelian simple. Throws NotAlmostSimple.
AlmostSimpleInfo almost_simple_info(const Incidence& inc);
std::size_t sigma_almost_simple(const Incidence& inc, const Budget& budget = {});
std::size_t tau_almost_simple(const Incidence& inc, const Budget& budget = {});

// ---- classification ----------------------------------------------------------

struct Field {
  std::optional<std::size_t> value;
  std::string skipped;  // "requested", "timeout: ...", "cap: ...", "degenerate"
  std::vector<std::size_t> witness;
  bool present() const { return value.has_value(); }
};

struct InvariantReport {
  Field maxdim, mindim, menta, manta, alpha, m;
  std::optional<bool> is_minmax, is_strongly_minmax, is_weakly_minmax;
  bool is_soluble = false;
  bool is_nilpotent = false;
  std::optional<std::size_t> derived_length_mod_frattini;
  std::size_t frattini_order = 0;
  std::size_t poset_nodes = 0;
  std::size_t poset_covers = 0;
  /// Violations of the proven relations between fields that are present.
  std::vector<std::string> relation_violations;
};

struct ClassifyOptions {
  std::vector<std::string> skip;  // field names
  double budget_seconds = 0;      // per field; 0 = unlimited
  std::size_t m_order_cap = kLatticeOrderCap;
};

InvariantReport classify(const IncidencePtr& inc, const ClassifyOptions& options = {});
InvariantReport classify(const IncidencePtr& inc, const MPoset& poset, const ClassifyOptions& options = {});

}  // namespace maxint
