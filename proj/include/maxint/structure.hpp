#pragma once

#include <optional>
#include <vector>

#include "maxint/subgroup.hpp"

namespace maxint {

/// Prime factorisation as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n);
/// Number of prime factors counted with multiplicity.
std::size_t omega(std::size_t n);
bool is_prime(std::size_t n);

Subgroup center(const GroupPtr& g);
/// Derived subgroup [H, H] of a subgroup H.
Subgroup commutator_subgroup(const Subgroup& h);
Subgroup commutator_subgroup(const GroupPtr& g);
/// G = G^(0) > G^(1) > ... until the series stabilises.
std::vector<Subgroup> derived_series(const GroupPtr& g);
/// Number of strict steps down to 1; nullopt when the series stabilises above 1.
std::optional<std::size_t> derived_length(const GroupPtr& g);

bool is_abelian(const Subgroup& h);
bool is_abelian(const GroupPtr& g);
/// Every Sylow subgroup of H is normal in H.
bool is_nilpotent(const Subgroup& h);
bool is_nilpotent(const GroupPtr& g);
bool is_soluble(const GroupPtr& g);
/// No normal subgroups other than 1 and H (H nontrivial).
bool is_simple(const Subgroup& h);

/// A Sylow p-subgroup of `ambient`, grown by iterated normalizer extension.
Subgroup sylow_subgroup(const Subgroup& ambient, std::size_t p);
Subgroup sylow_subgroup(const GroupPtr& g, std::size_t p);
Subgroup fitting_subgroup(const GroupPtr& g);
std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g);

struct Quotient {
  GroupPtr group;
  /// projection[x] is the image of parent element x.
  std::vector<ElementId> projection;
};

/// G/N as a group on cosets. Throws NotNormal.
Quotient quotient(const Subgroup& n);

}  // namespace maxint
