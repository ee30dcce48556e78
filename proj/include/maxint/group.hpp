#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "maxint/error.hpp"

namespace maxint {

using ElementId = std::uint32_t;

enum class Backend { permutation, cayley, quotient, structured };

std::string to_string(Backend b);

inline constexpr std::size_t kDefaultElementCap = 100000;
/// Groups up to this order keep a dense multiplication table.
inline constexpr std::size_t kDenseTableLimit = 2048;

/// Raw output of a breadth-first closure: element i was discovered as
/// parent[i] * generator[via[i]]; element 0 is the identity.
struct Enumeration {
  std::size_t order = 0;
  std::vector<ElementId> generator_ids;
  std::vector<ElementId> parent;
  std::vector<std::uint32_t> via;
  std::vector<ElementId> right;  // right[s * order + x] = x * gen_s
  std::vector<ElementId> left;   // left[s * order + x]  = gen_s * x
};

/// A finite group with dense element indexing. Immutable after construction.
class Group {
 public:
  Group(Enumeration e, Backend backend);

  std::size_t order() const { return n_; }
  Backend backend() const { return backend_; }

  ElementId mul(ElementId a, ElementId b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n_ + b];
    return mul_slow(a, b);
  }
  ElementId inv(ElementId a) const { return inv_[a]; }
  /// g^-1 a g
  ElementId conj(ElementId a, ElementId g) const { return mul(mul(inv_[g], a), g); }
  std::size_t element_order(ElementId a) const;

  /// Ids of the generators used to build the group (possibly with repeats or the identity).
  std::span<const ElementId> generators() const { return gens_; }
  ElementId right_by_generator(std::size_t s, ElementId x) const { return right_[s * n_ + x]; }

  // Permutation backend only.
  std::optional<std::size_t> degree() const {
    return degree_ ? std::optional<std::size_t>(degree_) : std::nullopt;
  }
  std::span<const std::uint16_t> points(ElementId a) const {
    return {points_.data() + static_cast<std::size_t>(a) * degree_, degree_};
  }
  std::optional<ElementId> find_permutation(std::span<const std::uint16_t> images) const;
  void attach_points(std::size_t degree, std::vector<std::uint16_t> points);

 private:
  ElementId mul_slow(ElementId a, ElementId b) const;

  std::size_t n_;
  Backend backend_;
  std::vector<ElementId> gens_;
  std::vector<ElementId> parent_;
  std::vector<std::uint32_t> via_;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inv_;
  std::size_t degree_ = 0;
  std::vector<std::uint16_t> points_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Closure of `gens` under `mul` by breadth-first search from `identity`,
/// trying generators in the given order.
template <class Elem, class Mul, class Hash = std::hash<Elem>>
std::pair<Enumeration, std::vector<Elem>> enumerate_elements(const std::vector<Elem>& gens,
                                                             const Elem& identity, Mul&& mul,
                                                             std::size_t cap = kDefaultElementCap,
                                                             Hash hash = Hash{}) {
  std::unordered_map<Elem, ElementId, Hash> index(16, hash);
  std::vector<Elem> elems;
  Enumeration e;
  index.emplace(identity, 0);
  elems.push_back(identity);
  e.parent.push_back(0);
  e.via.push_back(0);
  const std::size_t k = gens.size();
  std::vector<std::vector<ElementId>> right(k);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < k; ++s) {
      Elem y = mul(elems[head], gens[s]);
      auto [it, inserted] = index.try_emplace(std::move(y), static_cast<ElementId>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap)
          throw CapExceeded("closure exceeds element cap of " + std::to_string(cap));
        elems.push_back(it->first);
        e.parent.push_back(static_cast<ElementId>(head));
        e.via.push_back(static_cast<std::uint32_t>(s));
      }
      right[s].push_back(it->second);
    }
  }
  const std::size_t n = elems.size();
  e.order = n;
  e.right.reserve(k * n);
  for (auto& col : right) e.right.insert(e.right.end(), col.begin(), col.end());
  e.left.resize(k * n);
  for (std::size_t s = 0; s < k; ++s) {
    auto it = index.find(gens[s]);
    if (it == index.end()) throw NotAGroup("generator not in its own closure");
    e.generator_ids.push_back(it->second);
    if (!(mul(identity, gens[s]) == gens[s]) || !(mul(gens[s], identity) == gens[s]))
      throw NotAGroup("identity law fails on a generator");
    for (std::size_t x = 0; x < n; ++x) {
      auto found = index.find(mul(gens[s], elems[x]));
      if (found == index.end()) throw NotAGroup("closure not closed under left multiplication");
      e.left[s * n + x] = found->second;
    }
  }
  return {std::move(e), std::move(elems)};
}

// ---- permutations -----------------------------------------------------------

/// Permutation on points 0..degree-1; images[i] is the image of point i.
using Perm = std::vector<std::uint16_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : p) h = (h ^ v) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

/// Product acting on the right: first a, then b.
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_identity(std::size_t degree);
/// Parses "(1,2,3)(4,5)" or "(1 2 3)"; points are 1-based in the text.
Perm parse_cycles(const std::string& text, std::size_t degree);
/// Largest point mentioned in a cycle string (1-based).
std::size_t max_point(const std::string& text);

/// Permutation group generated by `gens`; element 0 is the identity.
GroupPtr permutation_group(const std::vector<Perm>& gens, std::size_t degree,
                           std::size_t cap = kDefaultElementCap);

/// Group given by a multiplication closure on small integer codes; the
/// elements are relabelled in breadth-first order.
GroupPtr cayley_group(std::size_t n, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul,
                      const std::vector<std::uint32_t>& gens, Backend backend = Backend::cayley);

/// Identity/inverse laws for every element, plus associativity: exhaustive for
/// order <= exhaustive_limit, otherwise `samples` random triples from a fixed seed.
/// Returns an empty string on success, else a description of the first failure.
std::string check_group_laws(const Group& g, std::size_t exhaustive_limit = 200,
                             std::size_t samples = 1000, std::uint64_t seed = 12345);

}  // namespace maxint
