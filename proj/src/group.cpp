#include "maxint/group.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace maxint {

std::string to_string(Backend b) {
  switch (b) {
    case Backend::permutation:
      return "permutation";
    case Backend::cayley:
      return "cayley";
    case Backend::quotient:
      return "quotient";
    case Backend::structured:
      return "structured";
  }
  return "unknown";
}

Group::Group(Enumeration e, Backend backend)
    : n_(e.order),
      backend_(backend),
      gens_(std::move(e.generator_ids)),
      parent_(std::move(e.parent)),
      via_(std::move(e.via)),
      right_(std::move(e.right)),
      left_(std::move(e.left)) {
  // Right multiplication by each generator must permute the elements.
  std::vector<char> seen(n_);
  for (std::size_t s = 0; s < gens_.size(); ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < n_; ++x) {
      auto y = right_[s * n_ + x];
      if (seen[y]) throw NotAGroup("right multiplication by a generator is not injective");
      seen[y] = 1;
    }
  }
  if (n_ <= kDenseTableLimit) {
    table_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      ElementId* row = table_.data() + a * n_;
      row[0] = static_cast<ElementId>(a);
      // children are discovered after their parents
      for (std::size_t b = 1; b < n_; ++b) row[b] = right_[via_[b] * n_ + row[parent_[b]]];
    }
  }
  inv_.assign(n_, 0);
  std::vector<ElementId> gen_inv(gens_.size(), 0);
  for (std::size_t s = 0; s < gens_.size(); ++s) {
    for (std::size_t x = 0; x < n_; ++x) {
      if (left_[s * n_ + x] == 0) {
        gen_inv[s] = static_cast<ElementId>(x);
        break;
      }
    }
  }
  // a = parent(a) * g  =>  a^-1 = g^-1 * parent(a)^-1
  for (std::size_t a = 1; a < n_; ++a) inv_[a] = mul(gen_inv[via_[a]], inv_[parent_[a]]);
}

ElementId Group::mul_slow(ElementId a, ElementId b) const {
  ElementId x = b;
  while (a != 0) {
    x = left_[static_cast<std::size_t>(via_[a]) * n_ + x];
    a = parent_[a];
  }
  return x;
}

std::size_t Group::element_order(ElementId a) const {
  std::size_t k = 1;
  ElementId x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::optional<ElementId> Group::find_permutation(std::span<const std::uint16_t> images) const {
  if (images.size() != degree_) return std::nullopt;
  for (std::size_t a = 0; a < n_; ++a) {
    if (std::equal(images.begin(), images.end(), points_.begin() + static_cast<std::ptrdiff_t>(a * degree_)))
      return static_cast<ElementId>(a);
  }
  return std::nullopt;
}

void Group::attach_points(std::size_t degree, std::vector<std::uint16_t> points) {
  degree_ = degree;
  points_ = std::move(points);
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm perm_identity(std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>(i);
  return p;
}

namespace {

std::vector<std::vector<std::size_t>> split_cycles(const std::string& text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<std::size_t> cyc;
    std::string num;
    while (i < text.size() && text[i] != ')') {
      const char d = text[i];
      if (std::isdigit(static_cast<unsigned char>(d))) {
        num.push_back(d);
      } else if (d == ',' || std::isspace(static_cast<unsigned char>(d))) {
        if (!num.empty()) cyc.push_back(std::stoul(num));
        num.clear();
      } else {
        throw ParseError(std::string("unexpected character '") + d + "' in cycle notation");
      }
      ++i;
    }
    if (i == text.size()) throw ParseError("unterminated cycle: " + text);
    if (!num.empty()) cyc.push_back(std::stoul(num));
    ++i;
    for (auto p : cyc)
      if (p == 0) throw ParseError("cycle points are 1-based");
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

std::size_t max_point(const std::string& text) {
  std::size_t m = 0;
  for (const auto& cyc : split_cycles(text))
    for (auto p : cyc) m = std::max(m, p);
  return m;
}

Perm parse_cycles(const std::string& text, std::size_t degree) {
  Perm p = perm_identity(degree);
  for (const auto& cyc : split_cycles(text)) {
    std::vector<char> seen(degree + 1, 0);
    for (auto q : cyc) {
      if (q > degree) throw ParseError("cycle point exceeds degree");
      if (seen[q]) throw ParseError("repeated point in cycle");
      seen[q] = 1;
    }
    // cycles compose left to right
    Perm c = perm_identity(degree);
    for (std::size_t j = 0; j < cyc.size(); ++j)
      c[cyc[j] - 1] = static_cast<std::uint16_t>(cyc[(j + 1) % cyc.size()] - 1);
    p = perm_mul(p, c);
  }
  return p;
}

GroupPtr permutation_group(const std::vector<Perm>& gens, std::size_t degree, std::size_t cap) {
  auto [e, elems] = enumerate_elements<Perm>(
      gens, perm_identity(degree), [](const Perm& a, const Perm& b) { return perm_mul(a, b); }, cap,
      PermHash{});
  auto g = std::make_shared<Group>(std::move(e), Backend::permutation);
  std::vector<std::uint16_t> pts;
  pts.reserve(elems.size() * degree);
  for (const auto& p : elems) pts.insert(pts.end(), p.begin(), p.end());
  g->attach_points(degree, std::move(pts));
  return g;
}

GroupPtr cayley_group(std::size_t n, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul,
                      const std::vector<std::uint32_t>& gens, Backend backend) {
  auto [e, elems] = enumerate_elements<std::uint32_t>(gens, 0u, mul, std::max<std::size_t>(n, 1));
  return std::make_shared<Group>(std::move(e), backend);
}

std::string check_group_laws(const Group& g, std::size_t exhaustive_limit, std::size_t samples,
                             std::uint64_t seed) {
  const std::size_t n = g.order();
  std::ostringstream err;
  for (ElementId x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) {
      err << "identity law fails at " << x;
      return err.str();
    }
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0) {
      err << "inverse law fails at " << x;
      return err.str();
    }
  }
  auto assoc = [&](ElementId a, ElementId b, ElementId c) {
    return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  };
  if (n <= exhaustive_limit) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c)
          if (!assoc(a, b, c)) {
            err << "associativity fails at (" << a << "," << b << "," << c << ")";
            return err.str();
          }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    for (std::size_t i = 0; i < samples; ++i) {
      ElementId a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc(a, b, c)) {
        err << "associativity fails at (" << a << "," << b << "," << c << ")";
        return err.str();
      }
    }
  }
  return {};
}

}  // namespace maxint
