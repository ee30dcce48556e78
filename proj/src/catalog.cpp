#include "maxint/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "maxint/structure.hpp"

namespace maxint {

namespace {

std::size_t checked_product(const std::vector<std::size_t>& v, std::size_t cap, const std::string& what) {
  std::size_t n = 1;
  for (auto x : v) {
    if (x == 0) throw Error(what + ": zero factor");
    if (n > cap / x + 1) throw CapExceeded(what + " exceeds element cap of " + std::to_string(cap));
    n *= x;
  }
  if (n > cap)
    throw CapExceeded(what + " has order " + std::to_string(n) + ", above the element cap of " + std::to_string(cap));
  return n;
}

std::size_t powmod(std::size_t b, std::size_t e, std::size_t m) {
  std::size_t r = 1 % m;
  b %= m;
  for (; e; e >>= 1, b = b * b % m)
    if (e & 1) r = r * b % m;
  return r;
}

std::size_t primitive_root(std::size_t p) {
  const auto f = factorize(p - 1);
  for (std::size_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : f)
      if (powmod(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
  return 1;  // p = 2
}

/// Element of order exactly k in the multiplicative group mod prime p (k | p-1).
std::size_t root_of_unity(std::size_t p, std::size_t k) { return powmod(primitive_root(p), (p - 1) / k, p); }

Perm cycle_perm(std::size_t degree, const std::vector<std::size_t>& points) {
  Perm p = perm_identity(degree);
  for (std::size_t j = 0; j < points.size(); ++j)
    p[points[j]] = static_cast<std::uint16_t>(points[(j + 1) % points.size()]);
  return p;
}

std::string cycles_of(std::span<const std::uint16_t> images) {
  std::ostringstream out;
  std::vector<char> seen(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i] || images[i] == i) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = images[j]) {
      seen[j] = 1;
      out << (j == i ? "" : ",") << j + 1;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

/// Points fixed-by predicate: {a : a fixes pt}.
Subgroup point_stabilizer(const GroupPtr& g, std::size_t pt) {
  Bitset m(g->order());
  for (ElementId a = 0; a < g->order(); ++a)
    if (g->points(a)[pt] == pt) m.set(a);
  return Subgroup(g, std::move(m));
}

GroupPtr dicyclic(std::size_t order) {
  const std::size_t n = order / 4;  // <a, x | a^{2n}, x^2 = a^n, a^x = a^{-1}>
  const std::size_t r = 2 * n;
  auto mul = [=](std::uint32_t u, std::uint32_t v) -> std::uint32_t {
    const std::size_t k1 = u % r, e1 = u / r, k2 = v % r, e2 = v / r;
    if (!e1) return static_cast<std::uint32_t>((k1 + k2) % r + r * e2);
    const std::size_t k = (k1 + r - k2) % r;
    if (!e2) return static_cast<std::uint32_t>(k + r);
    return static_cast<std::uint32_t>((k + n) % r);
  };
  return cayley_group(order, mul, {1, static_cast<std::uint32_t>(r)});
}

std::vector<std::string> projective_line_gens(std::size_t scale) {
  // points 0..6 of the 7-element field, 7 = infinity
  const std::size_t p = 7;
  auto image = [&](auto f) {
    std::vector<std::uint16_t> img(p + 1);
    for (std::size_t x = 0; x <= p; ++x) img[x] = static_cast<std::uint16_t>(f(x));
    return cycles_of(img);
  };
  return {image([&](std::size_t x) { return x == p ? p : (x + 1) % p; }),
          image([&](std::size_t x) { return x == p ? p : x * scale % p; }),
          image([&](std::size_t x) {
            if (x == p) return std::size_t{0};
            if (x == 0) return p;
            return (p - powmod(x, p - 2, p)) % p;
          })};
}

}  // namespace

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic group of order 0");
  checked_product({n}, kDefaultElementCap, "cyclic:" + std::to_string(n));
  return cayley_group(
      n, [n](std::uint32_t a, std::uint32_t b) { return static_cast<std::uint32_t>((a + b) % n); },
      {n > 1 ? 1u : 0u});
}

GroupPtr elementary_abelian(std::size_t p, std::size_t k) { return abelian(std::vector<std::size_t>(k, p)); }

GroupPtr abelian(const std::vector<std::size_t>& factors) {
  const std::size_t n = checked_product(factors, kDefaultElementCap, "abelian group");
  std::vector<std::size_t> stride(factors.size());
  std::size_t s = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    stride[i] = s;
    s *= factors[i];
  }
  auto mul = [&](std::uint32_t a, std::uint32_t b) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::size_t x = a / stride[i] % factors[i], y = b / stride[i] % factors[i];
      out += static_cast<std::uint32_t>((x + y) % factors[i] * stride[i]);
    }
    return out;
  };
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) gens.push_back(factors[i] > 1 ? stride[i] : 0);
  return cayley_group(n, mul, gens, Backend::structured);
}

GroupPtr dihedral(std::size_t order) {
  if (order < 2 || order % 2) throw Error("dihedral order must be even and at least 2");
  const std::size_t n = order / 2;
  auto mul = [n](std::uint32_t u, std::uint32_t v) {
    const std::size_t k1 = u % n, e1 = u / n, k2 = v % n, e2 = v / n;
    const std::size_t k = (k1 + (e1 ? n - k2 : k2)) % n;
    return static_cast<std::uint32_t>(k + n * (e1 ^ e2));
  };
  return cayley_group(order, mul, {n > 1 ? 1u : 0u, static_cast<std::uint32_t>(n)}, Backend::structured);
}

GroupPtr sym(std::size_t n) {
  if (n == 0) throw Error("sym:0");
  std::vector<Perm> gens{perm_identity(n)};
  if (n >= 2) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    gens = {cycle_perm(n, {0, 1}), cycle_perm(n, all)};
  }
  return permutation_group(gens, n);
}

GroupPtr alt(std::size_t n) {
  if (n == 0) throw Error("alt:0");
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(cycle_perm(n, {0, 1, i}));
  if (gens.empty()) gens.push_back(perm_identity(n));
  return permutation_group(gens, n);
}

GroupPtr agl1(std::size_t p) {
  if (!is_prime(p)) throw Error("agl1 needs a prime");
  Perm shift(p), scale(p);
  const std::size_t g = primitive_root(p);
  for (std::size_t x = 0; x < p; ++x) {
    shift[x] = static_cast<std::uint16_t>((x + 1) % p);
    scale[x] = static_cast<std::uint16_t>(x * g % p);
  }
  return permutation_group({shift, scale}, p);
}

GroupPtr sl23() {
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.emplace_back(a, b);
  auto index = [&](int a, int b) {
    return static_cast<std::uint16_t>(std::find(vecs.begin(), vecs.end(), std::pair{a % 3, b % 3}) - vecs.begin());
  };
  auto matrix = [&](int m00, int m01, int m10, int m11) {
    Perm p(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      auto [a, b] = vecs[i];
      p[i] = index(m00 * a + m01 * b, m10 * a + m11 * b);
    }
    return p;
  };
  return permutation_group({matrix(1, 1, 0, 1), matrix(1, 0, 1, 1)}, vecs.size());
}

GroupPtr direct_product(const std::vector<GroupPtr>& factors, std::size_t cap) {
  std::vector<std::size_t> orders;
  for (const auto& f : factors) orders.push_back(f->order());
  const std::size_t n = checked_product(orders, cap, "direct product");
  std::vector<std::size_t> stride(factors.size());
  std::size_t s = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    stride[i] = s;
    s *= orders[i];
  }
  auto mul = [&](std::uint32_t a, std::uint32_t b) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto x = static_cast<ElementId>(a / stride[i] % orders[i]);
      const auto y = static_cast<ElementId>(b / stride[i] % orders[i]);
      out += static_cast<std::uint32_t>(factors[i]->mul(x, y) * stride[i]);
    }
    return out;
  };
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (ElementId g : factors[i]->generators()) gens.push_back(static_cast<std::uint32_t>(g * stride[i]));
  if (gens.empty()) gens.push_back(0);
  return cayley_group(n, mul, gens, Backend::structured);
}

GroupPtr semidirect(const GroupPtr& x, const GroupPtr& h, const std::function<ElementId(ElementId, ElementId)>& act,
                    std::size_t cap) {
  const std::size_t nx = x->order();
  const std::size_t n = checked_product({nx, h->order()}, cap, "semidirect product");
  // (x1 h1)(x2 h2) = x1 (h1 x2 h1^-1) h1 h2 and h1 x2 h1^-1 = x2^(h1^-1)
  auto mul = [&](std::uint32_t a, std::uint32_t b) {
    const auto x1 = static_cast<ElementId>(a % nx), h1 = static_cast<ElementId>(a / nx);
    const auto x2 = static_cast<ElementId>(b % nx), h2 = static_cast<ElementId>(b / nx);
    return static_cast<std::uint32_t>(x->mul(x1, act(h->inv(h1), x2)) + nx * h->mul(h1, h2));
  };
  std::vector<std::uint32_t> gens;
  for (ElementId g : x->generators()) gens.push_back(g);
  for (ElementId g : h->generators()) gens.push_back(static_cast<std::uint32_t>(nx * g));
  return cayley_group(n, mul, gens, Backend::structured);
}

GroupPtr wreath_cyclic(std::size_t m, std::size_t q) {
  if (m == 0 || q == 0) throw Error("wreath parameters must be positive");
  const std::size_t degree = m * q;
  std::vector<std::size_t> orders(q, m);
  orders.push_back(q);
  checked_product(orders, kDefaultElementCap, "wr:" + std::to_string(m) + "," + std::to_string(q));
  std::vector<std::size_t> block(m);
  std::iota(block.begin(), block.end(), 0);
  Perm base = cycle_perm(degree, block);
  Perm top(degree);
  for (std::size_t b = 0; b < q; ++b)
    for (std::size_t i = 0; i < m; ++i) top[b * m + i] = static_cast<std::uint16_t>((b + 1) % q * m + i);
  return permutation_group({base, top}, degree);
}

GroupPtr perm_group(const std::vector<std::string>& gens, std::size_t degree) {
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(parse_cycles(g, degree));
  return permutation_group(perms, degree);
}

std::vector<std::string> regular_representation(const Group& g) {
  std::vector<std::string> out;
  std::vector<std::uint16_t> img(g.order());
  for (ElementId s : g.generators()) {
    for (ElementId x = 0; x < g.order(); ++x) img[x] = static_cast<std::uint16_t>(g.mul(x, s));
    out.push_back(cycles_of(img));
  }
  return out;
}

// ---- AGL(2,5) -------------------------------------------------------------------

Agl25 agl25() {
  const int p = 5;
  auto pt = [](int x, int y) { return static_cast<std::uint16_t>(((x % p + p) % p) * p + (y % p + p) % p); };
  auto affine = [&](int m00, int m01, int m10, int m11, int tx, int ty) {
    Perm out(p * p);
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) out[pt(x, y)] = pt(m00 * x + m01 * y + tx, m10 * x + m11 * y + ty);
    return out;
  };
  const std::vector<Perm> gens{affine(1, 0, 0, 1, 1, 0), affine(1, 0, 0, 1, 0, 1), affine(2, 0, 0, 1, 0, 0),
                               affine(-1, 1, -1, 0, 0, 0)};
  auto g = permutation_group(gens, p * p);
  if (g->order() != 12000) throw Error("AGL(2,5) generators produced order " + std::to_string(g->order()));

  // x -> lambda*x + v: translations when lambda = 1
  auto scalar_of = [&](ElementId a) -> int {
    const auto img = g->points(a);
    const int ox = img[0] / p, oy = img[0] % p;
    const int lam = ((img[pt(1, 0)] / p - ox) % p + p) % p;
    if (lam == 0) return 0;
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y)
        if (img[pt(x, y)] != pt(lam * x + ox, lam * y + oy)) return 0;
    return lam;
  };
  Bitset nset(g->order()), fset(g->order());
  for (ElementId a = 0; a < g->order(); ++a) {
    const int lam = scalar_of(a);
    if (lam) fset.set(a);
    if (lam == 1) nset.set(a);
  }
  Subgroup n(g, nset), f(g, fset);

  std::vector<Subgroup> subs;
  std::vector<std::string> labels;
  for (std::size_t point = 0; point < std::size_t(p * p); ++point) {
    subs.push_back(point_stabilizer(g, point));
    labels.push_back("type 1");
  }
  const Quotient q = quotient(f);
  const MaximalSet top = maximal_subgroups(q.group);
  for (const auto& m : top.members) {
    Bitset pre(g->order());
    for (ElementId a = 0; a < g->order(); ++a)
      if (m.contains(q.projection[a])) pre.set(a);
    subs.emplace_back(g, std::move(pre));
    const std::size_t o = m.order();
    labels.push_back(o == 60 ? "type 2" : o == 24 ? "type 3" : o == 20 ? "type 4" : o == 12 ? "type 5" : "other");
  }
  return {g, supplied_maximals(g, std::move(subs), std::move(labels)), n, f};
}

// ---- sec2 family -------------------------------------------------------------------

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

Sec2 sec2_family(std::size_t p, std::size_t q, std::size_t a, std::size_t b, std::size_t cap) {
  if (!is_prime(p) || !is_prime(q) || p == q) throw Error("sec2 needs two different primes");
  if (a < 2 || a > b) throw Error("sec2 needs 2 <= a <= b");
  std::size_t m = 1;
  for (std::size_t i = 0; i < a; ++i) m *= p;
  for (std::size_t i = 0; i < b; ++i) m *= q;
  Sec2 out;
  std::vector<std::size_t> index_set;
  for (std::size_t i = 1, v = p; i < a; ++i, v *= p) index_set.push_back(v);
  for (std::size_t i = 1, v = q; i < b; ++i, v *= q) index_set.push_back(v);
  std::vector<std::size_t> orders{m};
  for (std::size_t i : index_set) {
    const std::size_t k = m / i;
    std::size_t pi = k + 1;
    while (!is_prime(pi)) pi += k;
    out.moduli.emplace_back(i, pi);
    orders.push_back(pi);
  }
  std::size_t order = 1;
  for (auto o : orders) order *= o;
  if (order > cap)
    throw CapExceeded("sec2 group has order " + std::to_string(order) + ", above the element cap of " +
                      std::to_string(cap));

  const std::size_t t = index_set.size();
  // lam_pow[j][e] = lambda_j^e, lambda_j of order m/i_j mod p_j
  std::vector<std::vector<std::uint32_t>> lam_pow(t, std::vector<std::uint32_t>(m));
  for (std::size_t j = 0; j < t; ++j) {
    const auto [i, pj] = out.moduli[j];
    const std::size_t lam = root_of_unity(pj, m / i);
    std::size_t v = 1;
    for (std::size_t e = 0; e < m; ++e, v = v * lam % pj) lam_pow[j][e] = static_cast<std::uint32_t>(v);
  }
  using Elem = std::vector<std::uint32_t>;  // x_1..x_t, e
  auto mul = [&](const Elem& u, const Elem& v) {
    Elem w(t + 1);
    const std::size_t e = u[t];
    for (std::size_t j = 0; j < t; ++j)
      w[j] = static_cast<std::uint32_t>((u[j] + std::size_t{lam_pow[j][e]} * v[j]) % out.moduli[j].second);
    w[t] = static_cast<std::uint32_t>((e + v[t]) % m);
    return w;
  };
  std::vector<Elem> gens;
  for (std::size_t j = 0; j < t; ++j) {
    Elem x(t + 1, 0);
    x[j] = 1;
    gens.push_back(x);
  }
  Elem h(t + 1, 0);
  h[t] = 1;
  gens.push_back(h);
  auto [e, elems] = enumerate_elements<Elem>(gens, Elem(t + 1, 0), mul, cap, VecHash{});
  auto g = std::make_shared<Group>(std::move(e), Backend::structured);
  out.group = g;
  std::unordered_map<Elem, ElementId, VecHash> id;
  for (std::size_t i = 0; i < elems.size(); ++i) id.emplace(elems[i], static_cast<ElementId>(i));

  std::vector<Subgroup> subs;
  std::vector<std::string> labels;
  for (std::size_t r : {p, q}) {
    Bitset s(g->order());
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i][t] % r == 0) s.set(i);
    subs.emplace_back(g, std::move(s));
    labels.push_back("A_" + std::to_string(r));
  }
  const ElementId hid = id.at(h);
  for (std::size_t j = 0; j < t; ++j) {
    std::vector<ElementId> others;
    for (std::size_t k = 0; k < t; ++k)
      if (k != j) others.push_back(id.at(gens[k]));
    for (std::size_t x = 0; x < out.moduli[j].second; ++x) {
      Elem xe(t + 1, 0);
      xe[j] = static_cast<std::uint32_t>(x);
      auto seed = others;
      seed.push_back(g->conj(hid, id.at(xe)));
      subs.push_back(subgroup_from_generators(g, seed));
      labels.push_back("B_" + std::to_string(out.moduli[j].first));
    }
  }
  out.maximals = supplied_maximals(g, std::move(subs), std::move(labels));
  return out;
}

// ---- sec3 family -------------------------------------------------------------------

Sec3 sec3_family(std::size_t q, std::size_t p, std::size_t r, std::size_t cap) {
  if (!is_prime(q) || !is_prime(p) || !is_prime(r)) throw Error("sec3 needs primes q, p, r");
  if ((r - 1) % p != 0) throw Error("sec3 needs p to divide r - 1");
  // order r^q p^q q, computed in floating point first to name it even when huge
  long double big = q;
  for (std::size_t i = 0; i < q; ++i) big *= static_cast<long double>(r) * p;
  if (big > static_cast<long double>(cap)) {
    std::ostringstream msg;
    msg.precision(0);
    msg << std::fixed << "sec3 group G(q=" << q << ",p=" << p << ",r=" << r << ") has order " << big
        << ", above the element cap of " << cap;
    throw CapExceeded(msg.str());
  }
  std::size_t points = 1;
  for (std::size_t i = 0; i < q; ++i) points *= r;
  auto coords = [&](std::size_t v) {
    std::vector<std::size_t> c(q);
    for (std::size_t i = 0; i < q; ++i, v /= r) c[i] = v % r;
    return c;
  };
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t v = 0;
    for (std::size_t i = q; i-- > 0;) v = v * r + c[i] % r;
    return static_cast<std::uint16_t>(v);
  };
  const std::size_t c = root_of_unity(r, p);
  Perm translate(points), scale(points), shift(points);
  for (std::size_t v = 0; v < points; ++v) {
    auto x = coords(v);
    auto t = x;
    t[0] = (t[0] + 1) % r;
    translate[v] = encode(t);
    auto s = x;
    s[0] = s[0] * c % r;
    scale[v] = encode(s);
    std::vector<std::size_t> z(q);
    for (std::size_t i = 0; i < q; ++i) z[(i + 1) % q] = x[i];
    shift[v] = encode(z);
  }
  auto g = permutation_group({translate, scale, shift}, points, cap);
  Sec3 out{g, point_stabilizer(g, 0), {}, trivial(g)};
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<std::size_t> e(q, 0);
    e[i] = 1;
    out.witness.push_back(point_stabilizer(g, encode(e)));
  }
  Bitset v(g->order());
  for (ElementId a = 0; a < g->order(); ++a) {
    const auto img = g->points(a);
    const auto o = coords(img[0]);
    bool ok = true;
    for (std::size_t w = 0; w < points && ok; ++w) {
      auto x = coords(w);
      for (std::size_t i = 0; i < q; ++i) x[i] = (x[i] + o[i]) % r;
      ok = img[w] == encode(x);
    }
    if (ok) v.set(a);
  }
  out.translations = Subgroup(g, std::move(v));
  return out;
}

// ---- specs and corpus -------------------------------------------------------------

Built build(const GroupSpec& spec) {
  Built b{spec, nullptr, std::nullopt, {}};
  const auto& k = spec.kind;
  const auto& a = spec.params;
  if (k == "cyclic") {
    b.group = cyclic(a[0]);
  } else if (k == "abelian") {
    b.group = abelian(a);
  } else if (k == "dihedral") {
    b.group = dihedral(a[0]);
  } else if (k == "sym") {
    if (a[0] > 8) throw CapExceeded("sym:" + std::to_string(a[0]) + " exceeds the element cap");
    b.group = sym(a[0]);
  } else if (k == "alt") {
    if (a[0] > 9) throw CapExceeded("alt:" + std::to_string(a[0]) + " exceeds the element cap");
    b.group = alt(a[0]);
  } else if (k == "agl1") {
    b.group = agl1(a[0]);
  } else if (k == "sl23") {
    b.group = sl23();
  } else if (k == "agl25") {
    auto r = agl25();
    b.group = r.group;
    b.supplied = std::move(r.maximals);
  } else if (k == "sec2") {
    auto r = sec2_family(a[0], a[1], a[2], a[3]);
    b.group = r.group;
    b.supplied = std::move(r.maximals);
  } else if (k == "sec3") {
    auto r = sec3_family(a[0], a[1], a[2]);
    b.group = r.group;
    b.witness = std::move(r.witness);
  } else if (k == "wr") {
    b.group = wreath_cyclic(a[0], a[1]);
  } else if (k == "prod") {
    std::vector<GroupPtr> fs;
    for (const auto& f : spec.factors) fs.push_back(build(f).group);
    b.group = direct_product(fs);
  } else if (k == "perm") {
    b.group = perm_group(spec.gens, spec.degree);
  } else {
    throw ParseError("unknown group kind '" + k + "'");
  }
  return b;
}

MaximalSet maximals_for(const Built& b) {
  if (b.supplied) return *b.supplied;
  if (b.group->order() > kLatticeOrderCap)
    throw CapExceeded("order " + std::to_string(b.group->order()) + " exceeds the lattice cap of " +
                      std::to_string(kLatticeOrderCap) + " and no maximal subgroups are supplied");
  return maximal_subgroups(b.group);
}

std::vector<CatalogEntry> corpus(std::size_t max_order) {
  auto perm_spec = [](const std::vector<std::string>& gens) {
    std::string s = "perm:gens=";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ";" : "") + gens[i];
    return s;
  };
  const std::vector<std::pair<std::string, std::string>> candidates = {
      {"C2", "cyclic:2"},
      {"C3", "cyclic:3"},
      {"C4", "cyclic:4"},
      {"C2^2", "abelian:2x2"},
      {"C5", "cyclic:5"},
      {"C6", "cyclic:6"},
      {"Sym(3)", "sym:3"},
      {"C7", "cyclic:7"},
      {"C8", "cyclic:8"},
      {"C2xC4", "abelian:2x4"},
      {"C2^3", "abelian:2x2x2"},
      {"D8", "dihedral:8"},
      {"Q8", perm_spec(regular_representation(*dicyclic(8)))},
      {"C9", "cyclic:9"},
      {"C3^2", "abelian:3x3"},
      {"D10", "dihedral:10"},
      {"C12", "cyclic:12"},
      {"C2xC6", "abelian:2x6"},
      {"D12", "dihedral:12"},
      {"Dic12", perm_spec(regular_representation(*dicyclic(12)))},
      {"Alt(4)", "alt:4"},
      {"C16", "cyclic:16"},
      {"C2^4", "abelian:2x2x2x2"},
      {"D16", "dihedral:16"},
      {"Q16", perm_spec(regular_representation(*dicyclic(16)))},
      {"C2xD8", "prod:(cyclic:2)*(dihedral:8)"},
      {"C3wrC2", "wr:3,2"},
      {"AGL(1,5)", "agl1:5"},
      {"D20", "dihedral:20"},
      {"Sym(4)", "sym:4"},
      {"SL(2,3)", "sl23"},
      {"C2wrC3", "wr:2,3"},
      {"C3xD8", "prod:(cyclic:3)*(dihedral:8)"},
      {"C5^2", "abelian:5x5"},
      {"C3^3", "abelian:3x3x3"},
      {"C30", "cyclic:30"},
      {"Sym(3)xSym(3)", "prod:(sym:3)*(sym:3)"},
      {"C3xSym(3)", "prod:(cyclic:3)*(sym:3)"},
      {"AGL(1,7)", "agl1:7"},
      {"C2xAlt(4)", "prod:(cyclic:2)*(alt:4)"},
      {"C2xSym(4)", "prod:(cyclic:2)*(sym:4)"},
      {"Alt(5)", "alt:5"},
      {"C2wrC4", "wr:2,4"},
      {"C3wrC3", "wr:3,3"},
      {"AGL(1,11)", "agl1:11"},
      {"Sym(5)", "sym:5"},
      {"C2xAlt(5)", "prod:(cyclic:2)*(alt:5)"},
      {"AGL(1,13)", "agl1:13"},
      {"PSL(2,7)", perm_spec(projective_line_gens(2))},
      {"Sym(3)^3", "prod:(sym:3)*(sym:3)*(sym:3)"},
      {"PGL(2,7)", perm_spec(projective_line_gens(3))},
      {"Alt(6)", "alt:6"},
  };
  std::vector<CatalogEntry> out;
  for (const auto& [name, text] : candidates) {
    CatalogEntry e{name, GroupSpec::parse(text), 0, {}};
    const auto g = build(e.spec).group;
    e.order = g->order();
    if (e.order > max_order) continue;
    e.tag = is_nilpotent(g) ? "nilpotent" : is_soluble(g) ? "soluble" : "neither";
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.order < y.order; });
  return out;
}

}  // namespace maxint
