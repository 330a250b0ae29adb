#include "joinlat/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "joinlat/errors.hpp"

namespace joinlat {

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>> &cycles) {
  auto p = identity(degree);
  for (const auto &cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

Permutation Permutation::then(const Permutation &other) const {
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = other.images_[images_[x]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t PermutationHash::operator()(const Permutation &p) const {
  std::size_t h = p.degree();
  for (auto x : p.images()) h = h * 1000003U ^ x;
  return h;
}

// ---------------------------------------------------------------------------
// Number theory helpers

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

long long multiplicative_order(long long m, long long p) {
  long long x = m % p;
  for (long long k = 1; k < p; ++k) {
    if (x == 1) return k;
    x = x * m % p;
  }
  return 0;
}

unsigned long long sat_mul(unsigned long long a, unsigned long long b, unsigned long long cap) {
  if (a == 0 || b == 0) return 0;
  if (a > (cap + 1) / b + 1) return cap + 1;
  return std::min(a * b, cap + 1);
}

} // namespace

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::cyclic(long long n) { return {Kind::Cyclic, {n}, {}}; }
GroupSpec GroupSpec::elem_abelian(long long p, long long k) {
  return {Kind::ElemAbelian, {p, k}, {}};
}
GroupSpec GroupSpec::direct_product(std::vector<GroupSpec> factors) {
  return {Kind::DirectProduct, {}, std::move(factors)};
}

std::string GroupSpec::to_string() const {
  auto args = [this] {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(params[i]);
    }
    return s;
  };
  switch (kind) {
  case Kind::Cyclic: return "Cyclic(" + args() + ")";
  case Kind::ElemAbelian: return "ElemAbelian(" + args() + ")";
  case Kind::Dihedral: return "Dihedral(" + args() + ")";
  case Kind::Sym: return "Sym(" + args() + ")";
  case Kind::Alt: return "Alt(" + args() + ")";
  case Kind::PGroup: return "PGroup(" + args() + ")";
  case Kind::PaperExample648: return "PaperExample648";
  case Kind::DirectProduct: {
    std::string s = "DirectProduct(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ',';
      s += factors[i].to_string();
    }
    return s + ")";
  }
  }
  return {};
}

unsigned long long GroupSpec::expected_order(unsigned long long cap) const {
  auto ipow = [cap](unsigned long long b, long long e) {
    unsigned long long r = 1;
    for (long long i = 0; i < e && r <= cap; ++i) r = sat_mul(r, b, cap);
    return r;
  };
  switch (kind) {
  case Kind::Cyclic: return std::min<unsigned long long>(params[0], cap + 1);
  case Kind::ElemAbelian: return ipow(params[0], params[1]);
  case Kind::Dihedral: return std::min<unsigned long long>(params[0], cap + 1);
  case Kind::Sym:
  case Kind::Alt: {
    unsigned long long r = 1;
    for (long long i = 2; i <= params[0] && r <= 2 * cap + 2; ++i) r = sat_mul(r, i, 2 * cap + 2);
    if (kind == Kind::Alt && params[0] >= 2) r /= 2;
    return std::min(r, cap + 1);
  }
  case Kind::PGroup: return sat_mul(ipow(params[0], params[1]), params[2], cap);
  case Kind::PaperExample648: return std::min<unsigned long long>(648, cap + 1);
  case Kind::DirectProduct: {
    unsigned long long r = 1;
    for (const auto &f : factors) r = sat_mul(r, f.expected_order(cap), cap);
    return r;
  }
  }
  return 0;
}

namespace {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
  }

  GroupSpec parse() {
    auto spec = parse_spec();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw InputError("invalid group spec '" + text_ + "' at position " + std::to_string(pos_) +
                     ": " + what);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long long integer() {
    long long value = 0;
    auto first = text_.data() + pos_, last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::vector<long long> int_args(std::size_t n) {
    expect('(');
    std::vector<long long> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) expect(',');
      out.push_back(integer());
    }
    expect(')');
    return out;
  }

  GroupSpec parse_spec() {
    using Kind = GroupSpec::Kind;
    const std::string name = identifier();
    GroupSpec spec;
    if (name == "Cyclic") {
      spec = {Kind::Cyclic, int_args(1), {}};
      if (spec.params[0] < 1) fail("Cyclic(n) needs n >= 1");
    } else if (name == "ElemAbelian") {
      spec = {Kind::ElemAbelian, int_args(2), {}};
      if (!is_prime(spec.params[0])) fail("ElemAbelian(p,k) needs p prime");
      if (spec.params[1] < 1) fail("ElemAbelian(p,k) needs k >= 1");
    } else if (name == "Dihedral") {
      spec = {Kind::Dihedral, int_args(1), {}};
      if (spec.params[0] < 2 || spec.params[0] % 2) fail("Dihedral(m) needs even m >= 2");
    } else if (name == "Sym" || name == "Alt") {
      spec = {name == "Sym" ? Kind::Sym : Kind::Alt, int_args(1), {}};
      if (spec.params[0] < 1) fail(name + "(n) needs n >= 1");
    } else if (name == "PGroup") {
      spec = {Kind::PGroup, int_args(3), {}};
      auto p = spec.params[0], n = spec.params[1], q = spec.params[2];
      if (!is_prime(p) || !is_prime(q) || p == q) fail("PGroup(p,n,q) needs distinct primes p, q");
      if ((p - 1) % q) fail("PGroup(p,n,q) needs q dividing p-1");
      if (n < 1) fail("PGroup(p,n,q) needs n >= 1");
    } else if (name == "DirectProduct") {
      spec.kind = Kind::DirectProduct;
      expect('(');
      spec.factors.push_back(parse_spec());
      while (accept(',')) spec.factors.push_back(parse_spec());
      expect(')');
      if (spec.factors.size() < 2) fail("DirectProduct needs at least two factors");
    } else if (name == "PaperExample648") {
      spec.kind = Kind::PaperExample648;
    } else {
      fail(name.empty() ? "expected constructor name" : "unknown constructor '" + name + "'");
    }
    return spec;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

} // namespace

GroupSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_generators(std::size_t degree,
                                         const std::vector<Permutation> &generators,
                                         std::string label, const Limits &limits) {
  for (const auto &s : generators)
    if (s.degree() != degree) throw InputError("generator degree mismatch");

  // Closure by breadth-first search over right multiplication.
  std::vector<Permutation> found{Permutation::identity(degree)};
  std::unordered_map<Permutation, Elem, PermutationHash> seen{{found[0], 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto &s : generators) {
      auto y = found[i].then(s);
      if (seen.count(y)) continue;
      if (found.size() >= limits.max_order)
        throw ResourceError("group '" + label + "' exceeds the order bound " +
                            std::to_string(limits.max_order));
      seen.emplace(y, static_cast<Elem>(found.size()));
      found.push_back(std::move(y));
    }
  }
  std::sort(found.begin() + 1, found.end());

  FiniteGroup g;
  g.degree_ = degree;
  g.label_ = std::move(label);
  g.elements_ = std::move(found);
  const std::size_t n = g.elements_.size();
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.index_.emplace(g.elements_[i], static_cast<Elem>(i));
  for (const auto &s : generators) g.generators_.push_back(g.index_.at(s));

  // Right multiplication by generators, then a spanning tree of the Cayley
  // graph writes every b as parent(b) * s, which fills each table row in O(n).
  const std::size_t ngen = generators.size();
  std::vector<Elem> right(n * ngen);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < ngen; ++k)
      right[a * ngen + k] = g.index_.at(g.elements_[a].then(generators[k]));

  std::vector<Elem> order{0}, parent(n, 0), via(n, 0);
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t k = 0; k < ngen; ++k) {
      Elem b = right[order[i] * ngen + k];
      if (reached[b]) continue;
      reached[b] = true;
      parent[b] = order[i];
      via[b] = static_cast<Elem>(k);
      order.push_back(b);
    }
  }

  g.table_.assign(n * n, 0);
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Elem *row = g.table_.data() + a * n;
    row[0] = static_cast<Elem>(a);
    for (std::size_t i = 1; i < order.size(); ++i) {
      Elem b = order[i];
      row[b] = right[row[parent[b]] * ngen + via[b]];
    }
    for (std::size_t b = 0; b < n; ++b)
      if (row[b] == 0) g.inverse_[a] = static_cast<Elem>(b);
  }
  return g;
}

Elem FiniteGroup::power(Elem a, long long n) const {
  std::size_t k = element_order(a);
  long long e = ((n % static_cast<long long>(k)) + static_cast<long long>(k)) %
                static_cast<long long>(k);
  Elem r = identity();
  for (long long i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

Elem FiniteGroup::index_of(const Permutation &p) const {
  auto it = index_.find(p);
  return it == index_.end() ? static_cast<Elem>(order()) : it->second;
}

BitSet FiniteGroup::all_elements() const {
  BitSet s(order());
  s.set_all();
  return s;
}

BitSet FiniteGroup::generated_subgroup(std::span<const Elem> seed) const {
  std::vector<Elem> gens;
  for (Elem s : seed)
    if (s != identity() && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  BitSet out(order());
  out.set(identity());
  std::vector<Elem> queue{identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem s : gens) {
      Elem y = multiply(queue[i], s);
      if (!out.test(y)) {
        out.set(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : generators_)
    for (Elem b : generators_)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

FiniteGroup build_cyclic(long long n, const std::string &label, const Limits &limits) {
  std::vector<Point> cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), Point{0});
  return FiniteGroup::from_generators(n, {Permutation::from_cycles(n, {cycle})}, label, limits);
}

FiniteGroup build_elem_abelian(long long p, long long k, const std::string &label,
                               const Limits &limits) {
  const std::size_t degree = static_cast<std::size_t>(p * k);
  std::vector<Permutation> gens;
  for (long long i = 0; i < k; ++i) {
    std::vector<Point> cycle;
    for (long long j = 0; j < p; ++j) cycle.push_back(static_cast<Point>(i * p + j));
    gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return FiniteGroup::from_generators(degree, gens, label, limits);
}

FiniteGroup build_dihedral(long long m, const std::string &label, const Limits &limits) {
  const long long n = m / 2;
  if (n == 1) return FiniteGroup::from_generators(2, {Permutation::from_cycles(2, {{0, 1}})}, label, limits);
  if (n == 2)
    return FiniteGroup::from_generators(
        4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})}, label,
        limits);
  std::vector<Point> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return FiniteGroup::from_generators(n, {Permutation(rot), Permutation(refl)}, label, limits);
}

FiniteGroup build_symmetric(long long n, bool alternating, const std::string &label,
                            const Limits &limits) {
  const auto degree = static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  if (alternating) {
    for (long long k = 2; k < n; ++k)
      gens.push_back(Permutation::from_cycles(degree, {{0, 1, static_cast<Point>(k)}}));
  } else if (n >= 2) {
    std::vector<Point> cycle(degree);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    gens.push_back(Permutation::from_cycles(degree, {{0, 1}}));
    gens.push_back(Permutation::from_cycles(degree, {cycle}));
  }
  return FiniteGroup::from_generators(degree, gens, label, limits);
}

// Affine maps v -> m^j v + t on the p^n points of F_p^n, m of order q mod p.
FiniteGroup build_pgroup(long long p, long long n, long long q, const std::string &label,
                         const Limits &limits) {
  long long m = 2;
  while (multiplicative_order(m, p) != q) ++m;
  std::size_t points = 1;
  for (long long i = 0; i < n; ++i) points *= static_cast<std::size_t>(p);

  auto digits = [&](std::size_t x) {
    std::vector<long long> v(static_cast<std::size_t>(n));
    for (auto &d : v) {
      d = static_cast<long long>(x % p);
      x /= p;
    }
    return v;
  };
  auto encode = [&](const std::vector<long long> &v) {
    std::size_t x = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) x = x * p + static_cast<std::size_t>(*it);
    return static_cast<Point>(x);
  };

  std::vector<Permutation> gens;
  for (long long i = 0; i < n; ++i) {
    std::vector<Point> images(points);
    for (std::size_t x = 0; x < points; ++x) {
      auto v = digits(x);
      v[i] = (v[i] + 1) % p;
      images[x] = encode(v);
    }
    gens.emplace_back(std::move(images));
  }
  std::vector<Point> scale(points);
  for (std::size_t x = 0; x < points; ++x) {
    auto v = digits(x);
    for (auto &d : v) d = d * m % p;
    scale[x] = encode(v);
  }
  gens.emplace_back(std::move(scale));
  return FiniteGroup::from_generators(points, gens, label, limits);
}

// V x| H with V = F_3^3 and H = {+-1} wr <(1,2,3)> acting by signed
// coordinate permutations, as affine maps on the 27 vectors.
FiniteGroup build_example_648(const std::string &label, const Limits &limits) {
  auto encode = [](int a, int b, int c) { return static_cast<Point>(a + 3 * b + 9 * c); };
  std::vector<Point> translate(27), negate_first(27), rotate(27);
  for (int c = 0; c < 3; ++c)
    for (int b = 0; b < 3; ++b)
      for (int a = 0; a < 3; ++a) {
        Point x = encode(a, b, c);
        translate[x] = encode((a + 1) % 3, b, c);
        negate_first[x] = encode((3 - a) % 3, b, c);
        rotate[x] = encode(c, a, b);
      }
  return FiniteGroup::from_generators(
      27, {Permutation(translate), Permutation(negate_first), Permutation(rotate)}, label, limits);
}

std::vector<Permutation> shifted_generators(const FiniteGroup &g, std::size_t offset,
                                            std::size_t degree) {
  std::vector<Permutation> out;
  for (Elem s : g.generators()) {
    auto images = Permutation::identity(degree).images();
    const auto &p = g.element(s);
    for (std::size_t x = 0; x < p.degree(); ++x)
      images[offset + x] = static_cast<Point>(offset + p(static_cast<Point>(x)));
    out.emplace_back(std::move(images));
  }
  return out;
}

} // namespace

FiniteGroup build(const GroupSpec &spec, const Limits &limits) {
  using Kind = GroupSpec::Kind;
  const std::string label = spec.to_string();
  if (spec.expected_order(limits.max_order) > limits.max_order)
    throw ResourceError("group '" + label + "' exceeds the order bound " +
                        std::to_string(limits.max_order));
  const auto &a = spec.params;
  switch (spec.kind) {
  case Kind::Cyclic: return build_cyclic(a[0], label, limits);
  case Kind::ElemAbelian: return build_elem_abelian(a[0], a[1], label, limits);
  case Kind::Dihedral: return build_dihedral(a[0], label, limits);
  case Kind::Sym: return build_symmetric(a[0], false, label, limits);
  case Kind::Alt: return build_symmetric(a[0], true, label, limits);
  case Kind::PGroup: return build_pgroup(a[0], a[1], a[2], label, limits);
  case Kind::PaperExample648: return build_example_648(label, limits);
  case Kind::DirectProduct: {
    std::vector<FiniteGroup> parts;
    for (const auto &f : spec.factors) parts.push_back(build(f, limits));
    std::size_t degree = 0;
    for (const auto &p : parts) degree += p.degree();
    std::vector<Permutation> gens;
    std::size_t offset = 0;
    for (const auto &p : parts) {
      auto s = shifted_generators(p, offset, degree);
      gens.insert(gens.end(), s.begin(), s.end());
      offset += p.degree();
    }
    return FiniteGroup::from_generators(degree, gens, label, limits);
  }
  }
  throw InputError("unhandled spec kind");
}

FiniteGroup build(std::string_view spec_text, const Limits &limits) {
  return build(parse_spec(spec_text), limits);
}

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b, const Limits &limits) {
  if (a.order() * b.order() > limits.max_order)
    throw ResourceError("direct product exceeds the order bound " +
                        std::to_string(limits.max_order));
  const std::size_t degree = a.degree() + b.degree();
  auto gens = shifted_generators(a, 0, degree);
  auto more = shifted_generators(b, a.degree(), degree);
  gens.insert(gens.end(), more.begin(), more.end());
  return FiniteGroup::from_generators(degree, gens,
                                      "DirectProduct(" + a.label() + "," + b.label() + ")", limits);
}

std::vector<Elem> small_generating_set(const FiniteGroup &g, const BitSet &subgroup) {
  std::vector<Elem> gens;
  BitSet span = g.generated_subgroup(gens);
  subgroup.for_each([&](std::size_t x) {
    if (span.test(x)) return;
    gens.push_back(static_cast<Elem>(x));
    span = g.generated_subgroup(gens);
  });
  return gens;
}

FiniteGroup subgroup_as_group(const FiniteGroup &g, const BitSet &subgroup, const Limits &limits) {
  std::vector<Permutation> perms;
  for (Elem x : small_generating_set(g, subgroup)) perms.push_back(g.element(x));
  return FiniteGroup::from_generators(g.degree(), perms, "Subgroup(" + g.label() + ")", limits);
}

Quotient quotient(const FiniteGroup &g, const BitSet &normal, const Limits &limits) {
  const std::size_t n = g.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset(n, kUnset), rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    const auto c = static_cast<Elem>(rep.size());
    rep.push_back(static_cast<Elem>(x));
    normal.for_each([&](std::size_t y) { coset[g.multiply(static_cast<Elem>(x), static_cast<Elem>(y))] = c; });
  }
  const std::size_t index = rep.size();
  auto action = [&](Elem x) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c) images[c] = coset[g.multiply(rep[c], x)];
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (Elem s : g.generators()) gens.push_back(action(s));
  Quotient q{FiniteGroup::from_generators(index, gens, "Quotient(" + g.label() + ")", limits), {}};
  q.projection.resize(n);
  for (std::size_t x = 0; x < n; ++x) q.projection[x] = q.group.index_of(action(static_cast<Elem>(x)));
  return q;
}

} // namespace joinlat
