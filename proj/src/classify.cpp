#include "joinlat/classify.hpp"

#include <algorithm>
#include <map>

#include "joinlat/errors.hpp"
#include "joinlat/isomorph.hpp"
#include "joinlat/joingraph.hpp"
#include "joinlat/moebius.hpp"

namespace joinlat {

std::string to_string(FactorKind kind) {
  switch (kind) {
  case FactorKind::ElementaryAbelian: return "elementary-abelian";
  case FactorKind::Lambda: return "Lambda";
  case FactorKind::LambdaStar: return "LambdaStar";
  case FactorKind::Other: return "other";
  }
  return "other";
}

namespace {

Elem commutator(const FiniteGroup &g, Elem a, Elem b) {
  return g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
}

// <[a, b] : a in left, b in right>
BitSet commutator_subgroup(const FiniteGroup &g, const BitSet &left, const BitSet &right) {
  BitSet found = g.empty_set();
  left.for_each([&](std::size_t a) {
    right.for_each([&](std::size_t b) {
      found.set(commutator(g, static_cast<Elem>(a), static_cast<Elem>(b)));
    });
  });
  std::vector<Elem> seed;
  found.for_each([&](std::size_t x) { seed.push_back(static_cast<Elem>(x)); });
  return g.generated_subgroup(seed);
}

} // namespace

bool is_soluble(const FiniteGroup &g) {
  BitSet current = g.all_elements();
  while (current.count() > 1) {
    BitSet next = commutator_subgroup(g, current, current);
    if (next == current) return false;
    current = std::move(next);
  }
  return true;
}

bool is_nilpotent(const FiniteGroup &g) {
  const BitSet all = g.all_elements();
  BitSet current = all;
  while (current.count() > 1) {
    BitSet next = commutator_subgroup(g, current, all);
    if (next == current) return false;
    current = std::move(next);
  }
  return true;
}

bool is_supersoluble(const SubgroupLattice &lat) {
  if (!is_soluble(lat.group())) return false;
  const auto factors = chief_series(lat);
  return std::all_of(factors.begin(), factors.end(),
                      [](const ChiefFactorRecord &f) { return f.dimension == 1; });
}

bool is_supersoluble(const FiniteGroup &g) {
  if (!is_soluble(g)) return false;
  return is_supersoluble(enumerate_subgroups(g));
}

std::optional<PGroupSignature> is_pgroup_class(const FiniteGroup &g) {
  const auto primes = factorize(static_cast<long long>(g.order()));
  auto power_of = [&](long long p, std::size_t bound) {
    BitSet s = g.empty_set();
    for (Elem x = 0; x < g.order(); ++x) {
      std::size_t k = g.element_order(x);
      while (k % p == 0) k /= p;
      if (k == 1 && g.element_order(x) <= bound) s.set(x);
    }
    return s;
  };
  auto elementary_abelian = [&](const BitSet &s, long long p) {
    bool ok = true;
    s.for_each([&](std::size_t x) {
      if (g.power(static_cast<Elem>(x), p) != g.identity()) ok = false;
    });
    s.for_each([&](std::size_t x) {
      s.for_each([&](std::size_t y) {
        if (g.multiply(static_cast<Elem>(x), static_cast<Elem>(y)) !=
            g.multiply(static_cast<Elem>(y), static_cast<Elem>(x)))
          ok = false;
      });
    });
    return ok;
  };

  if (primes.size() == 1) {
    const auto [p, k] = primes.front();
    if (elementary_abelian(g.all_elements(), p)) return PGroupSignature{p, k, std::nullopt};
    return std::nullopt;
  }
  if (primes.size() != 2) return std::nullopt;

  for (int side = 0; side < 2; ++side) {
    const auto [p, n] = primes[side];
    const auto [q, e] = primes[1 - side];
    if (e != 1 || (p - 1) % q) continue;
    std::size_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= static_cast<std::size_t>(p);
    const BitSet sylow = power_of(p, pn);
    if (sylow.count() != pn || !elementary_abelian(sylow, p)) continue;

    Elem c = 0;
    for (Elem x = 1; x < g.order(); ++x)
      if (g.element_order(x) == static_cast<std::size_t>(q)) {
        c = x;
        break;
      }
    const Elem x0 = static_cast<Elem>(sylow.next(1));
    const Elem image = g.conjugate(x0, c);
    long long m = 1;
    while (m < p && g.power(x0, m) != image) ++m;
    if (m == 1 || m == p) continue;
    bool power_map = true;
    sylow.for_each([&](std::size_t x) {
      if (g.conjugate(static_cast<Elem>(x), c) != g.power(static_cast<Elem>(x), m)) power_map = false;
    });
    if (power_map) return PGroupSignature{p, n, q};
  }
  return std::nullopt;
}

std::vector<SubgroupId> coprime_factorization(const SubgroupLattice &lat) {
  const std::size_t order = lat.group().order();
  const auto primes = factorize(static_cast<long long>(order));
  const std::size_t k = primes.size();
  if (k == 0) return {};
  const auto normals = normal_subgroups(lat);

  auto hall = [&](unsigned mask) -> SubgroupId {
    std::size_t want = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1U)
        for (int e = 0; e < primes[i].second; ++e) want *= static_cast<std::size_t>(primes[i].first);
    for (SubgroupId n : normals)
      if (lat.order(n) == want) return n;
    return SubgroupLattice::npos;
  };

  const unsigned full = (1U << k) - 1;
  std::vector<unsigned> splittable;
  for (unsigned mask = 1; mask <= full; ++mask)
    if (hall(mask) != SubgroupLattice::npos && hall(full & ~mask) != SubgroupLattice::npos)
      splittable.push_back(mask);

  std::vector<unsigned> blocks;
  for (std::size_t i = 0; i < k; ++i) {
    unsigned block = full;
    for (unsigned mask : splittable)
      if (mask >> i & 1U) block &= mask;
    if (std::find(blocks.begin(), blocks.end(), block) == blocks.end()) blocks.push_back(block);
  }
  std::vector<SubgroupId> out;
  for (unsigned block : blocks) out.push_back(hall(block));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupId> direct_factors(const SubgroupLattice &lat, SubgroupId whole) {
  const auto normals = normal_subgroups(lat);
  std::vector<SubgroupId> out;
  SubgroupId remaining = whole;
  while (lat.order(remaining) > 1) {
    SubgroupId factor = SubgroupLattice::npos, rest = SubgroupLattice::npos;
    for (SubgroupId a : normals) {
      if (a == lat.bottom_id() || a == remaining || !lat.leq(a, remaining)) continue;
      for (SubgroupId b : normals) {
        if (!lat.leq(b, remaining) || lat.order(a) * lat.order(b) != lat.order(remaining)) continue;
        if (lat.meet(a, b) != lat.bottom_id()) continue;
        factor = a;
        rest = b;
        break;
      }
      if (factor != SubgroupLattice::npos) break;
    }
    if (factor == SubgroupLattice::npos) {
      out.push_back(remaining);
      break;
    }
    out.push_back(factor);
    remaining = rest;
  }
  return out;
}

namespace {

GroupSpec elementary_piece(long long p, long long k) {
  return k == 1 ? GroupSpec::cyclic(p) : GroupSpec::elem_abelian(p, k);
}

GroupSpec product_of(std::vector<GroupSpec> pieces) {
  if (pieces.size() == 1) return pieces.front();
  return GroupSpec::direct_product(std::move(pieces));
}

std::string partner_text(const std::vector<GroupSpec> &pieces) {
  if (pieces.empty()) return GroupSpec::cyclic(1).to_string();
  if (pieces.size() == 1) return pieces.front().to_string();
  return GroupSpec::direct_product(pieces).to_string();
}

void require_frattini_free(const SubgroupLattice &lat) {
  if (lat.frattini_id() != lat.bottom_id())
    throw InputError("group '" + lat.group().label() +
                     "' has a nontrivial Frattini subgroup; the classification needs Frat(G) = 1");
}

void append_pieces(std::vector<GroupSpec> &out, const GroupSpec &spec) {
  if (spec.kind == GroupSpec::Kind::DirectProduct)
    out.insert(out.end(), spec.factors.begin(), spec.factors.end());
  else
    out.push_back(spec);
}

} // namespace

std::pair<FactorKind, std::optional<GroupSpec>> classify_coprime_factor(const SubgroupLattice &lat,
                                                                        SubgroupId factor) {
  const auto &g = lat.group();
  const auto whole = subgroup_as_group(g, lat.elements(factor));
  if (auto sig = is_pgroup_class(whole); sig && !sig->q)
    return {FactorKind::ElementaryAbelian, elementary_piece(sig->p, sig->n)};

  std::vector<PGroupSignature> nonabelian;
  std::vector<long long> cyclic;
  for (SubgroupId part : direct_factors(lat, factor)) {
    auto sig = is_pgroup_class(subgroup_as_group(g, lat.elements(part)));
    if (!sig) return {FactorKind::Other, std::nullopt};
    if (sig->q)
      nonabelian.push_back(*sig);
    else if (sig->n == 1)
      cyclic.push_back(sig->p);
    else
      return {FactorKind::Other, std::nullopt};
  }
  if (nonabelian.empty() || cyclic.size() > 1) return {FactorKind::Other, std::nullopt};

  // The chain p_1 > p_2 > ... is forced: H_i = C_{p_i}^{n_i} x| C_{p_{i+1}}.
  std::sort(nonabelian.begin(), nonabelian.end(),
            [](const PGroupSignature &a, const PGroupSignature &b) { return a.p > b.p; });
  for (std::size_t i = 0; i + 1 < nonabelian.size(); ++i)
    if (*nonabelian[i].q != nonabelian[i + 1].p) return {FactorKind::Other, std::nullopt};

  std::vector<GroupSpec> pieces;
  for (const auto &h : nonabelian) pieces.push_back(elementary_piece(h.p, h.n + 1));
  if (cyclic.empty()) return {FactorKind::Lambda, product_of(pieces)};
  if (cyclic.front() != nonabelian.front().p) return {FactorKind::Other, std::nullopt};
  pieces.push_back(GroupSpec::cyclic(*nonabelian.back().q));
  return {FactorKind::LambdaStar, product_of(pieces)};
}

Membership in_D(const SubgroupLattice &lat) {
  require_frattini_free(lat);
  std::vector<GroupSpec> pieces;
  for (SubgroupId f : coprime_factorization(lat)) {
    auto sig = is_pgroup_class(subgroup_as_group(lat.group(), lat.elements(f)));
    if (!sig) return {};
    pieces.push_back(elementary_piece(sig->p, sig->q ? sig->n + 1 : sig->n));
  }
  return {true, partner_text(pieces)};
}

Membership in_M(const SubgroupLattice &lat) {
  require_frattini_free(lat);
  std::vector<GroupSpec> pieces;
  for (SubgroupId f : coprime_factorization(lat)) {
    auto [kind, partner] = classify_coprime_factor(lat, f);
    if (kind == FactorKind::Other) return {};
    append_pieces(pieces, *partner);
  }
  return {true, partner_text(pieces)};
}

std::size_t elementary_abelian_subgroup_count(const std::vector<std::pair<long long, int>> &primes) {
  std::size_t total = 1;
  for (const auto &[p, k] : primes) {
    // Gaussian binomials [k, j]_p via the Pascal-type recurrence.
    std::vector<std::vector<std::size_t>> binom(static_cast<std::size_t>(k) + 1,
                                                std::vector<std::size_t>(static_cast<std::size_t>(k) + 1, 0));
    for (int n = 0; n <= k; ++n) {
      binom[n][0] = binom[n][n] = 1;
      std::size_t pj = 1;
      for (int j = 1; j < n; ++j) {
        pj *= static_cast<std::size_t>(p);
        binom[n][j] = binom[n - 1][j - 1] + pj * binom[n - 1][j];
      }
    }
    std::size_t count = 0;
    for (int j = 0; j <= k; ++j) count += binom[k][j];
    total *= count;
  }
  return total;
}

std::optional<std::string> partner_search(const SubgroupLattice &lat, std::size_t max_order,
                                          PartnerMode mode, const Limits &limits) {
  require_frattini_free(lat);

  struct Candidate {
    std::string spec;
    std::size_t subgroups;
  };
  std::vector<Candidate> candidates;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto primes = factorize(static_cast<long long>(n));
    std::vector<GroupSpec> pieces;
    for (const auto &[p, k] : primes) pieces.push_back(elementary_piece(p, k));
    candidates.push_back({partner_text(pieces), elementary_abelian_subgroup_count(primes)});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) { return a.spec < b.spec; });

  std::optional<JoinGraph> delta;
  std::vector<std::size_t> degrees;
  std::optional<Poset> mposet;
  std::size_t want = lat.size();
  if (mode == PartnerMode::Delta) {
    delta = build_delta(lat);
    for (const auto &row : delta->adjacency) degrees.push_back(row.count());
    std::sort(degrees.begin(), degrees.end());
  } else {
    const auto mi = mi_lattice(lat);
    mposet = mi.as_poset(lat);
    want = mi.size();
  }

  for (const auto &c : candidates) {
    if (c.subgroups != want) continue;
    const auto x = build(c.spec, limits);
    const auto xlat = enumerate_subgroups(x, limits);
    if (mode == PartnerMode::Delta) {
      const auto xdelta = build_delta(xlat);
      std::vector<std::size_t> xdeg;
      for (const auto &row : xdelta.adjacency) xdeg.push_back(row.count());
      std::sort(xdeg.begin(), xdeg.end());
      if (xdeg != degrees) continue;
      if (graph_iso(*delta, xdelta, limits.search_budget).isomorphic) return c.spec;
    } else {
      // Frattini-free nilpotent: M(X) is the whole subgroup lattice.
      if (poset_iso(*mposet, xlat.as_poset(), limits.search_budget).isomorphic) return c.spec;
    }
  }
  return std::nullopt;
}

Classification classify(const SubgroupLattice &lat) {
  const auto &g = lat.group();
  Classification c;
  c.soluble = is_soluble(g);
  c.nilpotent = is_nilpotent(g);
  c.supersoluble = c.soluble && is_supersoluble(lat);
  c.frattini_free = lat.frattini_id() == lat.bottom_id();
  c.pgroup_signature = is_pgroup_class(g);
  for (SubgroupId f : coprime_factorization(lat))
    c.coprime_factors.push_back({f, classify_coprime_factor(lat, f).first});
  if (c.frattini_free) {
    const auto d = in_D(lat);
    const auto m = in_M(lat);
    c.in_D = d.member;
    c.in_M = m.member;
    if (d.member)
      c.partner_spec = d.partner_spec;
    else if (m.member)
      c.partner_spec = m.partner_spec;
  }
  return c;
}

} // namespace joinlat
