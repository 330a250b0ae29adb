#include "joinlat/moebius.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "joinlat/errors.hpp"

namespace joinlat {

Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("integer overflow in Moebius arithmetic");
  return r;
}

Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("integer overflow in Moebius arithmetic");
  return r;
}

Integer checked_pow(Integer base, std::size_t exponent) {
  Integer r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

std::string to_string(Integer v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u) {
    digits += static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  if (negative) digits += '-';
  std::reverse(digits.begin(), digits.end());
  return digits;
}

MoebiusTable moebius_table(const SubgroupLattice &lat) {
  MoebiusTable t{std::vector<Integer>(lat.size(), 0)};
  // Ids are sorted by order, so every proper overgroup has a larger id.
  for (SubgroupId h = lat.size(); h-- > 0;) {
    if (h == lat.top_id()) {
      t.values[h] = 1;
      continue;
    }
    Integer sum = 0;
    lat.above(h).for_each([&](std::size_t k) {
      if (k != h) sum = checked_add(sum, t.values[k]);
    });
    t.values[h] = -sum;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Module isomorphism

std::vector<std::vector<std::int64_t>> intertwiners(const std::vector<MatrixFp> &a,
                                                    const std::vector<MatrixFp> &b) {
  if (a.empty() && b.empty()) return {};
  const std::size_t ka = a.empty() ? b.front().cols() : a.front().rows();
  const std::size_t kb = b.empty() ? ka : b.front().rows();
  const std::int64_t p = a.empty() ? b.front().prime() : a.front().prime();
  const std::size_t unknowns = kb * ka;

  // Row (s, r, c): sum_j T[r][j] a_s[j][c] - sum_j b_s[r][j] T[j][c] = 0.
  MatrixFp system(std::max<std::size_t>(a.size() * kb * ka, 1), unknowns, p);
  std::size_t row = 0;
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t r = 0; r < kb; ++r)
      for (std::size_t c = 0; c < ka; ++c, ++row) {
        std::vector<std::int64_t> coeff(unknowns, 0);
        for (std::size_t j = 0; j < ka; ++j) coeff[r * ka + j] += a[s](j, c);
        for (std::size_t j = 0; j < kb; ++j) coeff[j * ka + c] -= b[s](r, j);
        for (std::size_t u = 0; u < unknowns; ++u) system.set(row, u, coeff[u]);
      }
  return system.nullspace();
}

bool modules_isomorphic(const std::vector<MatrixFp> &a, const std::vector<MatrixFp> &b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  if (a.front().rows() != b.front().rows() || a.front().prime() != b.front().prime()) return false;
  const std::size_t k = a.front().rows();
  const std::int64_t p = a.front().prime();
  const auto basis = intertwiners(a, b);
  if (basis.empty()) return false;

  auto combine = [&](const std::vector<std::int64_t> &coeffs) {
    MatrixFp t(k, k, p);
    for (std::size_t i = 0; i < k * k; ++i) {
      std::int64_t v = 0;
      for (std::size_t j = 0; j < basis.size(); ++j) v = (v + coeffs[j] * basis[j][i]) % p;
      t.set(i / k, i % k, v);
    }
    return t;
  };

  std::uint64_t space = 1;
  bool small = true;
  for (std::size_t j = 0; j < basis.size() && small; ++j) {
    space *= static_cast<std::uint64_t>(p);
    small = space <= 10'000;
  }
  std::vector<std::int64_t> coeffs(basis.size(), 0);
  if (small) {
    for (std::uint64_t n = 1; n < space; ++n) {
      std::uint64_t x = n;
      for (auto &c : coeffs) {
        c = static_cast<std::int64_t>(x % static_cast<std::uint64_t>(p));
        x /= static_cast<std::uint64_t>(p);
      }
      if (combine(coeffs).is_invertible()) return true;
    }
    return false;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> digit(0, p - 1);
  for (int trial = 0; trial < 10'000; ++trial) {
    for (auto &c : coeffs) c = digit(rng);
    if (combine(coeffs).is_invertible()) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Chief series

namespace {

std::int64_t prime_of_power(std::size_t n, std::size_t &exponent) {
  auto f = factorize(static_cast<long long>(n));
  if (f.size() != 1) return 0;
  exponent = static_cast<std::size_t>(f.front().second);
  return f.front().first;
}

ChiefFactorRecord describe_factor(const SubgroupLattice &lat, SubgroupId lower, SubgroupId upper) {
  const auto &g = lat.group();
  ChiefFactorRecord rec;
  rec.lower_id = lower;
  rec.upper_id = upper;

  std::size_t k = 0;
  const std::int64_t p = prime_of_power(lat.order(upper) / lat.order(lower), k);
  const auto &lower_set = lat.elements(lower);
  bool elementary = p != 0;
  for (Elem x : lat.generators(upper)) {
    if (!elementary) break;
    if (!lower_set.test(g.power(x, p))) elementary = false;
    for (Elem y : lat.generators(upper)) {
      Elem commutator = g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y));
      if (!lower_set.test(commutator)) elementary = false;
    }
  }
  if (!elementary)
    throw InputError("group '" + g.label() + "' is not soluble: a chief factor of order " +
                     std::to_string(lat.order(upper) / lat.order(lower)) +
                     " is not elementary abelian");
  rec.prime = p;
  rec.dimension = k;

  // Basis x_1..x_k of upper/lower, lowest element indices first.
  std::vector<Elem> basis, span_gens = lat.generators(lower);
  BitSet span = lower_set;
  lat.elements(upper).for_each([&](std::size_t x) {
    if (span.test(x)) return;
    basis.push_back(static_cast<Elem>(x));
    span_gens.push_back(static_cast<Elem>(x));
    span = g.generated_subgroup(span_gens);
  });

  // Coordinates of every element of upper: x_1^a_1 ... x_k^a_k n -> a.
  std::vector<std::vector<std::int64_t>> coords(g.order());
  std::vector<std::int64_t> a(k, 0);
  while (true) {
    Elem prod = g.identity();
    for (std::size_t i = 0; i < k; ++i) prod = g.multiply(prod, g.power(basis[i], a[i]));
    lower_set.for_each([&](std::size_t n) { coords[g.multiply(prod, static_cast<Elem>(n))] = a; });
    std::size_t i = 0;
    while (i < k && ++a[i] == p) a[i++] = 0;
    if (i == k) break;
  }

  rec.trivial_module = true;
  for (Elem s : g.generators()) {
    MatrixFp m(k, k, p);
    for (std::size_t j = 0; j < k; ++j) {
      const auto &image = coords[g.conjugate(basis[j], s)];
      for (std::size_t r = 0; r < k; ++r) m.set(r, j, image[r]);
    }
    if (!m.is_identity()) rec.trivial_module = false;
    rec.action.push_back(std::move(m));
  }

  // Complement of upper/lower in G/lower, searched among overgroups of lower.
  const std::size_t want = g.order() / lat.order(upper) * lat.order(lower);
  lat.above(lower).for_each([&](std::size_t u) {
    if (rec.complemented || lat.order(u) != want) return;
    if (lat.meet(u, upper) == lower) rec.complemented = true;
  });

  const auto commutant = intertwiners(rec.action, rec.action);
  rec.endo_order = 1;
  for (std::size_t i = 0; i < (rec.action.empty() ? k * k : commutant.size()); ++i)
    rec.endo_order *= static_cast<std::uint64_t>(p);
  return rec;
}

} // namespace

std::vector<ChiefFactorRecord> chief_series(const SubgroupLattice &lat, ChiefTieBreak tie_break) {
  const auto normals = normal_subgroups(lat);
  std::vector<ChiefFactorRecord> out;
  SubgroupId current = lat.bottom_id();
  while (current != lat.top_id()) {
    std::vector<SubgroupId> minimal;
    for (SubgroupId n : normals) {
      if (n == current || !lat.leq(current, n)) continue;
      bool is_minimal = true;
      for (SubgroupId m : normals)
        if (m != n && m != current && lat.leq(current, m) && lat.leq(m, n)) {
          is_minimal = false;
          break;
        }
      if (is_minimal) minimal.push_back(n);
    }
    const SubgroupId next = tie_break == ChiefTieBreak::LowestId ? minimal.front() : minimal.back();
    out.push_back(describe_factor(lat, current, next));
    current = next;
  }

  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].iso_class = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (out[j].iso_class != j) continue;
      if (out[j].prime != out[i].prime || out[j].dimension != out[i].dimension) continue;
      if (modules_isomorphic(out[j].action, out[i].action)) {
        out[i].iso_class = j;
        break;
      }
    }
  }
  // Renumber classes 0, 1, 2, ... in order of first appearance.
  std::map<std::size_t, std::size_t> renumber;
  for (auto &f : out) {
    auto [it, fresh] = renumber.emplace(f.iso_class, renumber.size());
    f.iso_class = it->second;
  }
  return out;
}

Integer moe_formula(const std::vector<ChiefFactorRecord> &factors, std::size_t group_order) {
  struct ClassData {
    std::size_t delta = 0;
    Integer module_order = 1;
    bool trivial = false;
    std::uint64_t endo = 1;
  };
  std::map<std::size_t, ClassData> classes;
  for (const auto &f : factors) {
    if (!f.complemented) continue;
    auto &c = classes[f.iso_class];
    ++c.delta;
    c.module_order = checked_pow(f.prime, f.dimension);
    c.trivial = f.trivial_module;
    c.endo = f.endo_order;
  }

  Integer product = 1;
  for (const auto &[_, c] : classes) product = checked_mul(product, checked_pow(c.module_order, c.delta));
  if (product != static_cast<Integer>(group_order)) return 0;

  Integer mu = 1;
  for (const auto &[_, c] : classes) {
    if (c.delta % 2) mu = -mu;
    if (!c.trivial) mu = checked_mul(mu, checked_pow(c.module_order, c.delta));
    mu = checked_mul(mu, checked_pow(static_cast<Integer>(c.endo), c.delta * (c.delta - 1) / 2));
  }
  return mu;
}

Integer moe_formula(const SubgroupLattice &lat) {
  return moe_formula(chief_series(lat), lat.group().order());
}

std::vector<SubgroupId> hall_vanishing_check(const SubgroupLattice &lat, const MILattice &mi,
                                             const MoebiusTable &table) {
  std::vector<SubgroupId> out;
  for (SubgroupId h = 0; h < lat.size(); ++h)
    if (!mi.contains(h) && table[h] != 0) out.push_back(h);
  return out;
}

std::vector<SubgroupId> normal_mi_check(const SubgroupLattice &lat, const MILattice &mi,
                                        const MoebiusTable &table) {
  std::vector<SubgroupId> out;
  for (SubgroupId n : normal_subgroups(lat)) {
    if (!lat.leq(lat.frattini_id(), n)) continue;
    if (!mi.contains(n) || table[n] == 0) out.push_back(n);
  }
  return out;
}

} // namespace joinlat
