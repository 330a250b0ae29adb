#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "joinlat/classify.hpp"
#include "joinlat/errors.hpp"
#include "joinlat/gfp.hpp"
#include "joinlat/group.hpp"
#include "joinlat/lattice.hpp"
#include "joinlat/moebius.hpp"
#include "oracles.hpp"

using namespace joinlat;

namespace {

const char *const kSoluble[] = {"Cyclic(1)", "Cyclic(4)", "Cyclic(6)", "Cyclic(30)", "Cyclic(36)",
                                "ElemAbelian(2,3)", "ElemAbelian(3,2)", "Dihedral(8)", "Dihedral(10)",
                                "Dihedral(18)", "Sym(3)", "Sym(4)", "Alt(4)", "PGroup(7,1,3)",
                                "PGroup(3,2,2)", "PGroup(5,2,2)", "PGroup(7,2,3)",
                                "DirectProduct(Sym(3),Cyclic(2))", "DirectProduct(Sym(3),Cyclic(3))",
                                "DirectProduct(Sym(3),Sym(3))", "DirectProduct(Alt(4),Cyclic(2))",
                                "DirectProduct(Dihedral(10),Cyclic(3))", "DirectProduct(PGroup(7,1,3),Sym(3))",
                                "DirectProduct(Cyclic(4),Sym(3))"};

long long as_ll(Integer v) { return static_cast<long long>(v); }

long long binom2(long long k) { return k * (k - 1) / 2; }

} // namespace

TEST_SUITE("moebius") {

TEST_CASE("known values") {
  const std::vector<std::pair<const char *, long long>> cases{
      {"Cyclic(1)", 1},      {"Cyclic(2)", -1},     {"Cyclic(4)", 0},      {"Cyclic(6)", 1},
      {"Cyclic(30)", -1},    {"Sym(3)", 3},         {"Alt(4)", 4},         {"Sym(4)", -12},
      {"Alt(5)", -60},       {"ElemAbelian(2,3)", -8}, {"ElemAbelian(3,2)", 3},
      {"DirectProduct(ElemAbelian(3,2),Cyclic(2))", -3},
      {"DirectProduct(Sym(3),Cyclic(3))", -3},
      {"DirectProduct(Sym(3),Cyclic(2))", -6},
      {"DirectProduct(Dihedral(10),Cyclic(3))", -5}};
  for (const auto &[spec, mu] : cases) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto t = moebius_table(x.lat);
    CHECK(as_ll(t[x.lat.bottom_id()]) == mu);
    CHECK(as_ll(t[x.lat.top_id()]) == 1);
  }
}

TEST_CASE("top-down recursion agrees with the bottom-up oracle") {
  for (const char *spec : {"Sym(4)", "Alt(5)", "Dihedral(24)", "DirectProduct(Sym(3),Cyclic(3))",
                           "PGroup(5,2,2)", "ElemAbelian(2,4)", "Sym(5)"}) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto t = moebius_table(x.lat);
    const auto expected = oracle::mu_from_below(x.lat);
    for (SubgroupId h = 0; h < x.lat.size(); ++h) CHECK(as_ll(t[h]) == expected[h]);
  }
}

TEST_CASE("mu(N, G) equals mu of the quotient") {
  for (const char *spec : {"Sym(4)", "Dihedral(12)", "DirectProduct(Sym(3),Cyclic(3))", "PGroup(7,1,3)"}) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto t = moebius_table(x.lat);
    for (SubgroupId n : normal_subgroups(x.lat)) {
      const auto q = quotient(x.g, x.lat.elements(n));
      const auto qlat = enumerate_subgroups(q.group);
      CHECK(as_ll(t[n]) == as_ll(moebius_table(qlat)[qlat.bottom_id()]));
    }
  }
}

TEST_CASE("chief series examples") {
  {
    const oracle::Loaded x("Cyclic(6)");
    const auto cs = chief_series(x.lat);
    REQUIRE(cs.size() == 2);
    std::vector<std::int64_t> primes{cs[0].prime, cs[1].prime};
    std::sort(primes.begin(), primes.end());
    CHECK(primes == std::vector<std::int64_t>{2, 3});
    for (const auto &f : cs) {
      CHECK(f.dimension == 1);
      CHECK(f.complemented);
      CHECK(f.trivial_module);
    }
  }
  {
    const oracle::Loaded x("Sym(3)");
    const auto cs = chief_series(x.lat);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].prime == 3);
    CHECK_FALSE(cs[0].trivial_module);
    CHECK(cs[0].complemented);
    CHECK(cs[1].prime == 2);
    CHECK(cs[1].trivial_module);
    CHECK(cs[0].lower_id == x.lat.bottom_id());
    CHECK(cs[1].upper_id == x.lat.top_id());
  }
  {
    const oracle::Loaded x("Cyclic(4)");
    const auto cs = chief_series(x.lat);
    REQUIRE(cs.size() == 2);
    CHECK_FALSE(cs[0].complemented);
    CHECK(cs[1].complemented);
    CHECK(moe_formula(x.lat) == 0);
  }
  {
    const oracle::Loaded x("Alt(4)");
    const auto cs = chief_series(x.lat);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].prime == 2);
    CHECK(cs[0].dimension == 2);
    CHECK(cs[1].prime == 3);
  }
  {
    const oracle::Loaded x("Alt(5)");
    CHECK_THROWS_AS(chief_series(x.lat), InputError);
    CHECK_THROWS_AS(moe_formula(x.lat), InputError);
  }
}

TEST_CASE("chief factors are a consecutive chain of normal subgroups") {
  for (const char *spec : kSoluble) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto cs = chief_series(x.lat);
    SubgroupId prev = x.lat.bottom_id();
    std::size_t product = 1;
    for (const auto &f : cs) {
      CHECK(f.lower_id == prev);
      CHECK(is_normal(x.lat, f.upper_id));
      CHECK(x.lat.leq(f.lower_id, f.upper_id));
      std::size_t pd = 1;
      for (std::size_t i = 0; i < f.dimension; ++i) pd *= static_cast<std::size_t>(f.prime);
      CHECK(x.lat.order(f.upper_id) == x.lat.order(f.lower_id) * pd);
      // No normal subgroup strictly between.
      for (SubgroupId n : normal_subgroups(x.lat))
        if (n != f.lower_id && n != f.upper_id) CHECK_FALSE((x.lat.leq(f.lower_id, n) && x.lat.leq(n, f.upper_id)));
      product *= pd;
      prev = f.upper_id;
    }
    CHECK(prev == x.lat.top_id());
    CHECK(product == x.g.order());
  }
}

TEST_CASE("module data") {
  for (const char *spec : kSoluble) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    for (const auto &f : chief_series(x.lat)) {
      CHECK(f.action.size() == x.g.generators().size());
      bool all_identity = true;
      for (const auto &m : f.action) {
        CHECK(m.rows() == f.dimension);
        CHECK(m.cols() == f.dimension);
        CHECK(m.prime() == f.prime);
        CHECK(m.is_invertible());
        all_identity = all_identity && m.is_identity();
      }
      CHECK(f.trivial_module == all_identity);
      // |End_G(V)| is a power of p, equal to p^(number of intertwiners).
      std::uint64_t e = f.endo_order;
      CHECK(e >= static_cast<std::uint64_t>(f.prime));
      while (e % static_cast<std::uint64_t>(f.prime) == 0) e /= static_cast<std::uint64_t>(f.prime);
      CHECK(e == 1);
      std::uint64_t pk = 1;
      for (std::size_t i = 0; i < intertwiners(f.action, f.action).size(); ++i) pk *= static_cast<std::uint64_t>(f.prime);
      CHECK(pk == f.endo_order);
      if (f.dimension == 1) CHECK(f.endo_order == static_cast<std::uint64_t>(f.prime));
      if (f.trivial_module) CHECK(f.dimension == 1);
    }
  }
}

TEST_CASE("iso classes follow module isomorphism") {
  for (const char *spec : {"DirectProduct(Sym(3),Sym(3))", "ElemAbelian(2,3)", "DirectProduct(Sym(3),Cyclic(3))",
                           "DirectProduct(PGroup(7,1,3),Sym(3))"}) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto cs = chief_series(x.lat);
    for (const auto &a : cs)
      for (const auto &b : cs) {
        const bool same = a.prime == b.prime && a.dimension == b.dimension &&
                          modules_isomorphic(a.action, b.action);
        CHECK((a.iso_class == b.iso_class) == same);
      }
  }
}

TEST_CASE("formula agrees with the recursion on soluble groups") {
  for (const char *spec : kSoluble) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    CHECK(as_ll(moe_formula(x.lat)) == as_ll(moebius_table(x.lat)[x.lat.bottom_id()]));
  }
}

TEST_CASE("formula does not depend on the chief series chosen") {
  for (const char *spec : kSoluble) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto low = chief_series(x.lat, ChiefTieBreak::LowestId);
    const auto high = chief_series(x.lat, ChiefTieBreak::HighestId);
    CHECK(moe_formula(low, x.g.order()) == moe_formula(high, x.g.order()));
    auto shape = [](const std::vector<ChiefFactorRecord> &cs) {
      std::vector<std::tuple<std::int64_t, std::size_t, bool>> out;
      for (const auto &f : cs) out.emplace_back(f.prime, f.dimension, f.complemented);
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(shape(low) == shape(high));
  }
}

TEST_CASE("closed form for Frattini-free nilpotent groups") {
  // Product over primes of (-1)^k p^C(k,2) for the p-part C_p^k.
  const std::vector<std::pair<const char *, std::vector<std::pair<long long, long long>>>> cases{
      {"ElemAbelian(2,3)", {{2, 3}}},
      {"ElemAbelian(3,3)", {{3, 3}}},
      {"ElemAbelian(2,4)", {{2, 4}}},
      {"DirectProduct(ElemAbelian(2,2),ElemAbelian(3,2))", {{2, 2}, {3, 2}}},
      {"Cyclic(30)", {{2, 1}, {3, 1}, {5, 1}}}};
  for (const auto &[spec, parts] : cases) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    long long expected = 1;
    for (const auto &[p, k] : parts) {
      long long v = k % 2 ? -1 : 1;
      for (long long i = 0; i < binom2(k); ++i) v *= p;
      expected *= v;
    }
    CHECK(as_ll(moebius_table(x.lat)[0]) == expected);
  }
}

TEST_CASE("mu vanishes off the intersection lattice") {
  for (const char *spec : {"Sym(4)", "Alt(5)", "Cyclic(36)", "DirectProduct(Sym(3),Cyclic(3))", "Dihedral(16)",
                           "PGroup(7,2,3)", "Sym(5)"}) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto mi = mi_lattice(x.lat);
    const auto t = moebius_table(x.lat);
    CHECK(hall_vanishing_check(x.lat, mi, t).empty());
    for (SubgroupId h = 0; h < x.lat.size(); ++h)
      if (!mi.contains(h)) CHECK(t[h] == 0);
  }
}

TEST_CASE("normal subgroups above the Frattini subgroup") {
  for (const char *spec : {"Sym(4)", "Cyclic(36)", "DirectProduct(Sym(3),Cyclic(3))", "PGroup(5,2,2)",
                           "DirectProduct(Dihedral(10),Cyclic(3))", "ElemAbelian(2,3)"}) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto mi = mi_lattice(x.lat);
    const auto t = moebius_table(x.lat);
    if (!is_supersoluble(x.lat)) continue;
    CHECK(normal_mi_check(x.lat, mi, t).empty());
  }
  // Alt(4) is not supersoluble, yet its Klein subgroup is maximal.
  const oracle::Loaded a4("Alt(4)");
  CHECK(normal_mi_check(a4.lat, mi_lattice(a4.lat), moebius_table(a4.lat)).empty());
}

TEST_CASE("checked arithmetic") {
  CHECK(to_string(Integer{0}) == "0");
  CHECK(to_string(Integer{-120}) == "-120");
  CHECK(to_string(checked_pow(10, 30)) == "1000000000000000000000000000000");
  CHECK(checked_mul(-3, 7) == -21);
  CHECK(checked_add(5, -9) == -4);
  const Integer big = checked_pow(2, 120);
  CHECK_THROWS_AS(checked_mul(big, big), ResourceError);
  CHECK_THROWS_AS(checked_pow(3, 200), ResourceError);
  CHECK_THROWS_AS(checked_add(checked_pow(2, 126), checked_pow(2, 126)), ResourceError);
}

TEST_CASE("matrices over F_p") {
  MatrixFp a(2, 2, 5);
  a.set(0, 0, 1);
  a.set(0, 1, 2);
  a.set(1, 0, 2);
  a.set(1, 1, 4);
  CHECK(a.rank() == 1);
  CHECK_FALSE(a.is_invertible());
  const auto ns = a.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK((ns[0][0] + 2 * ns[0][1]) % 5 == 0);
  a.set(1, 1, 3);
  CHECK(a.is_invertible());
  CHECK(MatrixFp::identity(3, 7).is_identity());
  CHECK(a * MatrixFp::identity(2, 5) == a);
  a.set(0, 0, -1);
  CHECK(a(0, 0) == 4);
  for (std::int64_t p : {2, 3, 5, 7, 13})
    for (std::int64_t x = 1; x < p; ++x) CHECK(x * inverse_mod(x, p) % p == 1);
}

TEST_CASE("intertwiners") {
  const std::vector<MatrixFp> trivial{MatrixFp::identity(1, 3)};
  CHECK(intertwiners(trivial, trivial).size() == 1);
  MatrixFp neg(1, 1, 3);
  neg.set(0, 0, -1);
  const std::vector<MatrixFp> sign{neg};
  CHECK(intertwiners(trivial, sign).empty());
  CHECK_FALSE(modules_isomorphic(trivial, sign));
  CHECK(modules_isomorphic(sign, sign));
  // Trivial action on F_2^2: every linear map intertwines.
  const std::vector<MatrixFp> plane{MatrixFp::identity(2, 2)};
  CHECK(intertwiners(plane, plane).size() == 4);
}

}
