#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "joinlat/classify.hpp"
#include "joinlat/errors.hpp"
#include "joinlat/group.hpp"
#include "joinlat/isomorph.hpp"
#include "joinlat/joingraph.hpp"
#include "joinlat/lattice.hpp"
#include "joinlat/verify.hpp"
#include "oracles.hpp"

using namespace joinlat;

namespace {

std::vector<std::size_t> orders(const SubgroupLattice &lat, const std::vector<SubgroupId> &ids) {
  std::vector<std::size_t> out;
  for (auto id : ids) out.push_back(lat.order(id));
  std::sort(out.begin(), out.end());
  return out;
}

bool delta_iso(const SubgroupLattice &a, const std::string &spec) {
  const oracle::Loaded b(spec.c_str(), Limits{5000, 20000, 10'000'000});
  return graph_iso(build_delta(a), build_delta(b.lat)).isomorphic;
}

bool m_iso(const SubgroupLattice &a, const std::string &spec) {
  const oracle::Loaded b(spec.c_str(), Limits{5000, 20000, 10'000'000});
  return poset_iso(mi_lattice(a).as_poset(a), mi_lattice(b.lat).as_poset(b.lat)).isomorphic;
}

} // namespace

TEST_SUITE("classify") {

TEST_CASE("predicates") {
  struct Case {
    const char *spec;
    bool soluble, nilpotent, supersoluble;
  };
  const Case cases[] = {{"Cyclic(12)", true, true, true},
                        {"ElemAbelian(2,3)", true, true, true},
                        {"Dihedral(8)", true, true, true},
                        {"Sym(3)", true, false, true},
                        {"Sym(4)", true, false, false},
                        {"Alt(4)", true, false, false},
                        {"Alt(5)", false, false, false},
                        {"Sym(5)", false, false, false},
                        {"PGroup(7,1,3)", true, false, true},
                        {"PGroup(3,2,2)", true, false, true},
                        {"DirectProduct(Sym(3),Cyclic(2))", true, false, true},
                        {"DirectProduct(Alt(4),Cyclic(2))", true, false, false}};
  for (const auto &c : cases) {
    CAPTURE(c.spec);
    const oracle::Loaded x(c.spec);
    CHECK(is_soluble(x.g) == c.soluble);
    CHECK(is_nilpotent(x.g) == c.nilpotent);
    CHECK(is_supersoluble(x.g) == c.supersoluble);
    CHECK(is_supersoluble(x.lat) == c.supersoluble);
  }
}

TEST_CASE("nilpotent implies supersoluble implies soluble") {
  for (const auto &spec : default_corpus(60)) {
    CAPTURE(spec);
    const auto g = build(spec);
    const bool nil = is_nilpotent(g), sup = is_supersoluble(g), sol = is_soluble(g);
    if (nil) CHECK(sup);
    if (sup) CHECK(sol);
  }
}

TEST_CASE("P-group signatures") {
  CHECK(is_pgroup_class(build("Sym(3)")) == PGroupSignature{3, 1, 2});
  CHECK(is_pgroup_class(build("Dihedral(10)")) == PGroupSignature{5, 1, 2});
  CHECK(is_pgroup_class(build("PGroup(7,1,3)")) == PGroupSignature{7, 1, 3});
  CHECK(is_pgroup_class(build("PGroup(3,2,2)")) == PGroupSignature{3, 2, 2});
  CHECK(is_pgroup_class(build("ElemAbelian(2,3)")) == PGroupSignature{2, 3, std::nullopt});
  CHECK(is_pgroup_class(build("Cyclic(5)")) == PGroupSignature{5, 1, std::nullopt});
  CHECK_FALSE(is_pgroup_class(build("Cyclic(4)")).has_value());
  CHECK_FALSE(is_pgroup_class(build("Cyclic(6)")).has_value());
  CHECK_FALSE(is_pgroup_class(build("Alt(4)")).has_value());
  CHECK_FALSE(is_pgroup_class(build("Dihedral(8)")).has_value());
  CHECK_FALSE(is_pgroup_class(build("DirectProduct(Sym(3),Cyclic(3))")).has_value());
}

TEST_CASE("coprime factorization") {
  {
    const oracle::Loaded x("DirectProduct(Dihedral(10),Cyclic(3))");
    CHECK(orders(x.lat, coprime_factorization(x.lat)) == std::vector<std::size_t>{3, 10});
  }
  {
    const oracle::Loaded x("Cyclic(30)");
    CHECK(orders(x.lat, coprime_factorization(x.lat)) == std::vector<std::size_t>{2, 3, 5});
  }
  {
    const oracle::Loaded x("DirectProduct(PGroup(7,1,3),Sym(3))");
    CHECK(orders(x.lat, coprime_factorization(x.lat)) == std::vector<std::size_t>{126});
  }
  {
    const oracle::Loaded x("Cyclic(1)");
    CHECK(coprime_factorization(x.lat).size() <= 1);
  }
  for (const auto &spec : default_corpus(80)) {
    CAPTURE(spec);
    const oracle::Loaded x(spec.c_str());
    const auto f = coprime_factorization(x.lat);
    CHECK(std::is_sorted(f.begin(), f.end()));
    std::size_t product = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(is_normal(x.lat, f[i]));
      product *= x.lat.order(f[i]);
      for (std::size_t j = i + 1; j < f.size(); ++j)
        CHECK(std::gcd(x.lat.order(f[i]), x.lat.order(f[j])) == 1);
    }
    CHECK(product == x.g.order());
  }
}

TEST_CASE("direct factors") {
  const oracle::Loaded x("DirectProduct(Sym(3),Cyclic(2))");
  CHECK(orders(x.lat, direct_factors(x.lat, x.lat.top_id())) == std::vector<std::size_t>{2, 6});
  const oracle::Loaded y("DirectProduct(ElemAbelian(2,2),Cyclic(3))");
  CHECK(orders(y.lat, direct_factors(y.lat, y.lat.top_id())) == std::vector<std::size_t>{2, 2, 3});
  const oracle::Loaded z("Sym(4)");
  CHECK(direct_factors(z.lat, z.lat.top_id()).size() == 1);
}

TEST_CASE("factor kinds") {
  auto kinds = [](const char *spec) {
    const oracle::Loaded x(spec);
    std::vector<FactorKind> out;
    for (const auto &f : classify(x.lat).coprime_factors) out.push_back(f.kind);
    return out;
  };
  using K = FactorKind;
  CHECK(kinds("Sym(3)") == std::vector<K>{K::Lambda});
  CHECK(kinds("DirectProduct(Sym(3),Cyclic(3))") == std::vector<K>{K::LambdaStar});
  CHECK(kinds("DirectProduct(PGroup(7,1,3),Sym(3))") == std::vector<K>{K::Lambda});
  CHECK(kinds("DirectProduct(PGroup(7,1,3),Cyclic(7))") == std::vector<K>{K::LambdaStar});
  CHECK(kinds("DirectProduct(Dihedral(10),Cyclic(3))") == std::vector<K>{K::ElementaryAbelian, K::Lambda});
  CHECK(kinds("DirectProduct(Sym(3),Cyclic(2))") == std::vector<K>{K::Other});
  CHECK(kinds("Alt(4)") == std::vector<K>{K::Other});
  CHECK(to_string(K::LambdaStar) == "LambdaStar");
}

TEST_CASE("membership examples") {
  struct Case {
    const char *spec;
    bool d, m;
  };
  const Case cases[] = {{"Sym(3)", true, true},
                        {"PGroup(3,2,2)", true, true},
                        {"DirectProduct(Dihedral(10),Cyclic(3))", true, true},
                        {"DirectProduct(Sym(3),Cyclic(5))", true, true},
                        {"DirectProduct(Sym(3),Cyclic(3))", false, true},
                        {"DirectProduct(PGroup(7,1,3),Sym(3))", false, true},
                        {"DirectProduct(PGroup(7,1,3),Cyclic(7))", false, true},
                        {"DirectProduct(Sym(3),Cyclic(2))", false, false},
                        {"Alt(4)", false, false},
                        {"ElemAbelian(2,3)", true, true}};
  for (const auto &c : cases) {
    CAPTURE(c.spec);
    const oracle::Loaded x(c.spec);
    const auto d = in_D(x.lat);
    const auto m = in_M(x.lat);
    CHECK(d.member == c.d);
    CHECK(m.member == c.m);
    CHECK(d.partner_spec.has_value() == c.d);
    CHECK(m.partner_spec.has_value() == c.m);
    if (d.member) CHECK(delta_iso(x.lat, *d.partner_spec));
    if (m.member) CHECK(m_iso(x.lat, *m.partner_spec));
    const auto cl = classify(x.lat);
    CHECK(cl.in_D == c.d);
    CHECK(cl.in_M == c.m);
    CHECK(cl.partner_spec.has_value() == c.m);
  }
}

TEST_CASE("membership partners") {
  const oracle::Loaded a("DirectProduct(PGroup(7,1,3),Sym(3))");
  CHECK(*in_M(a.lat).partner_spec == "DirectProduct(ElemAbelian(7,2),ElemAbelian(3,2))");
  // The introductory pair: Sym(3) x C3 shares M with C3^2 x C2.
  const oracle::Loaded b("DirectProduct(Sym(3),Cyclic(3))");
  CHECK(m_iso(b.lat, *in_M(b.lat).partner_spec));
  CHECK(m_iso(b.lat, "DirectProduct(ElemAbelian(3,2),Cyclic(2))"));
}

TEST_CASE("in_M members are supersoluble") {
  for (const auto &spec : default_corpus(100)) {
    CAPTURE(spec);
    const oracle::Loaded x(spec.c_str());
    if (x.lat.frattini_id() != x.lat.bottom_id()) continue;
    const auto m = in_M(x.lat);
    if (m.member) {
      CHECK(is_supersoluble(x.lat));
      CHECK(is_nilpotent(build(*m.partner_spec, Limits{5000, 20000, 10'000'000})));
    }
    if (in_D(x.lat).member) CHECK(m.member);
  }
}

TEST_CASE("Frattini-free required") {
  for (const char *spec : {"Cyclic(4)", "Dihedral(8)", "Cyclic(12)"}) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    CHECK_THROWS_AS(in_D(x.lat), InputError);
    CHECK_THROWS_AS(in_M(x.lat), InputError);
    CHECK_THROWS_AS(partner_search(x.lat, 20, PartnerMode::M), InputError);
    const auto cl = classify(x.lat);
    CHECK_FALSE(cl.frattini_free);
    CHECK_FALSE(cl.in_D.has_value());
    CHECK_FALSE(cl.in_M.has_value());
  }
}

TEST_CASE("partner search") {
  const oracle::Loaded s3("Sym(3)");
  CHECK(partner_search(s3.lat, 50, PartnerMode::Delta) == "ElemAbelian(3,2)");
  CHECK(partner_search(s3.lat, 50, PartnerMode::M) == "ElemAbelian(3,2)");
  CHECK_FALSE(partner_search(s3.lat, 8, PartnerMode::M).has_value());

  const oracle::Loaded b("DirectProduct(Sym(3),Cyclic(3))");
  const auto found = partner_search(b.lat, 60, PartnerMode::M);
  REQUIRE(found.has_value());
  CHECK(m_iso(b.lat, *found));
  CHECK_FALSE(partner_search(b.lat, 60, PartnerMode::Delta).has_value());

  const oracle::Loaded c("DirectProduct(Sym(3),Cyclic(2))");
  CHECK_FALSE(partner_search(c.lat, 60, PartnerMode::Delta).has_value());
  CHECK_FALSE(partner_search(c.lat, 60, PartnerMode::M).has_value());
}

TEST_CASE("subgroup counts of elementary abelian products") {
  const std::vector<std::pair<std::vector<std::pair<long long, int>>, const char *>> cases{
      {{{2, 1}}, "Cyclic(2)"},
      {{{3, 2}}, "ElemAbelian(3,2)"},
      {{{2, 3}}, "ElemAbelian(2,3)"},
      {{{2, 4}}, "ElemAbelian(2,4)"},
      {{{2, 2}, {3, 1}}, "DirectProduct(ElemAbelian(2,2),Cyclic(3))"},
      {{{2, 1}, {3, 1}, {5, 1}}, "Cyclic(30)"}};
  for (const auto &[primes, spec] : cases) {
    CAPTURE(spec);
    CHECK(elementary_abelian_subgroup_count(primes) == enumerate_subgroups(build(spec)).size());
  }
}

}
