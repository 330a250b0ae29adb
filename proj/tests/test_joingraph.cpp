#include <doctest.h>

#include "joinlat/group.hpp"
#include "joinlat/isomorph.hpp"
#include "joinlat/joingraph.hpp"
#include "joinlat/lattice.hpp"
#include "oracles.hpp"

using namespace joinlat;

namespace {

const char *const kCorpus[] = {"Cyclic(6)", "Cyclic(8)", "Cyclic(30)", "ElemAbelian(2,3)", "ElemAbelian(3,2)",
                               "Dihedral(8)", "Dihedral(10)", "Dihedral(12)", "Sym(3)", "Sym(4)", "Alt(4)",
                               "PGroup(7,1,3)", "PGroup(3,2,2)", "DirectProduct(Sym(3),Cyclic(2))",
                               "DirectProduct(Sym(3),Cyclic(3))", "DirectProduct(ElemAbelian(3,2),Cyclic(2))",
                               "DirectProduct(Dihedral(10),Cyclic(3))", "Alt(5)"};

} // namespace

TEST_SUITE("joingraph") {

TEST_CASE("small join graphs") {
  {
    const oracle::Loaded c6("Cyclic(6)");
    const auto d = build_delta(c6.lat);
    CHECK(d.vertex_count() == 3);
    CHECK(d.edge_count() == 1);
    // The subgroups of order 2 and 3 generate C6.
    CHECK(d.adjacent(1, 2));
  }
  {
    const oracle::Loaded c33("ElemAbelian(3,2)");
    const auto d = build_delta(c33.lat);
    CHECK(d.vertex_count() == 5);
    CHECK(d.edge_count() == 6);
    CHECK(neighborhood(d, 0).none());
  }
  {
    const oracle::Loaded c8("Cyclic(8)");
    const auto d = build_delta(c8.lat);
    CHECK(d.vertex_count() == 3);
    CHECK(d.edge_count() == 0);
  }
  {
    const oracle::Loaded s3("Sym(3)");
    const auto d = build_delta(s3.lat);
    CHECK(d.vertex_count() == 5);
    // Three involutions pairwise, each with C3.
    CHECK(d.edge_count() == 6);
  }
  {
    const oracle::Loaded trivial("Cyclic(1)");
    CHECK(build_delta(trivial.lat).vertex_count() == 0);
  }
}

TEST_CASE("vertex counts of the introductory pair") {
  const oracle::Loaded a("DirectProduct(ElemAbelian(3,2),Cyclic(2))");
  const oracle::Loaded b("DirectProduct(Sym(3),Cyclic(3))");
  const auto da = build_delta(a.lat), db = build_delta(b.lat);
  CHECK(a.lat.size() == 12);
  CHECK(b.lat.size() == 14);
  CHECK(da.vertex_count() == 11);
  CHECK(db.vertex_count() == 13);
  CHECK(db.vertex_count() - da.vertex_count() == 2);
  CHECK_FALSE(graph_iso(da, db).isomorphic);
}

TEST_CASE("adjacency matches closure of the union") {
  for (const char *spec : kCorpus) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    if (x.g.order() > 60) continue;
    const auto d = build_delta(x.lat);
    REQUIRE(d.vertex_count() + 1 == x.lat.size());
    for (std::size_t a = 0; a < d.vertex_count(); ++a) {
      CHECK_FALSE(d.adjacent(a, a));
      for (std::size_t b = a + 1; b < d.vertex_count(); ++b) {
        auto u = oracle::as_set(x.lat.elements(a));
        const auto v = oracle::as_set(x.lat.elements(b));
        u.insert(v.begin(), v.end());
        const bool whole = oracle::closure(x.g, u).size() == x.g.order();
        CHECK(d.adjacent(a, b) == whole);
        CHECK(d.adjacent(b, a) == whole);
      }
    }
  }
}

TEST_CASE("edges and relabeling") {
  const oracle::Loaded x("Sym(4)");
  const auto d = build_delta(x.lat);
  const auto edges = d.edges();
  CHECK(edges.size() == d.edge_count());
  for (const auto &[a, b] : edges) {
    CHECK(a < b);
    CHECK(d.adjacent(a, b));
  }
  std::vector<std::size_t> reverse(d.vertex_count());
  for (std::size_t v = 0; v < reverse.size(); ++v) reverse[v] = reverse.size() - 1 - v;
  const auto r = d.relabeled(reverse);
  CHECK(r.edge_count() == d.edge_count());
  for (const auto &[a, b] : edges) CHECK(r.adjacent(reverse[a], reverse[b]));
  CHECK(replay_graph_witness(d, r, reverse));
}

TEST_CASE("Frattini vertices are isolated") {
  for (const char *spec : {"Cyclic(8)", "Cyclic(12)", "Dihedral(8)", "DirectProduct(Cyclic(4),Cyclic(3))"}) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto d = build_delta(x.lat);
    for (std::size_t v = 0; v < d.vertex_count(); ++v)
      CHECK(neighborhood(d, v).none() == x.lat.leq(v, x.lat.frattini_id()));
  }
}

TEST_CASE("tilde") {
  const oracle::Loaded x("Cyclic(12)");
  for (SubgroupId v = 0; v < x.lat.size(); ++v) {
    BitSet meet = x.g.all_elements();
    for (SubgroupId m : maximal_subgroups(x.lat))
      if (x.lat.leq(v, m)) meet &= x.lat.elements(m);
    CHECK(x.lat.elements(tilde(x.lat, v)) == meet);
  }
}

TEST_CASE("neighbourhood inclusion follows tilde order") {
  for (const char *spec : kCorpus) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto d = build_delta(x.lat);
    for (std::size_t a = 0; a < d.vertex_count(); ++a)
      for (std::size_t b = 0; b < d.vertex_count(); ++b)
        CHECK(neighborhood(d, a).is_subset_of(neighborhood(d, b)) ==
              x.lat.leq(tilde(x.lat, a), tilde(x.lat, b)));
  }
}

TEST_CASE("equivalence classes") {
  const oracle::Loaded c8("Cyclic(8)");
  const auto classes = equivalence_classes(build_delta(c8.lat));
  CHECK(classes == std::vector<std::vector<std::size_t>>{{0, 1, 2}});

  const oracle::Loaded s3("Sym(3)");
  CHECK(equivalence_classes(build_delta(s3.lat)).size() == 5);

  for (const char *spec : kCorpus) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto d = build_delta(x.lat);
    const auto cls = equivalence_classes(d);
    std::size_t total = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      total += cls[i].size();
      if (i) CHECK(cls[i - 1].front() < cls[i].front());
      for (auto v : cls[i]) {
        CHECK(neighborhood(d, v) == neighborhood(d, cls[i].front()));
        CHECK(tilde(x.lat, v) == tilde(x.lat, cls[i].front()));
      }
    }
    CHECK(total == d.vertex_count());
    // One class per proper member of M(G).
    CHECK(cls.size() + 1 == mi_lattice(x.lat).size());
  }
}

TEST_CASE("reconstruction recovers the intersection lattice") {
  const oracle::Loaded c8("Cyclic(8)");
  const auto r8 = reconstruct_mi(build_delta(c8.lat));
  CHECK(r8.classes.size() == 1);
  CHECK(r8.top() == 1);
  CHECK(r8.order.leq(0, 1));

  for (const char *spec : kCorpus) {
    CAPTURE(spec);
    const oracle::Loaded x(spec);
    const auto rec = reconstruct_mi(build_delta(x.lat));
    const auto mi = mi_lattice(x.lat);
    CHECK(rec.order.size() == mi.size());
    CHECK(rec.order.is_partial_order());
    for (std::size_t i = 0; i < rec.order.size(); ++i) CHECK(rec.order.leq(i, rec.top()));
    const auto iso = poset_iso(rec.order, mi.as_poset(x.lat));
    CHECK(iso.isomorphic);
    REQUIRE(iso.witness.has_value());
    CHECK(replay_poset_witness(rec.order, mi.as_poset(x.lat), *iso.witness));
  }
}

TEST_CASE("isomorphic join graphs from the dihedral pairing") {
  for (const char *pair : {"3", "5", "7"}) {
    const std::string p = pair;
    const oracle::Loaded a(("ElemAbelian(" + p + ",2)").c_str());
    const oracle::Loaded b(("Dihedral(" + std::to_string(2 * std::stoi(p)) + ")").c_str());
    const auto da = build_delta(a.lat), db = build_delta(b.lat);
    const auto iso = graph_iso(da, db);
    CHECK(iso.isomorphic);
    REQUIRE(iso.witness.has_value());
    CHECK(replay_graph_witness(da, db, *iso.witness));
  }
}

}
