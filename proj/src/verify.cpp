#include "joinlat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "joinlat/classify.hpp"
#include "joinlat/errors.hpp"
#include "joinlat/group.hpp"
#include "joinlat/isomorph.hpp"
#include "joinlat/joingraph.hpp"
#include "joinlat/lattice.hpp"
#include "joinlat/moebius.hpp"

namespace joinlat {

std::string to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass: return "pass";
  case CheckStatus::Fail: return "fail";
  case CheckStatus::Skipped: return "skipped";
  }
  return "skipped";
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord &c) { return c.status == s; }));
}

void to_json(nlohmann::json &j, const VerificationReport &r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &c : r.checks)
    checks.push_back({{"id", c.id},
                      {"paper_ref", c.paper_ref},
                      {"status", to_string(c.status)},
                      {"elapsed", c.elapsed},
                      {"detail", c.detail}});
  j = {{"suite", r.suite},
       {"checks", checks},
       {"summary",
        {{"pass", r.count(CheckStatus::Pass)},
         {"fail", r.count(CheckStatus::Fail)},
         {"skipped", r.count(CheckStatus::Skipped)}}}};
}

namespace {

const std::vector<long long> kPrimes{2, 3, 5, 7, 11, 13};

bool smooth(long long n) {
  for (const auto &[p, e] : factorize(n))
    if (p > 13) return false;
  return true;
}

long long ipow(long long b, long long e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

} // namespace

std::vector<std::string> default_corpus(std::size_t max_order) {
  const auto bound = static_cast<long long>(max_order);
  std::vector<std::pair<std::string, long long>> specs;
  auto add = [&](const std::string &s, long long order) {
    if (order >= 2 && order <= bound) specs.emplace_back(s, order);
  };
  auto call = [](const std::string &name, std::initializer_list<long long> args) {
    std::string s = name + "(";
    bool first = true;
    for (long long a : args) {
      if (!first) s += ',';
      s += std::to_string(a);
      first = false;
    }
    return s + ")";
  };

  for (long long n = 2; n <= bound; ++n)
    if (smooth(n)) add(call("Cyclic", {n}), n);
  for (long long p : kPrimes)
    for (long long k = 2; ipow(p, k) <= bound; ++k) add(call("ElemAbelian", {p, k}), ipow(p, k));
  for (long long n = 3; 2 * n <= bound; ++n)
    if (smooth(n)) add(call("Dihedral", {2 * n}), 2 * n);
  add("Sym(3)", 6);
  add("Sym(4)", 24);
  add("Sym(5)", 120);
  add("Alt(4)", 12);
  add("Alt(5)", 60);
  for (long long p : kPrimes)
    for (long long q : kPrimes)
      if (q != p && (p - 1) % q == 0)
        for (long long n = 1; ipow(p, n) * q <= bound; ++n) add(call("PGroup", {p, n, q}), ipow(p, n) * q);

  // Pairs from a list of small building blocks.
  std::vector<std::pair<std::string, long long>> blocks{{"Sym(3)", 6}, {"Alt(4)", 12}};
  for (long long p : kPrimes) {
    for (long long a = 1; ipow(p, a) <= bound / 2; ++a) blocks.emplace_back(call("Cyclic", {ipow(p, a)}), ipow(p, a));
    if (p * p <= bound / 2) blocks.emplace_back(call("ElemAbelian", {p, 2}), p * p);
    if (p > 2 && 2 * p <= bound / 2) blocks.emplace_back(call("Dihedral", {2 * p}), 2 * p);
    for (long long q : kPrimes)
      if (q != p && (p - 1) % q == 0 && p * q <= bound / 2)
        blocks.emplace_back(call("PGroup", {p, 1, q}), p * q);
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i; j < blocks.size(); ++j)
      if (blocks[i].second * blocks[j].second <= bound)
        add("DirectProduct(" + blocks[i].first + "," + blocks[j].first + ")",
            blocks[i].second * blocks[j].second);

  std::vector<std::string> out;
  for (const auto &[s, order] : specs) out.push_back(parse_spec(s).to_string());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point start = Clock::now();
  double limit = 0.0;

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
  bool expired() const { return elapsed() > limit; }
};

struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

Outcome pass(std::string detail) { return {CheckStatus::Pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {CheckStatus::Fail, std::move(detail)}; }
Outcome skipped(std::string detail) { return {CheckStatus::Skipped, std::move(detail)}; }
Outcome overrun(const Deadline &d) {
  std::ostringstream s;
  s << "time budget of " << d.limit << " s exhausted";
  return skipped(s.str());
}

/// One built group with everything the corpus-wide checks share.
struct Prepared {
  std::string spec;
  std::unique_ptr<FiniteGroup> group;
  std::unique_ptr<SubgroupLattice> lat;
  std::unique_ptr<MILattice> mi;
  JoinGraph delta;
  bool soluble = false;
  bool nilpotent = false;
  bool frattini_free = false;
  std::optional<Membership> d_member;
  std::optional<Membership> m_member;

  std::size_t order() const { return group->order(); }
};

Prepared prepare(const std::string &spec, const Limits &limits) {
  Prepared p;
  p.spec = spec;
  p.group = std::make_unique<FiniteGroup>(build(spec, limits));
  p.lat = std::make_unique<SubgroupLattice>(enumerate_subgroups(*p.group, limits));
  p.mi = std::make_unique<MILattice>(mi_lattice(*p.lat));
  p.delta = build_delta(*p.lat);
  p.soluble = is_soluble(*p.group);
  p.nilpotent = is_nilpotent(*p.group);
  p.frattini_free = p.lat->frattini_id() == p.lat->bottom_id();
  if (p.frattini_free) {
    p.d_member = in_D(*p.lat);
    p.m_member = in_M(*p.lat);
  }
  return p;
}

/// Closed form for a Frattini-free nilpotent group, the product of
/// C_p^m over the primes dividing its order.
Integer monil_value(const FiniteGroup &g) {
  Integer mu = 1;
  for (const auto &[p, m] : factorize(static_cast<long long>(g.order()))) {
    if (m % 2) mu = -mu;
    mu = checked_mul(mu, checked_pow(p, static_cast<std::size_t>(m) * (m - 1) / 2));
  }
  return mu;
}

class Suite {
public:
  explicit Suite(const VerifyOptions &options) : options_(options) { report_.suite = "paper"; }

  VerificationReport run();

private:
  void check(const std::string &id, const std::string &ref, double fixed_limit,
             const std::function<Outcome(const Deadline &)> &body);
  Outcome build_corpus(const Deadline &d);
  const Prepared &named(const std::string &spec);

  Outcome dihedral_pairing(const Deadline &d);
  Outcome intro_example(const Deadline &d);
  Outcome reconstruction(const Deadline &d);
  Outcome neighbourhood_tilde(const Deadline &d);
  Outcome moebius_formula(const Deadline &d);
  Outcome hall_vanishing(const Deadline &d);
  Outcome normal_members(const Deadline &d);
  Outcome coprime_products(const Deadline &d);
  Outcome classification_positives(const Deadline &d);
  Outcome classification_negative(const Deadline &d);
  Outcome supersoluble(const Deadline &d);
  Outcome small_families(const Deadline &d);
  Outcome counterexample_648(const Deadline &d);
  Outcome uniform_families(const Deadline &d);
  Outcome d_partners(const Deadline &d);
  Outcome m_partners(const Deadline &d);

  /// Verified M-partner of a corpus group, built on demand.
  bool m_partner_verified(const Prepared &p);

  const VerifyOptions &options_;
  VerificationReport report_;
  std::vector<Prepared> corpus_;
  std::vector<std::unique_ptr<Prepared>> named_;
  std::vector<std::pair<std::string, std::optional<bool>>> m_partner_cache_;
  bool empty_ = true;
};

void Suite::check(const std::string &id, const std::string &ref, double fixed_limit,
                  const std::function<Outcome(const Deadline &)> &body) {
  Deadline d;
  d.limit = std::min(fixed_limit, options_.budget_seconds);
  CheckRecord rec{id, ref, CheckStatus::Skipped, 0.0, {}};
  if (empty_ && id != "corpus") {
    rec.detail = "empty corpus";
    report_.checks.push_back(rec);
    return;
  }
  Outcome out;
  try {
    out = body(d);
  } catch (const ResourceError &e) {
    out = skipped(std::string("resource limit: ") + e.what());
  } catch (const std::exception &e) {
    out = fail(std::string("error: ") + e.what());
  }
  rec.elapsed = d.elapsed();
  if (out.status == CheckStatus::Pass && d.expired()) out = overrun(d);
  rec.status = out.status;
  rec.detail = out.detail;
  report_.checks.push_back(rec);
}

const Prepared &Suite::named(const std::string &spec) {
  for (const auto &p : named_)
    if (p->spec == spec) return *p;
  Limits limits = options_.limits;
  limits.max_order = std::max<std::size_t>(limits.max_order, 1000);
  named_.push_back(std::make_unique<Prepared>(prepare(spec, limits)));
  return *named_.back();
}

Outcome Suite::build_corpus(const Deadline &d) {
  Limits limits = options_.limits;
  limits.subgroup_cap = std::min(limits.subgroup_cap, options_.corpus_subgroup_cap);
  std::vector<std::string> excluded;
  for (const auto &spec : default_corpus(options_.max_order)) {
    if (d.expired()) return overrun(d);
    try {
      corpus_.push_back(prepare(spec, limits));
    } catch (const ResourceError &) {
      excluded.push_back(spec);
    }
  }
  empty_ = corpus_.empty();
  std::ostringstream s;
  s << corpus_.size() << " groups of order <= " << options_.max_order;
  if (!excluded.empty()) {
    s << "; excluded (more than " << limits.subgroup_cap << " subgroups):";
    for (const auto &e : excluded) s << ' ' << e;
  }
  if (empty_) return skipped(s.str());
  return pass(s.str());
}

Outcome Suite::dihedral_pairing(const Deadline &d) {
  std::ostringstream s;
  bool ok = true;
  for (long long p : {3, 5, 7}) {
    const auto start = Clock::now();
    const auto &a = named("ElemAbelian(" + std::to_string(p) + ",2)");
    const auto &b = named("Dihedral(" + std::to_string(2 * p) + ")");
    const auto graphs = graph_iso(a.delta, b.delta);
    const auto lattices = poset_iso(a.lat->as_poset(), b.lat->as_poset());
    const double t = std::chrono::duration<double>(Clock::now() - start).count();
    const bool good = graphs.isomorphic && lattices.isomorphic &&
                      replay_graph_witness(a.delta, b.delta, *graphs.witness) &&
                      replay_poset_witness(a.lat->as_poset(), b.lat->as_poset(), *lattices.witness) &&
                      t < 1.0;
    s << "p=" << p << ": delta " << graphs.isomorphic << ", lattice " << lattices.isomorphic << ", "
      << t << " s; ";
    ok = ok && good;
    if (d.expired()) return overrun(d);
  }
  return ok ? pass(s.str()) : fail(s.str());
}

Outcome Suite::intro_example(const Deadline &) {
  const auto &g1 = named("DirectProduct(ElemAbelian(3,2),Cyclic(2))");
  const auto &g2 = named("DirectProduct(Sym(3),Cyclic(3))");
  const bool m_iso = poset_iso(g1.mi->as_poset(*g1.lat), g2.mi->as_poset(*g2.lat)).isomorphic;
  const bool d_iso = graph_iso(g1.delta, g2.delta).isomorphic;
  const long long diff = static_cast<long long>(g2.delta.vertex_count()) -
                         static_cast<long long>(g1.delta.vertex_count());

  // In Sym(3) x C3 the points 0..2 carry Sym(3) and 3..5 carry C3.
  const auto &g = *g2.group;
  auto perm = [&](std::vector<Point> images) { return g.index_of(Permutation(std::move(images))); };
  const Elem cy = perm({1, 2, 0, 4, 5, 3});
  const Elem cy2 = perm({1, 2, 0, 5, 3, 4});
  std::set<SubgroupId> expected{g2.lat->id_of(g.generated_subgroup({cy})),
                                g2.lat->id_of(g.generated_subgroup({cy2}))};
  std::set<SubgroupId> outside;
  for (SubgroupId id = 0; id < g2.lat->top_id(); ++id)
    if (!g2.mi->contains(id)) outside.insert(id);

  std::ostringstream s;
  s << "M isomorphic " << m_iso << ", Delta isomorphic " << d_iso << ", vertices "
    << g1.delta.vertex_count() << " vs " << g2.delta.vertex_count() << " (all subgroups "
    << g1.lat->size() << " vs " << g2.lat->size() << "), " << outside.size()
    << " proper subgroups outside M";
  const bool ok = m_iso && !d_iso && diff == 2 && outside == expected;
  return ok ? pass(s.str()) : fail(s.str());
}

Outcome Suite::reconstruction(const Deadline &d) {
  std::size_t checked = 0;
  for (const auto &p : corpus_) {
    if (d.expired()) return overrun(d);
    const auto rec = reconstruct_mi(p.delta);
    if (!poset_iso(rec.order, p.mi->as_poset(*p.lat), options_.limits.search_budget).isomorphic)
      return fail("reconstruction differs from M(G) for " + p.spec);
    ++checked;
  }
  return pass(std::to_string(checked) + " groups");
}

Outcome Suite::neighbourhood_tilde(const Deadline &d) {
  std::size_t pairs = 0;
  for (const auto &p : corpus_) {
    if (d.expired()) return overrun(d);
    const auto &lat = *p.lat;
    const std::size_t n = p.delta.vertex_count();
    std::vector<SubgroupId> t(n);
    for (std::size_t x = 0; x < n; ++x) t[x] = tilde(lat, x);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const bool by_graph = neighborhood(p.delta, x).is_subset_of(neighborhood(p.delta, y));
        if (by_graph != lat.leq(t[x], t[y]))
          return fail(p.spec + ": subgroups " + std::to_string(x) + ", " + std::to_string(y));
        ++pairs;
      }
  }
  return pass(std::to_string(pairs) + " ordered pairs");
}

Outcome Suite::moebius_formula(const Deadline &d) {
  std::size_t soluble = 0, monil = 0;
  for (const auto &p : corpus_) {
    if (d.expired()) return overrun(d);
    const Integer mu = moebius_table(*p.lat)[p.lat->bottom_id()];
    if (p.soluble) {
      const Integer formula = moe_formula(*p.lat);
      if (formula != mu)
        return fail(p.spec + ": formula " + to_string(formula) + ", recursion " + to_string(mu));
      ++soluble;
    }
    if (p.nilpotent && p.frattini_free) {
      if (monil_value(*p.group) != mu)
        return fail(p.spec + ": closed form " + to_string(monil_value(*p.group)) + ", recursion " +
                    to_string(mu));
      ++monil;
    }
  }
  return pass(std::to_string(soluble) + " soluble groups, " + std::to_string(monil) +
              " Frattini-free nilpotent groups");
}

Outcome Suite::hall_vanishing(const Deadline &d) {
  std::size_t subgroups = 0;
  for (const auto &p : corpus_) {
    if (d.expired()) return overrun(d);
    const auto bad = hall_vanishing_check(*p.lat, *p.mi, moebius_table(*p.lat));
    if (!bad.empty()) return fail(p.spec + ": mu nonzero on subgroup " + std::to_string(bad.front()));
    subgroups += p.lat->size() - p.mi->size();
  }
  return pass(std::to_string(subgroups) + " subgroups outside M(G), all with mu = 0");
}

bool Suite::m_partner_verified(const Prepared &p) {
  for (const auto &[spec, ok] : m_partner_cache_)
    if (spec == p.spec) return ok.value_or(false);
  bool ok = false;
  if (p.m_member && p.m_member->member) {
    Limits limits = options_.limits;
    limits.max_order = std::max<std::size_t>(limits.max_order, 5000);
    const auto partner = build(*p.m_member->partner_spec, limits);
    const auto plat = enumerate_subgroups(partner, limits);
    const auto pmi = mi_lattice(plat);
    ok = is_nilpotent(partner) &&
         poset_iso(p.mi->as_poset(*p.lat), pmi.as_poset(plat), limits.search_budget).isomorphic;
  }
  m_partner_cache_.emplace_back(p.spec, ok);
  return ok;
}

Outcome Suite::normal_members(const Deadline &d) {
  std::size_t groups = 0;
  for (const auto &p : corpus_) {
    if (d.expired()) return overrun(d);
    if (!p.frattini_free || !m_partner_verified(p)) continue;
    const auto bad = normal_mi_check(*p.lat, *p.mi, moebius_table(*p.lat));
    if (!bad.empty()) return fail(p.spec + ": normal subgroup " + std::to_string(bad.front()));
    ++groups;
  }
  return pass(std::to_string(groups) + " groups with a verified nilpotent M-partner");
}

Outcome Suite::coprime_products(const Deadline &d) {
  // Pairs of small corpus groups of coprime order whose product fits.
  std::vector<const Prepared *> small;
  for (const auto &p : corpus_)
    if (p.spec.rfind("DirectProduct", 0) != 0 && p.order() <= 30) small.push_back(&p);
  std::size_t pairs = 0;
  std::ostringstream s;
  for (std::size_t i = 0; i < small.size() && pairs < 24; ++i)
    for (std::size_t j = i + 1; j < small.size() && pairs < 24; ++j) {
      const auto &a = *small[i];
      const auto &b = *small[j];
      if (std::gcd(a.order(), b.order()) != 1 || a.order() * b.order() > options_.max_order) continue;
      if (d.expired()) return overrun(d);
      const auto &prod = named("DirectProduct(" + a.spec + "," + b.spec + ")");
      const auto expected = poset_product(a.mi->as_poset(*a.lat), b.mi->as_poset(*b.lat));
      if (!poset_iso(prod.mi->as_poset(*prod.lat), expected, options_.limits.search_budget).isomorphic)
        return fail("M of " + prod.spec + " is not the product of the factors' M");
      ++pairs;
    }
  if (pairs < 10) return skipped("only " + std::to_string(pairs) + " coprime pairs fit the order bound");
  return pass(std::to_string(pairs) + " coprime pairs");
}

Outcome Suite::classification_positives(const Deadline &) {
  std::ostringstream s;
  bool ok = true;
  auto verify_m = [&](const std::string &spec, const std::string &expected_partner) {
    const auto &g = named(spec);
    const auto m = in_M(*g.lat);
    const auto &partner = named(expected_partner);
    const bool iso = m.member && m.partner_spec &&
                     poset_iso(g.mi->as_poset(*g.lat), partner.mi->as_poset(*partner.lat)).isomorphic;
    const auto &built = named(m.partner_spec.value_or(expected_partner));
    const bool same = graph_iso(built.delta, partner.delta).isomorphic &&
                      built.order() == partner.order();
    s << spec << ": in_M " << m.member << ", partner " << m.partner_spec.value_or("-") << ", M-iso " << iso
      << "; ";
    ok = ok && iso && same;
  };
  verify_m("DirectProduct(Sym(3),Cyclic(3))", "DirectProduct(ElemAbelian(3,2),Cyclic(2))");
  verify_m("DirectProduct(PGroup(7,1,3),Sym(3))", "DirectProduct(ElemAbelian(7,2),ElemAbelian(3,2))");

  const auto &g = named("DirectProduct(Dihedral(10),Cyclic(3))");
  const auto dm = in_D(*g.lat);
  const auto &partner = named("DirectProduct(ElemAbelian(5,2),Cyclic(3))");
  bool iso = false;
  if (dm.member && dm.partner_spec) {
    const auto &built = named(*dm.partner_spec);
    iso = graph_iso(g.delta, built.delta).isomorphic && graph_iso(g.delta, partner.delta).isomorphic;
  }
  s << g.spec << ": in_D " << dm.member << ", partner " << dm.partner_spec.value_or("-") << ", Delta-iso "
    << iso;
  ok = ok && iso;
  return ok ? pass(s.str()) : fail(s.str());
}

Outcome Suite::classification_negative(const Deadline &) {
  const auto &g = named("DirectProduct(Sym(3),Cyclic(2))");
  const auto by_delta = partner_search(*g.lat, 200, PartnerMode::Delta, options_.limits);
  const auto by_m = partner_search(*g.lat, 200, PartnerMode::M, options_.limits);
  const std::string detail = "Delta partner " + by_delta.value_or("absent") + ", M partner " +
                             by_m.value_or("absent");
  return !by_delta && !by_m ? pass(detail) : fail(detail);
}

Outcome Suite::supersoluble(const Deadline &d) {
  std::size_t groups = 0;
  for (const auto &p : corpus_) {
    if (d.expired()) return overrun(d);
    if (!p.frattini_free || !p.m_member->member) continue;
    if (!is_supersoluble(*p.lat)) return fail(p.spec + " is in M-class but not supersoluble");
    ++groups;
  }
  return pass(std::to_string(groups) + " Frattini-free groups with a nilpotent M-partner");
}

Outcome Suite::small_families(const Deadline &d) {
  std::ostringstream s;
  bool ok = true;
  for (const char *spec : {"Alt(5)", "Sym(5)", "Alt(6)"}) {
    if (d.expired()) return overrun(d);
    const auto &g = named(spec);
    const auto rep = min_trivial_intersection_family(*g.lat, 0);
    s << spec << ": " << rep.min_size << "; ";
    ok = ok && rep.min_size >= 1 && rep.min_size <= 5;
  }
  return ok ? pass(s.str()) : fail(s.str());
}

Outcome Suite::counterexample_648(const Deadline &) {
  if (!options_.include_648) return skipped("opt-in; run with --include-648");
  const auto &p = named("PaperExample648");
  const auto &g = *p.group;
  const auto &lat = *p.lat;
  const auto &mi = *p.mi;

  BitSet h = g.empty_set();
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element(x)(0) == 0) h.set(x);
  // V: the normal subgroup of order 27.
  std::vector<SubgroupId> candidates;
  for (SubgroupId n : normal_subgroups(lat))
    if (lat.order(n) == 27) candidates.push_back(n);
  if (candidates.size() != 1) return fail("expected one normal subgroup of order 27");
  const BitSet &v = lat.elements(candidates.front());
  const SubgroupId h_id = lat.id_of(h), v_id = lat.id_of(v);
  if (h_id == lat.npos || v_id == lat.npos || lat.order(v_id) != 27 || lat.order(h_id) != 24)
    return fail("stabilizer or translation subgroup not found");

  // v = (1,-1,0) is the translation sending point 0 to point 1 + 3*2.
  Elem t = g.identity();
  v.for_each([&](std::size_t x) {
    if (g.element(static_cast<Elem>(x))(0) == 7) t = static_cast<Elem>(x);
  });
  BitSet hv = g.empty_set();
  h.for_each([&](std::size_t x) { hv.set(g.conjugate(static_cast<Elem>(x), t)); });
  const SubgroupId k_id = lat.id_of(h & hv);
  const SubgroupId vk_id = lat.join(v_id, k_id);

  std::ostringstream s;
  s << "|H| = " << lat.order(h_id) << ", |K| = " << lat.order(k_id) << ", K in M " << mi.contains(k_id)
    << ", V in M " << mi.contains(v_id) << ", VK (order " << lat.order(vk_id) << ") in M "
    << mi.contains(vk_id);
  const bool ok = lat.order(k_id) == 2 && mi.contains(k_id) && mi.contains(v_id) && !mi.contains(vk_id) &&
                  lat.order(vk_id) == 54;
  return ok ? pass(s.str()) : fail(s.str());
}

Outcome Suite::uniform_families(const Deadline &d) {
  std::size_t groups = 0;
  for (const auto &p : corpus_) {
    if (d.expired()) return overrun(d);
    if (!p.nilpotent || !p.frattini_free) continue;
    const auto rep = min_trivial_intersection_family(*p.lat, options_.limits.search_budget);
    if (!rep.uniform) return skipped(p.spec + ": family enumeration over budget");
    if (!*rep.uniform) return fail(p.spec + ": inclusion-minimal families of different sizes");
    ++groups;
  }
  return pass(std::to_string(groups) + " Frattini-free nilpotent groups");
}

Outcome Suite::d_partners(const Deadline &d) {
  std::size_t groups = 0;
  for (const auto &p : corpus_) {
    if (d.expired()) return overrun(d);
    if (!p.frattini_free || !p.d_member->member) continue;
    Limits limits = options_.limits;
    limits.max_order = std::max<std::size_t>(limits.max_order, 5000);
    const auto partner = build(*p.d_member->partner_spec, limits);
    const auto plat = enumerate_subgroups(partner, limits);
    if (!is_nilpotent(partner) ||
        !graph_iso(p.delta, build_delta(plat), limits.search_budget).isomorphic)
      return fail(p.spec + ": Delta differs from that of " + *p.d_member->partner_spec);
    ++groups;
  }
  return pass(std::to_string(groups) + " groups");
}

Outcome Suite::m_partners(const Deadline &d) {
  std::size_t groups = 0;
  for (const auto &p : corpus_) {
    if (d.expired()) return overrun(d);
    if (!p.frattini_free || !p.m_member->member) continue;
    if (!m_partner_verified(p)) return fail(p.spec + ": M differs from that of " + *p.m_member->partner_spec);
    ++groups;
  }
  return pass(std::to_string(groups) + " groups");
}

VerificationReport Suite::run() {
  check("corpus", "test corpus", 600.0, [&](const Deadline &d) { return build_corpus(d); });
  check("C01", "subgroup lattices of C_p x C_p and D_2p are isomorphic", 3.0,
        [&](const Deadline &d) { return dihedral_pairing(d); });
  check("C02", "two subgroups of Sym(3) x C3 are not maximal-intersections", 60.0,
        [&](const Deadline &d) { return intro_example(d); });
  check("C03", "M(G) is determined by the join graph", 600.0,
        [&](const Deadline &d) { return reconstruction(d); });
  check("C04", "N(X) <= N(Y) iff tilde X <= tilde Y", 600.0,
        [&](const Deadline &d) { return neighbourhood_tilde(d); });
  check("C05", "product formula for mu_G(1) of soluble groups", 60.0,
        [&](const Deadline &d) { return moebius_formula(d); });
  check("C06", "mu vanishes off the maximal-intersections", 600.0,
        [&](const Deadline &d) { return hall_vanishing(d); });
  check("C07", "normal subgroups above Frat(G) are maximal-intersections with nonzero mu", 600.0,
        [&](const Deadline &d) { return normal_members(d); });
  check("C08", "M of a coprime direct product is the product of the M lattices", 600.0,
        [&](const Deadline &d) { return coprime_products(d); });
  check("C09", "nilpotent partners of Lambda, Lambda* and P-group products", 60.0,
        [&](const Deadline &d) { return classification_positives(d); });
  check("C10", "Sym(3) x C2 has no nilpotent partner", 300.0,
        [&](const Deadline &d) { return classification_negative(d); });
  check("C11", "groups with a nilpotent M-partner are supersoluble", 600.0,
        [&](const Deadline &d) { return supersoluble(d); });
  check("C12", "at most 5 maximal subgroups meet trivially in almost simple groups", 120.0,
        [&](const Deadline &d) { return small_families(d); });
  check("C13", "VK is not a maximal-intersection in the order 648 group", 600.0,
        [&](const Deadline &d) { return counterexample_648(d); });
  check("C14", "minimal trivial-intersection families of maximals have one size", 600.0,
        [&](const Deadline &d) { return uniform_families(d); });
  check("D-partner", "Delta of a D-class group equals that of its nilpotent partner", 600.0,
        [&](const Deadline &d) { return d_partners(d); });
  check("M-partner", "M of an M-class group equals that of its nilpotent partner", 600.0,
        [&](const Deadline &d) { return m_partners(d); });
  return std::move(report_);
}

} // namespace

VerificationReport verify_suite(const VerifyOptions &options) { return Suite(options).run(); }

} // namespace joinlat
