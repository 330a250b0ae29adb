#include "joinlat/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "joinlat/classify.hpp"
#include "joinlat/config.hpp"
#include "joinlat/errors.hpp"
#include "joinlat/group.hpp"
#include "joinlat/isomorph.hpp"
#include "joinlat/joingraph.hpp"
#include "joinlat/lattice.hpp"
#include "joinlat/moebius.hpp"
#include "joinlat/serialize.hpp"
#include "joinlat/verify.hpp"

namespace joinlat {

namespace {

using nlohmann::json;

/// Built group plus lattice; the lattice points into the group.
struct Loaded {
  std::unique_ptr<FiniteGroup> group;
  std::unique_ptr<SubgroupLattice> lat;
};

Loaded load(const std::string &spec, const Limits &limits) {
  Loaded l;
  l.group = std::make_unique<FiniteGroup>(build(spec, limits));
  l.lat = std::make_unique<SubgroupLattice>(enumerate_subgroups(*l.group, limits));
  return l;
}

json witness_json(const IsoResult &r) {
  if (!r.witness) return nullptr;
  return *r.witness;
}

// Config file keys mirror Limits; unknown keys are rejected.
void apply_config(const std::string &path, Limits &limits) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw InputError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw InputError("config file '" + path + "' must hold a JSON object");
  for (const auto &[key, value] : j.items()) {
    if (!value.is_number_unsigned()) throw InputError("config key '" + key + "' must be a positive integer");
    const auto v = value.get<std::size_t>();
    if (key == "max_order")
      limits.max_order = v;
    else if (key == "subgroup_cap")
      limits.subgroup_cap = v;
    else if (key == "search_budget")
      limits.search_budget = v;
    else
      throw InputError("unknown config key '" + key + "'");
  }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Join graphs, maximal-intersection lattices and Moebius functions of small finite groups",
               "joinlat"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::size_t> order_bound, subgroup_cap, search_budget;
  app.add_option("--config", config_path, "JSON file with max_order, subgroup_cap, search_budget");
  app.add_option("--order-bound", order_bound, "largest group order accepted (default 1000)");
  app.add_option("--subgroup-cap", subgroup_cap, "largest subgroup count accepted (default 20000)");
  app.add_option("--search-budget", search_budget, "isomorphism search node budget (default 1e7)");

  std::string spec, spec2, out_format = "json", method = "both", mode = "both", suite = "paper";
  bool info = false, witness = false, include_648 = false;
  std::size_t max_order = 200;
  double budget = 600.0;
  std::size_t corpus_cap = 1000;

  auto *group = app.add_subcommand("group", "build a group and print it");
  group->add_option("spec", spec, "group spec")->required();
  group->add_flag("--info", info, "summary only: order, degree, generators, structure flags");

  auto *subgroups = app.add_subcommand("subgroups", "subgroup lattice as JSON");
  subgroups->add_option("spec", spec)->required();

  auto *delta = app.add_subcommand("delta", "join graph");
  delta->add_option("spec", spec)->required();
  delta->add_option("--out", out_format)->check(CLI::IsMember({"dot", "json"}));

  auto *mlattice = app.add_subcommand("mlattice", "maximal-intersection lattice M(G)");
  mlattice->add_option("spec", spec)->required();

  auto *reconstruct = app.add_subcommand("reconstruct", "M(G) recovered from the join graph alone");
  reconstruct->add_option("spec", spec)->required();

  auto *moebius = app.add_subcommand("moebius", "Moebius function of the subgroup lattice");
  moebius->add_option("spec", spec)->required();
  moebius->add_option("--method", method)->check(CLI::IsMember({"recursive", "formula", "both"}));

  auto *classify_cmd = app.add_subcommand("classify", "structural classification as JSON");
  classify_cmd->add_option("spec", spec)->required();

  auto *partner = app.add_subcommand("partner", "search nilpotent partners by brute force");
  partner->add_option("spec", spec)->required();
  partner->add_option("--max-order", max_order, "largest candidate order");
  partner->add_option("--mode", mode)->check(CLI::IsMember({"delta", "m", "both"}));

  auto *compare_delta = app.add_subcommand("compare-delta", "are the join graphs isomorphic");
  auto *compare_m = app.add_subcommand("compare-m", "are the M lattices isomorphic");
  for (auto *cmd : {compare_delta, compare_m}) {
    cmd->add_option("spec1", spec)->required();
    cmd->add_option("spec2", spec2)->required();
    cmd->add_flag("--witness", witness, "print the bijection");
  }

  auto *verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"paper"}));
  verify->add_option("--max-order", max_order, "corpus order bound");
  verify->add_flag("--include-648", include_648, "also check the order 648 example");
  verify->add_option("--budget", budget, "seconds allowed per check");
  verify->add_option("--corpus-cap", corpus_cap, "skip corpus groups with more subgroups");

  std::vector<std::string> argv_store{"joinlat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success &e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Limits limits;
    if (!config_path.empty()) apply_config(config_path, limits);
    const Limits env = Limits::from_env();
    if (env.max_order != Limits{}.max_order) limits.max_order = env.max_order;
    if (order_bound) limits.max_order = *order_bound;
    if (subgroup_cap) limits.subgroup_cap = *subgroup_cap;
    if (search_budget) limits.search_budget = *search_budget;

    if (*group) {
      const auto g = build(spec, limits);
      json j{{"spec", parse_spec(spec).to_string()}, {"order", g.order()}, {"degree", g.degree()}};
      json gens = json::array();
      for (Elem x : g.generators()) gens.push_back(g.element(x).images());
      j["generators"] = gens;
      if (info) {
        j["abelian"] = g.is_abelian();
        j["soluble"] = is_soluble(g);
        j["nilpotent"] = is_nilpotent(g);
      } else {
        json elems = json::array();
        for (const auto &p : g.elements()) elems.push_back(p.images());
        j["elements"] = elems;
      }
      out << j.dump(2) << '\n';
      return 0;
    }
    if (*subgroups) {
      const auto l = load(spec, limits);
      out << json(make_lattice_record(*l.lat, mi_lattice(*l.lat))).dump(2) << '\n';
      return 0;
    }
    if (*delta) {
      const auto l = load(spec, limits);
      const auto d = build_delta(*l.lat);
      if (out_format == "dot")
        out << delta_to_dot(*l.lat, d);
      else
        out << json(make_delta_record(*l.lat, d)).dump(2) << '\n';
      return 0;
    }
    if (*mlattice) {
      const auto l = load(spec, limits);
      const auto mi = mi_lattice(*l.lat);
      const auto &ids = mi.member_ids();
      json leq = json::array(), meet = json::array(), join = json::array();
      for (SubgroupId a : ids) {
        json meet_row = json::array(), join_row = json::array();
        for (SubgroupId b : ids) {
          if (a != b && l.lat->leq(a, b)) leq.push_back({a, b});
          meet_row.push_back(mi.meet(a, b));
          join_row.push_back(mi.join(a, b));
        }
        meet.push_back(meet_row);
        join.push_back(join_row);
      }
      json orders = json::array();
      for (SubgroupId a : ids) orders.push_back(l.lat->order(a));
      out << json{{"members", ids}, {"orders", orders},          {"leq", leq},   {"bottom", mi.bottom_id()},
                  {"top", mi.top_id()}, {"meet", meet}, {"join", join}}
                 .dump(2)
          << '\n';
      return 0;
    }
    if (*reconstruct) {
      const auto l = load(spec, limits);
      const auto r = reconstruct_mi(build_delta(*l.lat));
      json leq = json::array();
      for (std::size_t a = 0; a < r.order.size(); ++a)
        r.order.above[a].for_each([&](std::size_t b) {
          if (a != b) leq.push_back({a, b});
        });
      const auto mi = mi_lattice(*l.lat);
      const bool matches = poset_iso(r.order, mi.as_poset(*l.lat), limits.search_budget).isomorphic;
      out << json{{"classes", r.classes}, {"top", r.top()}, {"leq", leq}, {"isomorphic_to_M", matches}}.dump(2)
          << '\n';
      return 0;
    }
    if (*moebius) {
      const auto l = load(spec, limits);
      const auto table = moebius_table(*l.lat);
      if (method == "recursive") {
        out << json(make_moebius_record(table, "recursive")).dump(2) << '\n';
        return 0;
      }
      if (!is_soluble(*l.group))
        throw InputError("group '" + spec + "' is not soluble; the product formula does not apply");
      const Integer formula = moe_formula(*l.lat);
      if (method == "formula") {
        MoebiusRecord r;
        r.method = "formula";
        r.mu_bottom = make_moebius_record(MoebiusTable{{formula}}, "formula").mu_bottom;
        r.table[l.lat->bottom_id()] = r.mu_bottom;
        out << json(r).dump(2) << '\n';
        return 0;
      }
      json j = make_moebius_record(table, "both");
      j["recursive"] = j["mu_bottom"];
      j["formula"] = make_moebius_record(MoebiusTable{{formula}}, "formula").mu_bottom;
      j["agree"] = formula == table[l.lat->bottom_id()];
      out << j.dump(2) << '\n';
      return 0;
    }
    if (*classify_cmd) {
      const auto l = load(spec, limits);
      out << json(make_classification_record(classify(*l.lat))).dump(2) << '\n';
      return 0;
    }
    if (*partner) {
      const auto l = load(spec, limits);
      json j{{"spec", parse_spec(spec).to_string()}, {"max_order", max_order}};
      for (const auto &[name, m] : {std::pair{"delta", PartnerMode::Delta}, std::pair{"m", PartnerMode::M}}) {
        if (mode != "both" && mode != name) continue;
        const auto found = partner_search(*l.lat, max_order, m, limits);
        j[name] = found ? json(*found) : json(nullptr);
      }
      out << j.dump(2) << '\n';
      return 0;
    }
    if (*compare_delta || *compare_m) {
      const auto a = load(spec, limits);
      const auto b = load(spec2, limits);
      IsoResult r;
      if (*compare_delta) {
        r = graph_iso(build_delta(*a.lat), build_delta(*b.lat), limits.search_budget);
      } else {
        const auto ma = mi_lattice(*a.lat), mb = mi_lattice(*b.lat);
        r = poset_iso(ma.as_poset(*a.lat), mb.as_poset(*b.lat), limits.search_budget);
        // Report the bijection on subgroup ids rather than member positions.
        if (r.witness) {
          std::vector<std::size_t> ids(r.witness->size());
          for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = mb.member_ids()[(*r.witness)[i]];
          json w = json::object();
          for (std::size_t i = 0; i < ids.size(); ++i) w[std::to_string(ma.member_ids()[i])] = ids[i];
          json j{{"isomorphic", r.isomorphic}};
          if (witness) j["witness"] = w;
          out << j.dump(2) << '\n';
          return 0;
        }
      }
      json j{{"isomorphic", r.isomorphic}};
      if (witness) j["witness"] = witness_json(r);
      out << j.dump(2) << '\n';
      return r.isomorphic ? 0 : 1;
    }
    if (*verify) {
      VerifyOptions options;
      options.max_order = max_order;
      options.include_648 = include_648;
      options.budget_seconds = budget;
      options.corpus_subgroup_cap = corpus_cap;
      options.limits = limits;
      const auto report = verify_suite(options);
      out << json(report).dump(2) << '\n';
      return report.exit_code();
    }
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError &e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

} // namespace joinlat
