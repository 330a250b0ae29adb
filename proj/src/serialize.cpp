#include "joinlat/serialize.hpp"

#include <limits>
#include <sstream>

#include "joinlat/errors.hpp"

namespace joinlat {

namespace {

SubgroupEntry entry(const SubgroupLattice &lat, SubgroupId id) {
  return {id, lat.order(id), lat.generators(id)};
}

std::int64_t narrow(Integer v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ResourceError("Moebius value " + to_string(v) + " does not fit in a JSON integer");
  return static_cast<std::int64_t>(v);
}

} // namespace

LatticeRecord make_lattice_record(const SubgroupLattice &lat, const MILattice &mi) {
  LatticeRecord r;
  r.order = lat.group().order();
  for (SubgroupId id = 0; id < lat.size(); ++id) {
    r.subgroups.push_back(entry(lat, id));
    lat.above(id).for_each([&](std::size_t b) {
      if (b != id) r.leq.emplace_back(id, b);
    });
  }
  r.maximal = lat.maximal_ids();
  r.frattini = lat.frattini_id();
  r.mi_members = mi.member_ids();
  return r;
}

DeltaRecord make_delta_record(const SubgroupLattice &lat, const JoinGraph &delta) {
  DeltaRecord r;
  r.order = lat.group().order();
  for (SubgroupId id = 0; id < delta.vertex_count(); ++id) r.subgroups.push_back(entry(lat, id));
  r.edges = delta.edges();
  return r;
}

MoebiusRecord make_moebius_record(const MoebiusTable &table, const std::string &method) {
  MoebiusRecord r;
  r.method = method;
  r.mu_bottom = narrow(table[0]);
  for (std::size_t id = 0; id < table.values.size(); ++id) r.table[id] = narrow(table.values[id]);
  return r;
}

ClassificationRecord make_classification_record(const Classification &c) {
  ClassificationRecord r;
  r.soluble = c.soluble;
  r.nilpotent = c.nilpotent;
  r.supersoluble = c.supersoluble;
  r.frattini_free = c.frattini_free;
  r.pgroup_signature = c.pgroup_signature;
  for (const auto &f : c.coprime_factors) r.coprime_factors.emplace_back(f.id, to_string(f.kind));
  r.in_D = c.in_D;
  r.in_M = c.in_M;
  r.partner_spec = c.partner_spec;
  return r;
}

void to_json(Json &j, const SubgroupEntry &r) {
  j = Json{{"id", r.id}, {"order", r.order}, {"generators", r.generators}};
}

void from_json(const Json &j, SubgroupEntry &r) {
  j.at("id").get_to(r.id);
  j.at("order").get_to(r.order);
  j.at("generators").get_to(r.generators);
}

void to_json(Json &j, const LatticeRecord &r) {
  j = Json{{"order", r.order},       {"subgroups", r.subgroups}, {"leq", r.leq},
           {"maximal", r.maximal},   {"frattini", r.frattini},   {"mi_members", r.mi_members}};
}

void from_json(const Json &j, LatticeRecord &r) {
  j.at("order").get_to(r.order);
  j.at("subgroups").get_to(r.subgroups);
  j.at("leq").get_to(r.leq);
  j.at("maximal").get_to(r.maximal);
  j.at("frattini").get_to(r.frattini);
  j.at("mi_members").get_to(r.mi_members);
}

void to_json(Json &j, const DeltaRecord &r) {
  j = Json{{"order", r.order}, {"subgroups", r.subgroups}, {"edges", r.edges}};
}

void from_json(const Json &j, DeltaRecord &r) {
  j.at("order").get_to(r.order);
  j.at("subgroups").get_to(r.subgroups);
  j.at("edges").get_to(r.edges);
}

void to_json(Json &j, const MoebiusRecord &r) {
  Json table = Json::object();
  for (const auto &[id, mu] : r.table) table[std::to_string(id)] = mu;
  j = Json{{"mu_bottom", r.mu_bottom}, {"method", r.method}, {"table", table}};
}

void from_json(const Json &j, MoebiusRecord &r) {
  j.at("mu_bottom").get_to(r.mu_bottom);
  j.at("method").get_to(r.method);
  r.table.clear();
  for (const auto &[key, value] : j.at("table").items())
    r.table[std::stoull(key)] = value.get<std::int64_t>();
}

void to_json(Json &j, const ClassificationRecord &r) {
  j = Json{{"soluble", r.soluble},
           {"nilpotent", r.nilpotent},
           {"supersoluble", r.supersoluble},
           {"frattini_free", r.frattini_free}};
  if (r.pgroup_signature) {
    Json sig{{"p", r.pgroup_signature->p}, {"n", r.pgroup_signature->n}};
    sig["q"] = r.pgroup_signature->q ? Json(*r.pgroup_signature->q) : Json(nullptr);
    j["pgroup_signature"] = sig;
  } else {
    j["pgroup_signature"] = nullptr;
  }
  Json factors = Json::array();
  for (const auto &[id, kind] : r.coprime_factors) factors.push_back({{"id", id}, {"kind", kind}});
  j["coprime_factors"] = factors;
  j["in_D"] = r.in_D ? Json(*r.in_D) : Json(nullptr);
  j["in_M"] = r.in_M ? Json(*r.in_M) : Json(nullptr);
  j["partner_spec"] = r.partner_spec ? Json(*r.partner_spec) : Json(nullptr);
}

void from_json(const Json &j, ClassificationRecord &r) {
  j.at("soluble").get_to(r.soluble);
  j.at("nilpotent").get_to(r.nilpotent);
  j.at("supersoluble").get_to(r.supersoluble);
  j.at("frattini_free").get_to(r.frattini_free);
  r.pgroup_signature.reset();
  if (const auto &sig = j.at("pgroup_signature"); !sig.is_null()) {
    PGroupSignature s;
    sig.at("p").get_to(s.p);
    sig.at("n").get_to(s.n);
    if (!sig.at("q").is_null()) s.q = sig.at("q").get<long long>();
    r.pgroup_signature = s;
  }
  r.coprime_factors.clear();
  for (const auto &f : j.at("coprime_factors"))
    r.coprime_factors.emplace_back(f.at("id").get<std::size_t>(), f.at("kind").get<std::string>());
  auto optional_bool = [&](const char *key) -> std::optional<bool> {
    if (j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<bool>();
  };
  r.in_D = optional_bool("in_D");
  r.in_M = optional_bool("in_M");
  r.partner_spec.reset();
  if (!j.at("partner_spec").is_null()) r.partner_spec = j.at("partner_spec").get<std::string>();
}

std::string delta_to_dot(const SubgroupLattice &lat, const JoinGraph &delta) {
  std::ostringstream out;
  out << "graph Delta {\n";
  for (std::size_t v = 0; v < delta.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << v << ':' << lat.order(v) << "\"];\n";
  for (const auto &[a, b] : delta.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace joinlat
