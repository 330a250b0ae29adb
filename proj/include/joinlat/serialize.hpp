#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "joinlat/classify.hpp"
#include "joinlat/joingraph.hpp"
#include "joinlat/lattice.hpp"
#include "joinlat/moebius.hpp"

namespace joinlat {

using Json = nlohmann::json;

struct SubgroupEntry {
  std::size_t id = 0;
  std::size_t order = 0;
  std::vector<Elem> generators;

  friend bool operator==(const SubgroupEntry &, const SubgroupEntry &) = default;
};

/// Lattice export. `leq` lists every pair a <= b with a != b.
struct LatticeRecord {
  std::size_t order = 0;
  std::vector<SubgroupEntry> subgroups;
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  std::vector<std::size_t> maximal;
  std::size_t frattini = 0;
  std::vector<std::size_t> mi_members;

  friend bool operator==(const LatticeRecord &, const LatticeRecord &) = default;
};

/// Join graph export; `subgroups` lists the vertices only.
struct DeltaRecord {
  std::size_t order = 0;
  std::vector<SubgroupEntry> subgroups;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  friend bool operator==(const DeltaRecord &, const DeltaRecord &) = default;
};

struct MoebiusRecord {
  std::int64_t mu_bottom = 0;
  std::string method;
  std::map<std::size_t, std::int64_t> table;

  friend bool operator==(const MoebiusRecord &, const MoebiusRecord &) = default;
};

struct ClassificationRecord {
  bool soluble = false;
  bool nilpotent = false;
  bool supersoluble = false;
  bool frattini_free = false;
  std::optional<PGroupSignature> pgroup_signature;
  std::vector<std::pair<std::size_t, std::string>> coprime_factors;
  std::optional<bool> in_D;
  std::optional<bool> in_M;
  std::optional<std::string> partner_spec;

  friend bool operator==(const ClassificationRecord &, const ClassificationRecord &) = default;
};

LatticeRecord make_lattice_record(const SubgroupLattice &lat, const MILattice &mi);
DeltaRecord make_delta_record(const SubgroupLattice &lat, const JoinGraph &delta);
/// Throws ResourceError if a value does not fit in 64 bits.
MoebiusRecord make_moebius_record(const MoebiusTable &table, const std::string &method);
ClassificationRecord make_classification_record(const Classification &c);

void to_json(Json &j, const SubgroupEntry &r);
void from_json(const Json &j, SubgroupEntry &r);
void to_json(Json &j, const LatticeRecord &r);
void from_json(const Json &j, LatticeRecord &r);
void to_json(Json &j, const DeltaRecord &r);
void from_json(const Json &j, DeltaRecord &r);
void to_json(Json &j, const MoebiusRecord &r);
void from_json(const Json &j, MoebiusRecord &r);
void to_json(Json &j, const ClassificationRecord &r);
void from_json(const Json &j, ClassificationRecord &r);

/// Undirected DOT graph; vertex v is labeled "v:|H_v|".
std::string delta_to_dot(const SubgroupLattice &lat, const JoinGraph &delta);

} // namespace joinlat
