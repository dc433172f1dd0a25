#include "setfam/serialize.hpp"

#include <string>

#include "setfam/property.hpp"

namespace setfam {

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const RunManifest& m) {
  json flags = json::object();
  for (const auto& [k, v] : m.flags) flags[k] = v;
  return json{{"command", m.command}, {"flags", flags},
              {"seed", m.seed},       {"seeded", m.seeded},
              {"version", m.version}, {"input_digest", m.input_digest}};
}

RunManifest manifest_from_json(const json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("flags").items())
    m.flags[k] = v.get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.seeded = j.at("seeded").get<bool>();
  m.version = j.at("version").get<std::string>();
  m.input_digest = j.at("input_digest").get<std::string>();
  return m;
}

json to_json(const BooleanAlgebraWitness& w) {
  json atoms = json::array();
  atoms.push_back(w.base.elements());
  for (const auto& a : w.atoms) atoms.push_back(a.elements());
  json members = json::object();
  for (std::uint32_t mask = 0; mask < w.member_of_mask.size(); ++mask)
    members[std::to_string(mask)] = w.member_of_mask[mask];
  return json{
      {"d", w.dimension}, {"atoms", atoms}, {"members", members}};
}

json to_json(const ExtractionResult& r) {
  json j{{"indices", r.indices},
         {"size", r.indices.size()},
         {"property", property_name(r.property)},
         {"method", r.method},
         {"guarantee", r.guarantee},
         {"guarantee_pessimistic", r.guarantee_pessimistic},
         {"randomized", r.randomized}};
  if (r.randomized) {
    j["seed"] = r.seed;
    j["probability"] = r.probability;
    j["trials"] = r.stats.trials;
    j["best"] = r.stats.best;
    j["mean"] = r.stats.mean;
  }
  return j;
}

json to_json(const OracleResult& r) {
  return json{{"optimum", r.optimum},
              {"witness", r.witness},
              {"proven", r.proven},
              {"nodes", r.nodes}};
}

json to_json(const MinFamiliesResult& r) {
  return json{{"value", r.value},
              {"worst_family", r.worst_family},
              {"universe", r.universe},
              {"families_examined", r.families_examined},
              {"proven", r.proven}};
}

json to_json(const BijectionReport& r) {
  return json{{"members", r.members},
              {"edges", r.edges},
              {"family_witnesses", r.family_witnesses},
              {"hypergraph_copies", r.hypergraph_copies},
              {"sampled_subfamilies", r.sampled_subfamilies},
              {"ok", r.ok}};
}

json to_json(const NamedBound& b) {
  json j{{"name", b.name}, {"value", b.value}, {"asymptotic", b.asymptotic}};
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

json to_json(const GridPointSet& p) {
  json points = json::array();
  for (const auto& q : p.points) points.push_back(json::array({q.x, q.y}));
  return json{{"k", p.k}, {"points", points}};
}

json to_json(const GridViolation& v) {
  json covering = json::array();
  for (const auto& q : v.covering) covering.push_back(json::array({q.x, q.y}));
  return json{{"point", json::array({v.point.x, v.point.y})},
              {"covering", covering}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace setfam
