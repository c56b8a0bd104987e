#include "hurwitz/json_io.hpp"

#include <stdexcept>

namespace hurwitz {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const BranchData& bd) {
  Json parts = Json::array();
  for (const auto& p : bd.partitions()) parts.push_back(Json(std::vector<int>(p.parts().begin(), p.parts().end())));
  return Json{{"degree", bd.degree()}, {"partitions", parts}};
}

BranchData branch_data_from_json(const Json& j) {
  try {
    const int degree = field(j, "degree").get<int>();
    std::vector<Partition> parts;
    for (const auto& p : field(j, "partitions")) parts.emplace_back(p.get<std::vector<int>>());
    return BranchData(degree, std::move(parts));
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("json: malformed branch data: ") + e.what());
  }
}

Json to_json(const RealizationTuple& t) {
  Json perms = Json::array();
  for (const auto& p : t.perms) perms.push_back(p.to_string());
  return Json{{"degree", t.degree}, {"perms", perms}, {"roles", t.roles}};
}

RealizationTuple tuple_from_json(const Json& j) {
  try {
    RealizationTuple t;
    t.degree = field(j, "degree").get<int>();
    for (const auto& p : field(j, "perms")) t.perms.push_back(Permutation::parse(p.get<std::string>(), t.degree));
    if (j.contains("roles")) t.roles = j.at("roles").get<std::vector<std::string>>();
    if (t.roles.empty()) {
      for (std::size_t k = 0; k < t.perms.size(); ++k) t.roles.push_back("perm-" + std::to_string(k + 1));
    }
    if (t.roles.size() != t.perms.size()) throw std::invalid_argument("json: roles and perms differ in length");
    return t;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("json: malformed tuple: ") + e.what());
  }
}

Json to_json(const Verdict& v) {
  return Json{{"realizable", v.realizable},
              {"reason", std::string(to_string(v.reason))},
              {"witness",
               {{"degree", v.witness.degree},
                {"gcd", v.witness.gcd},
                {"max_m", v.witness.max_m},
                {"total_branching", v.witness.total_branching}}}};
}

Verdict verdict_from_json(const Json& j) {
  try {
    Verdict v;
    v.realizable = field(j, "realizable").get<bool>();
    v.reason = verdict_reason_from_string(field(j, "reason").get<std::string>());
    const Json& w = field(j, "witness");
    v.witness = VerdictWitness{field(w, "degree").get<int>(), field(w, "gcd").get<int>(), field(w, "max_m").get<int>(),
                               field(w, "total_branching").get<int>()};
    return v;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("json: malformed verdict: ") + e.what());
  }
}

Json to_json(const VerificationReport& r) {
  return Json{{"ok", r.ok()},
              {"degree_match", r.degree_match},
              {"types_match", r.types_match},
              {"product_identity", r.product_identity},
              {"transitive", r.transitive},
              {"genus", r.genus.to_string()}};
}

Json to_json(const SearchResult& r) {
  Json j{{"status", std::string(to_string(r.status))}, {"proven", r.proven()}, {"nodes", r.nodes}};
  if (r.tuple) j["tuple"] = to_json(*r.tuple);
  return j;
}

Json to_json(const CensusEntry& e) {
  Json j{{"branch_data", to_json(e.branch_data)},
         {"verdict", std::string(to_string(e.verdict))},
         {"proven", e.proven},
         {"genus", e.genus}};
  if (e.witness) j["witness"] = to_json(*e.witness);
  if (e.predicted) j["predicted"] = to_json(*e.predicted);
  return j;
}

Json to_json(const ProbeReport& r) {
  Json counter = Json::array();
  for (const auto& bd : r.counterexamples) counter.push_back(to_json(bd));
  Json undecided = Json::array();
  for (const auto& bd : r.undecided) undecided.push_back(to_json(bd));
  return Json{{"d_max", r.d_max},       {"genus", r.genus},
              {"probed", r.probed},     {"realized", r.realized},
              {"counterexamples", counter}, {"undecided", undecided},
              {"clean", r.clean()}};
}

}  // namespace hurwitz
