#ifndef HURWITZ_JSON_IO_HPP
#define HURWITZ_JSON_IO_HPP

#include "json.hpp"

#include "hurwitz/branch_data.hpp"
#include "hurwitz/decider.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/realizer.hpp"

namespace hurwitz {

using Json = nlohmann::json;

/// {"degree": d, "partitions": [[2, 2], [3, 1]]}
Json to_json(const BranchData& bd);
BranchData branch_data_from_json(const Json& j);

/// {"degree": n, "perms": ["(1 2 3)", "id"], "roles": ["zero", "pole"]}
/// Permutations are written in 1-based cycle notation.
Json to_json(const RealizationTuple& t);
RealizationTuple tuple_from_json(const Json& j);

/// {"realizable": b, "reason": "gcd-criterion-pass",
///  "witness": {"degree", "gcd", "max_m", "total_branching"}}
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const SearchResult& r);
Json to_json(const CensusEntry& e);
Json to_json(const ProbeReport& r);

}  // namespace hurwitz

#endif  // HURWITZ_JSON_IO_HPP
