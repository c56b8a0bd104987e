#ifndef HURWITZ_ORACLE_HPP
#define HURWITZ_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hurwitz/branch_data.hpp"
#include "hurwitz/decider.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// Largest degree the search accepts.
inline constexpr int kMaxSearchDegree = 16;

/// Unset limits mean unlimited. A search that runs without any limit and
/// finishes is exhaustive, so a negative answer is proven.
struct SearchBudget {
  std::optional<std::int64_t> max_nodes;
  std::optional<double> time_limit;  // seconds
  int parallel_shards = 1;

  bool unlimited() const { return !max_nodes && !time_limit; }
};

enum class SearchStatus { Found, ProvenNone, Unknown };

std::string_view to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::Unknown;
  /// Present iff status == Found. Permutations follow the order of the input
  /// partitions (trivial ones included, as the identity); roles are
  /// "partition-1", "partition-2", ...
  std::optional<RealizationTuple> tuple;
  std::int64_t nodes = 0;

  bool proven() const { return status != SearchStatus::Unknown; }
  bool found() const { return status == SearchStatus::Found; }
};

/// Searches for permutations of the given cycle types with product id
/// generating a transitive group.
///
/// The first non-trivial type is fixed to its canonical representative
/// (consecutive blocks, longest cycles first); the others are enumerated
/// class by class in order of decreasing d - length, the last one being the
/// completion. Internal nodes are pruned when the remaining branching cannot
/// cancel the partial product or cannot join the current orbits. The second
/// class is split into contiguous index ranges across shards and the witness
/// with the smallest index wins, so the result does not depend on the shard
/// count.
///
/// If the genus given by Riemann-Hurwitz is not `target_genus`, returns
/// ProvenNone without searching. Throws std::invalid_argument when the degree
/// exceeds kMaxSearchDegree.
SearchResult search_tuples(const BranchData& bd, int target_genus, const SearchBudget& budget = {});

/// Search at the genus Riemann-Hurwitz assigns to the types; ProvenNone when
/// that genus is negative or fractional.
SearchResult search_any_genus(const BranchData& bd, const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

enum class CensusFilter { MainForm, BoccaraForm, AllCompatible };

std::string_view to_string(CensusFilter filter);
CensusFilter census_filter_from_string(std::string_view text);

enum class CensusVerdict { Realizable, Exception, Unknown };

std::string_view to_string(CensusVerdict verdict);

struct CensusEntry {
  BranchData branch_data;
  CensusVerdict verdict = CensusVerdict::Unknown;
  std::optional<RealizationTuple> witness;
  bool proven = false;
  /// Cover genus the search targeted.
  int genus = 0;
  /// The closed-form verdict, for filters that have one.
  std::optional<Verdict> predicted;
};

struct CensusOptions {
  int d_min = 1;
  /// Upper genus bound for the all-compatible filter.
  int max_genus = 0;
  SearchBudget budget;
};

/// Collections of non-trivial partitions passing the filter with
/// d_min <= degree <= d_max, ordered by degree and then lexicographically by
/// their sorted partition lists. Each collection appears once.
///
/// main-form: {a, b} plus hooks (m_k+1, 1, ...) with sum m_k = p+q-2 > 0 and
/// every m_k <= d-1. boccara-form: three partitions, one a hook, with even
/// total branching. all-compatible: at least two partitions, even total
/// branching and cover genus between 0 and max_genus.
std::vector<BranchData> enumerate_collections(int d_max, CensusFilter filter, const CensusOptions& options = {});

/// Searches every enumerated collection at its Riemann-Hurwitz genus.
std::vector<CensusEntry> census(int d_max, CensusFilter filter, const CensusOptions& options = {});

// ---------------------------------------------------------------------------
// Conjecture probe
// ---------------------------------------------------------------------------

struct ProbeReport {
  int d_max = 0;
  int genus = 0;
  std::size_t probed = 0;
  std::size_t realized = 0;
  /// Collections the search proved unrealizable at the target genus.
  std::vector<BranchData> counterexamples;
  /// Collections where the budget ran out.
  std::vector<BranchData> undecided;

  bool clean() const { return counterexamples.empty() && undecided.empty(); }
};

/// Collections {a, b} plus hooks with every m_k + 1 <= d and
/// sum m_k = p + q - 2 + 2g, for 2 <= d <= d_max, each searched at genus g.
std::vector<BranchData> probe_collections(int d_max, int g);

ProbeReport probe_conjecture(int d_max, int g, const SearchBudget& budget = {});

}  // namespace hurwitz

#endif  // HURWITZ_ORACLE_HPP
