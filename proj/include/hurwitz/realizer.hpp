#ifndef HURWITZ_REALIZER_HPP
#define HURWITZ_REALIZER_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hurwitz/branch_data.hpp"
#include "hurwitz/decider.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// A construction step met a situation its supporting lemma rules out. Either
/// the caller broke a precondition or there is a bug.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Contraction
// ---------------------------------------------------------------------------

/// `result` is `source` with zero a[zero_index] replaced by
/// a[zero_index] - b[pole_index] (> 0) and pole b[pole_index] deleted.
/// Indices refer to source.zeros() and source.poles().
struct Contraction {
  ResidueVector source;
  ResidueVector result;
  int zero_index;
  int pole_index;
};

/// Picks a contraction whose degree exceeds (components - 3).
///
/// Candidates are tried in this order: largest zero with smallest pole, largest
/// zero with second smallest pole, smallest zero with smallest pole, then every
/// remaining (zero, pole) pair. Requires a primitive vector with at least three
/// components and no more zeros than poles (callers swap roles otherwise); throws LemmaViolation when no candidate qualifies.
Contraction contract(const ResidueVector& rv);

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Three permutations (tau1, tau2, sigma) in S_d, d = rv_degree(rv), with
/// tau1 tau2 sigma = id, types (zeros), (poles), (m+1, 1, ..., 1) where
/// m = components - 2, generating a transitive group. Built by induction on m
/// through contract(); fresh letters are appended at the top of the range.
/// Requires rv primitive and d > m.
RealizationTuple realize_three(const ResidueVector& rv);

/// Cycles sigma_1..sigma_l of S_{D+1} of lengths parts[k]+1, in the given
/// order, with product id and transitive action. Requires sum(parts) == 2D,
/// every part <= D and at least two parts.
std::vector<Permutation> realize_ones(int D, std::span<const int> parts);

/// Same, with lambda's parts taken in ascending order.
std::vector<Permutation> realize_ones(int D, const Partition& lambda);

/// Splits a cycle of length m+1 into cycles of lengths parts[k]+1 chained
/// along it (consecutive cycles share one point) whose right-to-left product
/// is `sigma`. The walk starts at sigma's smallest moved point.
std::vector<Permutation> split_cycle(const Permutation& sigma, std::span<const int> parts);
std::vector<Permutation> split_cycle(const Permutation& sigma, const Partition& lambda);

/// (tau1, tau2, sigma_1, ..., sigma_l) in S_d with product id, tau1 of type
/// zeros(rv), tau2 of type poles(rv), sigma_k of type (m_k+1, 1, ..., 1) in
/// lambda's order, transitive. Requires rv primitive,
/// lambda.total() == components - 2 > 0 and rv_degree(rv) > lambda.weight().
RealizationTuple realize_main(const ResidueVector& rv, const Partition& lambda);

// ---------------------------------------------------------------------------
// Lifts
// ---------------------------------------------------------------------------

/// Block conventions for the imprimitive lifts. Points of the lift are
/// (block j, letter x), j in Z_k. The zero permutation advances j -> j+1 and
/// applies tau1 on one wrap-around edge; extra cycles sit in chosen blocks.
enum class LiftConvention {
  /// tau1 applied on leaving block k-1; sigma_i placed in block r-i.
  TwistTopDescending,
  /// tau1 applied on leaving block k-1; sigma_i placed in block i-1.
  TwistTopAscending,
  /// tau1 applied on leaving block 0; sigma_i placed in block r-i.
  TwistBottomDescending,
  /// tau1 applied on leaving block 0; sigma_i placed in block i-1.
  TwistBottomAscending,
};

inline constexpr LiftConvention kLiftConvention = LiftConvention::TwistTopDescending;

/// Realization of the k-scaled data on k*n points. Input and output are in
/// (zero, pole, extra-1, ..., extra-l) order. The output has types k*(zeros),
/// k*(poles) and each extra cycle's type padded with fixed points. The pole
/// permutation is the completion to product id; its type and the transitivity
/// are checked and a LemmaViolation is thrown if no convention satisfies them.
RealizationTuple power_lift_block(const RealizationTuple& t, int k);

/// Three-permutation realization on r*n points of
/// (r*zeros), (r*poles), (c_1+1, ..., c_r+1, 1, ...), where the input has
/// exactly r extra cycles of lengths c_i+1. Output order is
/// (zero, pole, extra).
RealizationTuple belyi_lift(const RealizationTuple& t, int r);

/// Lift under an explicit convention; returns std::nullopt when the completed
/// pole permutation has the wrong type or the result is not transitive.
std::optional<RealizationTuple> power_lift_with(const RealizationTuple& t, int k, LiftConvention convention);
std::optional<RealizationTuple> belyi_lift_with(const RealizationTuple& t, int r, LiftConvention convention);

// ---------------------------------------------------------------------------
// End to end
// ---------------------------------------------------------------------------

struct Realization {
  Verdict verdict;
  /// The collection actually realized: input minus trivial partitions.
  BranchData normalized;
  bool dropped_trivial = false;
  /// Present iff verdict.realizable.
  std::optional<RealizationTuple> tuple;
};

/// Witness for one designation whose GCD criterion passes: primitive
/// reduction, realize_main, then power_lift_block by the GCD. Output order is
/// (zero, pole, extra-1, ..., extra-l) with extras in lambda's order. Throws
/// std::invalid_argument when the criterion fails.
RealizationTuple realize_form(const MainForm& form);

/// Decides with decide_main and, when realizable, builds a witness: primitive
/// reduction, realize_main, then power_lift_block by the GCD. The pair
/// {(d), (d)} is realized as a d-cycle and its inverse. Throws
/// OutsideFormError for collections decide_main does not cover.
Realization realize(const BranchData& bd);

struct VerificationReport {
  bool degree_match = false;
  bool types_match = false;
  bool product_identity = false;
  bool transitive = false;
  CoverGenus genus;

  bool ok() const { return degree_match && types_match && product_identity && transitive; }
};

/// Checks a tuple against branch data. Trivial types are ignored on both sides
/// when comparing the multisets of cycle types. The genus is computed from the
/// tuple's own cycle types by Riemann-Hurwitz.
VerificationReport verify_realization(const BranchData& bd, const RealizationTuple& t);

}  // namespace hurwitz

#endif  // HURWITZ_REALIZER_HPP
