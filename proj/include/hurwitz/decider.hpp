#ifndef HURWITZ_DECIDER_HPP
#define HURWITZ_DECIDER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "hurwitz/branch_data.hpp"

namespace hurwitz {

enum class VerdictReason {
  GcdCriterionPass,
  GcdCriterionFail,
  BoccaraEvenBranching,
  BoccaraDeficient,
  OutsideForm,
  Incompatible,
};

std::string_view to_string(VerdictReason reason);
VerdictReason verdict_reason_from_string(std::string_view text);

/// The numbers a verdict rests on. For criterion verdicts `gcd` and `max_m`
/// come from the designation used; every field can be recomputed from the
/// input with recompute_witness().
struct VerdictWitness {
  int degree = 0;
  int gcd = 0;
  int max_m = 0;
  int total_branching = 0;

  friend bool operator==(const VerdictWitness&, const VerdictWitness&) = default;
};

struct Verdict {
  bool realizable = false;
  VerdictReason reason = VerdictReason::OutsideForm;
  VerdictWitness witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// The input is not of a shape the requested criterion covers.
class OutsideFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Main-form criterion: max m_k * GCD(a, b) < d, in integers.
///
/// Trivial partitions are dropped first. Odd total branching short-circuits to
/// an Incompatible verdict. The pair {(d), (d)}, which the criterion does not
/// cover, is answered directly (realizable, reason OutsideForm). Every
/// designation returned by classify_form is evaluated and must agree; a
/// disagreement throws std::logic_error. Any other collection throws
/// OutsideFormError.
Verdict decide_main(const BranchData& bd);

/// Criterion for a single designation, without normalization.
Verdict decide_form(const MainForm& form);

/// Three-partition criterion for (a..), (b..), (m+1,1..1):
/// realizable iff v >= 2d is even, or v = 2d - 2 and the main criterion holds
/// (delegated to decide_main). Throws OutsideFormError unless the normalized
/// collection has exactly three partitions, one of them a hook.
Verdict decide_boccara(const BranchData& bd);

/// Whether decide_boccara applies to `bd`.
bool is_boccara_shape(const BranchData& bd);

/// Recomputes the witness numbers a verdict of the given reason would carry.
VerdictWitness recompute_witness(const BranchData& bd, VerdictReason reason);

}  // namespace hurwitz

#endif  // HURWITZ_DECIDER_HPP
