#include "hurwitz/decider.hpp"

#include <numeric>
#include <optional>

namespace hurwitz {

namespace {

bool is_two_full_cycles(const BranchData& bd) {
  return bd.size() == 2 && bd.partitions()[0].length() == 1 && bd.partitions()[1].length() == 1;
}

struct HookDesignation {
  Partition a;
  Partition b;
  int m;
};

// The first hook (in descending order) together with the other two partitions.
std::optional<HookDesignation> boccara_designation(const BranchData& normalized) {
  if (normalized.size() != 3) return std::nullopt;
  const auto parts = normalized.sorted_partitions();
  for (std::size_t k = 0; k < 3; ++k) {
    int m = parts[k].hook_excess();
    if (m < 1) continue;
    std::vector<Partition> others;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != k) others.push_back(parts[j]);
    }
    return HookDesignation{others[0], others[1], m};
  }
  return std::nullopt;
}

int gcd_of(const Partition& a, const Partition& b) {
  int g = 0;
  for (int x : a.parts()) g = std::gcd(g, x);
  for (int x : b.parts()) g = std::gcd(g, x);
  return g;
}

}  // namespace

std::string_view to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::GcdCriterionPass: return "gcd-criterion-pass";
    case VerdictReason::GcdCriterionFail: return "gcd-criterion-fail";
    case VerdictReason::BoccaraEvenBranching: return "boccara-even-branching";
    case VerdictReason::BoccaraDeficient: return "boccara-deficient";
    case VerdictReason::OutsideForm: return "outside-form";
    case VerdictReason::Incompatible: return "incompatible";
  }
  return "unknown";
}

VerdictReason verdict_reason_from_string(std::string_view text) {
  for (auto reason : {VerdictReason::GcdCriterionPass, VerdictReason::GcdCriterionFail,
                      VerdictReason::BoccaraEvenBranching, VerdictReason::BoccaraDeficient,
                      VerdictReason::OutsideForm, VerdictReason::Incompatible}) {
    if (to_string(reason) == text) return reason;
  }
  throw std::invalid_argument("unknown verdict reason '" + std::string(text) + "'");
}

Verdict decide_form(const MainForm& form) {
  validate(form);
  const int g = form.gcd();
  const int max_m = form.lambda.weight();
  const bool ok = max_m * g < form.degree;
  Verdict verdict;
  verdict.realizable = ok;
  verdict.reason = ok ? VerdictReason::GcdCriterionPass : VerdictReason::GcdCriterionFail;
  verdict.witness = VerdictWitness{form.degree, g, max_m, total_branching(form.to_branch_data())};
  return verdict;
}

Verdict decide_main(const BranchData& bd) {
  const BranchData normalized = bd.without_trivial();
  const int v = total_branching(normalized);
  if (v % 2 != 0) {
    return Verdict{false, VerdictReason::Incompatible, recompute_witness(normalized, VerdictReason::Incompatible)};
  }
  if (is_two_full_cycles(normalized)) {
    return Verdict{true, VerdictReason::OutsideForm, recompute_witness(normalized, VerdictReason::OutsideForm)};
  }
  const auto forms = classify_form(normalized);
  if (forms.empty()) {
    throw OutsideFormError("decide_main: " + bd.to_string() + " is not of the main form");
  }
  const Verdict first = decide_form(forms.front());
  for (std::size_t i = 1; i < forms.size(); ++i) {
    if (decide_form(forms[i]).realizable != first.realizable) {
      throw std::logic_error("decide_main: designations of " + bd.to_string() + " disagree");
    }
  }
  return first;
}

bool is_boccara_shape(const BranchData& bd) { return boccara_designation(bd.without_trivial()).has_value(); }

Verdict decide_boccara(const BranchData& bd) {
  const BranchData normalized = bd.without_trivial();
  const auto designation = boccara_designation(normalized);
  if (!designation) {
    throw OutsideFormError("decide_boccara: " + bd.to_string() +
                           " is not three partitions with one of shape (m+1,1,...,1)");
  }
  const int d = normalized.degree();
  const int v = total_branching(normalized);
  if (v % 2 != 0) {
    return Verdict{false, VerdictReason::Incompatible, recompute_witness(normalized, VerdictReason::Incompatible)};
  }
  if (v >= 2 * d) {
    return Verdict{true, VerdictReason::BoccaraEvenBranching,
                   recompute_witness(normalized, VerdictReason::BoccaraEvenBranching)};
  }
  if (v == 2 * d - 2) return decide_main(normalized);
  return Verdict{false, VerdictReason::BoccaraDeficient,
                 recompute_witness(normalized, VerdictReason::BoccaraDeficient)};
}

VerdictWitness recompute_witness(const BranchData& bd, VerdictReason reason) {
  const BranchData normalized = bd.without_trivial();
  VerdictWitness w{normalized.degree(), 0, 0, total_branching(normalized)};
  switch (reason) {
    case VerdictReason::GcdCriterionPass:
    case VerdictReason::GcdCriterionFail: {
      const auto forms = classify_form(normalized);
      if (!forms.empty()) {
        w.gcd = forms.front().gcd();
        w.max_m = forms.front().lambda.weight();
      }
      break;
    }
    case VerdictReason::BoccaraEvenBranching:
    case VerdictReason::BoccaraDeficient:
      if (auto designation = boccara_designation(normalized)) {
        w.gcd = gcd_of(designation->a, designation->b);
        w.max_m = designation->m;
      }
      break;
    case VerdictReason::OutsideForm:
      if (is_two_full_cycles(normalized)) w.gcd = normalized.degree();
      break;
    case VerdictReason::Incompatible:
      break;
  }
  return w;
}

}  // namespace hurwitz
