#include <algorithm>
#include <numeric>

#include "hurwitz/realizer.hpp"

namespace hurwitz {

namespace {

RealizationTuple full_cycle_pair(int d) {
  std::vector<int> points(static_cast<std::size_t>(d));
  std::iota(points.begin(), points.end(), 0);
  const Permutation c = Permutation::cycle(d, points);
  return RealizationTuple{d, {c, c.inverse()}, {"zero", "pole"}};
}

}  // namespace

RealizationTuple realize_form(const MainForm& form) {
  validate(form);
  if (!decide_form(form).realizable) {
    throw std::invalid_argument("realize_form: the GCD criterion fails for this designation");
  }
  const PrimitiveReduction red = primitive_reduce(form.residues());
  RealizationTuple t = realize_main(red.primitive, form.lambda);
  if (red.factor > 1) t = power_lift_block(t, red.factor);
  return t;
}

Realization realize(const BranchData& bd) {
  const BranchData normalized = bd.without_trivial();
  Realization out{decide_main(bd), normalized, normalized.size() != bd.size(), std::nullopt};
  if (!out.verdict.realizable) return out;

  const int d = normalized.degree();
  if (out.verdict.reason == VerdictReason::OutsideForm) {
    out.tuple = full_cycle_pair(d);
  } else {
    out.tuple = realize_form(classify_form(normalized).front());
  }
  if (!verify_realization(normalized, *out.tuple).ok()) {
    throw LemmaViolation("realize: witness for " + bd.to_string() + " failed verification");
  }
  return out;
}

VerificationReport verify_realization(const BranchData& bd, const RealizationTuple& t) {
  VerificationReport report;
  report.degree_match = t.degree == bd.degree();
  for (const auto& p : t.perms) {
    if (p.degree() != t.degree) report.degree_match = false;
  }
  if (!report.degree_match) return report;

  std::vector<Partition> expected;
  for (const auto& p : bd.partitions()) {
    if (!p.is_trivial()) expected.push_back(p);
  }
  std::vector<Partition> actual;
  std::vector<Partition> all_types;
  for (const auto& p : t.perms) {
    Partition type = cycle_type(p);
    all_types.push_back(type);
    if (!type.is_trivial()) actual.push_back(std::move(type));
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  report.types_match = expected == actual;
  report.product_identity = t.product_is_identity();
  report.transitive = t.degree > 0 && is_transitive(t.perms, t.degree);
  if (!all_types.empty()) report.genus = cover_genus(BranchData(t.degree, std::move(all_types)));
  return report;
}

}  // namespace hurwitz
