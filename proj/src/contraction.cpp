#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

#include "hurwitz/realizer.hpp"

namespace hurwitz {

namespace {

std::optional<Contraction> try_pair(const ResidueVector& rv, const std::vector<int>& zeros,
                                    const std::vector<int>& poles, int i0, int j0) {
  const int reduced = zeros[i0] - poles[j0];
  if (reduced <= 0) return std::nullopt;
  std::vector<int> new_zeros = zeros;
  new_zeros[i0] = reduced;
  std::vector<int> new_poles;
  for (int j = 0; j < static_cast<int>(poles.size()); ++j) {
    if (j != j0) new_poles.push_back(poles[j]);
  }
  ResidueVector result(std::move(new_zeros), std::move(new_poles));
  const int m = rv.components() - 2;
  if (rv_degree(result) <= m - 1) return std::nullopt;
  return Contraction{rv, std::move(result), i0, j0};
}

}  // namespace

Contraction contract(const ResidueVector& rv) {
  if (rv.components() < 3) throw std::invalid_argument("contract: needs at least three components");
  if (!is_primitive(rv)) throw std::invalid_argument("contract: residue vector must be primitive");
  const auto zeros = rv.zeros();
  const auto poles = rv.poles();
  if (poles.size() < 2) throw LemmaViolation("contract: " + rv.to_string() + " has a single pole");

  // Index orders: zeros ascending, poles descending (largest zero is last,
  // smallest pole is last).
  std::vector<int> zi(zeros.size()), pj(poles.size());
  std::iota(zi.begin(), zi.end(), 0);
  std::iota(pj.begin(), pj.end(), 0);
  std::stable_sort(zi.begin(), zi.end(), [&](int x, int y) { return zeros[x] < zeros[y]; });
  std::stable_sort(pj.begin(), pj.end(), [&](int x, int y) { return poles[x] > poles[y]; });

  const int largest_zero = zi.back();
  const int smallest_zero = zi.front();
  const int smallest_pole = pj.back();
  const int second_smallest_pole = pj[pj.size() - 2];

  const std::pair<int, int> preferred[] = {
      {largest_zero, smallest_pole},
      {largest_zero, second_smallest_pole},
      {smallest_zero, smallest_pole},
  };
  for (auto [i0, j0] : preferred) {
    if (auto c = try_pair(rv, zeros, poles, i0, j0)) return *c;
  }
  for (int i0 : zi) {
    for (int j0 : pj) {
      if (auto c = try_pair(rv, zeros, poles, i0, j0)) return *c;
    }
  }
  throw LemmaViolation("contract: no contraction of " + rv.to_string() + " keeps the degree bound");
}

}  // namespace hurwitz
