#include <algorithm>
#include <numeric>

#include "hurwitz/realizer.hpp"

namespace hurwitz {

namespace {

// Cycle on 1-based labels, returned in S_n.
Permutation cycle1(int n, std::vector<int> labels) {
  for (int& x : labels) --x;
  return Permutation::cycle(n, labels);
}

// The two explicit cycles of the three-cycle case for (m1, m2, m3), sum 2D.
// sigma1 = (1, ..., m1+1)
// sigma2 = (1, m1+1, m1, ..., m1+m3-D+2, m1+2, ..., D+1)
std::pair<Permutation, Permutation> three_cycle_pair(int D, int m1, int m3) {
  const int n = D + 1;
  std::vector<int> first(static_cast<std::size_t>(m1 + 1));
  std::iota(first.begin(), first.end(), 1);
  std::vector<int> second = {1};
  for (int x = m1 + 1; x >= m1 + m3 - D + 2; --x) second.push_back(x);
  for (int x = m1 + 2; x <= D + 1; ++x) second.push_back(x);
  return {cycle1(n, first), cycle1(n, second)};
}

// Chained cycles (1..P1+1), (P1+1..P2+1), ... on 1-based labels.
std::vector<Permutation> chained(int n, std::span<const int> parts) {
  std::vector<Permutation> out;
  int start = 1;
  for (int part : parts) {
    std::vector<int> labels(static_cast<std::size_t>(part + 1));
    std::iota(labels.begin(), labels.end(), start);
    out.push_back(cycle1(n, labels));
    start += part;
  }
  return out;
}

}  // namespace

std::vector<Permutation> realize_ones(int D, std::span<const int> parts) {
  if (D < 1) throw std::invalid_argument("realize_ones: D must be positive");
  if (parts.size() < 2) throw std::invalid_argument("realize_ones: needs at least two parts");
  if (std::accumulate(parts.begin(), parts.end(), 0) != 2 * D) {
    throw std::invalid_argument("realize_ones: parts must sum to 2D");
  }
  for (int part : parts) {
    if (part < 1 || part > D) throw std::invalid_argument("realize_ones: parts must lie in 1..D");
  }
  const int n = D + 1;
  const std::size_t l = parts.size();

  if (l == 2) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    Permutation s1 = cycle1(n, all);
    return {s1, s1.inverse()};
  }

  if (l == 3) {
    auto [s1, s2] = three_cycle_pair(D, parts[0], parts[2]);
    Permutation s3 = (s1 * s2).inverse();
    return {s1, s2, s3};
  }

  // l > 3: r is the first index whose prefix sum exceeds D.
  std::size_t r = 0;
  int prefix = 0;
  while (prefix + parts[r] <= D) prefix += parts[r++];
  // parts[0..r-1] sum to prefix <= D, and prefix + parts[r] > D.
  std::vector<Permutation> out = chained(n, parts.subspan(0, r));
  if (r + 1 < l) {
    const int rest = 2 * D - prefix - parts[r];
    auto [head, middle] = three_cycle_pair(D, prefix, rest);
    Permutation tail = (head * middle).inverse();
    out.push_back(middle);
    for (auto& piece : split_cycle(tail, parts.subspan(r + 1))) out.push_back(std::move(piece));
  } else {
    // prefix == parts[r] == D: the chained cycles compose to (1..D+1).
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    out.push_back(cycle1(n, all).inverse());
  }
  return out;
}

std::vector<Permutation> realize_ones(int D, const Partition& lambda) {
  std::vector<int> ascending(lambda.parts().rbegin(), lambda.parts().rend());
  return realize_ones(D, ascending);
}

std::vector<Permutation> split_cycle(const Permutation& sigma, std::span<const int> parts) {
  const int total = std::accumulate(parts.begin(), parts.end(), 0);
  if (sigma.is_identity()) {
    if (total != 0) throw std::invalid_argument("split_cycle: identity cannot be split into non-trivial cycles");
    return {};
  }
  auto cycles = cycle_factors(sigma);
  if (cycles.size() != 1) throw std::invalid_argument("split_cycle: input is not a single cycle");
  const auto& points = cycles.front();
  if (static_cast<int>(points.size()) != total + 1) {
    throw std::invalid_argument("split_cycle: part sum must be the cycle length minus one");
  }
  std::vector<Permutation> out;
  std::size_t start = 0;
  for (int part : parts) {
    if (part < 1) throw std::invalid_argument("split_cycle: parts must be positive");
    std::span<const int> piece(points.data() + start, static_cast<std::size_t>(part + 1));
    out.push_back(Permutation::cycle(sigma.degree(), piece));
    start += static_cast<std::size_t>(part);
  }
  return out;
}

std::vector<Permutation> split_cycle(const Permutation& sigma, const Partition& lambda) {
  return split_cycle(sigma, lambda.parts());
}

}  // namespace hurwitz
