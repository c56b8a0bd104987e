#include <algorithm>
#include <numeric>

#include "hurwitz/realizer.hpp"
#include "realizer_detail.hpp"

namespace hurwitz {

namespace detail {

namespace {

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

int gcd_of(const std::vector<int>& zeros, const std::vector<int>& poles) {
  int g = 0;
  for (int x : zeros) g = std::gcd(g, x);
  for (int x : poles) g = std::gcd(g, x);
  return g;
}

std::vector<int> divided(std::vector<int> v, int k) {
  for (int& x : v) x /= k;
  return v;
}

// Base case m = 0: a single d-cycle and its inverse.
Frame full_cycle_frame(int d) {
  std::vector<int> points(static_cast<std::size_t>(d));
  std::iota(points.begin(), points.end(), 0);
  Permutation c = Permutation::cycle(d, points);
  return Frame{d, c, c.inverse(), {Permutation::identity(d)}};
}

}  // namespace

Frame realize_three_frame(const std::vector<int>& zeros, const std::vector<int>& poles) {
  const int d = sum_of(zeros);
  const int m = static_cast<int>(zeros.size() + poles.size()) - 2;
  const std::vector<int> lambda = {m};

  if (m == 0) return full_cycle_frame(d);

  if (const int k = gcd_of(zeros, poles); k > 1) {
    Frame base = realize_three_frame(divided(zeros, k), divided(poles, k));
    Frame lifted = to_frame(power_lift_block(to_tuple(base), k));
    require_frame(lifted, zeros, poles, lambda, "realize_three (lifted)");
    return lifted;
  }

  if (zeros.size() > poles.size()) return swap_roles(realize_three_frame(poles, zeros));

  const Contraction c = contract(ResidueVector(zeros, poles));
  const std::vector<int> child_zeros = c.result.zeros();
  const std::vector<int> child_poles = c.result.poles();
  const int removed_pole = poles[c.pole_index];
  const int merged_length = c.result.zeros()[c.zero_index];

  Frame child = realize_three_frame(child_zeros, child_poles);
  const int n = child.degree;  // d - removed_pole
  const Permutation& sigma = child.sigmas.front();
  const Permutation mu = child.tau2 * sigma;

  // x: smallest point on a cycle of mu of the contracted length that sigma
  // also moves. When sigma is trivial (child m = 0) any point of that cycle
  // will do.
  int x = -1;
  for (const auto& cyc : orbits_of(mu)) {
    if (static_cast<int>(cyc.size()) != merged_length) continue;
    for (int point : cyc) {
      if ((sigma.is_identity() || sigma.moves(point)) && (x < 0 || point < x)) x = point;
    }
  }
  if (x < 0) throw LemmaViolation("realize_three: no contracted cycle meets the extra cycle");

  Frame grown = embed(child, d);
  std::vector<int> fresh(static_cast<std::size_t>(removed_pole));
  std::iota(fresh.begin(), fresh.end(), n);
  const int y = fresh.front();
  const Permutation nu = Permutation::cycle(d, fresh);

  grown.tau2 = grown.tau2 * nu;
  grown.sigmas.front() = grown.sigmas.front() * Permutation::transposition(d, x, y);
  grown.tau1 = (grown.tau2 * grown.sigmas.front()).inverse();
  require_frame(grown, zeros, poles, lambda, "realize_three");
  return grown;
}

}  // namespace detail

RealizationTuple realize_three(const ResidueVector& rv) {
  if (!is_primitive(rv)) throw std::invalid_argument("realize_three: residue vector must be primitive");
  const int m = rv.components() - 2;
  if (rv_degree(rv) <= m) {
    throw std::invalid_argument("realize_three: degree " + std::to_string(rv_degree(rv)) +
                                " must exceed m = " + std::to_string(m));
  }
  return detail::to_tuple(detail::realize_three_frame(rv.zeros(), rv.poles()));
}

}  // namespace hurwitz
