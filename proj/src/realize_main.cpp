#include <algorithm>
#include <numeric>
#include <optional>

#include "hurwitz/realizer.hpp"
#include "realizer_detail.hpp"

namespace hurwitz {

namespace detail {

namespace {

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

Permutation swap_pts(int n, int x, int y) { return Permutation::transposition(n, x, y); }

// Splits frame.sigmas[index] into cycles of the given lengths and puts them in
// its place.
void split_in_place(Frame& frame, std::size_t index, const std::vector<int>& parts) {
  auto pieces = split_cycle(frame.sigmas[index], parts);
  frame.sigmas.erase(frame.sigmas.begin() + static_cast<std::ptrdiff_t>(index));
  frame.sigmas.insert(frame.sigmas.begin() + static_cast<std::ptrdiff_t>(index), pieces.begin(), pieces.end());
}

Frame recompute_tau1(Frame frame) {
  Permutation prod = frame.tau2;
  for (const auto& s : frame.sigmas) prod = prod * s;
  frame.tau1 = prod.inverse();
  return frame;
}

// (2, 1 | 1, 1, 1) with lambda = (1, 1, 1): tau1 = (1 2), tau2 = id,
// sigmas (1 3), (2 3), (1 3).
Frame small_exception_frame() {
  const int n = 3;
  return Frame{n, swap_pts(n, 0, 1), Permutation::identity(n), {swap_pts(n, 0, 2), swap_pts(n, 1, 2), swap_pts(n, 0, 2)}};
}

bool is_small_exception(const std::vector<int>& zeros, const std::vector<int>& poles, const std::vector<int>& lambda) {
  std::vector<int> z = zeros, p = poles;
  std::sort(z.begin(), z.end());
  std::sort(p.begin(), p.end());
  return z == std::vector<int>{1, 2} && p == std::vector<int>{1, 1, 1} && lambda == std::vector<int>{1, 1, 1};
}

// One inductive step of the l = 2 case. `child` realizes the contracted data
// in S_{d-1} with sigma lengths (m1+1, m2); the new letter is d-1.
std::optional<Frame> splice_two(const Frame& child, int target_length, const std::vector<int>& zeros,
                                const std::vector<int>& poles, const std::vector<int>& lambda) {
  const int d = child.degree + 1;
  const int e = d - 1;
  const Frame base = embed(child, d);
  const Permutation mu = base.tau2 * base.sigmas[0] * base.sigmas[1];

  for (const auto& mu_p : orbits_of(mu)) {
    if (static_cast<int>(mu_p.size()) != target_length) continue;
    for (int x : mu_p) {
      // Step 2.1: sigma_2 meets mu_p.
      if (base.sigmas[1].moves(x)) {
        Frame f = base;
        f.sigmas[1] = f.sigmas[1] * swap_pts(d, x, e);
        f = recompute_tau1(std::move(f));
        if (frame_ok(f, zeros, poles, lambda)) return f;
      }
    }
  }
  for (const auto& mu_p : orbits_of(mu)) {
    if (static_cast<int>(mu_p.size()) != target_length) continue;
    for (int x : mu_p) {
      // Step 2.2: only sigma_1 meets mu_p.
      if (!base.sigmas[0].moves(x) || base.sigmas[1].moves(x)) continue;
      const Permutation s1 = base.sigmas[0] * swap_pts(d, x, e);
      const Permutation& s2 = base.sigmas[1];
      const int y = walk_back(s1, x, [&](int pt) { return s2.moves(pt); });
      if (y < 0) continue;
      const int z = s1(y);
      Frame f = base;
      f.sigmas[0] = s1 * swap_pts(d, y, z);
      f.sigmas[1] = swap_pts(d, y, z) * s2;
      f = recompute_tau1(std::move(f));
      if (frame_ok(f, zeros, poles, lambda)) return f;
    }
  }
  return std::nullopt;
}

// Rewrites s = s_tilde (b z) where z = s(b) and moves (b z) onto `next`:
// returns (s (b z), (b z) next).
std::pair<Permutation, Permutation> shift_point(const Permutation& s, const Permutation& next, int b) {
  const int z = s(b);
  const Permutation t = swap_pts(s.degree(), b, z);
  return {s * t, t * next};
}

// One inductive step of the l = 3 case (m1 <= m2 <= m3, m1 + m2 >= d).
// `child` has sigma lengths (m1+1, m2+1, m3) in S_{d-1}.
std::optional<Frame> splice_three(const Frame& child, int target_length, const std::vector<int>& zeros,
                                  const std::vector<int>& poles, const std::vector<int>& lambda) {
  const int d = child.degree + 1;
  const int e = d - 1;
  const Frame base = embed(child, d);
  const Permutation mu = base.tau2 * base.sigmas[0] * base.sigmas[1] * base.sigmas[2];
  const Permutation& s1 = base.sigmas[0];
  const Permutation& s2 = base.sigmas[1];
  const Permutation& s3 = base.sigmas[2];

  auto finish = [&](Frame f) -> std::optional<Frame> {
    f = recompute_tau1(std::move(f));
    if (frame_ok(f, zeros, poles, lambda)) return f;
    return std::nullopt;
  };

  std::vector<std::vector<int>> candidates;
  for (auto& cyc : orbits_of(mu)) {
    if (static_cast<int>(cyc.size()) == target_length) candidates.push_back(std::move(cyc));
  }

  // Step 3.1: mu_p meets sigma_3.
  for (const auto& mu_p : candidates) {
    for (int x : mu_p) {
      if (!s3.moves(x)) continue;
      Frame f = base;
      f.sigmas[2] = s3 * swap_pts(d, x, e);
      if (auto ok = finish(std::move(f))) return ok;
    }
  }
  // Step 3.2: mu_p meets sigma_2 but not sigma_3.
  for (const auto& mu_p : candidates) {
    if (std::any_of(mu_p.begin(), mu_p.end(), [&](int pt) { return s3.moves(pt); })) continue;
    for (int x : mu_p) {
      if (!s2.moves(x)) continue;
      const Permutation s2x = s2 * swap_pts(d, x, e);
      const int y = walk_back(s2x, x, [&](int pt) { return s3.moves(pt); });
      if (y < 0) continue;
      auto [new2, new3] = shift_point(s2x, s3, y);
      Frame f = base;
      f.sigmas[1] = new2;
      f.sigmas[2] = new3;
      if (auto ok = finish(std::move(f))) return ok;
    }
  }
  // Step 3.3: mu_p meets only sigma_1.
  for (const auto& mu_p : candidates) {
    if (std::any_of(mu_p.begin(), mu_p.end(), [&](int pt) { return s2.moves(pt) || s3.moves(pt); })) continue;
    for (int x : mu_p) {
      if (!s1.moves(x)) continue;
      const Permutation s1x = s1 * swap_pts(d, x, e);
      std::vector<int> outside;  // points of sigma_2 not in sigma_3
      for (int pt : cycle_points(s2)) {
        if (!s3.moves(pt)) outside.push_back(pt);
      }
      if (!outside.empty()) {
        // Step 3.3.A
        const int b1 = walk_back(s1x, x, [&](int pt) { return s2.moves(pt); });
        if (b1 < 0) continue;
        auto [new1, s2b] = shift_point(s1x, s2, b1);
        for (int w : outside) {
          const int b2 = walk_back(s2b, w, [&](int pt) { return s3.moves(pt); });
          if (b2 < 0) continue;
          auto [new2, new3] = shift_point(s2b, s3, b2);
          Frame f = base;
          f.sigmas = {new1, new2, new3};
          if (auto ok = finish(std::move(f))) return ok;
        }
      } else {
        // Step 3.3.B
        const int b = walk_back(s1x, x, [&](int pt) { return s3.moves(pt); });
        if (b < 0) continue;
        const int z = s1x(b);
        if (!s2.moves(b)) {
          auto [new1, new3] = shift_point(s1x, s3, b);
          Frame f = base;
          f.sigmas = {new1, s2, new3};
          if (auto ok = finish(std::move(f))) return ok;
        } else {
          auto [new1, s2b] = shift_point(s1x, s2, b);
          const int y = walk_back(s2b, z, [&](int pt) { return s3.moves(pt); });
          if (y < 0) continue;
          auto [new2, new3] = shift_point(s2b, s3, y);
          Frame f = base;
          f.sigmas = {new1, new2, new3};
          if (auto ok = finish(std::move(f))) return ok;
        }
      }
    }
  }
  return std::nullopt;
}

Frame realize_rec(const std::vector<int>& zeros, const std::vector<int>& poles, const std::vector<int>& lambda);

// Realizes with lambda grouped into consecutive blocks, then splits each
// grouped cycle back into its blocks' parts.
Frame realize_grouped(const std::vector<int>& zeros, const std::vector<int>& poles, const std::vector<int>& lambda,
                      const std::vector<std::size_t>& block_sizes) {
  std::vector<int> grouped;
  std::vector<std::vector<int>> blocks;
  std::size_t pos = 0;
  for (std::size_t size : block_sizes) {
    std::vector<int> block(lambda.begin() + static_cast<std::ptrdiff_t>(pos),
                           lambda.begin() + static_cast<std::ptrdiff_t>(pos + size));
    grouped.push_back(sum_of(block));
    blocks.push_back(std::move(block));
    pos += size;
  }
  Frame f = realize_rec(zeros, poles, grouped);
  for (std::size_t k = blocks.size(); k-- > 0;) {
    if (blocks[k].size() > 1) split_in_place(f, k, blocks[k]);
  }
  require_frame(f, zeros, poles, lambda, "realize_main (grouped)");
  return f;
}

Frame realize_rec(const std::vector<int>& zeros, const std::vector<int>& poles, const std::vector<int>& lambda) {
  const int d = sum_of(zeros);
  const int m = static_cast<int>(zeros.size() + poles.size()) - 2;
  const std::size_t l = lambda.size();

  // Part I, including l = 1: one (m+1)-cycle, split along lambda.
  if (l == 1 || d >= m + 1) {
    Frame f = realize_three_frame(zeros, poles);
    if (l > 1) split_in_place(f, 0, lambda);
    require_frame(f, zeros, poles, lambda, "realize_main (part I)");
    return f;
  }

  // Part II: d <= m.
  if (is_small_exception(zeros, poles, lambda)) {
    Frame f = small_exception_frame();
    require_frame(f, zeros, poles, lambda, "realize_main (small case)");
    return f;
  }

  if (l > 3) {
    // Group into three parts: first r with m_1 + ... + m_r >= d.
    std::size_t r = 0;
    int prefix = 0;
    while (prefix + lambda[r] < d) prefix += lambda[r++];
    // lambda[0..r-1] sums below d; r >= 1 because every part is below d.
    if (r + 1 < l) return realize_grouped(zeros, poles, lambda, {r, 1, l - r - 1});
    return realize_grouped(zeros, poles, lambda, {l - 2, 1, 1});
  }

  if (zeros.size() > poles.size()) {
    std::vector<int> reversed(lambda.rbegin(), lambda.rend());
    Frame f = swap_roles(realize_rec(poles, zeros, reversed));
    require_frame(f, zeros, poles, lambda, "realize_main (swapped)");
    return f;
  }

  if (*std::max_element(zeros.begin(), zeros.end()) == 1) {
    Frame f{d, Permutation::identity(d), Permutation::identity(d), realize_ones(d - 1, lambda)};
    require_frame(f, zeros, poles, lambda, "realize_main (unit residues)");
    return f;
  }

  std::vector<int> sorted = lambda;
  std::sort(sorted.begin(), sorted.end());

  Frame f;
  if (l == 3 && sorted[0] + sorted[1] < d) {
    f = realize_grouped(zeros, poles, sorted, {2, 1});
  } else {
    // Contract: largest zero loses 1, one pole equal to 1 is removed, the
    // largest m drops by 1.
    std::vector<int> child_zeros = zeros;
    auto largest = std::max_element(child_zeros.begin(), child_zeros.end());
    const int target_length = *largest - 1;
    *largest -= 1;
    std::vector<int> child_poles = poles;
    auto unit = std::find(child_poles.begin(), child_poles.end(), 1);
    if (unit == child_poles.end()) throw LemmaViolation("realize_main: expected a pole of order 1");
    child_poles.erase(unit);
    std::vector<int> child_lambda = sorted;
    child_lambda.back() -= 1;
    if (child_lambda.back() < 1) throw LemmaViolation("realize_main: largest m must exceed 1");

    const Frame child = realize_rec(child_zeros, child_poles, child_lambda);
    std::optional<Frame> spliced = l == 2 ? splice_two(child, target_length, zeros, poles, sorted)
                                          : splice_three(child, target_length, zeros, poles, sorted);
    if (!spliced) throw LemmaViolation("realize_main: no splice choice passed the check");
    f = std::move(*spliced);
  }
  reorder_sigmas(f, lambda);
  require_frame(f, zeros, poles, lambda, "realize_main (part II)");
  return f;
}

}  // namespace

}  // namespace detail

RealizationTuple realize_main(const ResidueVector& rv, const Partition& lambda) {
  if (!is_primitive(rv)) throw std::invalid_argument("realize_main: residue vector must be primitive");
  const int m = rv.components() - 2;
  if (m <= 0 || lambda.total() != m) {
    throw std::invalid_argument("realize_main: lambda must be a partition of components - 2 > 0");
  }
  if (rv_degree(rv) <= lambda.weight()) {
    throw std::invalid_argument("realize_main: degree must exceed the weight of lambda");
  }
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  return detail::to_tuple(detail::realize_rec(rv.zeros(), rv.poles(), parts));
}

}  // namespace hurwitz
