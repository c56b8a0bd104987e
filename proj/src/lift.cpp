#include <algorithm>

#include "hurwitz/realizer.hpp"

namespace hurwitz {

namespace {

bool twist_on_top(LiftConvention c) {
  return c == LiftConvention::TwistTopDescending || c == LiftConvention::TwistTopAscending;
}

bool descending(LiftConvention c) {
  return c == LiftConvention::TwistTopDescending || c == LiftConvention::TwistBottomDescending;
}

constexpr LiftConvention kAllConventions[] = {
    LiftConvention::TwistTopDescending,
    LiftConvention::TwistTopAscending,
    LiftConvention::TwistBottomDescending,
    LiftConvention::TwistBottomAscending,
};

// Block rotation on k*n points, (j, x) encoded as j*n + x, applying tau on the
// wrap-around edge.
Permutation rotation(const Permutation& tau, int k, bool top) {
  const int n = tau.degree();
  std::vector<int> images(static_cast<std::size_t>(k * n));
  for (int j = 0; j < k; ++j) {
    for (int x = 0; x < n; ++x) {
      const int next = (j + 1) % k;
      const bool twist = top ? j == k - 1 : j == 0;
      images[static_cast<std::size_t>(j * n + x)] = next * n + (twist ? tau(x) : x);
    }
  }
  return Permutation(std::move(images));
}

// p acting on block j, identity elsewhere.
Permutation in_block(const Permutation& p, int k, int j) {
  const int n = p.degree();
  std::vector<int> images(static_cast<std::size_t>(k * n));
  for (int y = 0; y < k * n; ++y) images[static_cast<std::size_t>(y)] = y;
  for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(j * n + x)] = j * n + p(x);
  return Permutation(std::move(images));
}

void check_canonical(const RealizationTuple& t, const char* what) {
  if (t.perms.size() < 2) throw std::invalid_argument(std::string(what) + ": tuple needs zero and pole permutations");
  if (!t.product_is_identity()) throw std::invalid_argument(std::string(what) + ": tuple product is not the identity");
}

// (tau1, tau2, s_1..s_l) -> (tau1, s'_1..s'_l, tau2') by moving tau2 right.
RealizationTuple to_lift_order(RealizationTuple t) {
  for (std::size_t i = 1; i + 1 < t.perms.size(); ++i) t = inverse_hurwitz_move(t, i);
  return t;
}

// Inverse of to_lift_order.
RealizationTuple from_lift_order(RealizationTuple t) {
  for (std::size_t i = t.perms.size() - 1; i-- > 1;) t = hurwitz_move(t, i);
  return t;
}

Partition scaled_type(const Permutation& p, int k) { return cycle_type(p).scaled(k); }

}  // namespace

std::optional<RealizationTuple> power_lift_with(const RealizationTuple& t, int k, LiftConvention convention) {
  check_canonical(t, "power_lift");
  if (k < 1) throw std::invalid_argument("power_lift: k must be positive");
  const RealizationTuple lo = to_lift_order(t);
  const std::size_t last = lo.perms.size() - 1;

  RealizationTuple out;
  out.degree = k * t.degree;
  out.roles = lo.roles;
  out.perms.push_back(rotation(lo.perms[0], k, twist_on_top(convention)));
  Permutation prod = out.perms.front();
  for (std::size_t i = 1; i < last; ++i) {
    out.perms.push_back(in_block(lo.perms[i], k, 0));
    prod = prod * out.perms.back();
  }
  out.perms.push_back(prod.inverse());

  if (cycle_type(out.perms.back()) != scaled_type(lo.perms[last], k)) return std::nullopt;
  if (!is_transitive(out.perms, out.degree)) return std::nullopt;
  return from_lift_order(std::move(out));
}

RealizationTuple power_lift_block(const RealizationTuple& t, int k) {
  if (auto r = power_lift_with(t, k, kLiftConvention)) return *r;
  for (LiftConvention c : kAllConventions) {
    if (auto r = power_lift_with(t, k, c)) return *r;
  }
  throw LemmaViolation("power_lift_block: no block convention meets the type contract");
}

std::optional<RealizationTuple> belyi_lift_with(const RealizationTuple& t, int r, LiftConvention convention) {
  check_canonical(t, "belyi_lift");
  if (r < 1) throw std::invalid_argument("belyi_lift: r must be positive");
  if (static_cast<int>(t.perms.size()) != r + 2) {
    throw std::invalid_argument("belyi_lift: tuple must have exactly r extra permutations");
  }
  const RealizationTuple lo = to_lift_order(t);
  const int n = t.degree;

  const Permutation zero = rotation(lo.perms[0], r, twist_on_top(convention));
  Permutation middle = Permutation::identity(r * n);
  for (int i = 1; i <= r; ++i) {
    const int block = descending(convention) ? r - i : i - 1;
    middle = middle * in_block(lo.perms[static_cast<std::size_t>(i)], r, block);
  }
  const Permutation third = (zero * middle).inverse();

  if (cycle_type(third) != scaled_type(lo.perms.back(), r)) return std::nullopt;
  const std::vector<Permutation> gens = {zero, middle};
  if (!is_transitive(gens, r * n)) return std::nullopt;

  RealizationTuple out;
  out.degree = r * n;
  out.perms = {zero, middle * third * middle.inverse(), middle};
  out.roles = {"zero", "pole", "extra-1"};
  return out;
}

RealizationTuple belyi_lift(const RealizationTuple& t, int r) {
  if (auto lifted = belyi_lift_with(t, r, kLiftConvention)) return *lifted;
  for (LiftConvention c : kAllConventions) {
    if (auto lifted = belyi_lift_with(t, r, c)) return *lifted;
  }
  throw LemmaViolation("belyi_lift: no block convention meets the type contract");
}

}  // namespace hurwitz
