#include "realizer_detail.hpp"

#include <algorithm>
#include <functional>

#include "hurwitz/realizer.hpp"

namespace hurwitz::detail {

RealizationTuple to_tuple(const Frame& frame) {
  RealizationTuple t;
  t.degree = frame.degree;
  t.perms = {frame.tau1, frame.tau2};
  t.roles = {"zero", "pole"};
  for (std::size_t k = 0; k < frame.sigmas.size(); ++k) {
    t.perms.push_back(frame.sigmas[k]);
    t.roles.push_back("extra-" + std::to_string(k + 1));
  }
  return t;
}

Frame to_frame(const RealizationTuple& t) {
  if (t.perms.size() < 2) throw std::invalid_argument("realization tuple needs a zero and a pole permutation");
  Frame frame;
  frame.degree = t.degree;
  frame.tau1 = t.perms[0];
  frame.tau2 = t.perms[1];
  frame.sigmas.assign(t.perms.begin() + 2, t.perms.end());
  return frame;
}

Permutation embed(const Permutation& p, int n) {
  std::vector<int> images(p.images().begin(), p.images().end());
  for (int x = p.degree(); x < n; ++x) images.push_back(x);
  return Permutation(std::move(images));
}

Frame embed(const Frame& frame, int n) {
  Frame out;
  out.degree = n;
  out.tau1 = embed(frame.tau1, n);
  out.tau2 = embed(frame.tau2, n);
  for (const auto& s : frame.sigmas) out.sigmas.push_back(embed(s, n));
  return out;
}

std::vector<int> cycle_points(const Permutation& p) {
  auto cycles = cycle_factors(p);
  if (cycles.size() != 1) throw LemmaViolation("expected a single cycle, got " + p.to_string());
  return cycles.front();
}

int walk_back(const Permutation& p, int start, const std::function<bool(int)>& pred) {
  const Permutation inv = p.inverse();
  int y = inv(start);
  for (int s = 1; s <= p.degree(); ++s, y = inv(y)) {
    if (pred(y)) return y;
    if (y == start) break;
  }
  return -1;
}

bool is_cycle_of_length(const Permutation& p, int length) {
  if (length == 1) return p.is_identity();
  auto cycles = cycle_factors(p);
  return cycles.size() == 1 && static_cast<int>(cycles.front().size()) == length;
}

namespace {

bool type_is(const Permutation& p, std::vector<int> parts) {
  return cycle_type(p) == Partition(std::move(parts));
}

}  // namespace

bool frame_ok(const Frame& frame, const std::vector<int>& zeros, const std::vector<int>& poles,
              const std::vector<int>& lambda) {
  if (frame.sigmas.size() != lambda.size()) return false;
  if (!type_is(frame.tau1, zeros) || !type_is(frame.tau2, poles)) return false;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (!is_cycle_of_length(frame.sigmas[k], lambda[k] + 1)) return false;
  }
  std::vector<Permutation> all = {frame.tau1, frame.tau2};
  all.insert(all.end(), frame.sigmas.begin(), frame.sigmas.end());
  Permutation prod = Permutation::identity(frame.degree);
  for (const auto& p : all) prod = prod * p;
  return prod.is_identity() && is_transitive(all, frame.degree);
}

void require_frame(const Frame& frame, const std::vector<int>& zeros, const std::vector<int>& poles,
                   const std::vector<int>& lambda, const std::string& what) {
  if (!frame_ok(frame, zeros, poles, lambda)) throw LemmaViolation(what + ": construction failed its check");
}

Frame swap_roles(const Frame& swapped) {
  Frame out;
  out.degree = swapped.degree;
  out.tau1 = swapped.tau2.inverse();
  out.tau2 = swapped.tau1.inverse();
  for (auto it = swapped.sigmas.rbegin(); it != swapped.sigmas.rend(); ++it) out.sigmas.push_back(it->inverse());
  return out;
}

void reorder_sigmas(Frame& frame, const std::vector<int>& lambda) {
  RealizationTuple t = to_tuple(frame);
  for (std::size_t target = 0; target < lambda.size(); ++target) {
    std::size_t found = target;
    while (found < lambda.size() && t.perms[found + 2].support_size() != lambda[target] + 1) ++found;
    if (found == lambda.size()) throw LemmaViolation("reorder_sigmas: no cycle of the requested length");
    for (std::size_t pos = found; pos > target; --pos) t = hurwitz_move(t, pos + 1);
  }
  frame = to_frame(t);
}

}  // namespace hurwitz::detail
