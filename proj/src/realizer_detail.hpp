#ifndef HURWITZ_SRC_REALIZER_DETAIL_HPP
#define HURWITZ_SRC_REALIZER_DETAIL_HPP

#include <functional>
#include <string>
#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz::detail {

/// tau1 * tau2 * sigmas[0] * ... = id.
struct Frame {
  int degree = 0;
  Permutation tau1;
  Permutation tau2;
  std::vector<Permutation> sigmas;
};

RealizationTuple to_tuple(const Frame& frame);
Frame to_frame(const RealizationTuple& t);

/// Copies p into S_n, n >= p.degree(), fixing the new letters.
Permutation embed(const Permutation& p, int n);
Frame embed(const Frame& frame, int n);

/// The single non-trivial cycle of p starting at its smallest point.
std::vector<int> cycle_points(const Permutation& p);

/// First point y = p^-s(start), s >= 1, with pred(y) true; -1 if none.
int walk_back(const Permutation& p, int start, const std::function<bool(int)>& pred);

/// Whether p is a single cycle of the given length (length 1 means identity).
bool is_cycle_of_length(const Permutation& p, int length);

/// Checks types, product and transitivity of a frame against the targets.
bool frame_ok(const Frame& frame, const std::vector<int>& zeros, const std::vector<int>& poles,
              const std::vector<int>& lambda);

/// Throws LemmaViolation with `what` unless frame_ok.
void require_frame(const Frame& frame, const std::vector<int>& zeros, const std::vector<int>& poles,
                   const std::vector<int>& lambda, const std::string& what);

/// Swaps zeros and poles: from a frame realizing (poles, zeros, reversed
/// lambda) builds one realizing (zeros, poles, lambda).
Frame swap_roles(const Frame& swapped);

/// Reorders sigmas by Hurwitz moves so that sigma k has length lambda[k]+1.
void reorder_sigmas(Frame& frame, const std::vector<int>& lambda);

/// Realization of the three-point data for an arbitrary (not necessarily
/// primitive) residue vector with degree > components - 2.
Frame realize_three_frame(const std::vector<int>& zeros, const std::vector<int>& poles);

}  // namespace hurwitz::detail

#endif  // HURWITZ_SRC_REALIZER_DETAIL_HPP
