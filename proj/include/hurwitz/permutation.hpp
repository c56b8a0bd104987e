#ifndef HURWITZ_PERMUTATION_HPP
#define HURWITZ_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Bijection of {0, ..., n-1} in one-line notation.
///
/// Points are 0-based internally; all text I/O (parse, to_string) is 1-based
/// cycle notation such as "(1 2 3)(4 5)", with "id" for the identity.
class Permutation {
 public:
  Permutation() = default;

  /// `images[i]` is the image of i. Throws std::invalid_argument unless the
  /// images form a bijection of {0, ..., images.size()-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Builds a permutation from disjoint 0-based cycles.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  /// Single cycle (points[0] points[1] ... points[k-1]), 0-based.
  static Permutation cycle(int degree, std::span<const int> points);

  /// Transposition of two distinct 0-based points.
  static Permutation transposition(int degree, int x, int y);

  /// Parses 1-based cycle notation. Rejects repeated points and points
  /// outside 1..degree.
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Number of points moved.
  int support_size() const;
  bool moves(int x) const { return (*this)(x) != x; }

  /// 1-based cycle notation, cycles listed from their smallest point.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& lhs, const Permutation& rhs) {
    return lhs.images_ <=> rhs.images_;
  }

 private:
  std::vector<int> images_;
};

using CycleType = Partition;

/// Right-to-left product: the result applies `q` first, then `p`.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g p g^-1.
Permutation conjugate(const Permutation& p, const Permutation& g);

/// Orbit sizes of p including fixed points.
CycleType cycle_type(const Permutation& p);

/// Non-trivial cycles, each starting at its smallest point, ordered by that
/// smallest point. The identity yields an empty list.
std::vector<std::vector<int>> cycle_factors(const Permutation& p);

/// Like cycle_factors but also lists fixed points as 1-cycles.
std::vector<std::vector<int>> orbits_of(const Permutation& p);

/// Number of cycles including fixed points.
int cycle_count(const Permutation& p);

/// True iff the group generated by `perms` has a single orbit on {0..n-1}.
/// Uses union-find over generator images; the group is never materialized.
bool is_transitive(std::span<const Permutation> perms, int n);

/// Number of orbits of the group generated by `perms` on {0..n-1}.
int orbit_count(std::span<const Permutation> perms, int n);

/// An ordered list of permutations of one degree, each tagged with the role it
/// plays (e.g. "zero", "pole", "extra-1"). A realization additionally has
/// right-to-left product equal to the identity.
struct RealizationTuple {
  int degree = 0;
  std::vector<Permutation> perms;
  std::vector<std::string> roles;

  /// perms[0] * perms[1] * ... * perms[k-1].
  Permutation product() const;
  bool product_is_identity() const;

  friend bool operator==(const RealizationTuple&, const RealizationTuple&) = default;
};

/// Replaces the adjacent pair (x, y) at positions (i, i+1) by (x y x^-1, x);
/// roles travel with the permutations whose cycle types they describe.
/// Throws std::out_of_range unless i + 1 < perms.size().
RealizationTuple hurwitz_move(const RealizationTuple& t, std::size_t i);

/// Inverse of hurwitz_move: (u, v) -> (v, v^-1 u v).
RealizationTuple inverse_hurwitz_move(const RealizationTuple& t, std::size_t i);

}  // namespace hurwitz

#endif  // HURWITZ_PERMUTATION_HPP
