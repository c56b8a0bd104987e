#ifndef HURWITZ_PARTITION_HPP
#define HURWITZ_PARTITION_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

/// Integer partition stored with parts in non-increasing order.
///
/// Used both for branch-point partitions of a degree and for cycle types of
/// permutations (where fixed points appear as parts equal to 1).
class Partition {
 public:
  /// Sorts `parts` into non-increasing order. Throws std::invalid_argument
  /// for an empty list or a part below 1.
  explicit Partition(std::vector<int> parts);

  /// Parses "(2,2)", "(3 1)" or "3,1". Parts may appear in any order.
  static Partition parse(std::string_view text);

  /// (m+1, 1, ..., 1) as a partition of `degree`.
  static Partition hook(int degree, int m);

  /// (1, ..., 1) as a partition of `degree`.
  static Partition trivial(int degree);

  std::span<const int> parts() const { return parts_; }
  int total() const { return total_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Largest part.
  int weight() const { return parts_.front(); }
  bool is_trivial() const { return weight() == 1; }

  /// Parts scaled by `factor`.
  Partition scaled(int factor) const;

  /// If this partition is (m+1, 1, ..., 1) with m >= 1, returns m; otherwise 0.
  int hook_excess() const;

  /// Formats as "(3,1)".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& lhs, const Partition& rhs) {
    return lhs.parts_ <=> rhs.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// All partitions of n with every part at most `max_part`, in reverse
/// lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n, int max_part);
inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

}  // namespace hurwitz

#endif  // HURWITZ_PARTITION_HPP
