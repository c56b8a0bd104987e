#ifndef HURWITZ_BRANCH_DATA_HPP
#define HURWITZ_BRANCH_DATA_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// A degree d together with a multiset of partitions of d.
///
/// Trivial partitions (1,...,1) are allowed here; realizability entry points
/// drop them through without_trivial(). Comparison is multiset comparison.
class BranchData {
 public:
  /// Throws std::invalid_argument if degree < 1 or some partition does not
  /// total `degree`.
  BranchData(int degree, std::vector<Partition> partitions);

  /// Parses "(2,2) (2,2) (3,1)" against an explicit degree.
  static BranchData parse(int degree, std::string_view text);

  int degree() const { return degree_; }
  std::span<const Partition> partitions() const { return partitions_; }
  std::size_t size() const { return partitions_.size(); }

  BranchData without_trivial() const;
  /// Partitions sorted descending; the canonical multiset representative.
  std::vector<Partition> sorted_partitions() const;

  /// "(2,2) (2,2) (3,1)" in stored order.
  std::string to_string() const;

  friend bool operator==(const BranchData& lhs, const BranchData& rhs);

 private:
  int degree_;
  std::vector<Partition> partitions_;
};

/// v = sum over partitions of (d - length).
int total_branching(const BranchData& bd);

/// Total branching is even.
bool is_compatible(const BranchData& bd);

/// Genus of the covering surface, kept as twice its value so that an
/// incompatible collection yields a visible half-integer instead of a throw.
struct CoverGenus {
  long twice = 0;
  bool is_integer() const { return twice % 2 == 0; }
  long value() const { return twice / 2; }
  std::string to_string() const;
};

/// Solves v = 2g(X) - 2 - d(2g(Y) - 2) for g(X) with g(Y) = base_genus.
CoverGenus cover_genus(const BranchData& bd, int base_genus = 0);

/// Non-zero integers summing to zero: zero orders a_i as positive entries and
/// pole orders b_j as negated entries.
class ResidueVector {
 public:
  /// Throws std::invalid_argument on a zero entry, non-zero sum, or fewer than
  /// two entries.
  explicit ResidueVector(std::vector<int> entries);
  ResidueVector(std::vector<int> zeros, std::vector<int> poles);

  std::span<const int> entries() const { return entries_; }
  int components() const { return static_cast<int>(entries_.size()); }
  /// Positive entries in stored order.
  std::vector<int> zeros() const;
  /// Absolute values of the negative entries in stored order.
  std::vector<int> poles() const;
  /// Sum of the positive entries.
  int positive_sum() const;

  std::string to_string() const;

  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;

 private:
  std::vector<int> entries_;
};

/// (a_1, ..., a_p, -b_1, ..., -b_q). Throws std::invalid_argument when the
/// totals differ.
ResidueVector residue_vector_of(const Partition& a, const Partition& b);

/// GCD of the absolute values of all entries.
int rv_gcd(const ResidueVector& rv);

/// (sum of positive entries) / GCD(all entries).
int rv_degree(const ResidueVector& rv);

bool is_primitive(const ResidueVector& rv);

struct PrimitiveReduction {
  ResidueVector primitive;
  int factor;
};

/// Divides by the GCD of the entries.
PrimitiveReduction primitive_reduce(const ResidueVector& rv);

/// A designation of a collection as
///   (a_1..a_p), (b_1..b_q), (m_1+1,1..1), ..., (m_l+1,1..1)
/// with lambda = (m_1..m_l) a partition of p + q - 2 > 0.
struct MainForm {
  int degree;
  Partition a;
  Partition b;
  Partition lambda;

  /// (m_k+1, 1, ..., 1) for each part of lambda, in lambda's order.
  std::vector<Partition> extra_partitions() const;
  /// a, b, then the extra partitions.
  BranchData to_branch_data() const;
  ResidueVector residues() const { return residue_vector_of(a, b); }
  /// GCD(a_1..a_p, b_1..b_q).
  int gcd() const;

  friend bool operator==(const MainForm&, const MainForm&) = default;
};

/// Throws std::invalid_argument unless the fields satisfy the MainForm
/// invariants.
void validate(const MainForm& form);

/// Every designation of two partitions of `bd` as (a, b) such that all the
/// remaining partitions are hooks (m+1,1..1) with m >= 1 and the m's sum to
/// Len(a)+Len(b)-2 > 0. Pairs are unordered (a >= b) and duplicates removed.
std::vector<MainForm> classify_form(const BranchData& bd);

}  // namespace hurwitz

#endif  // HURWITZ_BRANCH_DATA_HPP
