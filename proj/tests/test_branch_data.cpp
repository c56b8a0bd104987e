#include <stdexcept>
#include <algorithm>

#include "doctest.h"
#include "hurwitz/branch_data.hpp"

using namespace hurwitz;

namespace {

BranchData B(int d, const char* text) { return BranchData::parse(d, text); }

std::vector<int> sorted_entries(const ResidueVector& rv) {
  std::vector<int> e(rv.entries().begin(), rv.entries().end());
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_SUITE("branch_data") {
  TEST_CASE("partition basics") {
    const Partition p = Partition::parse("(1,3)");
    CHECK(p.parts()[0] == 3);
    CHECK(p.total() == 4);
    CHECK(p.length() == 2);
    CHECK(p.weight() == 3);
    CHECK(p.to_string() == "(3,1)");
    CHECK(Partition::hook(5, 2) == Partition({3, 1, 1}));
    CHECK(Partition({3, 1, 1}).hook_excess() == 2);
    CHECK(Partition({2, 2}).hook_excess() == 0);
    CHECK(Partition::trivial(3).is_trivial());
    CHECK(Partition({2, 1}).scaled(3) == Partition({6, 3}));
    CHECK_THROWS_AS(Partition({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("(2,x)"), std::invalid_argument);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(5, 2).size() == 3);
  }

  TEST_CASE("branch data parsing") {
    const BranchData bd = B(4, "(2,2) (2,2) (3,1)");
    CHECK(bd.size() == 3);
    CHECK(bd == B(4, "(3,1) (2,2) (2,2)"));
    CHECK_THROWS_AS(B(4, "(2,1)"), std::invalid_argument);
    CHECK(B(3, "(3) (1,1,1) (2,1)").without_trivial().size() == 2);
  }

  TEST_CASE("total branching and compatibility") {
    CHECK(total_branching(B(4, "(2,2) (2,2) (3,1)")) == 6);
    CHECK(total_branching(B(2, "(2) (2)")) == 2);
    CHECK(total_branching(B(3, "(3) (3) (2,1)")) == 5);
    CHECK(is_compatible(B(4, "(2,2) (2,2) (3,1)")));
    CHECK_FALSE(is_compatible(B(3, "(3) (3) (2,1)")));
    CHECK(is_compatible(B(2, "(2) (2)")));
  }

  TEST_CASE("cover genus") {
    CHECK(cover_genus(B(4, "(2,2) (2,2) (3,1)")).value() == 0);
    CHECK(cover_genus(B(2, "(2) (2)")).value() == 0);
    CHECK(cover_genus(B(8, "(2,6) (4,4) (2,2,1,1,1,1)")).value() == 0);
    CHECK_FALSE(cover_genus(B(3, "(3) (3) (2,1)")).is_integer());
    CHECK(cover_genus(B(2, "(2) (2) (2) (2)")).value() == 1);
    CHECK(cover_genus(B(2, "(2) (2)"), 1).value() == 2);
  }

  TEST_CASE("residue vectors") {
    CHECK(sorted_entries(residue_vector_of(Partition({2, 2}), Partition({2, 2}))) == std::vector<int>{-2, -2, 2, 2});
    CHECK(sorted_entries(residue_vector_of(Partition({1, 3}), Partition({2, 2}))) == std::vector<int>{-2, -2, 1, 3});
    CHECK(sorted_entries(residue_vector_of(Partition({3}), Partition({1, 1, 1}))) == std::vector<int>{-1, -1, -1, 3});
    CHECK_THROWS_AS(residue_vector_of(Partition({3}), Partition({2})), std::invalid_argument);
    CHECK_THROWS_AS(ResidueVector({1, 0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(ResidueVector({2, -1}), std::invalid_argument);

    CHECK(rv_degree(ResidueVector({2, 2, -2, -2})) == 2);
    CHECK(rv_degree(ResidueVector({1, 3, -2, -2})) == 4);
    CHECK(rv_degree(ResidueVector({1, 1, 1, -1, -1, -1})) == 3);

    const auto r1 = primitive_reduce(ResidueVector({2, 2, -2, -2}));
    CHECK(r1.primitive == ResidueVector({1, 1, -1, -1}));
    CHECK(r1.factor == 2);
    const auto r2 = primitive_reduce(ResidueVector({1, 3, -2, -2}));
    CHECK(r2.primitive == ResidueVector({1, 3, -2, -2}));
    CHECK(r2.factor == 1);
    const auto r3 = primitive_reduce(ResidueVector({4, 2, -2, -2, -2}));
    CHECK(r3.primitive == ResidueVector({2, 1, -1, -1, -1}));
    CHECK(r3.factor == 2);
    CHECK(is_primitive(r3.primitive));
  }

  TEST_CASE("primitive reduction keeps the degree") {
    for (int d = 2; d <= 9; ++d) {
      for (const auto& a : partitions_of(d)) {
        for (const auto& b : partitions_of(d)) {
          const ResidueVector rv = residue_vector_of(a, b);
          CHECK(rv_degree(primitive_reduce(rv).primitive) == rv_degree(rv));
        }
      }
    }
  }

  TEST_CASE("classify form") {
    const auto f1 = classify_form(B(4, "(2,2) (2,2) (3,1)"));
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].a == Partition({2, 2}));
    CHECK(f1[0].b == Partition({2, 2}));
    CHECK(f1[0].lambda == Partition({2}));

    const auto f2 = classify_form(B(4, "(1,3) (2,2) (2,1,1) (2,1,1)"));
    const MainForm want{4, Partition({3, 1}), Partition({2, 2}), Partition({1, 1})};
    CHECK(std::find(f2.begin(), f2.end(), want) != f2.end());

    CHECK(classify_form(B(3, "(3) (1,1,1) (2,1)")).empty());
    CHECK(classify_form(B(2, "(2) (2)")).empty());
  }

  TEST_CASE("forms reproduce their collection and have genus zero") {
    for (int d = 2; d <= 7; ++d) {
      for (const auto& a : partitions_of(d)) {
        for (const auto& b : partitions_of(d)) {
          const int m = a.length() + b.length() - 2;
          if (m <= 0 || a.is_trivial() || b.is_trivial()) continue;
          for (const auto& lambda : partitions_of(m, d - 1)) {
            const MainForm form{d, a, b, lambda};
            const BranchData bd = form.to_branch_data();
            CHECK(cover_genus(bd).twice == 0);
            for (const auto& f : classify_form(bd)) CHECK(f.to_branch_data() == bd);
            const auto forms = classify_form(bd);
            const bool has_self = std::any_of(forms.begin(), forms.end(), [&](const MainForm& f) {
              return (f.a == a && f.b == b) || (f.a == b && f.b == a);
            });
            CHECK(has_self);
          }
        }
      }
    }
  }

  TEST_CASE("largest zero exceeds smallest pole when the degree exceeds m") {
    for (int d = 2; d <= 9; ++d) {
      for (const auto& a : partitions_of(d)) {
        for (const auto& b : partitions_of(d)) {
          const int m = a.length() + b.length() - 2;
          if (m <= 0 || a.length() > b.length()) continue;
          if (rv_degree(residue_vector_of(a, b)) <= m) continue;
          const int smallest_pole = b.parts().back();
          CHECK(a.weight() > smallest_pole);
        }
      }
    }
  }
}
