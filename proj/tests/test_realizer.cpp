#include <stdexcept>
#include <algorithm>

#include "doctest.h"
#include "hurwitz/realizer.hpp"

using namespace hurwitz;

namespace {

Permutation P(const char* text, int n) { return Permutation::parse(text, n); }
BranchData B(int d, const char* text) { return BranchData::parse(d, text); }

std::vector<int> sorted_entries(const ResidueVector& rv) {
  std::vector<int> e(rv.entries().begin(), rv.entries().end());
  std::sort(e.begin(), e.end());
  return e;
}

Permutation product_of(const std::vector<Permutation>& perms, int n) {
  Permutation p = Permutation::identity(n);
  for (const auto& q : perms) p = p * q;
  return p;
}

// Collection realized by realize_main(rv, lambda).
BranchData collection_of(const ResidueVector& rv, const Partition& lambda) {
  const int d = rv_degree(rv);
  std::vector<Partition> parts = {Partition(rv.zeros()), Partition(rv.poles())};
  for (int m : lambda.parts()) parts.push_back(Partition::hook(d, m));
  return BranchData(d, parts);
}

template <class F>
void for_each_primitive(int d_max, F f) {
  for (int d = 1; d <= d_max; ++d) {
    for (const auto& a : partitions_of(d)) {
      for (const auto& b : partitions_of(d)) {
        const ResidueVector rv = residue_vector_of(a, b);
        if (is_primitive(rv)) f(rv);
      }
    }
  }
}

}  // namespace

TEST_SUITE("realizer") {
  TEST_CASE("contraction examples") {
    const Contraction c1 = contract(ResidueVector({1, 3, -2, -2}));
    CHECK(sorted_entries(c1.result) == std::vector<int>{-2, 1, 1});
    CHECK(c1.source.zeros()[static_cast<std::size_t>(c1.zero_index)] == 3);
    CHECK(c1.source.poles()[static_cast<std::size_t>(c1.pole_index)] == 2);

    CHECK(sorted_entries(contract(ResidueVector({2, -1, -1})).result) == std::vector<int>{-1, 1});
    CHECK(sorted_entries(contract(ResidueVector({3, -1, -1, -1})).result) == std::vector<int>{-1, -1, 2});
    CHECK_THROWS_AS(contract(ResidueVector({1, -1})), std::invalid_argument);
    CHECK_THROWS_AS(contract(ResidueVector({2, 2, -2, -2})), std::invalid_argument);
  }

  TEST_CASE("contraction invariants") {
    for_each_primitive(10, [](const ResidueVector& rv) {
      const int m = rv.components() - 2;
      if (m < 1 || rv_degree(rv) <= m || rv.zeros().size() > rv.poles().size()) return;
      const Contraction c = contract(rv);
      CHECK(c.result.components() == rv.components() - 1);
      CHECK(rv_degree(c.result) > m - 1);
      long sum = 0;
      for (int e : c.result.entries()) {
        CHECK(e != 0);
        sum += e;
      }
      CHECK(sum == 0);
      const int reduced = c.source.zeros()[static_cast<std::size_t>(c.zero_index)] -
                          c.source.poles()[static_cast<std::size_t>(c.pole_index)];
      CHECK(reduced > 0);
    });
  }

  TEST_CASE("three-permutation construction examples") {
    const RealizationTuple t = realize_three(ResidueVector({3, -1, -1, -1}));
    CHECK(t.perms[0] == P("(1 2 3)", 3));
    CHECK(t.perms[1].is_identity());
    CHECK(t.perms[2] == P("(3 2 1)", 3));
    CHECK(t.roles == std::vector<std::string>{"zero", "pole", "extra-1"});

    const RealizationTuple u = realize_three(ResidueVector({1, 3, -2, -2}));
    CHECK(verify_realization(B(4, "(1,3) (2,2) (3,1)"), u).ok());

    const RealizationTuple w = realize_three(ResidueVector({1, -1}));
    CHECK(w.degree == 1);
    CHECK(w.product_is_identity());

    CHECK_THROWS_AS(realize_three(ResidueVector({2, 2, -2, -2})), std::invalid_argument);
    CHECK_THROWS_AS(realize_three(ResidueVector({1, 1, -1, -1})), std::invalid_argument);
  }

  TEST_CASE("three-permutation construction meets every cycle of zero and pole") {
    for_each_primitive(10, [](const ResidueVector& rv) {
      const int m = rv.components() - 2;
      if (rv_degree(rv) <= m) return;
      const RealizationTuple t = realize_three(rv);
      if (m == 0) {
        CHECK(t.product_is_identity());
        CHECK(is_transitive(t.perms, t.degree));
        return;
      }
      CHECK(verify_realization(collection_of(rv, Partition({m})), t).ok());
      const Permutation& sigma = t.perms[2];
      for (int k = 0; k < 2; ++k) {
        for (const auto& cyc : orbits_of(t.perms[static_cast<std::size_t>(k)])) {
          const bool meets = std::any_of(cyc.begin(), cyc.end(), [&](int x) { return sigma.moves(x); });
          CHECK(meets);
        }
      }
    });
  }

  TEST_CASE("unit residue construction examples") {
    const auto c1 = realize_ones(2, Partition({2, 2}));
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == P("(1 2 3)", 3));
    CHECK(c1[1] == P("(1 3 2)", 3));

    const auto c2 = realize_ones(2, Partition({2, 1, 1}));
    REQUIRE(c2.size() == 3);
    CHECK(c2[0] == P("(1 2)", 3));
    CHECK(c2[1] == P("(1 3)", 3));
    CHECK(c2[2] == P("(1 2 3)", 3));

    const std::vector<int> parts = {1, 1, 2, 2};
    const auto c3 = realize_ones(3, parts);
    REQUIRE(c3.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(c3[k].support_size() == parts[k] + 1);
    CHECK(product_of(c3, 4).is_identity());
    CHECK(is_transitive(c3, 4));

    CHECK_THROWS_AS(realize_ones(2, Partition({3, 1})), std::invalid_argument);
    CHECK_THROWS_AS(realize_ones(2, Partition({4})), std::invalid_argument);
  }

  TEST_CASE("unit residue construction in every order") {
    for (int D = 1; D <= 6; ++D) {
      for (const auto& lambda : partitions_of(2 * D, D)) {
        if (lambda.length() < 2) continue;
        std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
        std::sort(parts.begin(), parts.end());
        do {
          const auto cycles = realize_ones(D, parts);
          REQUIRE(cycles.size() == parts.size());
          for (std::size_t k = 0; k < parts.size(); ++k) CHECK(cycles[k].support_size() == parts[k] + 1);
          CHECK(product_of(cycles, D + 1).is_identity());
          CHECK(is_transitive(cycles, D + 1));
        } while (std::next_permutation(parts.begin(), parts.end()));
      }
    }
  }

  TEST_CASE("split cycle") {
    CHECK(split_cycle(P("(1 2 3)", 3), Partition({2})) == std::vector<Permutation>{P("(1 2 3)", 3)});
    CHECK(split_cycle(P("(1 2 3)", 3), Partition({1, 1})) == std::vector<Permutation>{P("(1 2)", 3), P("(2 3)", 3)});
    CHECK(split_cycle(P("(1 2 3 4 5)", 5), Partition({2, 2})) ==
          std::vector<Permutation>{P("(1 2 3)", 5), P("(3 4 5)", 5)});
    CHECK_THROWS_AS(split_cycle(P("(1 2)(3 4)", 4), Partition({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(split_cycle(P("(1 2 3)", 3), Partition({1})), std::invalid_argument);

    const Permutation sigma = P("(2 7 4 1 6 3)", 8);
    const std::vector<int> parts = {2, 1, 2};
    const auto pieces = split_cycle(sigma, parts);
    CHECK(product_of(pieces, 8) == sigma);
    for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
      int shared = 0;
      for (int x = 0; x < 8; ++x) shared += pieces[k].moves(x) && pieces[k + 1].moves(x) ? 1 : 0;
      CHECK(shared == 1);
    }
  }

  TEST_CASE("main construction examples") {
    const RealizationTuple t1 = realize_main(ResidueVector({1, 1, -1, -1}), Partition({1, 1}));
    CHECK(t1.perms[0].is_identity());
    CHECK(t1.perms[1].is_identity());
    CHECK(t1.perms[2] == P("(1 2)", 2));
    CHECK(t1.perms[3] == P("(1 2)", 2));

    const RealizationTuple t2 = realize_main(ResidueVector({2, 1, -1, -1, -1}), Partition({1, 1, 1}));
    CHECK(t2.perms == std::vector<Permutation>{P("(1 2)", 3), P("id", 3), P("(1 3)", 3), P("(2 3)", 3), P("(1 3)", 3)});

    const RealizationTuple t3 = realize_main(ResidueVector({1, 2, -1, -1, -1}), Partition({2, 1}));
    CHECK(verify_realization(B(3, "(2,1) (1,1,1) (2,1) (3)"), t3).ok());

    CHECK_THROWS_AS(realize_main(ResidueVector({2, 2, -2, -2}), Partition({2})), std::invalid_argument);
    CHECK_THROWS_AS(realize_main(ResidueVector({3, -1, -1, -1}), Partition({1})), std::invalid_argument);
    CHECK_THROWS_AS(realize_main(ResidueVector({1, 1, -1, -1}), Partition({2})), std::invalid_argument);
  }

  TEST_CASE("main construction on every primitive vector up to degree 8") {
    for_each_primitive(8, [](const ResidueVector& rv) {
      const int m = rv.components() - 2;
      const int d = rv_degree(rv);
      if (m < 1) return;
      for (const auto& lambda : partitions_of(m, d - 1)) {
        const RealizationTuple t = realize_main(rv, lambda);
        CHECK(verify_realization(collection_of(rv, lambda), t).ok());
        for (std::size_t k = 0; k < static_cast<std::size_t>(lambda.length()); ++k) {
          CHECK(t.perms[k + 2].support_size() == lambda.parts()[k] + 1);
        }
      }
    });
  }

  TEST_CASE("end to end realize") {
    const Realization bad = realize(B(4, "(2,2) (2,2) (3,1)"));
    CHECK_FALSE(bad.verdict.realizable);
    CHECK_FALSE(bad.tuple.has_value());

    const Realization r1 = realize(B(4, "(1,3) (2,2) (3,1)"));
    REQUIRE(r1.tuple.has_value());
    CHECK(verify_realization(B(4, "(1,3) (2,2) (3,1)"), *r1.tuple).ok());

    const BranchData lifted = B(6, "(4,2) (2,2,2) (2,1,1,1,1) (3,1,1,1)");
    const Realization r2 = realize(lifted);
    REQUIRE(r2.tuple.has_value());
    CHECK(verify_realization(lifted, *r2.tuple).ok());

    const Realization r3 = realize(B(2, "(2) (2)"));
    REQUIRE(r3.tuple.has_value());
    CHECK(r3.tuple->perms == std::vector<Permutation>{P("(1 2)", 2), P("(1 2)", 2)});

    const Realization r4 = realize(B(4, "(1,3) (2,2) (1,1,1,1) (3,1)"));
    CHECK(r4.dropped_trivial);
    REQUIRE(r4.tuple.has_value());
    CHECK(verify_realization(B(4, "(1,3) (2,2) (1,1,1,1) (3,1)"), *r4.tuple).ok());

    CHECK_THROWS_AS(realize(B(4, "(2,2) (2,2) (2,2)")), OutsideFormError);
  }

  TEST_CASE("realize_form keeps trivial designations") {
    const MainForm form{3, Partition({3}), Partition({1, 1, 1}), Partition({2})};
    const RealizationTuple t = realize_form(form);
    CHECK(t.perms.size() == 3);
    CHECK(t.perms[1].is_identity());
    CHECK(verify_realization(form.to_branch_data(), t).ok());
    CHECK_THROWS_AS(realize_form(MainForm{4, Partition({2, 2}), Partition({2, 2}), Partition({2})}),
                    std::invalid_argument);
  }

  TEST_CASE("verification report") {
    const RealizationTuple ok{2, {P("(1 2)", 2), P("(1 2)", 2)}, {"zero", "pole"}};
    const VerificationReport r1 = verify_realization(B(2, "(2) (2)"), ok);
    CHECK(r1.ok());
    CHECK(r1.genus.value() == 0);

    const RealizationTuple bad{3, {P("(1 2)", 3), P("(1 3)", 3)}, {"zero", "pole"}};
    const VerificationReport r2 = verify_realization(B(3, "(2,1) (2,1)"), bad);
    CHECK_FALSE(r2.product_identity);
    CHECK(r2.types_match);

    const RealizationTuple wide{3, {P("(1 2)", 3), P("(1 2)", 3)}, {"zero", "pole"}};
    const VerificationReport r3 = verify_realization(B(2, "(2) (2)"), wide);
    CHECK_FALSE(r3.degree_match);
    CHECK_FALSE(r3.ok());

    const RealizationTuple oracle_witness{4, {P("(2 3 4)", 4), P("(1 2)(3 4)", 4), P("(1 2 3)", 4)}, {"a", "b", "c"}};
    const VerificationReport r4 = verify_realization(B(4, "(1,3) (2,2) (3,1)"), oracle_witness);
    CHECK(r4.ok());
  }
}
