#include <gtest/gtest.h>

#include "descent_lab/class_algebra.hpp"
#include "oracles.hpp"

namespace descent_lab {
namespace {

Partition L(std::initializer_list<int> parts) { return Partition::from_parts(std::vector<int>(parts)); }

ClassElement c(Rank r, std::initializer_list<std::pair<Partition, int>> terms) {
  ClassElement e(r);
  for (const auto& [p, k] : terms) e.add(p, Rational(k));
  return e;
}

TEST(ClassOf, Examples) {
  const Rank r(3);
  EXPECT_EQ(class_of(SimpleRootSet::full(r), r), L({4}));
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(class_of(SimpleRootSet::of({k}), r), L({2, 1, 1}));
  EXPECT_EQ(class_of(SimpleRootSet::of({1, 3}), r), L({2, 2}));
}

TEST(CanonicalRepresentative, Examples) {
  const Rank r(3);
  EXPECT_EQ(canonical_representative(L({4}), r), SimpleRootSet::full(r));
  EXPECT_EQ(canonical_representative(L({1, 1, 1, 1}), r), SimpleRootSet());
  EXPECT_EQ(canonical_representative(L({3, 1}), r), SimpleRootSet::of({1, 2}));
  EXPECT_THROW(canonical_representative(L({3, 2}), r), InvalidPartition);
  for (const auto& p : enumerate_partitions(r)) EXPECT_EQ(class_of(canonical_representative(p, r), r), p);
}

TEST(MultiplyClasses, Examples) {
  const Rank r(3);
  for (const auto& mu : enumerate_partitions(r)) {
    EXPECT_EQ(multiply_classes(L({4}), mu, r), ClassElement::basis(mu, r));
  }
  EXPECT_EQ(multiply_classes(L({3, 1}), L({3, 1}), r), c(r, {{L({3, 1}), 1}, {L({2, 1, 1}), 1}}));
  EXPECT_EQ(multiply_classes(L({2, 1, 1}), L({2, 1, 1}), r),
            c(r, {{L({2, 1, 1}), 2}, {L({1, 1, 1, 1}), 5}}));
  EXPECT_THROW(multiply_classes(L({4}), L({2, 1}), r), InvalidPartition);
}

// The full reference multiplication table for rank 3, basis (4),(3,1),(2,2),(2,1,1),(1^4).
TEST(ClassAlgebra, ReferenceTableAtRankThree) {
  const Rank r(3);
  const auto l1 = L({4}), l2 = L({3, 1}), l3 = L({2, 2}), l4 = L({2, 1, 1}), l5 = L({1, 1, 1, 1});
  const std::vector<Partition> basis{l1, l2, l3, l4, l5};
  const std::vector<std::vector<ClassElement>> expected{
      {c(r, {{l1, 1}}), c(r, {{l2, 1}}), c(r, {{l3, 1}}), c(r, {{l4, 1}}), c(r, {{l5, 1}})},
      {c(r, {{l2, 1}}), c(r, {{l2, 1}, {l4, 1}}), c(r, {{l4, 2}}), c(r, {{l4, 2}, {l5, 1}}), c(r, {{l5, 4}})},
      {c(r, {{l3, 1}}), c(r, {{l4, 2}}), c(r, {{l3, 2}, {l5, 1}}), c(r, {{l4, 2}, {l5, 2}}), c(r, {{l5, 6}})},
      {c(r, {{l4, 1}}), c(r, {{l4, 2}, {l5, 1}}), c(r, {{l4, 2}, {l5, 2}}), c(r, {{l4, 2}, {l5, 5}}),
       c(r, {{l5, 12}})},
      {c(r, {{l5, 1}}), c(r, {{l5, 4}}), c(r, {{l5, 6}}), c(r, {{l5, 12}}), c(r, {{l5, 24}})},
  };
  for (Strategy s : {Strategy::brute, Strategy::matrix}) {
    const auto algebra = ClassAlgebra::build(r, s);
    ASSERT_EQ(algebra.basis(), basis);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        EXPECT_EQ(algebra.product(i, j), expected[i][j])
            << to_string(basis[i]) << "*" << to_string(basis[j]) << " via " << to_string(s);
      }
    }
  }
}

// Orbit counting on pairs of ordered set partitions is an independent route to the product.
TEST(ClassAlgebra, MatchesBurnsideOrbitCount) {
  for (int n = 1; n <= 4; ++n) {
    const Rank r(n);
    for (const auto& j : enumerate_subsets(r)) {
      for (const auto& k : enumerate_subsets(r)) {
        ClassElement expected(r);
        for (const auto& [p, count] : oracle::burnside_product(j, k, r)) expected.add(p, Rational(count));
        ASSERT_EQ(collapse(structure_row(j, k, r), r), expected) << to_string(j) << " " << to_string(k);
      }
    }
  }
}

TEST(WellDefined, RepresentativeIndependence) {
  for (int n : {1, 3, 4}) EXPECT_TRUE(verify_well_defined(Rank(n))) << "rank " << n;
  EXPECT_TRUE(verify_well_defined(Rank(5), Strategy::matrix));
}

TEST(Projection, Examples) {
  const Rank r(3);
  EXPECT_EQ(project(SolomonElement::basis(SimpleRootSet::full(r), r)), ClassElement::basis(L({4}), r));
  EXPECT_TRUE(project(SolomonElement::basis(SimpleRootSet::of({1}), r) -
                      SolomonElement::basis(SimpleRootSet::of({3}), r))
                  .is_zero());
  EXPECT_EQ(projection_kernel_dimension(r), 3U);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(projection_kernel_dimension(Rank(n)), (std::size_t{1} << n) - oracle::partition_count(n + 1));
  }
}

TEST(Projection, IsMultiplicative) {
  for (int n = 1; n <= 4; ++n) {
    const Rank r(n);
    for (const auto& j : enumerate_subsets(r)) {
      for (const auto& k : enumerate_subsets(r)) {
        const auto xj = SolomonElement::basis(j, r);
        const auto xk = SolomonElement::basis(k, r);
        ASSERT_EQ(project(multiply(xj, xk)), multiply(project(xj), project(xk)));
      }
    }
  }
}

TEST(ClassAlgebra, Dimensions) {
  const std::size_t expected[] = {2, 3, 5, 7, 11};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(ClassAlgebra::shared(Rank(n))->dimension(), expected[n - 1]);
    EXPECT_EQ(enumerate_subsets(Rank(n)).size(), std::size_t{1} << n);
  }
}

TEST(ClassAlgebra, Commutative) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(verify_commutative(Rank(n))) << "rank " << n;
  const Rank r(3);
  EXPECT_EQ(multiply_classes(L({3, 1}), L({2, 2}), r), c(r, {{L({2, 1, 1}), 2}}));
  EXPECT_EQ(multiply_classes(L({2, 2}), L({3, 1}), r), c(r, {{L({2, 1, 1}), 2}}));
}

TEST(ClassAlgebra, AssociativeWithIdentity) {
  for (int n = 1; n <= 4; ++n) {
    const Rank r(n);
    const auto algebra = ClassAlgebra::shared(r);
    const auto one = ClassElement::basis(L({n + 1}), r);
    for (const auto& a : algebra->basis()) {
      const auto xa = ClassElement::basis(a, r);
      ASSERT_EQ(algebra->multiply(one, xa), xa);
      for (const auto& b : algebra->basis()) {
        for (const auto& cc : algebra->basis()) {
          const auto xb = ClassElement::basis(b, r);
          const auto xc = ClassElement::basis(cc, r);
          ASSERT_EQ(algebra->multiply(algebra->multiply(xa, xb), xc),
                    algebra->multiply(xa, algebra->multiply(xb, xc)));
        }
      }
    }
  }
}

TEST(TraceForm, RankOneGram) {
  const auto g = gram_matrix(Rank(1));
  ASSERT_EQ(g.entries.rows(), 2U);
  EXPECT_EQ(g.entries(0, 0), 2);
  EXPECT_EQ(g.entries(0, 1), 2);
  EXPECT_EQ(g.entries(1, 0), 2);
  EXPECT_EQ(g.entries(1, 1), 4);
  EXPECT_EQ(determinant(g.entries), 4);
}

TEST(TraceForm, Semisimple) {
  for (int n = 1; n <= 5; ++n) {
    const auto g = gram_matrix(Rank(n));
    EXPECT_TRUE(g.entries.is_symmetric());
    EXPECT_NE(determinant(g.entries), 0) << "rank " << n;
    EXPECT_TRUE(is_semisimple(Rank(n)));
  }
}

TEST(ClassElement, RankAndPartitionChecks) {
  ClassElement e(Rank(3));
  EXPECT_THROW(e.add(L({2, 1}), 1), InvalidPartition);
  EXPECT_THROW(e += ClassElement(Rank(2)), RankMismatch);
}

}  // namespace
}  // namespace descent_lab
