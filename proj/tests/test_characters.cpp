#include <gtest/gtest.h>

#include "descent_lab/characters.hpp"
#include "oracles.hpp"

namespace descent_lab {
namespace {

Partition L(std::initializer_list<int> parts) { return Partition::from_parts(std::vector<int>(parts)); }

TEST(ConjugacyClasses, Sizes) {
  const auto c1 = conjugacy_classes(Rank(1));
  ASSERT_EQ(c1.size(), 2U);
  EXPECT_EQ(c1[0].size + c1[1].size, 2U);
  std::map<Partition, std::uint64_t> sizes;
  for (const auto& cls : conjugacy_classes(Rank(3))) sizes[cls.cycle_type] = cls.size;
  EXPECT_EQ(sizes[L({1, 1, 1, 1})], 1U);
  EXPECT_EQ(sizes[L({2, 1, 1})], 6U);
  EXPECT_EQ(sizes[L({2, 2})], 3U);
  EXPECT_EQ(sizes[L({3, 1})], 8U);
  EXPECT_EQ(sizes[L({4})], 6U);
  for (int n = 1; n <= 6; ++n) {
    const Rank r(n);
    std::map<Partition, std::uint64_t> counted;
    for (const auto& w : all_permutations(r)) ++counted[cycle_type(w)];
    std::uint64_t total = 0;
    for (const auto& cls : conjugacy_classes(r)) {
      EXPECT_EQ(cls.size, counted[cls.cycle_type]);
      total += cls.size;
    }
    EXPECT_EQ(total, factorial(n + 1));
    EXPECT_EQ(counted[L({n + 1})], factorial(n));
  }
}

TEST(ConjugacyClasses, RepresentativeHasRequestedType) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_partitions(Rank(n))) EXPECT_EQ(cycle_type(class_representative(p, Rank(n))), p);
  }
}

TEST(PermCharacter, Examples) {
  const Rank r(3);
  for (Strategy s : {Strategy::brute, Strategy::matrix}) {
    const auto trivial = perm_character(SimpleRootSet::full(r), r, s);
    for (const auto& [p, v] : trivial.values()) EXPECT_EQ(v, 1);
    const auto regular = perm_character({}, r, s);
    for (const auto& [p, v] : regular.values()) EXPECT_EQ(v, p == Partition::ones(4) ? 24 : 0);
    const auto natural = perm_character(SimpleRootSet::of({1, 2}), r, s);
    EXPECT_EQ(natural.at(L({1, 1, 1, 1})), 4);
    EXPECT_EQ(natural.at(L({2, 1, 1})), 2);
    EXPECT_EQ(natural.at(L({2, 2})), 0);
    EXPECT_EQ(natural.at(L({3, 1})), 1);
    EXPECT_EQ(natural.at(L({4})), 0);
  }
}

TEST(PermCharacter, PathsAgreeWithMaterializedCosets) {
  for (int n = 1; n <= 3; ++n) {
    const Rank r(n);
    for (const auto& j : enumerate_subsets(r)) {
      const auto brute = perm_character(j, r, Strategy::brute);
      ASSERT_EQ(brute, perm_character(j, r, Strategy::matrix));
      for (const auto& cls : conjugacy_classes(r)) {
        ASSERT_EQ(brute.at(cls.cycle_type), oracle::fixed_cosets(class_representative(cls.cycle_type, r), j, r));
      }
    }
  }
  for (int n = 4; n <= 5; ++n) {
    for (const auto& j : enumerate_subsets(Rank(n))) {
      ASSERT_EQ(perm_character(j, Rank(n), Strategy::brute), perm_character(j, Rank(n), Strategy::matrix));
    }
  }
}

// Degree is the index, and a transitive action has exactly one orbit.
TEST(PermCharacter, DegreeAndOrbitCount) {
  for (int n = 1; n <= 6; ++n) {
    const Rank r(n);
    for (const auto& j : enumerate_subsets(r)) {
      const auto chi = perm_character(j, r, Strategy::matrix);
      EXPECT_EQ(chi.at(Partition::ones(n + 1)), count_min_reps(j, r));
      Rational sum = 0;
      for (const auto& cls : conjugacy_classes(r)) sum += Rational(cls.size) * chi.at(cls.cycle_type);
      EXPECT_EQ(sum, Rational(factorial(n + 1)));
    }
  }
}

TEST(PermCharacter, ConstantOnClasses) {
  for (int n = 1; n <= 4; ++n) {
    const Rank r(n);
    for (const auto& j : enumerate_subsets(r)) {
      const auto chi = perm_character(j, r);
      for (const auto& g : all_permutations(r)) {
        ASSERT_EQ(chi.at(cycle_type(g)), oracle::fixed_cosets(g, j, r)) << to_string(g);
      }
      if (n == 3) break;  // one subset suffices at the slowest oracle size
    }
  }
}

TEST(Marks, Examples) {
  const Rank r(3);
  for (Strategy s : {Strategy::brute, Strategy::matrix}) {
    for (const auto& j : enumerate_subsets(r)) {
      EXPECT_EQ(mark(Partition::ones(4), j, r, s), count_min_reps(j, r));
    }
    EXPECT_EQ(mark(L({4}), SimpleRootSet::full(r), r, s), 1U);
    EXPECT_EQ(mark(L({4}), SimpleRootSet::of({1, 2}), r, s), 0U);
  }
}

TEST(Marks, PathsAgree) {
  for (int n = 1; n <= 5; ++n) {
    const Rank r(n);
    EXPECT_EQ(marks_matrix(r, Strategy::brute), marks_matrix(r, Strategy::matrix));
  }
}

// A single element of cycle type P fixes the same cosets as the whole of W_P.
TEST(Marks, EqualCharacterAtCycleType) {
  for (int n = 1; n <= 5; ++n) {
    const Rank r(n);
    for (const auto& j : enumerate_subsets(r)) {
      const auto chi = perm_character(j, r, Strategy::brute);
      for (const auto& p : enumerate_partitions(r)) ASSERT_EQ(Rational(mark(p, j, r, Strategy::brute)), chi.at(p));
    }
  }
}

// Averaging chi_J over W_Q counts W_Q-orbits on W/W_J, i.e. double cosets.
TEST(Marks, OrbitAverageCountsDoubleCosets) {
  for (int n = 1; n <= 4; ++n) {
    const Rank r(n);
    for (const auto& p : enumerate_partitions(r)) {
      const SimpleRootSet q = canonical_representative(p, r);
      const auto sub = parabolic_subgroup(q, r);
      for (const auto& j : enumerate_subsets(r)) {
        const auto chi = perm_character(j, r);
        Rational sum = 0;
        for (const auto& g : sub) sum += chi.at(cycle_type(g));
        ASSERT_EQ(sum / Rational(sub.size()), Rational(double_coset_reps(q, j, r).reps.size()));
      }
    }
  }
}

TEST(Marks, NonzeroExactlyWhenRefined) {
  for (int n = 1; n <= 5; ++n) {
    const Rank r(n);
    for (const auto& lambda : enumerate_partitions(r)) {
      const SimpleRootSet j = canonical_representative(lambda, r);
      for (const auto& p : enumerate_partitions(r)) {
        ASSERT_EQ(mark(p, j, r) != 0, oracle::refines(p, lambda)) << to_string(p) << " " << to_string(lambda);
      }
    }
  }
}

TEST(Isomorphisms, BurnsideAndCharacter) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(verify_burnside_iso(Rank(n))) << "rank " << n;
    EXPECT_TRUE(verify_character_iso(Rank(n))) << "rank " << n;
  }
  EXPECT_EQ(determinant(marks_matrix(Rank(1))), 2);
}

TEST(ClassFunction, Arithmetic) {
  const Rank r(2);
  const auto chi = perm_character(SimpleRootSet::of({1}), r);
  const auto doubled = chi + chi;
  EXPECT_EQ(doubled, Rational(2) * chi);
  EXPECT_EQ((chi * chi).at(Partition::ones(3)), 9);
  EXPECT_THROW(chi.at(L({2, 2})), InvalidPartition);
}

}  // namespace
}  // namespace descent_lab
