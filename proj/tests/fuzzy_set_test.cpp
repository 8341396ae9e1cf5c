#include "flab/fuzzy_set.hpp"

#include <gtest/gtest.h>

#include <random>

#include "instances.hpp"

namespace flab {
namespace {

using testing::deg;

const FuzzySet s1{{"a", deg("0.5")}};
const FuzzySet s2{{"b", deg("0.8")}, {"c", deg("0.9")}};
const FuzzySet s3{{"a", deg("0.8")}, {"b", deg("0.8")}, {"c", deg("1")}};

TEST(FuzzySet, ZeroEntriesAreNeverStored) {
  FuzzySet s;
  s.set("a", deg("0.3"));
  s.set("a", Degree::zero());
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.at("a"), Degree::zero());
  EXPECT_EQ(s.at("missing"), Degree::zero());
}

TEST(FuzzySet, UnionIsPointwiseMax) {
  const FuzzySet expected{{"a", deg("0.8")}, {"b", deg("0.8")}, {"c", deg("1")}};
  EXPECT_EQ(fs_union(s2, s3), expected);
  EXPECT_EQ(fs_union(FuzzySet{}, s3), s3);
  EXPECT_EQ(fs_union(s1, s1), s1);
}

TEST(FuzzySet, IntersectionIsPointwiseMin) {
  EXPECT_EQ(fs_intersect(s1, s3), s1);
  EXPECT_EQ(fs_intersect(s3, FuzzySet{}), FuzzySet{});
  const FuzzySet left{{"a", deg("0.4")}};
  const FuzzySet right{{"b", deg("0.4")}};
  EXPECT_EQ(fs_intersect(left, right), FuzzySet{});
}

TEST(FuzzySet, ComplementOverUniverse) {
  const std::set<ArgumentId> universe{"a", "b", "c"};
  const FuzzySet expected{{"a", deg("0.2")}, {"b", deg("0.2")}};
  EXPECT_EQ(fs_complement(s3, universe), expected);
  EXPECT_EQ(fs_complement(FuzzySet{}, {"a"}), (FuzzySet{{"a", deg("1")}}));
  EXPECT_EQ(fs_complement(FuzzySet{{"a", deg("1")}}, {"a"}), FuzzySet{});
  EXPECT_THROW(fs_complement(s3, {"a"}), DomainError);
}

TEST(FuzzySet, SubsetIsPointwiseLeq) {
  EXPECT_TRUE(fs_subset(s1, s3));
  EXPECT_TRUE(fs_subset(s2, s3));
  EXPECT_FALSE(fs_subset(s3, s2));
  EXPECT_TRUE(fs_subset(FuzzySet{}, s2));
}

FuzzySet random_set(std::mt19937_64& rng) {
  static const std::vector<ArgumentId> names{"a", "b", "c", "d"};
  FuzzySet out;
  for (const auto& name : names)
    out.set(name, Degree(Rat(static_cast<std::int64_t>(rng() % 11), 10)));
  return out;
}

TEST(FuzzySet, AlgebraicLaws) {
  std::mt19937_64 rng(7);
  const std::set<ArgumentId> universe{"a", "b", "c", "d"};
  for (int trial = 0; trial < 500; ++trial) {
    const FuzzySet x = random_set(rng);
    const FuzzySet y = random_set(rng);
    const FuzzySet z = random_set(rng);
    EXPECT_EQ(fs_union(x, y), fs_union(y, x));
    EXPECT_EQ(fs_intersect(x, y), fs_intersect(y, x));
    EXPECT_EQ(fs_union(fs_union(x, y), z), fs_union(x, fs_union(y, z)));
    EXPECT_EQ(fs_intersect(fs_intersect(x, y), z), fs_intersect(x, fs_intersect(y, z)));
    EXPECT_EQ(fs_union(x, x), x);
    EXPECT_EQ(fs_intersect(x, x), x);
    EXPECT_EQ(fs_complement(fs_complement(x, universe), universe), x);
    EXPECT_EQ(fs_subset(x, y), fs_intersect(x, y) == x);
  }
}

}  // namespace
}  // namespace flab
