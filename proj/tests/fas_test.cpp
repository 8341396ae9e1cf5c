#include "flab/fas.hpp"

#include <gtest/gtest.h>

#include "instances.hpp"

namespace flab {
namespace {

using testing::chain_fas;
using testing::cycle_fas;
using testing::deg;

TEST(Fas, ConstructionInvariants) {
  Fas fas;
  fas.add_argument("a", deg("0.8"));
  EXPECT_THROW(fas.add_argument("a", deg("0.5")), DomainError);
  EXPECT_THROW(fas.add_attack("a", "ghost", deg("1")), DomainError);
  fas.add_argument("b", deg("0"));
  fas.add_attack("a", "b", deg("0"));  // zero weight is not stored
  EXPECT_TRUE(fas.attacks().empty());
  EXPECT_EQ(fas.attack_weight("a", "b"), Degree::zero());
}

TEST(Fas, AttackersExcludeZeroDegreeSources) {
  const Fas chain = chain_fas();
  EXPECT_EQ(attackers(chain, "b"), std::set<ArgumentId>{"a"});
  EXPECT_EQ(attackers(chain, "a"), std::set<ArgumentId>{});
  EXPECT_THROW(attackers(chain, "ghost"), DomainError);

  Fas fas;
  fas.add_argument("a", deg("0"));
  fas.add_argument("b", deg("0.5"));
  fas.add_attack("a", "b", deg("0.5"));
  EXPECT_EQ(attackers(fas, "b"), std::set<ArgumentId>{});
}

TEST(Fas, AttackIntensityIsGodelTnorm) {
  EXPECT_EQ(attack_intensity(deg("0.7"), deg("0.6")), deg("0.6"));
  EXPECT_EQ(attack_intensity(deg("0.3"), deg("1")), deg("0.3"));
  EXPECT_EQ(attack_intensity(deg("0"), deg("0.9")), deg("0"));
  for (int b = 0; b <= 10; ++b)
    for (int w = 0; w <= 10; ++w) {
      const Degree intensity =
          attack_intensity(Degree(Rat(b, 10)), Degree(Rat(w, 10)));
      EXPECT_LE(intensity, Degree(Rat(b, 10)));
      EXPECT_LE(intensity, Degree(Rat(w, 10)));
    }
}

TEST(Fas, JointAttackIntensity) {
  const Fas chain = chain_fas();
  const FuzzySet s{{"a", deg("0.8")}, {"b", deg("0.2")}, {"c", deg("0.6")}};
  EXPECT_EQ(joint_attack_intensity(chain, s, "c"), deg("0.2"));
  EXPECT_EQ(joint_attack_intensity(chain, s, "a"), deg("0"));

  const Fas cycle = cycle_fas();
  const FuzzySet t{{"a", deg("0.8")}, {"b", deg("0.2")}};
  EXPECT_EQ(joint_attack_intensity(cycle, t, "b"), deg("0.8"));
  EXPECT_THROW(joint_attack_intensity(cycle, t, "ghost"), DomainError);
}

TEST(Fas, ClassifyAttack) {
  EXPECT_EQ(classify_attack(deg("0.7"), deg("0.9"), deg("0.6")),
            AttackClass::Sufficient);
  // sum exactly 1 stays tolerable
  EXPECT_EQ(classify_attack(deg("0.2"), deg("1"), deg("0.8")),
            AttackClass::Tolerable);
  EXPECT_EQ(classify_attack(deg("0.9"), deg("0"), deg("0.9")),
            AttackClass::Tolerable);
}

TEST(Fas, ClassifyAttackIsMonotone) {
  const std::vector<Degree> grid = [] {
    std::vector<Degree> out;
    for (int i = 0; i <= 10; ++i) out.emplace_back(Rat(i, 10));
    return out;
  }();
  const Degree step(Rat(1, 10));
  for (const Degree& b : grid)
    for (const Degree& w : grid)
      for (const Degree& a : grid) {
        if (classify_attack(b, w, a) != AttackClass::Sufficient) continue;
        for (const Degree& b2 : grid)
          if (b2 >= b) {
            EXPECT_EQ(classify_attack(b2, w, a), AttackClass::Sufficient);
          }
        for (const Degree& w2 : grid)
          if (w2 >= w) {
            EXPECT_EQ(classify_attack(b, w2, a), AttackClass::Sufficient);
          }
        for (const Degree& a2 : grid)
          if (a2 >= a) {
            EXPECT_EQ(classify_attack(b, w, a2), AttackClass::Sufficient);
          }
      }
}

TEST(Fas, ApplyIsomorphism) {
  const Fas chain = chain_fas();
  const std::map<ArgumentId, ArgumentId> f{{"a", "x"}, {"b", "y"}, {"c", "z"}};
  const Fas renamed = apply_isomorphism(chain, f);
  EXPECT_EQ(renamed.initial("x"), deg("0.8"));
  EXPECT_EQ(renamed.initial("z"), deg("0.6"));
  EXPECT_EQ(renamed.attack_weight("y", "z"), deg("0.9"));
  EXPECT_EQ(attackers(renamed, "y"), std::set<ArgumentId>{"x"});

  const std::map<ArgumentId, ArgumentId> identity{{"a", "a"}, {"b", "b"}, {"c", "c"}};
  EXPECT_EQ(apply_isomorphism(chain, identity), chain);

  const std::map<ArgumentId, ArgumentId> inverse{{"x", "a"}, {"y", "b"}, {"z", "c"}};
  EXPECT_EQ(apply_isomorphism(renamed, inverse), chain);

  const std::map<ArgumentId, ArgumentId> partial{{"a", "x"}, {"b", "y"}};
  EXPECT_THROW(apply_isomorphism(chain, partial), DomainError);
  const std::map<ArgumentId, ArgumentId> collapsing{
      {"a", "x"}, {"b", "x"}, {"c", "z"}};
  EXPECT_THROW(apply_isomorphism(chain, collapsing), DomainError);
}

TEST(Labeling, TotalityAndParts) {
  const Fas chain = chain_fas();
  FuzzyLabeling lab = testing::chain_lab2();
  EXPECT_NO_THROW(lab.require_total(chain));
  EXPECT_EQ(lab.acceptability_part(),
            (FuzzySet{{"a", deg("0.8")}, {"b", deg("0.2")}, {"c", deg("0.6")}}));
  EXPECT_EQ(lab.undecidability_part(),
            (FuzzySet{{"a", deg("0.2")}, {"c", deg("0.2")}}));

  FuzzyLabeling partial;
  partial.set("a", LabelTriple{deg("1"), deg("0"), deg("0")});
  EXPECT_THROW(partial.require_total(chain), DomainError);
  partial.set("b", LabelTriple{deg("1"), deg("0"), deg("0")});
  partial.set("c", LabelTriple{deg("1"), deg("0"), deg("0")});
  partial.set("ghost", LabelTriple{deg("1"), deg("0"), deg("0")});
  EXPECT_THROW(partial.require_total(chain), DomainError);
}

TEST(Labeling, LeqComparesAcceptAndRejectOnly) {
  EXPECT_TRUE(leq_labeling(testing::cycle_lab3(), testing::cycle_lab1()));
  EXPECT_TRUE(leq_labeling(testing::cycle_lab1(), testing::cycle_lab1()));
  EXPECT_FALSE(leq_labeling(testing::cycle_lab1(), testing::cycle_lab2()));
  EXPECT_FALSE(leq_labeling(testing::cycle_lab2(), testing::cycle_lab1()));

  FuzzyLabeling other;
  other.set("z", LabelTriple{deg("0"), deg("0"), deg("1")});
  EXPECT_THROW(leq_labeling(testing::cycle_lab1(), other), DomainError);
}

}  // namespace
}  // namespace flab
