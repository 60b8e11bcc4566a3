#include <gtest/gtest.h>

#include "flalc/reduction.hpp"
#include "flalc/syntax.hpp"
#include "test_support.hpp"

namespace flalc {
namespace {

std::vector<std::string> printed(const std::vector<Gci>& gcis) {
  std::vector<std::string> out;
  for (const auto& g : gcis) out.push_back(to_string(g));
  return out;
}

TEST(TboxI, SingleLetterPair) {
  const PcpInstance inst(2, {{{1}, {1, 2}}});
  const auto t = printed(build_tbox_i(inst, 1));
  ASSERT_EQ(t.size(), 11u);
  EXPECT_EQ(t[0], "(gci top (some R1 top) 1)");
  EXPECT_EQ(t[1], "(gci V (scale 3 (all R1 V1)) 1)");
  EXPECT_EQ(t[2], "(gci (scale 3 (some R1 V1)) V 1)");
  EXPECT_EQ(t[3], "(gci W (scale 9 (all R1 W1)) 1)");
  EXPECT_EQ(t[5], "(gci top (all R1 V2) 1/3)");
  EXPECT_EQ(t[6], "(gci top (all R1 (not V2)) 2/3)");
  EXPECT_EQ(t[7], "(gci top (all R1 W2) 5/9)");
  EXPECT_EQ(t[8], "(gci top (all R1 (not W2)) 4/9)");
  EXPECT_EQ(t[9], "(gci A (scale 9 (all R1 A)) 1)");
  EXPECT_EQ(t[10], "(gci (scale 9 (some R1 A)) A 1)");
  EXPECT_THROW(build_tbox_i(inst, 2), ValidationError);
}

TEST(BuildKb, AxiomCounts) {
  EXPECT_EQ(build_kb(testing::unsolvable_instance()).size(), 19u);
  testing::Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    const auto inst = testing::random_instance(rng, 3, 4, 4);
    const std::size_t p = inst.size();
    EXPECT_EQ(build_kb(inst).size(), 8 + 11 * p);
    EXPECT_EQ(build_kb_prime(inst).size(), 8 + 12 * p);
  }
}

TEST(BuildKb, RootAssertions) {
  const auto kb = build_kb(testing::unsolvable_instance());
  std::vector<std::string> abox;
  for (const auto& a : kb.abox()) abox.push_back(to_string(a));
  EXPECT_EQ(abox, (std::vector<std::string>{"(instance a (not V) 1)", "(instance a (not W) 1)",
                                            "(instance a A 1/100)", "(instance a (not A) 99/100)"}));
  ReductionConfig cfg;
  cfg.epsilon = Degree(1, 9);
  EXPECT_TRUE(build_kb(testing::unsolvable_instance(), cfg)
                  .contains(ConceptAssertion("a", Concept::neg(Concept::atomic("A")), Degree(8, 9))));
  cfg.epsilon = Degree::one();
  EXPECT_THROW(build_kb(testing::unsolvable_instance(), cfg), ValidationError);
}

TEST(BuildKbPrime, ExtraAxioms) {
  const PcpInstance inst(2, {{{1}, {2}}, {{2, 1}, {1}}});
  const auto base = build_kb(inst);
  const auto prime = build_kb_prime(inst);
  EXPECT_EQ(prime.size(), base.size() + 2);
  for (const auto& ax : base.axioms()) EXPECT_TRUE(prime.contains(ax)) << to_string(ax);
  EXPECT_EQ(to_string(build_prime_axiom(2)), "(gci top (all R2 (or (not (iff V W)) (not A))) 1)");
  EXPECT_TRUE(prime.contains(build_prime_axiom(1)));
  EXPECT_FALSE(base.contains(build_prime_axiom(1)));
}

TEST(BuildKb, EmissionOrder) {
  const auto kb = build_kb_prime(testing::classic_instance());
  const auto& t = kb.tbox();
  EXPECT_EQ(to_string(t[0]), "(gci V (or V1 V2) 1)");
  EXPECT_EQ(to_string(t[3]), "(gci (or W1 W2) W 1)");
  EXPECT_EQ(to_string(t[4]), "(gci top (some R1 top) 1)");
  EXPECT_EQ(to_string(t[4 + 11]), "(gci top (some R2 top) 1)");
  EXPECT_EQ(to_string(t[4 + 33]), to_string(build_prime_axiom(1)));
  EXPECT_EQ(to_string(t.back()), to_string(build_prime_axiom(3)));
}

TEST(BuildKb, GradesPairAndStayInRange) {
  testing::Rng rng(32);
  for (int k = 0; k < 100; ++k) {
    const auto inst = testing::random_instance(rng, 1 + testing::uniform(rng, 0, 10), 4, 5);
    for (std::size_t i = 1; i <= inst.size(); ++i) {
      const auto t = build_tbox_i(inst, i);
      ASSERT_EQ(t[5].grade.value() + t[6].grade.value(), 1);
      ASSERT_EQ(t[7].grade.value() + t[8].grade.value(), 1);
      ASSERT_EQ(t[5].grade, encode_word(inst.top(i), inst.alphabet_size()));
      ASSERT_EQ(t[7].grade, encode_word(inst.bottom(i), inst.alphabet_size()));
    }
    for (const auto& ax : build_kb_prime(inst).axioms()) {
      ASSERT_FALSE(grade_of(ax).is_zero());
    }
  }
}

TEST(BuildKb, ScaleCoefficientsArePowers) {
  testing::Rng rng(33);
  for (int k = 0; k < 100; ++k) {
    const auto s = static_cast<std::uint32_t>(testing::uniform(rng, 1, 9));
    const auto inst = testing::random_instance(rng, s, 3, 8);
    const auto pow = [&](std::size_t e) {
      unsigned long long r = 1;
      for (std::size_t j = 0; j < e; ++j) r *= s + 1;
      return mpz_class(std::to_string(r));
    };
    for (std::size_t i = 1; i <= inst.size(); ++i) {
      const auto t = build_tbox_i(inst, i);
      const auto lv = inst.top(i).size(), lw = inst.bottom(i).size();
      const auto coef = [](const Concept& c) { return c.kind() == Concept::Kind::Scale ? c.count() : mpz_class(1); };
      ASSERT_EQ(coef(t[1].rhs), pow(lv));
      ASSERT_EQ(coef(t[2].lhs), pow(lv));
      ASSERT_EQ(coef(t[3].rhs), pow(lw));
      ASSERT_EQ(coef(t[4].lhs), pow(lw));
      ASSERT_EQ(coef(t[9].rhs), pow(std::max(lv, lw)));
      ASSERT_EQ(coef(t[10].lhs), pow(std::max(lv, lw)));
    }
  }
}

TEST(BuildKb, ClosedVocabulary) {
  testing::Rng rng(34);
  for (int k = 0; k < 50; ++k) {
    const auto inst = testing::random_instance(rng, 2, 5, 3);
    const auto sig = build_kb_prime(inst).signature();
    for (const auto& c : sig.concepts) {
      const auto& names = vocab::concept_names();
      EXPECT_NE(std::find(names.begin(), names.end(), c), names.end()) << c;
    }
    std::set<std::string> roles;
    for (std::size_t i = 1; i <= inst.size(); ++i) roles.insert(vocab::role(i));
    EXPECT_EQ(sig.roles, roles);
    EXPECT_EQ(sig.individuals, std::set<std::string>{"a"});
  }
}

TEST(BuildKb, RoundTripAndByteStable) {
  testing::Rng rng(35);
  for (int k = 0; k < 50; ++k) {
    const auto inst = testing::random_instance(rng, 3, 3, 4);
    const auto kb = build_kb_prime(inst);
    const auto text = print_kb(kb);
    ASSERT_EQ(parse_kb(text), kb);
    ASSERT_EQ(print_kb(parse_kb(text)), text);
    ASSERT_EQ(print_kb(build_kb_prime(inst)), text);
  }
}

}  // namespace
}  // namespace flalc
