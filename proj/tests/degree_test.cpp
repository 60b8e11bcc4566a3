#include <gtest/gtest.h>

#include "flalc/degree.hpp"
#include "test_support.hpp"

namespace flalc {
namespace {

Degree d(long p, long q) { return Degree(p, q); }

TEST(Degree, CanonicalForm) {
  EXPECT_EQ(d(2, 4), d(1, 2));
  EXPECT_EQ(d(2, 4).str(), "1/2");
  EXPECT_EQ(Degree::zero().str(), "0");
  EXPECT_EQ(Degree::one().str(), "1");
  EXPECT_EQ(d(7, 7).str(), "1");
}

TEST(Degree, RejectsOutOfRange) {
  EXPECT_THROW(d(3, 2), ValidationError);
  EXPECT_THROW(d(-1, 2), ValidationError);
  EXPECT_THROW(d(1, 0), ValidationError);
  EXPECT_THROW(Degree(mpq_class(5, 4)), ValidationError);
}

TEST(Degree, Parse) {
  EXPECT_EQ(Degree::parse("1/100"), d(1, 100));
  EXPECT_EQ(Degree::parse("0"), Degree::zero());
  EXPECT_EQ(Degree::parse("1"), Degree::one());
  EXPECT_EQ(Degree::parse("3/6"), d(1, 2));
  EXPECT_THROW(Degree::parse("0.5"), ValidationError);
  EXPECT_THROW(Degree::parse("2"), ValidationError);
  EXPECT_THROW(Degree::parse("3/2"), ValidationError);
  EXPECT_THROW(Degree::parse("1/0"), ValidationError);
  EXPECT_THROW(Degree::parse("-1/2"), ValidationError);
  EXPECT_THROW(Degree::parse(""), ValidationError);
}

TEST(Degree, ExactWithHugeDenominators) {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 3, 400);
  const Degree tiny(mpz_class(1), big);
  EXPECT_NE(tiny, Degree::zero());
  EXPECT_EQ(negation(negation(tiny)), tiny);
  EXPECT_EQ(tconorm(tiny, negation(tiny)), Degree::one());
}

TEST(Luk, Tnorm) {
  EXPECT_EQ(tnorm(d(1, 2), d(7, 10)), d(1, 5));
  EXPECT_EQ(tnorm(d(1, 3), d(1, 3)), Degree::zero());
  EXPECT_EQ(tnorm(d(3, 7), Degree::one()), d(3, 7));
}

TEST(Luk, Tconorm) {
  EXPECT_EQ(tconorm(d(1, 2), d(7, 10)), Degree::one());
  EXPECT_EQ(tconorm(d(3, 7), Degree::zero()), d(3, 7));
  EXPECT_EQ(tconorm(d(1, 4), d(1, 4)), d(1, 2));
}

TEST(Luk, Negation) {
  EXPECT_EQ(negation(Degree::zero()), Degree::one());
  EXPECT_EQ(negation(d(1, 100)), d(99, 100));
}

TEST(Luk, Implication) {
  EXPECT_EQ(implication(d(3, 4), d(1, 2)), d(3, 4));
  EXPECT_EQ(implication(d(1, 4), d(1, 2)), Degree::one());
  EXPECT_EQ(implication(d(1, 2), d(1, 2)), Degree::one());
  EXPECT_EQ(implication(Degree::one(), d(2, 9)), d(2, 9));
}

TEST(Luk, Scale) {
  EXPECT_EQ(scale(3, d(2, 5)), Degree::one());
  EXPECT_EQ(scale(1, d(2, 5)), d(2, 5));
  EXPECT_EQ(scale(4, d(1, 9)), d(4, 9));
  EXPECT_THROW(scale(0, d(1, 9)), ValidationError);
}

class LukLaws : public ::testing::Test {
 protected:
  testing::Rng rng{0x5eed};
};

TEST_F(LukLaws, Residuation) {
  for (int k = 0; k < 5000; ++k) {
    const auto a = testing::random_degree(rng), b = testing::random_degree(rng), c = testing::random_degree(rng);
    EXPECT_EQ(c <= implication(a, b), tnorm(a, c) <= b) << a.str() << " " << b.str() << " " << c.str();
  }
}

TEST_F(LukLaws, ImplicationIsNegationThenConorm) {
  for (int k = 0; k < 5000; ++k) {
    const auto a = testing::random_degree(rng), b = testing::random_degree(rng);
    EXPECT_EQ(implication(a, b), tconorm(negation(a), b));
  }
}

TEST_F(LukLaws, CommutativeAssociativeWithUnits) {
  for (int k = 0; k < 3000; ++k) {
    const auto a = testing::random_degree(rng), b = testing::random_degree(rng), c = testing::random_degree(rng);
    EXPECT_EQ(tnorm(a, b), tnorm(b, a));
    EXPECT_EQ(tconorm(a, b), tconorm(b, a));
    EXPECT_EQ(tnorm(tnorm(a, b), c), tnorm(a, tnorm(b, c)));
    EXPECT_EQ(tconorm(tconorm(a, b), c), tconorm(a, tconorm(b, c)));
    EXPECT_EQ(tnorm(a, Degree::one()), a);
    EXPECT_EQ(tconorm(a, Degree::zero()), a);
  }
}

TEST_F(LukLaws, ExcludedMiddleAndInvolution) {
  for (int k = 0; k < 3000; ++k) {
    const auto a = testing::random_degree(rng);
    EXPECT_EQ(tconorm(a, negation(a)), Degree::one());
    EXPECT_EQ(negation(negation(a)), a);
  }
}

TEST_F(LukLaws, ScaleIsRepeatedConorm) {
  for (int k = 0; k < 500; ++k) {
    const auto a = testing::random_degree(rng, 200);
    Degree fold = a;
    for (unsigned long n = 1; n <= 32; ++n) {
      if (n > 1) fold = tconorm(fold, a);
      ASSERT_EQ(scale(n, a), fold) << "n=" << n << " a=" << a.str();
    }
  }
}

}  // namespace
}  // namespace flalc
