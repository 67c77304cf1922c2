#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ruled/errors.hpp"
#include "ruled/farey.hpp"

using namespace ruled;

TEST(Slope, ReducesAndOrders) {
  EXPECT_EQ(Slope(2, 4), Slope(1, 2));
  EXPECT_TRUE(Slope(1, 2) < Slope(2, 3));
  EXPECT_TRUE(Slope(5, 1) < Slope::infinity());
  EXPECT_EQ(Slope::parse("inf"), Slope::infinity());
  EXPECT_EQ(Slope::parse("3/6"), Slope(1, 2));
  EXPECT_THROW(Slope(0, 0), Error);
  EXPECT_THROW(Slope::parse("1/x"), Error);
}

TEST(Mediant, Examples) {
  EXPECT_EQ(mediant(Slope(0, 1), Slope::infinity()), Slope(1, 1));
  EXPECT_EQ(mediant(Slope(0, 1), Slope(1, 1)), Slope(1, 2));
  EXPECT_EQ(mediant(Slope(1, 2), Slope(1, 1)), Slope(2, 3));
}

TEST(Mediant, RejectsWrongOrder) {
  try {
    mediant(Slope(1, 1), Slope(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderViolation);
  }
  EXPECT_THROW(mediant(Slope(1, 2), Slope(1, 2)), Error);
}

TEST(Unimodular, Examples) {
  EXPECT_TRUE(unimodular(Slope(0, 1), Slope(1, 1)));
  EXPECT_TRUE(unimodular(Slope(1, 2), Slope(1, 1)));
  EXPECT_FALSE(unimodular(Slope(0, 1), Slope(2, 3)));
}

TEST(FareyPath, Examples) {
  EXPECT_EQ(farey_path(Slope(1, 1)), (std::vector<Slope>{Slope(0, 1), Slope(1, 1)}));
  EXPECT_EQ(farey_path(Slope(1, 2)), (std::vector<Slope>{Slope(0, 1), Slope(1, 1), Slope(1, 2)}));
  EXPECT_EQ(farey_path(Slope(2, 3)), (std::vector<Slope>{Slope(0, 1), Slope(1, 1), Slope(1, 2), Slope(2, 3)}));
}

TEST(FareyPath, RejectsOutOfRange) {
  EXPECT_THROW(farey_path(Slope(0, 1)), Error);
  EXPECT_THROW(farey_path(Slope(3, 2)), Error);
  EXPECT_THROW(farey_path(Slope::infinity()), Error);
}

TEST(FareyPath, MatchesSternBrocotOracle) {
  for (long long b = 1; b <= 40; ++b)
    for (long long a = 1; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      auto path = farey_path(Slope(a, b));
      auto ref = oracle::stern_brocot_path(a, b);
      ASSERT_EQ(path.size(), ref.size()) << a << "/" << b;
      for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(path[i], Slope(ref[i].first, ref[i].second));
    }
}

TEST(FareyPath, TargetOnlyAtEnd) {
  for (long long b = 2; b <= 30; ++b)
    for (long long a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      auto path = farey_path(Slope(a, b));
      for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_FALSE(path[i] == Slope(a, b));
    }
}

TEST(MediantInsertion, StaysUnimodular) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Slope> l{Slope(0, 1), Slope::infinity()};
    for (int d = 0; d < 10; ++d) {
      std::size_t i = gen() % (l.size() - 1);
      Slope m = mediant(l[i], l[i + 1]);
      EXPECT_TRUE(l[i] < m && m < l[i + 1]);
      l.insert(l.begin() + static_cast<long>(i) + 1, m);
    }
    for (std::size_t i = 0; i + 1 < l.size(); ++i) EXPECT_TRUE(unimodular(l[i], l[i + 1]));
  }
}
