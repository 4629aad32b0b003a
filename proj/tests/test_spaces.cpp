#include <gtest/gtest.h>

#include "oracles.hpp"
#include "picross/spaces.hpp"

using namespace picross;

namespace {

std::vector<double> values(const std::vector<SemigroupElement>& xs) {
  std::vector<double> out;
  for (const auto& x : xs) out.push_back(x.to_double());
  return out;
}

SemigroupElement q(long long a, long long b) { return SemigroupElement(Rational(a), Rational(b)); }

}  // namespace

TEST(QuadraticNumber, SignOfMixedTerms) {
  EXPECT_EQ(QuadraticNumber(Rational(3), Rational(-2)).sign(), 1);    // 3 - 2.83
  EXPECT_EQ(QuadraticNumber(Rational(2), Rational(-2)).sign(), -1);   // 2 - 2.83
  EXPECT_EQ(QuadraticNumber(Rational(-7), Rational(5)).sign(), 1);    // -7 + 7.07
  EXPECT_EQ(QuadraticNumber(Rational(0), Rational(0)).sign(), 0);
}

TEST(QuadraticNumber, OrderMatchesDoubles) {
  std::vector<QuadraticNumber> xs;
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) xs.emplace_back(Rational(a, 2), Rational(b));
  }
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      const double dx = x.to_double();
      const double dy = y.to_double();
      if (dx != dy) EXPECT_EQ(x < y, dx < dy) << x.to_string() << " vs " << y.to_string();
    }
  }
}

TEST(SemigroupElement, RejectsNegative) {
  EXPECT_THROW(SemigroupElement(-1), std::domain_error);
  EXPECT_THROW(q(1, -1), std::domain_error);
  EXPECT_NO_THROW(q(2, -1));
}

TEST(Enumerate, Integers) {
  const IndexSet set = enumerate({SemigroupElement(1)}, SemigroupElement(5));
  EXPECT_EQ(values(set.elements()), (std::vector<double>{0, 1, 2, 3, 4, 5}));
}

TEST(Enumerate, TwoIntegerGenerators) {
  const IndexSet set = enumerate({SemigroupElement(2), SemigroupElement(3)}, SemigroupElement(7));
  std::vector<double> expected;
  for (long long v : oracle::int_cone(2, 3, 7, 4)) expected.push_back(static_cast<double>(v));
  EXPECT_EQ(values(set.elements()), expected);
}

TEST(Enumerate, DenseGenerators) {
  const IndexSet set = enumerate({SemigroupElement(1), SemigroupElement::sqrt2()}, SemigroupElement(3));
  // Brute force over coefficient pairs with exact dedup on (a, b).
  std::vector<SemigroupElement> expected;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const SemigroupElement x = q(a, b);
      if (x <= SemigroupElement(3)) expected.push_back(x);
    }
  }
  std::sort(expected.begin(), expected.end());
  ASSERT_EQ(set.size(), 7u);
  EXPECT_EQ(set.elements(), expected);
}

TEST(Enumerate, IntegerCountProperty) {
  for (int c = 4; c <= 20; ++c) {
    EXPECT_EQ(enumerate({SemigroupElement(1)}, SemigroupElement(c)).size(), static_cast<std::size_t>(c + 1));
  }
}

TEST(Enumerate, SortedAndUnique) {
  const IndexSet set = enumerate({SemigroupElement(1), SemigroupElement::sqrt2()}, SemigroupElement(6));
  for (std::size_t i = 1; i < set.size(); ++i) EXPECT_LT(set[i - 1], set[i]);
}

TEST(Interval, ClosedAndOpen) {
  const IndexSet set = enumerate({SemigroupElement(1)}, SemigroupElement(5));
  EXPECT_EQ(values(interval(set, SemigroupElement(2), true)), (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(values(interval(set, SemigroupElement(2), false)), (std::vector<double>{0, 1}));
}

TEST(Interval, DenseOpen) {
  const IndexSet set = enumerate({SemigroupElement(1), SemigroupElement::sqrt2()}, SemigroupElement(3));
  EXPECT_EQ(interval(set, SemigroupElement(2), false),
            (std::vector<SemigroupElement>{SemigroupElement(0), SemigroupElement(1), SemigroupElement::sqrt2()}));
}

TEST(GuardBand, Integers) {
  const IndexSet set = enumerate({SemigroupElement(1)}, SemigroupElement(5));
  EXPECT_EQ(values(guard_band(set, SemigroupElement(2))), (std::vector<double>{0, 1, 2, 3}));
  EXPECT_EQ(guard_band(set, SemigroupElement(0)), set.elements());
}

TEST(GuardBand, DenseFilter) {
  const IndexSet set = enumerate({SemigroupElement(1), SemigroupElement::sqrt2()}, SemigroupElement(3));
  std::vector<SemigroupElement> expected;
  for (const auto& x : set.elements()) {
    if (x <= SemigroupElement(2)) expected.push_back(x);
  }
  EXPECT_EQ(guard_band(set, SemigroupElement(1)), expected);
}

TEST(IndexSet, IndexOf) {
  const IndexSet set = enumerate({SemigroupElement(2), SemigroupElement(3)}, SemigroupElement(7));
  EXPECT_FALSE(set.contains(SemigroupElement(1)));
  EXPECT_EQ(set.index_of(SemigroupElement(4)), std::optional<std::size_t>(3));
}
