#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <random>
#include <sstream>

#include "freespan/errors.hpp"
#include "freespan/rational.hpp"

using freespan::OverflowError;
using freespan::ParseError;
using freespan::Rational;
using BigQ = boost::multiprecision::cpp_rational;

namespace {

BigQ big(const Rational& r) { return BigQ(r.num(), r.den()); }

bool fits(const BigQ& q) {
  using boost::multiprecision::cpp_int;
  const cpp_int lo = std::numeric_limits<std::int64_t>::min();
  const cpp_int hi = std::numeric_limits<std::int64_t>::max();
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  return num >= lo && num <= hi && den <= hi;
}

Rational draw(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> num(-bound, bound);
  std::uniform_int_distribution<std::int64_t> den(1, bound);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST(Rational, NormalizesToLowestTerms) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_EQ(Rational(0, -7).den(), 1);
}

TEST(Rational, RejectsZeroDenominator) { EXPECT_THROW(Rational(1, 0), ParseError); }

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-5"), Rational(-5));
  EXPECT_EQ(Rational::parse("+7/1").str(), "7");
  EXPECT_EQ(Rational(3, 2).str(), "3/2");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("99999999999999999999"), std::exception);
  std::ostringstream os;
  os << Rational(-7, 3);
  EXPECT_EQ(os.str(), "-7/3");
}

TEST(Rational, Floor) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-4, 2).floor(), -2);
  EXPECT_EQ(Rational(5).floor(), 5);
}

TEST(Rational, OverflowIsReported) {
  const std::int64_t big_value = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(Rational(big_value) + Rational(1), OverflowError);
  EXPECT_THROW(Rational(big_value) * Rational(2), OverflowError);
  EXPECT_THROW(Rational(1, big_value) + Rational(1, big_value - 1), OverflowError);
  EXPECT_THROW(-Rational(std::numeric_limits<std::int64_t>::min()), OverflowError);
  // Large intermediates that cancel are fine.
  EXPECT_EQ(Rational(big_value) * Rational(1, big_value), Rational(1));
}

TEST(Rational, ArithmeticMatchesBigRationalReference) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t bound = (i % 3 == 0) ? std::int64_t{1} << 40 : 1000;
    Rational a = draw(rng, bound);
    Rational b = draw(rng, bound);
    auto check = [&](auto op_fixed, const BigQ& exact) {
      if (fits(exact)) {
        Rational got = op_fixed();
        EXPECT_EQ(big(got), exact);
      } else {
        EXPECT_THROW(op_fixed(), OverflowError);
      }
    };
    check([&] { return a + b; }, big(a) + big(b));
    check([&] { return a - b; }, big(a) - big(b));
    check([&] { return a * b; }, big(a) * big(b));
    if (!b.is_zero()) check([&] { return a / b; }, big(a) / big(b));
    EXPECT_EQ(a < b, big(a) < big(b));
    EXPECT_EQ(a == b, big(a) == big(b));
  }
}

TEST(Rational, ComparisonNeverOverflows) {
  const std::int64_t big_value = std::numeric_limits<std::int64_t>::max();
  Rational a(big_value - 1, big_value);
  Rational b(big_value - 2, big_value - 1);
  EXPECT_EQ(a > b, big(a) > big(b));
  EXPECT_LT(Rational(-big_value), Rational(big_value));
}
