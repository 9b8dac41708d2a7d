#include <random>
#include <set>

#include <gtest/gtest.h>

#include "support.hpp"

namespace frobeval {
namespace {

using testing::random_value;

TEST(Polynomial, DegreeSentinel) {
  const Field f = Field::create(2, 4);
  EXPECT_FALSE(Polynomial(f).degree().has_value());
  EXPECT_TRUE(Polynomial(f, {0, 0, 0}).is_zero());
  EXPECT_EQ(Polynomial(f, {1, 0, 3, 0, 0}).degree(), 2U);
  EXPECT_EQ(Polynomial(f, {1, 0, 3, 0}), Polynomial(f, {1, 0, 3}));
  EXPECT_THROW(Polynomial(f, {16}), FieldError);
}

TEST(Horner, ConstantAndCounts) {
  const Field f = Field::create(2, 8);
  OpCount c;
  EXPECT_EQ(horner_eval(Polynomial(f, {7}), f.element(5), c), f.element(7));
  EXPECT_EQ(c, OpCount{});
  EXPECT_EQ(horner_eval(Polynomial(f), f.element(5), c), f.zero());
  EXPECT_EQ(c, OpCount{});

  const auto poly = poly_random(f, 254, std::nullopt, 3);
  horner_eval(poly, f.element(2), c);
  EXPECT_EQ(c.mul, 254U);
  EXPECT_EQ(c.add, 254U);
  // Trailing zeros do not count.
  std::vector<Value> padded(poly.coeffs().begin(), poly.coeffs().end());
  padded.resize(400, 0);
  OpCount d;
  horner_eval(Polynomial(f, padded), f.element(2), d);
  EXPECT_EQ(d.mul, 254U);
}

TEST(Horner, SmallExample) {
  const Field f = Field::create(2, 4);
  const auto beta = find_primitive(f);
  OpCount c;
  EXPECT_EQ(horner_eval(Polynomial(f, {1, 0, 1}), beta, c), beta * beta + f.one());
}

TEST(Horner, AgreesWithTermByTermOracle) {
  std::mt19937_64 rng(21);
  int cases = 0;
  for (const Field& f : {Field::create(2, 8), Field::create(3, 4), Field::create(5, 2), Field::create(2, 20),
                         Field::create(7, 3)}) {
    for (int i = 0; i < 120; ++i, ++cases) {
      const auto poly = poly_random(f, rng() % 200, std::nullopt, rng());
      const Value alpha = random_value(f, rng);
      OpCount c;
      ASSERT_EQ(horner_eval(poly, f.element(alpha), c).value(), testing::oracle_eval(f, poly.coeffs(), alpha));
      ASSERT_EQ(c.mul, *poly.degree());
      ASSERT_EQ(c.add, *poly.degree());
    }
  }
  EXPECT_GE(cases, 500);
}

TEST(StrideSplit, FourTermExample) {
  const Field f = Field::create(2, 8);
  const auto parts = stride_split(Polynomial(f, {10, 11, 12, 13}), 2);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0], Polynomial(f, {10, 12}));
  EXPECT_EQ(parts[1], Polynomial(f, {11, 13}));
}

TEST(StrideSplit, ZeroPolynomial) {
  const Field f = Field::create(3, 2);
  const auto parts = stride_split(Polynomial(f), 3);
  ASSERT_EQ(parts.size(), 3U);
  for (const auto& p : parts) EXPECT_TRUE(p.is_zero());
}

TEST(StrideSplit, TwiceOnDegree254) {
  const Field f = Field::create(2, 8);
  std::vector<Value> c(255);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = i + 1;
  const auto halves = stride_split(Polynomial(f, c), 2);
  const auto quarter = stride_split(halves[0], 2)[0];
  EXPECT_EQ(quarter.degree(), 63U);
  for (std::size_t k = 0; k <= 63; ++k) ASSERT_EQ(quarter.coeffs()[k], c[4 * k]);
  for (const auto& h : halves) {
    for (const auto& q : stride_split(h, 2)) EXPECT_LE(*q.degree(), 63U);
  }
}

TEST(StrideSplit, FormalReconstruction) {
  std::mt19937_64 rng(5);
  const Field f = Field::create(7, 2);
  for (std::size_t s : {2U, 3U, 5U, 7U}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = rng() % 2001;
      const auto poly = poly_random(f, n, std::nullopt, rng());
      const auto parts = stride_split(poly, s);
      ASSERT_EQ(parts.size(), s);
      std::vector<Value> rebuilt(n + 1, 0);
      for (std::size_t i = 0; i < s; ++i) {
        if (const auto d = parts[i].degree()) {
          ASSERT_LE(*d, (n - std::min(n, i)) / s);
          for (std::size_t a = 0; a <= *d; ++a) rebuilt[a * s + i] = parts[i].coeffs()[a];
        }
      }
      ASSERT_EQ(Polynomial(f, rebuilt), poly);
    }
  }
}

TEST(CoeffFrobenius, Laws) {
  const Field f = Field::create(2, 8);
  std::mt19937_64 rng(8);
  const auto poly = poly_random(f, 50, std::nullopt, 99);
  EXPECT_EQ(coeff_frobenius(poly, 8), poly);
  EXPECT_EQ(coeff_frobenius(poly, 0), poly);
  for (std::int64_t k = 0; k < 16; ++k) {
    EXPECT_EQ(coeff_frobenius(coeff_frobenius(poly, k), -k), poly);
  }
  const auto sub = poly_random(f, 50, 4, 100);
  EXPECT_EQ(coeff_frobenius(sub, 4), sub);
  EXPECT_EQ(coeff_frobenius(sub, -4), sub);

  OpCount c;
  const Polynomial sparse(f, {0, 5, 0, 7});
  coeff_frobenius(sparse, 3, &c);
  EXPECT_EQ(c.frob, 2U);
  coeff_frobenius(sparse, 16, &c);
  EXPECT_EQ(c.frob, 2U);
}

TEST(PolyRandom, DeterministicAndInSubfield) {
  const Field f = Field::create(2, 8);
  const auto a = poly_random(f, 254, 4, 42);
  const auto b = poly_random(f, 254, 4, 42);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.degree(), 254U);
  for (Value c : a.coeffs()) ASSERT_TRUE(is_in_subfield(f.element(c), 4));
  EXPECT_NE(poly_random(f, 254, 4, 43), a);
  const auto constant = poly_random(f, 0, std::nullopt, 1);
  EXPECT_EQ(constant.degree(), 0U);
  EXPECT_THROW(poly_random(f, 3, 3, 1), FieldError);
  // Subfield sampling reaches all 16 elements.
  std::set<Value> seen(a.coeffs().begin(), a.coeffs().end());
  EXPECT_EQ(seen.size(), 16U);
}

TEST(OpCount, MergeAndEquiv) {
  OpCount a{1, 2, 3, 4};
  OpCount b{10, 20, 30, 40};
  EXPECT_EQ(a + b, (OpCount{11, 22, 33, 44}));
  EXPECT_EQ(a + b, b + a);
  EXPECT_EQ((a + b).paper_mult_equiv(), 33U);
}

}  // namespace
}  // namespace frobeval
