#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

namespace frobeval::cost {
namespace {

// Term-by-term G(L) written out separately from the library.
double oracle_g(std::uint32_t L, std::uint64_t n, std::uint32_t p, std::uint32_t e) {
  const double w = p == 2 ? 1.0 : 2.0 * std::floor(std::log2(p));
  double pL = 1;
  for (std::uint32_t i = 0; i < L; ++i) pL *= p;
  double pe = 1;
  for (std::uint32_t i = 0; i < e; ++i) pe *= p;
  double powers = 0;  // p + p^2 + ... + p^L
  double t = 1;
  for (std::uint32_t i = 0; i < L; ++i) {
    t *= p;
    powers += t;
  }
  const double term1 = w * powers;
  const double term2 = pL - 1;
  const double term3 = w * (e - 1.0) * (pL + 1);
  const double term4 = static_cast<double>(n) / pL * (pe - 1);
  return term1 + term2 + term3 + term4;
}

bool close(double a, double b, double rel = 1e-9) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

TEST(Cost, PowerWeight) {
  EXPECT_EQ(power_weight(2), 1.0);
  EXPECT_EQ(power_weight(3), 2.0);
  EXPECT_EQ(power_weight(5), 4.0);
  EXPECT_EQ(power_weight(13), 6.0);
}

TEST(Cost, GeneralExamples) {
  EXPECT_DOUBLE_EQ(g_general(0, {8, 2, 1, 1}), 8.0);
  const CostParams c{254, 2, 8, 8};
  EXPECT_DOUBLE_EQ(g_general(3, c), oracle_g(3, 254, 2, 8));
  EXPECT_DOUBLE_EQ(g_general(3, c), 14 + 7 + 7 * 9 + 254.0 / 8 * 255);
  for (std::uint32_t L = 0; L < 12; ++L) EXPECT_TRUE(close(g_general(L, c), oracle_g(L, 254, 2, 8)));
}

TEST(Cost, GeneralTermsMonotone) {
  const CostParams c{1000, 3, 4, 4};
  double prev_inc = -1;
  double prev_dec = 1e300;
  for (std::uint32_t L = 0; L < 10; ++L) {
    const double dec = 1000.0 / std::pow(3.0, L) * 80;
    const double inc = g_general(L, c) - dec;
    EXPECT_GT(inc, prev_inc);
    EXPECT_LT(dec, prev_dec);
    prev_inc = inc;
    prev_dec = dec;
  }
}

TEST(Cost, PrimeCoefficientExamples) {
  EXPECT_DOUBLE_EQ(g_prime_coeffs(2, {48, 2, 1, 1}), 21.0);
  EXPECT_DOUBLE_EQ(g_prime_coeffs(1, {27, 3, 1, 1}), 26.0);
  for (std::uint32_t L = 0; L < 10; ++L) {
    const double n = 777;
    EXPECT_DOUBLE_EQ(g_prime_coeffs(L, {777, 2, 1, 1}), 3 * std::ldexp(1.0, L) - 3 + n / std::ldexp(1.0, L));
  }
}

TEST(Cost, SubfieldExampleAndDegeneracies) {
  EXPECT_DOUBLE_EQ(g_subfield(4, {254, 2, 8, 4}), 30 + 15 + 51 + 238.125);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t p = std::array{2U, 3U, 5U, 7U}[rng() % 4];
    const std::uint32_t m = 1 + rng() % 10;
    const std::uint64_t n = 1 + rng() % 1'000'000;
    const double L = static_cast<double>(rng() % 12);
    EXPECT_EQ(g_subfield(L, {n, p, m, 1}), g_prime_coeffs(L, {n, p, m, 1}));
    EXPECT_EQ(g_subfield(L, {n, p, m, m}), g_general(L, {n, p, m, m}));
  }
  EXPECT_THROW(g_subfield(1, {10, 2, 8, 3}), std::invalid_argument);
  EXPECT_EQ(variant_of({10, 2, 8, 8}), Variant::general);
  EXPECT_EQ(variant_of({10, 2, 8, 1}), Variant::prime_coeffs);
  EXPECT_EQ(variant_of({10, 2, 8, 4}), Variant::subfield);
}

TEST(Cost, OptimalLExamples) {
  // Small n clamps only when the coefficient term is small too.
  EXPECT_EQ(optimal_L({1, 2, 16, 1}).L_int, 0U);
  EXPECT_EQ(optimal_L({2, 2, 1, 1}).L_star, 0.0);
  EXPECT_LT(optimal_L({2, 2, 1, 1}).L_star_unclamped, 0.0);
  EXPECT_EQ(optimal_L({1, 5, 1, 1}).L_star, 0.0);
  // With arbitrary coefficients the table term n (p^m - 1) / p^L dominates even for n = 1.
  EXPECT_EQ(optimal_L({1, 2, 16, 16}).L_int, 6U);
  // p = 2, d = 1: L* = log2 sqrt(n/3).
  for (std::uint64_t n : {16ULL, 100ULL, 3072ULL, 1'000'000ULL}) {
    const auto o = optimal_L({n, 2, 5, 1});
    EXPECT_TRUE(close(o.L_star, std::log2(std::sqrt(n / 3.0))));
  }
  const CostParams c{254, 2, 8, 8};
  const auto o = optimal_L(c);
  std::uint32_t best = 0;
  for (std::uint32_t L = 1; L <= 8; ++L) {
    if (oracle_g(L, 254, 2, 8) < oracle_g(best, 254, 2, 8)) best = L;
  }
  EXPECT_EQ(o.L_int, best);
  EXPECT_THROW(optimal_L({0, 2, 8, 8}), std::invalid_argument);
}

TEST(Cost, ClosedFormMinimumMatchesGAtOptimum) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t p = std::array{2U, 3U, 5U, 7U, 11U}[rng() % 5];
    const std::uint32_t m = 1 + rng() % 8;
    const std::uint64_t n = 1 + rng() % 10'000'000;
    const CostParams c{n, p, m, m};
    const auto o = optimal_L(c);
    EXPECT_TRUE(close(min_cost_general(c), g_general(o.L_star_unclamped, c)))
        << p << " " << m << " " << n << ": " << min_cost_general(c) << " vs " << g_general(o.L_star_unclamped, c);
  }
}

TEST(Cost, PrimeFieldContinuousMinimum) {
  for (std::uint64_t n : {16ULL, 24ULL, 1000ULL, 123456ULL}) {
    const CostParams c{n, 2, 1, 1};
    EXPECT_TRUE(close(min_cost(c), 2 * std::sqrt(3.0 * n) - 3));
    EXPECT_LT(min_cost(c), prime_field_bound(n));
  }
}

TEST(Cost, IntegerRoundingWorstCaseIsDegree24) {
  // Ratio of the integer-L minimum to the continuous minimum over [16, 10^6].
  double worst = 0;
  std::uint64_t worst_n = 0;
  for (std::uint64_t n = 16; n <= 1'000'000; ++n) {
    const CostParams c{n, 2, 1, 1};
    const double ratio = g(optimal_L(c).L_int, c) / min_cost(c);
    ASSERT_GE(ratio, 1.0 - 1e-12);
    if (ratio > worst) {
      worst = ratio;
      worst_n = n;
    }
  }
  EXPECT_EQ(worst_n, 24U);
  EXPECT_NEAR(worst, 15.0 / (2 * std::sqrt(72.0) - 3), 1e-12);
}

TEST(Cost, UnimodalAndFloorCeilOptimalOnGrid) {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (std::uint32_t m = 1; m <= 10; ++m) {
      for (std::uint32_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        for (std::uint64_t n = 1; n <= 1'000'000; n = n < 10 ? n + 1 : n * 3 / 2) {
          const CostParams c{n, p, m, d};
          std::uint32_t sweep = 0;
          while (testing::ipow(p, sweep) < n) ++sweep;
          sweep += 2;
          // When p^d is large next to n the optimum lies past the sweep; extend it.
          const auto o = optimal_L(c);
          const std::uint32_t top = std::max<std::uint32_t>(sweep, static_cast<std::uint32_t>(std::ceil(o.L_star)) + 2);
          double sweep_min = g(0, c);
          for (std::uint32_t L = 1; L <= sweep; ++L) sweep_min = std::min(sweep_min, g(L, c));
          ASSERT_LE(g(o.L_int, c), sweep_min);
          int changes = 0;
          double prev = g(0, c);
          double best = prev;
          bool rising = false;
          for (std::uint32_t L = 1; L <= top; ++L) {
            const double cur = g(L, c);
            if (cur > prev) rising = true;
            if (cur < prev && rising) ++changes;
            best = std::min(best, cur);
            prev = cur;
          }
          ASSERT_EQ(changes, 0) << p << " " << m << " " << d << " " << n;
          ASSERT_EQ(g(o.L_int, c), best) << p << " " << m << " " << d << " " << n;
        }
      }
    }
  }
}

TEST(Cost, CrossoverForPrimeCoefficients) {
  for (std::uint64_t n = 16; n <= 100'000; n += n / 7 + 1) {
    const CostParams c{n, 2, 8, 1};
    EXPECT_LT(g(optimal_L(c).L_int, c), static_cast<double>(horner_cost(n).mul)) << n;
  }
}

TEST(Cost, HornerBaseline) {
  EXPECT_EQ(horner_cost(0), (HornerCost{0, 0}));
  EXPECT_EQ(horner_cost(254), (HornerCost{254, 254}));
  EXPECT_EQ(horner_cost(1000), (HornerCost{1000, 1000}));
}

TEST(Cost, SplitScaling) {
  for (std::uint32_t m = 12; m <= 24; m += 2) {
    const std::uint64_t n = std::uint64_t{1} << m;
    const double ratio = split_cost(n, 2, m) / split_cost_asymptotic(n);
    EXPECT_GE(ratio, 0.75) << m;
    EXPECT_LE(ratio, 1.25) << m;
    if (m >= 16) {
      EXPECT_LT(split_cost(n, 2, m), static_cast<double>(n)) << m;
    }
  }
  // Each half is the subfield minimum with p^(m/2) in place of p^(m/2) - 1.
  const double half = min_cost({1000, 3, 4, 2});
  EXPECT_GT(split_cost(1000, 3, 4), 2 * half);
  EXPECT_THROW(split_cost(1000, 2, 7), std::invalid_argument);
}

}  // namespace
}  // namespace frobeval::cost
