#pragma once

/// \file
/// \brief Closed-form multiplication counts for automorphic evaluation.
///
/// With w the cost of one p-th power (w = 1 for p = 2, 2*floor(log2 p)
/// otherwise) and coefficients in GF(p^d), evaluating a degree-n polynomial
/// with L decomposition levels costs
///
///     g(L) = w (p^(L+1) - p)/(p - 1) + p^L - 1 + w (d - 1)(p^L + 1) + (n/p^L)(p^d - 1)
///
/// multiplications. d = m is the general case, d = 1 the prime-field case.
/// These are descriptive formulas; the measured counts of autoeval differ from
/// them because leaves are evaluated by Horner rather than from coefficient
/// tables.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace frobeval::cost {

struct CostParams {
  std::uint64_t n = 1;  ///< polynomial degree
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::uint32_t d = 1;  ///< coefficients lie in GF(p^d), d | m
};

enum class Variant {
  general,       ///< coefficients anywhere in GF(p^m)
  prime_coeffs,  ///< coefficients in GF(p)
  subfield,      ///< coefficients in GF(p^d), 1 < d < m
};

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::general: return "general";
    case Variant::prime_coeffs: return "prime_coeffs";
    case Variant::subfield: return "subfield";
  }
  return "?";
}

inline void validate(const CostParams& c) {
  if (c.p < 2) throw std::invalid_argument("characteristic must be at least 2");
  if (c.m < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (c.d < 1 || c.m % c.d != 0) throw std::invalid_argument("d must divide m");
}

inline Variant variant_of(const CostParams& c) {
  validate(c);
  if (c.d == c.m) return Variant::general;
  if (c.d == 1) return Variant::prime_coeffs;
  return Variant::subfield;
}

/// Cost of one p-th power by successive squaring; 1 for p = 2.
inline double power_weight(std::uint32_t p) {
  if (p == 2) return 1.0;
  return 2.0 * std::floor(std::log2(static_cast<double>(p)));
}

/// p^L, by repeated multiplication when L is a small integer so that
/// discrete decisions see exact values.
inline double p_pow(std::uint32_t p, double L) {
  if (L >= 0 && L <= 64 && L == std::floor(L)) {
    double r = 1.0;
    for (int i = 0; i < static_cast<int>(L); ++i) r *= p;
    return r;
  }
  return std::pow(static_cast<double>(p), L);
}

namespace detail {

inline double g_with_degree(double L, const CostParams& c, std::uint32_t e) {
  const double w = power_weight(c.p);
  const double pL = p_pow(c.p, L);
  const double p = c.p;
  return w * (pL * p - p) / (p - 1) + pL - 1 + w * (e - 1.0) * (pL + 1) +
         static_cast<double>(c.n) / pL * (p_pow(c.p, e) - 1);
}

inline double optimum_with_degree(const CostParams& c, std::uint32_t e) {
  const double w = power_weight(c.p);
  const double p = c.p;
  const double num = std::sqrt(static_cast<double>(c.n) * (p_pow(c.p, e) - 1));
  const double den = std::sqrt(1 + w * (e - 1.0 + p / (p - 1)));
  return std::log(num / den) / std::log(p);
}

inline double minimum_with_degree(const CostParams& c, std::uint32_t e) {
  const double w = power_weight(c.p);
  const double p = c.p;
  return 2 * std::sqrt(static_cast<double>(c.n) * (p_pow(c.p, e) - 1)) *
             std::sqrt(1 + w * (e - 1.0 + p / (p - 1))) +
         w * (e - 1.0) - 1 - w * p / (p - 1);
}

}  // namespace detail

/// Coefficients anywhere in GF(p^m).
inline double g_general(double L, const CostParams& c) {
  validate(c);
  return detail::g_with_degree(L, c, c.m);
}

/// Coefficients in GF(p): w (p^(L+1) - p)/(p - 1) + p^L - 1 + (n/p^L)(p - 1).
inline double g_prime_coeffs(double L, const CostParams& c) {
  validate(c);
  const double w = power_weight(c.p);
  const double pL = p_pow(c.p, L);
  const double p = c.p;
  return w * (pL * p - p) / (p - 1) + pL - 1 + static_cast<double>(c.n) / pL * (p - 1);
}

/// Coefficients in GF(p^d).
inline double g_subfield(double L, const CostParams& c) {
  validate(c);
  return detail::g_with_degree(L, c, c.d);
}

/// The formula that applies to c.d.
inline double g(double L, const CostParams& c) {
  switch (variant_of(c)) {
    case Variant::general: return g_general(L, c);
    case Variant::prime_coeffs: return g_prime_coeffs(L, c);
    case Variant::subfield: return g_subfield(L, c);
  }
  return 0;
}

struct OptimalL {
  double L_star = 0;            ///< continuous optimum, clamped at 0
  double L_star_unclamped = 0;  ///< raw value of the closed-form optimum
  std::uint32_t L_int = 0;      ///< better of floor/ceil under g, ties to the smaller
};

/// Continuous optimum of g from its derivative, and the integer choice.
inline OptimalL optimal_L(const CostParams& c) {
  if (c.n < 1) throw std::invalid_argument("degree must be at least 1");
  OptimalL out;
  switch (variant_of(c)) {
    case Variant::general: out.L_star_unclamped = detail::optimum_with_degree(c, c.m); break;
    case Variant::prime_coeffs: out.L_star_unclamped = detail::optimum_with_degree(c, 1); break;
    case Variant::subfield: out.L_star_unclamped = detail::optimum_with_degree(c, c.d); break;
  }
  out.L_star = std::max(0.0, out.L_star_unclamped);
  const auto lo = static_cast<std::uint32_t>(std::floor(out.L_star));
  const auto hi = static_cast<std::uint32_t>(std::ceil(out.L_star));
  out.L_int = g(hi, c) < g(lo, c) ? hi : lo;
  return out;
}

/// Closed-form minimum of g_general over real L.
inline double min_cost_general(const CostParams& c) {
  if (c.n < 1) throw std::invalid_argument("degree must be at least 1");
  validate(c);
  return detail::minimum_with_degree(c, c.m);
}

/// Closed-form minimum over real L of the formula that applies to c.d.
inline double min_cost(const CostParams& c) {
  if (c.n < 1) throw std::invalid_argument("degree must be at least 1");
  validate(c);
  return detail::minimum_with_degree(c, variant_of(c) == Variant::general ? c.m : c.d);
}

struct HornerCost {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;
  friend bool operator==(const HornerCost&, const HornerCost&) = default;
};

inline HornerCost horner_cost(std::uint64_t n) { return {n, n}; }

/// 2 sqrt(3n): bound on the prime-field p = 2 cost.
inline double prime_field_bound(std::uint64_t n) { return 2 * std::sqrt(3.0 * static_cast<double>(n)); }

/// Cost of evaluating a GF(p^m) polynomial (m even) as two polynomials with
/// coefficients in GF(p^(m/2)), each at its own continuous optimum:
///
///     2 * [ 2 sqrt(n p^(m/2)) sqrt(1 + w (m/2 - 1 + p/(p-1))) + w (m/2 - 1) - 1 - w p/(p-1) ]
inline double split_cost(std::uint64_t n, std::uint32_t p, std::uint32_t m) {
  if (m % 2 != 0) throw std::invalid_argument("split cost needs an even m");
  const double w = power_weight(p);
  const double h = m / 2.0;
  const double pp = p;
  const double one = 2 * std::sqrt(static_cast<double>(n) * p_pow(p, h)) *
                         std::sqrt(1 + w * (h - 1 + pp / (pp - 1))) +
                     w * (h - 1) - 1 - w * pp / (pp - 1);
  return 2 * one;
}

/// 2 sqrt(2) n^(3/4) sqrt(log2 n): asymptotic form of split_cost for p = 2, 2^m ~ n.
inline double split_cost_asymptotic(std::uint64_t n) {
  const double x = static_cast<double>(n);
  return 2 * std::sqrt(2.0) * std::pow(x, 0.75) * std::sqrt(std::log2(x));
}

}  // namespace frobeval::cost
