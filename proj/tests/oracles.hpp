#pragma once

// Reference implementations for tests, written without the library's
// arithmetic, plus the recombination count law.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "frobeval/frobeval.hpp"

namespace frobeval::testing {

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Expected recombination p-th powers and multiplications for depth L.
inline OpCount recombination_law(std::uint32_t p, std::uint32_t L) {
  OpCount c;
  c.pth_pow = (ipow(p, L + 1) - p) / (p - 1);
  c.mul = ipow(p, L) - 1;
  c.add = ipow(p, L) - 1;
  return c;
}

/// True when the report's recombination matches the law (summed over
/// \p halves independent evaluations).
inline bool obeys_recombination_law(const EvalReport& r, std::uint32_t p, std::uint32_t L,
                                    std::uint64_t halves = 1) {
  const OpCount want = recombination_law(p, L);
  const OpCount& got = r.breakdown.recombine;
  return got.pth_pow == halves * want.pth_pow && got.mul == halves * want.mul &&
         got.add == halves * want.add && got.frob == 0;
}

// ---------------------------------------------------------------------------
// Oracles written without the library's arithmetic.

/// Schoolbook product of digit vectors reduced by the monic modulus.
inline Value oracle_mul(const Field& f, Value a, Value b) {
  const std::uint64_t p = f.characteristic();
  const std::size_t m = f.degree();
  const auto& mod = f.modulus();
  std::vector<std::uint64_t> x(m), y(m), prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = a % p;
    a /= p;
    y[i] = b % p;
    b /= p;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (std::size_t k = 2 * m; k-- > m;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) {
      prod[k - m + i] = (prod[k - m + i] + (p - c) * mod[i]) % p;
    }
  }
  Value out = 0;
  for (std::size_t i = m; i-- > 0;) out = out * p + prod[i];
  return out;
}

inline Value oracle_add(const Field& f, Value a, Value b) {
  const std::uint64_t p = f.characteristic();
  Value out = 0;
  Value scale = 1;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

inline Value oracle_pow(const Field& f, Value a, std::uint64_t e) {
  Value r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = oracle_mul(f, r, a);
  return r;
}

/// Sum of a_i alpha^i with powers built by repeated multiplication.
inline Value oracle_eval(const Field& f, std::span<const Value> coeffs, Value alpha) {
  Value acc = 0;
  Value power = 1;
  for (Value c : coeffs) {
    acc = oracle_add(f, acc, oracle_mul(f, c, power));
    power = oracle_mul(f, power, alpha);
  }
  return acc;
}

inline Value random_value(const Field& f, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Value>(0, f.order() - 1)(rng);
}

/// Every GF(p^m) with p^m <= limit over the primes with built-in moduli.
inline std::vector<Field> small_fields(std::uint64_t limit) {
  std::vector<Field> out;
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U}) {
    std::uint64_t q = p;
    for (std::uint32_t m = 1; q <= limit; ++m, q *= p) out.push_back(Field::create(p, m));
  }
  return out;
}

}  // namespace frobeval::testing
