#pragma once

// Dense polynomials over the prime field GF(p), coefficients low to high.
// Only what modulus validation needs: remainder, gcd, and x^(p^k) mod f.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace frobeval::detail {

using PrimePoly = std::vector<std::uint64_t>;

__extension__ typedef unsigned __int128 uint128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

/// Inverse of a nonzero residue modulo the prime p.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// f mod g; g must be nonzero.
inline PrimePoly poly_rem(PrimePoly f, PrimePoly g, std::uint64_t p) {
  trim(f);
  trim(g);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = invmod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = mulmod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - mulmod(c, g[i], p)) % p;
    }
    trim(f);
  }
  return f;
}

inline PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f,
                             std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_rem(std::move(r), f, p);
}

inline PrimePoly poly_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& f,
                             std::uint64_t p) {
  PrimePoly r = poly_rem({1}, f, p);
  base = poly_rem(std::move(base), f, p);
  while (e != 0) {
    if (e & 1U) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return r;
}

/// x^(p^k) mod f, by k successive p-th powers.
inline PrimePoly x_pow_p_pow(std::uint64_t k, const PrimePoly& f, std::uint64_t p) {
  PrimePoly r = poly_rem({0, 1}, f, p);
  for (std::uint64_t i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
  return r;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Trial division by every monic polynomial of degree 1..deg(f)/2.
inline bool irreducible_by_factor_search(const PrimePoly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t k = 1; k <= m / 2; ++k) {
    PrimePoly g(k + 1, 0);
    g[k] = 1;
    // Enumerate the k lower coefficients as a base-p counter.
    while (true) {
      if (poly_rem(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < k && ++g[i] == p) g[i++] = 0;
      if (i == k) break;
    }
  }
  return true;
}

/// Rabin's test: x^(p^m) = x mod f and gcd(x^(p^(m/r)) - x, f) = 1 for each prime r | m.
inline bool irreducible_by_rabin(const PrimePoly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  auto minus_x = [p](PrimePoly g) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return g;
  };
  if (!minus_x(x_pow_p_pow(m, f, p)).empty()) return false;
  for (std::uint64_t r : prime_factors(m)) {
    const PrimePoly h = minus_x(x_pow_p_pow(m / r, f, p));
    const PrimePoly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace frobeval::detail
