#pragma once

/// \file
/// \brief Arithmetic in GF(p^m) in polynomial basis, the Frobenius
///        automorphism, subfield membership and the quadratic split
///        GF(p^m) = GF(p^d) + gamma * GF(p^d) for m = 2d.
///
/// Elements are stored packed: the coefficient of x^i is the i-th base-p
/// digit of a 64-bit value. That packed value is also the serialization
/// used by the file formats and the CLI, and its numeric order is the
/// canonical order used by every deterministic search in this header.

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frobeval/detail/builtin_moduli.hpp"
#include "frobeval/detail/gfp_poly.hpp"

namespace frobeval {

/// Packed element of some GF(p^m); meaningful only together with its Field.
using Value = std::uint64_t;

/// Invalid field construction or mixing elements of different fields.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FieldElement;

namespace detail {

struct FieldData {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::uint64_t q = 2;
  std::vector<std::uint32_t> modulus;  // low to high, size m + 1, monic
  std::vector<std::uint64_t> place;    // p^i for i in [0, m]
  std::uint64_t modulus_bits = 0;      // p == 2 only
  // Log/antilog acceleration for small fields; never changes results.
  std::vector<Value> exp_table;
  std::vector<std::uint32_t> log_table;
};

inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;
inline constexpr std::uint64_t kTableOrder = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kExhaustiveIrreducibleOrder = std::uint64_t{1} << 20;

}  // namespace detail

/// A finite field GF(p^m) defined by a monic irreducible modulus over GF(p).
///
/// Cheap to copy; all copies share one immutable description, so a Field may
/// be read from any number of threads.
class Field {
 public:
  /// Builds and validates GF(p^m). \p modulus holds coefficients from x^0 up
  /// to x^m; when omitted a built-in modulus is used.
  static Field create(std::uint32_t p, std::uint32_t m,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const { return data_->p; }
  std::uint32_t degree() const { return data_->m; }
  std::uint64_t order() const { return data_->q; }
  const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }
  bool has_tables() const { return !data_->exp_table.empty(); }

  bool contains(Value v) const { return v < data_->q; }

  Value add(Value a, Value b) const;
  Value neg(Value a) const;
  Value sub(Value a, Value b) const { return add(a, neg(b)); }
  Value mul(Value a, Value b) const;
  /// a^e with 0^0 = 1.
  Value pow(Value a, std::uint64_t e) const;
  Value inverse(Value a) const;
  Value pth_power(Value a) const { return frobenius(a, 1); }
  /// sigma^k(a) = a^(p^(k mod m)); negative k allowed.
  Value frobenius(Value a, std::int64_t k) const;

  std::vector<std::uint32_t> digits(Value a) const;
  Value from_digits(std::span<const std::uint32_t> digits) const;

  FieldElement element(Value v) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->m == b.data_->m &&
                                  a.data_->modulus == b.data_->modulus);
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  Value mul_polynomial_basis(Value a, Value b) const;
  Value pow_polynomial_basis(Value a, std::uint64_t e) const;

  std::shared_ptr<const detail::FieldData> data_;
};

/// A value of a Field.
class FieldElement {
 public:
  FieldElement(Field field, Value value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_)) throw FieldError("element value out of range");
  }

  const Field& field() const { return field_; }
  Value value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  /// Polynomial-basis coefficients, index 0 = constant term.
  std::vector<std::uint32_t> coeffs() const { return field_.digits(value_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    return os << a.value_;
  }

 private:
  Field field_;
  Value value_;
};

namespace detail {

inline void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldError("operands belong to different fields");
}

inline std::vector<std::uint32_t> parse_modulus_digits(std::string_view high_to_low,
                                                       std::uint32_t p) {
  std::vector<std::uint32_t> out(high_to_low.size());
  for (std::size_t i = 0; i < high_to_low.size(); ++i) {
    const char c = high_to_low[high_to_low.size() - 1 - i];
    std::uint32_t d = 0;
    if (c >= '0' && c <= '9') {
      d = static_cast<std::uint32_t>(c - '0');
    } else if (c >= 'a' && c <= 'z') {
      d = static_cast<std::uint32_t>(c - 'a') + 10;
    } else {
      throw FieldError(std::string("bad modulus digit '") + c + "'");
    }
    if (d >= p) throw FieldError("modulus digit not below p");
    out[i] = d;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Field implementation

inline std::vector<std::uint32_t> Field::digits(Value a) const {
  const auto& d = *data_;
  std::vector<std::uint32_t> out(d.m);
  for (std::uint32_t i = 0; i < d.m; ++i) {
    out[i] = static_cast<std::uint32_t>(a % d.p);
    a /= d.p;
  }
  return out;
}

inline Value Field::from_digits(std::span<const std::uint32_t> digits) const {
  const auto& d = *data_;
  if (digits.size() != d.m) throw FieldError("element needs exactly m coefficients");
  Value v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= d.p) throw FieldError("coefficient not below p");
    v = v * d.p + digits[i];
  }
  return v;
}

inline Value Field::add(Value a, Value b) const {
  const auto& d = *data_;
  if (d.p == 2) return a ^ b;
  Value r = 0;
  for (std::uint32_t i = 0; i < d.m; ++i) {
    const std::uint64_t s = (a % d.p + b % d.p) % d.p;
    r += s * d.place[i];
    a /= d.p;
    b /= d.p;
  }
  return r;
}

inline Value Field::neg(Value a) const {
  const auto& d = *data_;
  if (d.p == 2) return a;
  Value r = 0;
  for (std::uint32_t i = 0; i < d.m; ++i) {
    const std::uint64_t x = a % d.p;
    r += ((d.p - x) % d.p) * d.place[i];
    a /= d.p;
  }
  return r;
}

inline Value Field::mul_polynomial_basis(Value a, Value b) const {
  const auto& d = *data_;
  if (d.p == 2) {
    const std::uint64_t top = std::uint64_t{1} << d.m;
    Value r = 0;
    while (b != 0) {
      if (b & 1U) r ^= a;
      b >>= 1U;
      a <<= 1U;
      if (a & top) a ^= d.modulus_bits;
    }
    return r;
  }
  const std::uint64_t p = d.p;
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * d.m - 1, 0);
  for (std::uint32_t i = 0; i < d.m; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < d.m; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p;
    }
  }
  // x^m = -(modulus - x^m)
  for (std::size_t k = prod.size(); k-- > d.m;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t t = 0; t < d.m; ++t) {
      prod[k - d.m + t] = (prod[k - d.m + t] + (p - c) * d.modulus[t]) % p;
    }
  }
  Value r = 0;
  for (std::uint32_t i = d.m; i-- > 0;) r = r * p + prod[i];
  return r;
}

inline Value Field::pow_polynomial_basis(Value a, std::uint64_t e) const {
  Value r = 1;
  while (e != 0) {
    if (e & 1U) r = mul_polynomial_basis(r, a);
    a = mul_polynomial_basis(a, a);
    e >>= 1U;
  }
  return r;
}

inline Value Field::mul(Value a, Value b) const {
  const auto& d = *data_;
  if (d.exp_table.empty()) return mul_polynomial_basis(a, b);
  if (a == 0 || b == 0) return 0;
  std::uint64_t s = std::uint64_t{d.log_table[a]} + d.log_table[b];
  if (s >= d.q - 1) s -= d.q - 1;
  return d.exp_table[s];
}

inline Value Field::pow(Value a, std::uint64_t e) const {
  const auto& d = *data_;
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (d.exp_table.empty()) return pow_polynomial_basis(a, e % (d.q - 1));
  const auto s = static_cast<std::uint64_t>(
      static_cast<detail::uint128>(d.log_table[a]) * (e % (d.q - 1)) % (d.q - 1));
  return d.exp_table[s];
}

inline Value Field::inverse(Value a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return pow(a, data_->q - 2);
}

inline Value Field::frobenius(Value a, std::int64_t k) const {
  const auto& d = *data_;
  const auto m = static_cast<std::int64_t>(d.m);
  const auto kk = static_cast<std::uint32_t>(((k % m) + m) % m);
  if (kk == 0 || a == 0) return a;
  return pow(a, d.place[kk]);
}

inline FieldElement Field::element(Value v) const { return FieldElement(*this, v); }
inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1); }

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  detail::require_same_field(a.field_, b.field_);
  return FieldElement(a.field_, a.field_.add(a.value_, b.value_));
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  detail::require_same_field(a.field_, b.field_);
  return FieldElement(a.field_, a.field_.sub(a.value_, b.value_));
}

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  detail::require_same_field(a.field_, b.field_);
  return FieldElement(a.field_, a.field_.mul(a.value_, b.value_));
}

// ---------------------------------------------------------------------------
// Free-function interface

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }

inline FieldElement pow(const FieldElement& a, std::uint64_t e) {
  return FieldElement(a.field(), a.field().pow(a.value(), e));
}

inline FieldElement frobenius(const FieldElement& a, std::int64_t k) {
  return FieldElement(a.field(), a.field().frobenius(a.value(), k));
}

inline void require_divisor(const Field& field, std::uint32_t d) {
  if (d == 0 || field.degree() % d != 0) {
    throw FieldError("subfield degree " + std::to_string(d) + " does not divide " +
                     std::to_string(field.degree()));
  }
}

/// True iff sigma^d fixes a, i.e. a lies in the copy of GF(p^d).
inline bool is_in_subfield(const FieldElement& a, std::uint32_t d) {
  require_divisor(a.field(), d);
  return a.field().frobenius(a.value(), d) == a.value();
}

/// Multiplicative order of a nonzero value, using the prime factors of q - 1.
inline std::uint64_t multiplicative_order(const Field& field, Value a) {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t order = field.order() - 1;
  for (std::uint64_t r : detail::prime_factors(field.order() - 1)) {
    while (order % r == 0 && field.pow(a, order / r) == 1) order /= r;
  }
  return order;
}

/// Smallest element (canonical order) of multiplicative order p^m - 1.
inline FieldElement find_primitive(const Field& field) {
  const std::uint64_t n = field.order() - 1;
  const auto factors = detail::prime_factors(n);
  for (Value v = 1; v < field.order(); ++v) {
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (field.pow(v, n / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return field.element(v);
  }
  throw std::logic_error("finite field without a primitive element");
}

/// Sum of sigma^(to*i)(a) for i < of/to: the trace from GF(p^of) down to
/// GF(p^to), for a lying in GF(p^of).
inline FieldElement trace_within(const FieldElement& a, std::uint32_t of, std::uint32_t to) {
  require_divisor(a.field(), of);
  if (to == 0 || of % to != 0) throw FieldError("trace target degree must divide source degree");
  const Field& f = a.field();
  Value acc = 0;
  for (std::uint32_t i = 0; i < of / to; ++i) {
    acc = f.add(acc, f.frobenius(a.value(), static_cast<std::int64_t>(to) * i));
  }
  return f.element(acc);
}

/// Relative trace GF(p^m) -> GF(p^d).
inline FieldElement trace_to_subfield(const FieldElement& a, std::uint32_t d) {
  return trace_within(a, a.field().degree(), d);
}

/// d values spanning GF(p^d) over GF(p): powers 0..d-1 of a generator of
/// the subfield's multiplicative group.
inline std::vector<Value> subfield_basis(const Field& field, std::uint32_t d) {
  require_divisor(field, d);
  const Value g = find_primitive(field).value();
  std::uint64_t sub_order = 1;
  for (std::uint32_t i = 0; i < d; ++i) sub_order *= field.characteristic();
  const Value beta = field.pow(g, (field.order() - 1) / (sub_order - 1));
  std::vector<Value> basis(d);
  Value acc = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    basis[i] = acc;
    acc = field.mul(acc, beta);
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Field construction

inline Field Field::create(std::uint32_t p, std::uint32_t m,
                           std::optional<std::vector<std::uint32_t>> modulus) {
  if (!detail::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint32_t{1} << 31)) throw FieldError("characteristic too large");
  if (m < 1) throw FieldError("extension degree must be at least 1");

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->m = m;
  data->place.assign(1, 1);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (data->place.back() > detail::kMaxOrder / p) throw FieldError("field order exceeds 2^62");
    data->place.push_back(data->place.back() * p);
  }
  data->q = data->place.back();

  if (!modulus) {
    const auto builtin = detail::builtin_modulus(p, m);
    if (!builtin) {
      throw FieldError("no built-in modulus for GF(" + std::to_string(p) + "^" +
                       std::to_string(m) + ")");
    }
    modulus = detail::parse_modulus_digits(*builtin, p);
  }
  if (modulus->size() != m + 1) throw FieldError("modulus must have degree exactly m");
  if (modulus->back() != 1) throw FieldError("modulus must be monic");
  for (std::uint32_t c : *modulus) {
    if (c >= p) throw FieldError("modulus coefficient not below p");
  }
  const detail::PrimePoly f(modulus->begin(), modulus->end());
  const bool irreducible = data->q <= detail::kExhaustiveIrreducibleOrder
                               ? detail::irreducible_by_factor_search(f, p)
                               : detail::irreducible_by_rabin(f, p);
  if (!irreducible) throw FieldError("modulus is reducible over GF(p)");
  data->modulus = std::move(*modulus);
  if (p == 2) {
    for (std::uint32_t i = 0; i <= m; ++i) data->modulus_bits |= std::uint64_t{data->modulus[i]} << i;
  }

  Field plain(data);
  if (data->q > detail::kTableOrder) return plain;

  const Value g = find_primitive(plain).value();
  auto tabled = std::make_shared<detail::FieldData>(*data);
  tabled->exp_table.resize(data->q - 1);
  tabled->log_table.assign(data->q, 0);
  Value acc = 1;
  for (std::uint64_t i = 0; i + 1 < data->q; ++i) {
    tabled->exp_table[i] = acc;
    tabled->log_table[acc] = static_cast<std::uint32_t>(i);
    acc = plain.mul(acc, g);
  }
  return Field(std::move(tabled));
}

// ---------------------------------------------------------------------------
// Quadratic split GF(p^m) = GF(p^d) (+) gamma * GF(p^d), m = 2d

/// Basis {1, gamma} of GF(p^m) over its index-2 subfield, with the change of
/// basis to polynomial coordinates precomputed. Immutable once made.
class SubfieldSplit {
 public:
  const Field& field() const { return field_; }
  std::uint32_t d() const { return d_; }
  FieldElement gamma() const { return field_.element(gamma_); }
  /// gamma is a root of z^2 - trace*z + norm with both coefficients in GF(p^d);
  /// for p = 2 this is the Artin-Schreier polynomial z^2 + z + beta, beta = norm.
  FieldElement quadratic_trace() const { return field_.element(trace_); }
  FieldElement quadratic_norm() const { return field_.element(norm_); }

  /// (a1, a2) with a = a1 + gamma * a2 and a1, a2 in GF(p^d). GF(p)-linear;
  /// costs no field operations.
  std::pair<Value, Value> split(Value a) const {
    const std::uint32_t p = field_.characteristic();
    const std::uint32_t m = field_.degree();
    const auto x = field_.digits(a);
    std::vector<std::uint32_t> part1(m, 0);
    std::vector<std::uint32_t> part2(m, 0);
    for (std::uint32_t row = 0; row < m; ++row) {
      std::uint64_t c = 0;
      for (std::uint32_t col = 0; col < m; ++col) {
        c = (c + std::uint64_t{inverse_[row * m + col]} * x[col]) % p;
      }
      if (c == 0) continue;
      auto& target = row < d_ ? part1 : part2;
      const auto& b = basis_digits_[row % d_];
      for (std::uint32_t i = 0; i < m; ++i) {
        target[i] = static_cast<std::uint32_t>((target[i] + c * b[i]) % p);
      }
    }
    return {field_.from_digits(part1), field_.from_digits(part2)};
  }

  Value recompose(Value a1, Value a2) const { return field_.add(a1, field_.mul(gamma_, a2)); }

 private:
  friend SubfieldSplit make_split(const Field& field);
  SubfieldSplit(Field field, std::uint32_t d, Value gamma)
      : field_(std::move(field)), d_(d), gamma_(gamma) {}

  Field field_;
  std::uint32_t d_;
  Value gamma_;
  Value trace_ = 0;
  Value norm_ = 0;
  std::vector<std::vector<std::uint32_t>> basis_digits_;  // subfield basis, polynomial coords
  std::vector<std::uint32_t> inverse_;                    // m x m, row-major
};

namespace detail {

/// Inverse of a square matrix over GF(p); throws if singular.
inline std::vector<std::uint32_t> invert_matrix(std::vector<std::uint32_t> a, std::uint32_t n,
                                                std::uint32_t p) {
  std::vector<std::uint32_t> inv(n * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("split basis is singular");
    for (std::uint32_t k = 0; k < n; ++k) {
      std::swap(a[col * n + k], a[pivot * n + k]);
      std::swap(inv[col * n + k], inv[pivot * n + k]);
    }
    const std::uint64_t s = invmod(a[col * n + col], p);
    for (std::uint32_t k = 0; k < n; ++k) {
      a[col * n + k] = static_cast<std::uint32_t>(a[col * n + k] * s % p);
      inv[col * n + k] = static_cast<std::uint32_t>(inv[col * n + k] * s % p);
    }
    for (std::uint32_t row = 0; row < n; ++row) {
      if (row == col || a[row * n + col] == 0) continue;
      const std::uint64_t f = p - a[row * n + col];
      for (std::uint32_t k = 0; k < n; ++k) {
        a[row * n + k] = static_cast<std::uint32_t>((a[row * n + k] + f * a[col * n + k]) % p);
        inv[row * n + k] =
            static_cast<std::uint32_t>((inv[row * n + k] + f * inv[col * n + k]) % p);
      }
    }
  }
  return inv;
}

inline constexpr std::uint64_t kMaxSplitSearchOrder = std::uint64_t{1} << 24;

}  // namespace detail

/// Builds the split for even m. For p = 2, gamma is the smaller root of
/// z^2 + z + beta where beta generates GF(2^d)^* and has absolute trace 1 in
/// GF(2^d); beta = g^((q-1)/(2^d-1)) for the canonical primitive g is tried
/// first. For odd p, gamma is the smallest element outside GF(p^d).
inline SubfieldSplit make_split(const Field& field) {
  const std::uint32_t m = field.degree();
  const std::uint32_t p = field.characteristic();
  if (m % 2 != 0) throw FieldError("quadratic split needs an even extension degree");
  if (field.order() > detail::kMaxSplitSearchOrder) throw FieldError("field too large for split search");
  const std::uint32_t d = m / 2;

  Value gamma = 0;
  if (p == 2) {
    const std::uint64_t sub_units = (std::uint64_t{1} << d) - 1;
    const Value beta0 = field.pow(find_primitive(field).value(), (field.order() - 1) / sub_units);
    bool found = false;
    for (std::uint64_t k = 1; k <= sub_units && !found; ++k) {
      if (std::gcd(k, sub_units) != 1) continue;
      const Value beta = field.pow(beta0, k);
      if (trace_within(field.element(beta), d, 1).value() != 1) continue;
      for (Value z = 0; z < field.order(); ++z) {
        if (field.add(field.mul(z, z), z) == beta) {
          gamma = z;
          found = true;
          break;
        }
      }
    }
    if (!found) throw std::logic_error("no Artin-Schreier generator found");
  } else {
    for (Value z = 0; z < field.order(); ++z) {
      if (field.frobenius(z, d) != z) {
        gamma = z;
        break;
      }
    }
  }

  SubfieldSplit s(field, d, gamma);
  const Value conj = field.frobenius(gamma, d);
  s.trace_ = field.add(gamma, conj);
  s.norm_ = field.mul(gamma, conj);

  const auto basis = subfield_basis(field, d);
  std::vector<std::uint32_t> matrix(m * m, 0);  // columns: basis, gamma * basis
  for (std::uint32_t i = 0; i < d; ++i) {
    s.basis_digits_.push_back(field.digits(basis[i]));
    const auto lo = field.digits(basis[i]);
    const auto hi = field.digits(field.mul(gamma, basis[i]));
    for (std::uint32_t r = 0; r < m; ++r) {
      matrix[r * m + i] = lo[r];
      matrix[r * m + d + i] = hi[r];
    }
  }
  s.inverse_ = detail::invert_matrix(std::move(matrix), m, p);
  return s;
}

inline std::pair<FieldElement, FieldElement> split_element(const FieldElement& a,
                                                           const SubfieldSplit& s) {
  detail::require_same_field(a.field(), s.field());
  const auto [a1, a2] = s.split(a.value());
  return {s.field().element(a1), s.field().element(a2)};
}

}  // namespace frobeval
