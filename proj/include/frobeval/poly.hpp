#pragma once

/// \file
/// \brief Polynomials over a Field: Horner baseline, the stride-s
///        decomposition P(x) = sum_i x^i P_i(x^s), and coefficient-wise
///        Frobenius maps.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "frobeval/gf.hpp"
#include "frobeval/op_count.hpp"

namespace frobeval {

/// Coefficients over one field, index i holding the coefficient of x^i.
/// Trailing zeros may be stored; degree() ignores them.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(std::move(field)) {}

  Polynomial(Field field, std::vector<Value> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Value c : coeffs_) {
      if (!field_.contains(c)) throw FieldError("polynomial coefficient out of range");
    }
  }

  static Polynomial from_elements(const Field& field, std::span<const FieldElement> coeffs) {
    std::vector<Value> raw;
    raw.reserve(coeffs.size());
    for (const auto& c : coeffs) {
      detail::require_same_field(field, c.field());
      raw.push_back(c.value());
    }
    return Polynomial(field, std::move(raw));
  }

  const Field& field() const { return field_; }
  std::span<const Value> coeffs() const { return coeffs_; }

  /// Highest index with a nonzero coefficient; std::nullopt stands for the
  /// zero polynomial's degree of minus infinity.
  std::optional<std::size_t> degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i] != 0) return i;
    }
    return std::nullopt;
  }

  bool is_zero() const { return !degree().has_value(); }

  FieldElement coeff(std::size_t i) const {
    return field_.element(i < coeffs_.size() ? coeffs_[i] : 0);
  }

  /// Formal equality: same field, same coefficients up to trailing zeros.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_)) return false;
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Value x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
      const Value y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
      if (x != y) return false;
    }
    return true;
  }

 private:
  Field field_;
  std::vector<Value> coeffs_;
};

/// Horner over every stored coefficient, leading zeros included:
/// size-1 multiplications and additions, independent of the data.
inline Value horner_eval_dense(const Field& field, std::span<const Value> coeffs, Value alpha,
                               OpCount& counter) {
  if (coeffs.empty()) return 0;
  Value acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    acc = field.add(field.mul(acc, alpha), coeffs[i]);
  }
  counter.mul += coeffs.size() - 1;
  counter.add += coeffs.size() - 1;
  return acc;
}

/// P(alpha) by Horner's rule: exactly deg(P) multiplications and deg(P)
/// additions, none for constants or the zero polynomial.
inline FieldElement horner_eval(const Polynomial& poly, const FieldElement& alpha,
                                OpCount& counter) {
  detail::require_same_field(poly.field(), alpha.field());
  const auto deg = poly.degree();
  if (!deg) return poly.field().zero();
  return poly.field().element(
      horner_eval_dense(poly.field(), poly.coeffs().first(*deg + 1), alpha.value(), counter));
}

/// [P_0, ..., P_{s-1}] with P_i(y) = sum_a c_{a*s+i} y^a.
inline std::vector<Polynomial> stride_split(const Polynomial& poly, std::size_t s) {
  if (s < 2) throw std::invalid_argument("stride must be at least 2");
  const auto deg = poly.degree();
  const std::size_t len = deg ? *deg + 1 : 0;
  std::vector<Polynomial> parts;
  parts.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Value> c;
    if (i < len) c.reserve((len - i + s - 1) / s);
    for (std::size_t j = i; j < len; j += s) c.push_back(poly.coeffs()[j]);
    parts.emplace_back(poly.field(), std::move(c));
  }
  return parts;
}

/// Applies sigma^k to every coefficient. When a counter is supplied, each
/// nonzero coefficient moved by a nontrivial sigma^k counts one Frobenius.
inline Polynomial coeff_frobenius(const Polynomial& poly, std::int64_t k,
                                  OpCount* counter = nullptr) {
  const Field& f = poly.field();
  const auto m = static_cast<std::int64_t>(f.degree());
  const bool trivial = ((k % m) + m) % m == 0;
  std::vector<Value> out(poly.coeffs().begin(), poly.coeffs().end());
  if (trivial) return Polynomial(f, std::move(out));
  for (Value& c : out) {
    if (c == 0) continue;
    c = f.frobenius(c, k);
    if (counter != nullptr) ++counter->frob;
  }
  return Polynomial(f, std::move(out));
}

/// Seeded random polynomial of exactly the given degree. With \p subfield_d,
/// coefficients are uniform over GF(p^d) embedded in the field.
inline Polynomial poly_random(const Field& field, std::size_t degree,
                              std::optional<std::uint32_t> subfield_d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Value> basis;
  if (subfield_d) {
    require_divisor(field, *subfield_d);
    if (*subfield_d != field.degree()) basis = subfield_basis(field, *subfield_d);
  }
  std::uniform_int_distribution<Value> whole(0, field.order() - 1);
  std::uniform_int_distribution<std::uint32_t> digit(0, field.characteristic() - 1);
  auto draw = [&]() -> Value {
    if (basis.empty()) return whole(rng);
    Value v = 0;
    for (Value b : basis) v = field.add(v, field.mul(digit(rng), b));
    return v;
  };
  std::vector<Value> coeffs(degree + 1);
  for (auto& c : coeffs) c = draw();
  while (coeffs.back() == 0) coeffs.back() = draw();
  return Polynomial(field, std::move(coeffs));
}

}  // namespace frobeval
