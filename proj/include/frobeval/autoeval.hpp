#pragma once

/// \file
/// \brief Polynomial automorphic evaluation.
///
/// P(x) = sum_{i<p} x^i P_i(x^p) and, because sigma(a) = a^p is an
/// automorphism, P_i(alpha^p) = (P_i'(alpha))^p where P_i' carries the
/// coefficients of P_i mapped by sigma^-1. Splitting L times leaves p^L short
/// polynomials whose coefficients are mapped by sigma^-L. Instead of mapping
/// the coefficients, each leaf Q is evaluated at sigma^L(alpha) and sigma^-L
/// is applied to the result, since sigma^-L(Q(sigma^L(alpha))) = Q'(alpha).
/// When the coefficients are known to be fixed by sigma^L no transform is
/// needed at all. The leaves are then folded bottom-up with
/// v = sum_i alpha^i child_i^p.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "frobeval/costmodel.hpp"
#include "frobeval/gf.hpp"
#include "frobeval/op_count.hpp"
#include "frobeval/poly.hpp"

namespace frobeval {

enum class LeafMode {
  /// Evaluate leaves at sigma^L(alpha), then apply sigma^-L to each value.
  transform_outputs,
  /// Coefficients are fixed by sigma^L; evaluate leaves at alpha directly.
  fixed_coeffs,
};

inline const char* to_string(LeafMode mode) {
  return mode == LeafMode::fixed_coeffs ? "fixed-coeffs" : "transform-outputs";
}

struct EvalPlan {
  std::uint32_t levels = 0;  ///< decomposition depth L
  LeafMode leaf_mode = LeafMode::transform_outputs;
  std::optional<std::uint32_t> coeff_subfield_d;

  friend bool operator==(const EvalPlan&, const EvalPlan&) = default;
};

/// Where the operations of one evaluation went.
struct EvalBreakdown {
  OpCount setup;      ///< alpha^i for 2 <= i < p, and sigma^L(alpha)
  OpCount leaves;     ///< Horner on the leaf polynomials
  OpCount transform;  ///< sigma^-L on leaf values
  OpCount recombine;  ///< p-th powers, multiplications by alpha^i, additions
  OpCount combine;    ///< final a + gamma*b of a split evaluation

  friend bool operator==(const EvalBreakdown&, const EvalBreakdown&) = default;
};

struct EvalReport {
  FieldElement value;
  OpCount ops;
  EvalPlan plan;
  std::uint64_t leaf_count = 1;
  std::optional<std::size_t> max_leaf_degree;
  EvalBreakdown breakdown;
};

/// Largest leaf count an EvalPlan may request.
inline constexpr std::uint64_t kMaxLeafCount = std::uint64_t{1} << 24;

inline void validate_plan(const Field& field, const EvalPlan& plan) {
  if (plan.coeff_subfield_d) require_divisor(field, *plan.coeff_subfield_d);
  if (plan.leaf_mode == LeafMode::fixed_coeffs) {
    if (!plan.coeff_subfield_d) {
      throw std::invalid_argument("fixed-coeffs leaves need a declared coefficient subfield");
    }
    if (plan.levels % *plan.coeff_subfield_d != 0) {
      throw std::invalid_argument("fixed-coeffs leaves need d to divide L");
    }
  }
  std::uint64_t leaves = 1;
  for (std::uint32_t i = 0; i < plan.levels; ++i) {
    leaves *= field.characteristic();
    if (leaves > kMaxLeafCount) throw std::invalid_argument("decomposition depth too large");
  }
}

/// Folds p^L leaf values into one: at each level, node r of the upper level
/// takes children r + i*width (i < p) and becomes sum_i alpha^i child_i^p.
/// \p alpha_powers holds alpha^0 .. alpha^(p-1). Costs (p^(L+1)-p)/(p-1)
/// p-th powers, p^L - 1 multiplications and p^L - 1 additions.
inline Value recombine(const Field& field, std::vector<Value> values,
                       std::span<const Value> alpha_powers, std::uint32_t levels,
                       OpCount& counter) {
  const std::uint32_t p = field.characteristic();
  std::size_t width = values.size();
  for (std::uint32_t level = 0; level < levels; ++level) {
    width /= p;
    for (std::size_t r = 0; r < width; ++r) {
      Value acc = field.pth_power(values[r]);
      for (std::uint32_t i = 1; i < p; ++i) {
        acc = field.add(acc, field.mul(alpha_powers[i], field.pth_power(values[r + i * width])));
      }
      values[r] = acc;
    }
    counter.pth_pow += width * p;
    counter.mul += width * (p - 1);
    counter.add += width * (p - 1);
  }
  return values.front();
}

/// The p^L leaves of an L-fold stride-p split: leaf j holds the coefficients
/// at indices j, j + p^L, j + 2p^L, ...
inline std::vector<Polynomial> decompose(const Polynomial& poly, std::uint32_t levels) {
  const std::uint32_t p = poly.field().characteristic();
  std::vector<Polynomial> nodes{poly};
  std::size_t width = 1;
  for (std::uint32_t level = 0; level < levels; ++level) {
    std::vector<Polynomial> next(width * p, Polynomial(poly.field()));
    for (std::size_t r = 0; r < width; ++r) {
      auto parts = stride_split(nodes[r], p);
      for (std::uint32_t i = 0; i < p; ++i) next[r + i * width] = std::move(parts[i]);
    }
    nodes = std::move(next);
    width *= p;
  }
  return nodes;
}

/// Evaluates P(alpha) with an L-level decomposition. The value always equals
/// horner_eval(P, alpha); L = 0 is plain Horner with identical counts.
inline EvalReport auto_eval(const Polynomial& poly, const FieldElement& alpha,
                            const EvalPlan& plan, OpCount& counter) {
  const Field& f = poly.field();
  detail::require_same_field(f, alpha.field());
  validate_plan(f, plan);
  if (plan.coeff_subfield_d) {
    for (Value c : poly.coeffs()) {
      if (f.frobenius(c, *plan.coeff_subfield_d) != c) {
        throw std::invalid_argument("coefficient outside the declared subfield");
      }
    }
  }

  const std::uint32_t p = f.characteristic();
  const std::uint32_t L = plan.levels;
  EvalBreakdown parts;

  if (L == 0) {
    const FieldElement v = horner_eval(poly, alpha, parts.leaves);
    counter += parts.leaves;
    return EvalReport{v, parts.leaves, plan, 1, poly.degree(), parts};
  }

  std::vector<Value> alpha_powers(p, 1);
  for (std::uint32_t i = 1; i < p; ++i) {
    alpha_powers[i] = i == 1 ? alpha.value() : f.mul(alpha_powers[i - 1], alpha.value());
  }
  if (p > 2) parts.setup.mul += p - 2;

  const bool moves = L % f.degree() != 0;
  const bool transform = plan.leaf_mode == LeafMode::transform_outputs && moves;
  Value leaf_point = alpha.value();
  if (transform) {
    leaf_point = f.frobenius(leaf_point, L);
    ++parts.setup.frob;
  }

  const auto leaves = decompose(poly, L);
  std::vector<Value> values(leaves.size());
  std::optional<std::size_t> max_degree;
  for (std::size_t j = 0; j < leaves.size(); ++j) {
    const auto deg = leaves[j].degree();
    if (deg) {
      max_degree = std::max(max_degree.value_or(0), *deg);
      values[j] = horner_eval_dense(f, leaves[j].coeffs().first(*deg + 1), leaf_point, parts.leaves);
    } else {
      values[j] = 0;
    }
    if (transform) values[j] = f.frobenius(values[j], -static_cast<std::int64_t>(L));
  }
  if (transform) parts.transform.frob += leaves.size();

  const Value v = recombine(f, std::move(values), alpha_powers, L, parts.recombine);

  OpCount total = parts.setup + parts.leaves + parts.transform + parts.recombine;
  counter += total;
  return EvalReport{f.element(v), total, plan, leaves.size(), max_degree, parts};
}

/// Decomposition depth for a degree-n polynomial: the cost model's integer
/// optimum, capped at m - 1 when coefficients do not lie in the prime field.
inline std::uint32_t choose_L(std::uint64_t n, const Field& field,
                              std::optional<std::uint32_t> coeff_subfield_d = std::nullopt) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  const std::uint32_t d = coeff_subfield_d.value_or(field.degree());
  require_divisor(field, d);
  const cost::CostParams params{n, field.characteristic(), field.degree(), d};
  std::uint32_t L = cost::optimal_L(params).L_int;
  if (d > 1) L = std::min(L, field.degree() - 1);
  return L;
}

/// Evaluates P = P1 + gamma*P2 where P1, P2 have coefficients in GF(p^(m/2)),
/// each half by auto_eval with L levels, then one multiplication and one
/// addition to combine.
inline EvalReport split_eval(const Polynomial& poly, const FieldElement& alpha,
                             const SubfieldSplit& split, std::uint32_t levels, OpCount& counter) {
  const Field& f = poly.field();
  detail::require_same_field(f, split.field());
  detail::require_same_field(f, alpha.field());

  std::vector<Value> c1(poly.coeffs().size());
  std::vector<Value> c2(poly.coeffs().size());
  for (std::size_t i = 0; i < c1.size(); ++i) {
    std::tie(c1[i], c2[i]) = split.split(poly.coeffs()[i]);
  }
  const EvalPlan plan{levels,
                      levels % split.d() == 0 ? LeafMode::fixed_coeffs
                                              : LeafMode::transform_outputs,
                      split.d()};
  OpCount local;
  const EvalReport r1 = auto_eval(Polynomial(f, std::move(c1)), alpha, plan, local);
  const EvalReport r2 = auto_eval(Polynomial(f, std::move(c2)), alpha, plan, local);

  EvalBreakdown parts;
  for (const auto* r : {&r1, &r2}) {
    parts.setup += r->breakdown.setup;
    parts.leaves += r->breakdown.leaves;
    parts.transform += r->breakdown.transform;
    parts.recombine += r->breakdown.recombine;
  }
  const Value v = f.add(r1.value.value(), f.mul(split.gamma().value(), r2.value.value()));
  parts.combine.mul = 1;
  parts.combine.add = 1;
  local += parts.combine;
  counter += local;

  std::optional<std::size_t> max_degree = r1.max_leaf_degree;
  if (r2.max_leaf_degree) max_degree = std::max(max_degree.value_or(0), *r2.max_leaf_degree);
  return EvalReport{f.element(v), local, plan, r1.leaf_count, max_degree, parts};
}

}  // namespace frobeval
