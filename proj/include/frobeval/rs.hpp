#pragma once

/// \file
/// \brief Syndromes of the [255,223,33] Reed-Solomon code over GF(2^8).
///
/// Two routes to S_j = r(alpha^j), j = 1..32:
///
///  - Horner: 31 multiplications for alpha^2..alpha^32, then 254 per point,
///    8159 for one word, 31 + 8128 K for K words.
///  - Automorphic: write r = r1 + gamma*r2 with r1, r2 over GF(16), where
///    gamma^2 + gamma = beta = alpha^17. Split each half four times by
///    stride 2 into 16 polynomials of degree <= 15 whose coefficients are
///    fixed by sigma^4, evaluate those from the precomputed products
///    alpha^i * beta^j with additions only, and fold back with 30 squares and
///    15 multiplications. With the final gamma product that is
///    2*45 + 1 = 91 per syndrome, 2912 per word, plus a one-off 3823 for the
///    tables (253 for alpha^2..alpha^254, 255*14 = 3570 for the products).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "frobeval/autoeval.hpp"
#include "frobeval/gf.hpp"
#include "frobeval/op_count.hpp"
#include "frobeval/poly.hpp"

namespace frobeval::rs {

inline constexpr std::size_t kLength = 255;
inline constexpr std::size_t kDimension = 223;
inline constexpr std::size_t kRoots = 32;
inline constexpr std::uint32_t kSubfieldDegree = 4;
inline constexpr std::uint32_t kLevels = 4;
/// beta = alpha^17 generates GF(16)^*.
inline constexpr std::size_t kBetaExponent = 17;
inline constexpr std::size_t kBetaOrder = 15;

/// Received word or codeword: byte i is the coefficient of x^i.
using Word = std::vector<std::uint8_t>;

struct RSCode {
  Field field;
  FieldElement alpha;
  std::size_t n_code = kLength;
  std::size_t k_code = kDimension;
  std::size_t t2 = kRoots;
  Polynomial generator;  ///< prod_{i=1}^{32} (x - alpha^i)
};

/// x^8 + x^5 + x^3 + x + 1, low to high.
inline std::vector<std::uint32_t> modulus() { return {1, 1, 0, 1, 0, 1, 0, 0, 1}; }

/// The code over GF(2^8) mod x^8+x^5+x^3+x+1, with alpha = x when x is
/// primitive (it is) and the canonical primitive element otherwise.
inline RSCode rs_new() {
  const Field f = Field::create(2, 8, modulus());
  FieldElement alpha = f.element(2);
  if (multiplicative_order(f, alpha.value()) != f.order() - 1) alpha = find_primitive(f);

  std::vector<Value> g{1};
  Value root = 1;
  for (std::size_t i = 1; i <= kRoots; ++i) {
    root = f.mul(root, alpha.value());
    // g <- g * (x - root)
    std::vector<Value> next(g.size() + 1, 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], g[k]);
      next[k] = f.sub(next[k], f.mul(root, g[k]));
    }
    g = std::move(next);
  }
  return RSCode{f, alpha, kLength, kDimension, kRoots, Polynomial(f, std::move(g))};
}

namespace detail {

inline std::vector<Value> widen(std::span<const std::uint8_t> bytes, std::size_t expected,
                                const char* what) {
  if (bytes.size() != expected) {
    throw std::invalid_argument(std::string(what) + " must have " + std::to_string(expected) +
                                " symbols, got " + std::to_string(bytes.size()));
  }
  return {bytes.begin(), bytes.end()};
}

}  // namespace detail

/// Systematic encoding: message in coefficients 32..254, parity below.
inline Word encode(std::span<const std::uint8_t> message, const RSCode& code) {
  const Field& f = code.field;
  const auto msg = detail::widen(message, code.k_code, "message");
  const auto g = code.generator.coeffs();
  const std::size_t parity = g.size() - 1;

  std::vector<Value> rem(code.n_code, 0);
  for (std::size_t i = 0; i < msg.size(); ++i) rem[parity + i] = msg[i];
  for (std::size_t k = code.n_code; k-- > parity;) {
    const Value c = rem[k];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= parity; ++t) {
      rem[k - parity + t] = f.sub(rem[k - parity + t], f.mul(c, g[t]));
    }
  }
  Word out(code.n_code, 0);
  for (std::size_t i = 0; i < parity; ++i) out[i] = static_cast<std::uint8_t>(f.neg(rem[i]));
  for (std::size_t i = 0; i < msg.size(); ++i) out[parity + i] = message[i];
  return out;
}

struct SyndromeTables {
  std::vector<Value> alpha_pows;  ///< alpha^i, i = 0..254
  std::vector<Value> mixed_flat;  ///< alpha^i * beta^j, i = 0..254, j = 1..14
  Value beta = 0;
  /// log_beta of a GF(16) element, -1 for zero and for values outside GF(16).
  std::array<std::int16_t, 256> log_beta{};
  OpCount build_ops;

  Value mixed(std::size_t i, std::size_t j) const { return mixed_flat[i * (kBetaOrder - 1) + (j - 1)]; }
  Value beta_pow(std::size_t j) const { return alpha_pows[(kBetaExponent * j) % kLength]; }
};

/// Tables shared by every word: 253 + 3570 = 3823 multiplications.
inline SyndromeTables build_tables(const RSCode& code) {
  const Field& f = code.field;
  SyndromeTables t;
  t.alpha_pows.resize(kLength);
  t.alpha_pows[0] = 1;
  t.alpha_pows[1] = code.alpha.value();
  for (std::size_t i = 2; i < kLength; ++i) {
    t.alpha_pows[i] = f.mul(t.alpha_pows[i - 1], code.alpha.value());
    ++t.build_ops.mul;
  }
  t.beta = t.alpha_pows[kBetaExponent];

  t.mixed_flat.resize(kLength * (kBetaOrder - 1));
  for (std::size_t i = 0; i < kLength; ++i) {
    for (std::size_t j = 1; j < kBetaOrder; ++j) {
      t.mixed_flat[i * (kBetaOrder - 1) + (j - 1)] = f.mul(t.alpha_pows[i], t.beta_pow(j));
      ++t.build_ops.mul;
    }
  }

  t.log_beta.fill(-1);
  for (std::size_t j = 0; j < kBetaOrder; ++j) {
    t.log_beta[t.beta_pow(j)] = static_cast<std::int16_t>(j);
  }
  return t;
}

struct SyndromeSet {
  std::vector<FieldElement> values;  ///< S_1 .. S_32
  OpCount ops;                       ///< this word only, tables excluded
  /// GF(16) operations of the subfield-multiplication mode.
  std::optional<OpCount> subfield_ops;

  bool all_zero() const {
    for (const auto& v : values) {
      if (!v.is_zero()) return false;
    }
    return true;
  }
};

/// alpha^1 .. alpha^32 (index 0 holds 1): 31 multiplications.
inline std::vector<Value> syndrome_points(const RSCode& code, OpCount& counter) {
  std::vector<Value> pts(code.t2 + 1, 1);
  pts[1] = code.alpha.value();
  for (std::size_t j = 2; j <= code.t2; ++j) {
    pts[j] = code.field.mul(pts[j - 1], code.alpha.value());
    ++counter.mul;
  }
  return pts;
}

namespace detail {

inline SyndromeSet horner_at_points(std::span<const std::uint8_t> received, const RSCode& code,
                                    std::span<const Value> points) {
  const auto r = widen(received, code.n_code, "received word");
  SyndromeSet out;
  out.values.reserve(code.t2);
  for (std::size_t j = 1; j <= code.t2; ++j) {
    out.values.push_back(code.field.element(horner_eval_dense(code.field, r, points[j], out.ops)));
  }
  return out;
}

}  // namespace detail

/// Horner at each alpha^j over all 255 coefficients: 31 + 32*254 = 8159.
inline SyndromeSet syndromes_horner(std::span<const std::uint8_t> received, const RSCode& code,
                                    OpCount& counter) {
  OpCount prep;
  const auto pts = syndrome_points(code, prep);
  SyndromeSet out = detail::horner_at_points(received, code, pts);
  out.ops += prep;
  counter += out.ops;
  return out;
}

/// How the automorphic route performs its multiplications.
enum class MulMode {
  /// Every multiplication in GF(2^8).
  full_field,
  /// Values carried as pairs (a, b) meaning a + gamma*b with a, b in GF(16);
  /// multiplications done in GF(16) and tallied in SyndromeSet::subfield_ops.
  subfield,
};

namespace detail {

inline void check_split(const RSCode& code, const SyndromeTables& tables,
                        const SubfieldSplit& split) {
  frobeval::detail::require_same_field(code.field, split.field());
  const Field& f = code.field;
  const Value g = split.gamma().value();
  if (split.d() != kSubfieldDegree || f.add(f.mul(g, g), g) != tables.beta ||
      f.frobenius(g, kSubfieldDegree) == g) {
    throw std::invalid_argument("split generator must satisfy gamma^2 + gamma = alpha^17");
  }
}

/// GF(16) arithmetic on embedded values through the beta logarithm.
struct SubfieldArith {
  const Field& field;
  const SyndromeTables& tables;
  OpCount& ops;

  Value mul(Value a, Value b) const {
    ++ops.mul;
    if (a == 0 || b == 0) return 0;
    return tables.beta_pow((tables.log_beta[a] + tables.log_beta[b]) % kBetaOrder);
  }
  Value square(Value a) const {
    ++ops.pth_pow;
    if (a == 0) return 0;
    return tables.beta_pow((2 * tables.log_beta[a]) % kBetaOrder);
  }
  Value add(Value a, Value b) const {
    ++ops.add;
    return field.add(a, b);
  }
};

using Pair = std::pair<Value, Value>;

// gamma^2 = gamma + beta
inline Pair pair_square(const SubfieldArith& k, Pair x, Value beta) {
  const Value a2 = k.square(x.first);
  const Value b2 = k.square(x.second);
  return {k.add(a2, k.mul(beta, b2)), b2};
}

inline Pair pair_mul(const SubfieldArith& k, Pair x, Pair y, Value beta) {
  const auto [a, b] = x;
  const auto [c, d] = y;
  const Value bd = k.mul(b, d);
  return {k.add(k.mul(a, c), k.mul(beta, bd)), k.add(k.add(k.mul(a, d), k.mul(b, c)), bd)};
}

inline Pair pair_recombine(const SubfieldArith& k, std::vector<Pair> values, Pair point,
                           Value beta) {
  std::size_t width = values.size();
  while (width > 1) {
    width /= 2;
    for (std::size_t r = 0; r < width; ++r) {
      const Pair lo = pair_square(k, values[r], beta);
      const Pair hi = pair_mul(k, point, pair_square(k, values[r + width], beta), beta);
      values[r] = {k.add(lo.first, hi.first), k.add(lo.second, hi.second)};
    }
  }
  return values.front();
}

}  // namespace detail

/// Automorphic syndromes, tables built beforehand. ops covers this word only:
/// paper_mult_equiv = 32 * 91 = 2912 in full-field mode.
inline SyndromeSet syndromes_auto(std::span<const std::uint8_t> received, const RSCode& code,
                                  const SyndromeTables& tables, const SubfieldSplit& split,
                                  OpCount& counter, MulMode mode = MulMode::full_field) {
  const Field& f = code.field;
  if (tables.alpha_pows.size() != kLength || tables.mixed_flat.empty()) {
    throw std::invalid_argument("syndrome tables are not built");
  }
  detail::check_split(code, tables, split);
  const auto r = detail::widen(received, code.n_code, "received word");

  std::array<std::vector<Value>, 2> halves{std::vector<Value>(kLength), std::vector<Value>(kLength)};
  for (std::size_t i = 0; i < kLength; ++i) {
    std::tie(halves[0][i], halves[1][i]) = split.split(r[i]);
  }

  constexpr std::size_t kLeaves = std::size_t{1} << kLevels;
  SyndromeSet out;
  out.values.reserve(code.t2);
  OpCount sub_ops;
  const detail::SubfieldArith sub{f, tables, sub_ops};

  for (std::size_t j = 1; j <= code.t2; ++j) {
    std::array<std::vector<Value>, 2> leaf_values;
    for (std::size_t h = 0; h < 2; ++h) {
      leaf_values[h].assign(kLeaves, 0);
      for (std::size_t k = 0; k < kLeaves; ++k) {
        Value acc = 0;
        std::size_t terms = 0;
        for (std::size_t b = 0; kLeaves * b + k < kLength; ++b) {
          const Value c = halves[h][kLeaves * b + k];
          if (c == 0) continue;
          const std::size_t e = (j * b) % kLength;
          const std::int16_t lc = tables.log_beta[c];
          acc = f.add(acc, lc == 0 ? tables.alpha_pows[e] : tables.mixed(e, lc));
          ++terms;
        }
        if (terms > 1) out.ops.add += terms - 1;
        leaf_values[h][k] = acc;
      }
    }

    if (mode == MulMode::full_field) {
      const std::array<Value, 2> point{1, tables.alpha_pows[j]};
      const Value v1 = recombine(f, std::move(leaf_values[0]), point, kLevels, out.ops);
      const Value v2 = recombine(f, std::move(leaf_values[1]), point, kLevels, out.ops);
      out.values.push_back(f.element(f.add(v1, f.mul(split.gamma().value(), v2))));
      out.ops.mul += 1;
      out.ops.add += 1;
    } else {
      const detail::Pair point = split.split(tables.alpha_pows[j]);
      std::array<detail::Pair, 2> v;
      for (std::size_t h = 0; h < 2; ++h) {
        std::vector<detail::Pair> pairs(kLeaves);
        for (std::size_t k = 0; k < kLeaves; ++k) pairs[k] = split.split(leaf_values[h][k]);
        v[h] = detail::pair_recombine(sub, std::move(pairs), point, tables.beta);
      }
      // v1 + gamma * v2, gamma * (c + gamma d) = beta d + gamma (c + d)
      const auto [c, d] = v[1];
      const detail::Pair s{sub.add(v[0].first, sub.mul(tables.beta, d)),
                           sub.add(v[0].second, sub.add(c, d))};
      // Back to polynomial basis: one GF(2^8) product gamma * s.second.
      out.values.push_back(f.element(split.recompose(s.first, s.second)));
      out.ops.mul += 1;
      out.ops.add += 1;
    }
  }
  if (mode == MulMode::subfield) out.subfield_ops = sub_ops;
  counter += out.ops;
  return out;
}

enum class Strategy { horner, automorphic };

inline const char* to_string(Strategy s) { return s == Strategy::horner ? "horner" : "auto"; }

struct BatchResult {
  std::vector<SyndromeSet> sets;  ///< in input order
  OpCount precompute;             ///< point powers (Horner) or tables (automorphic)
  OpCount total;                  ///< precompute plus every word
};

/// Syndromes of K words with precomputation done once:
/// 31 + 8128 K (Horner) or 3823 + 2912 K (automorphic). Words are spread over
/// \p threads workers; the result does not depend on the thread count.
inline BatchResult syndromes_batch(std::span<const Word> words, Strategy strategy,
                                   const RSCode& code, unsigned threads = 1,
                                   MulMode mode = MulMode::full_field) {
  if (words.empty()) throw std::invalid_argument("empty batch");
  for (const auto& w : words) {
    if (w.size() != code.n_code) throw std::invalid_argument("received word has wrong length");
  }
  BatchResult out;
  out.sets.resize(words.size());

  std::vector<Value> points;
  std::optional<SyndromeTables> tables;
  std::optional<SubfieldSplit> split;
  if (strategy == Strategy::horner) {
    points = syndrome_points(code, out.precompute);
  } else {
    tables = build_tables(code);
    split = make_split(code.field);
    out.precompute = tables->build_ops;
  }

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (strategy == Strategy::horner) {
        out.sets[i] = detail::horner_at_points(words[i], code, points);
      } else {
        OpCount ignored;
        out.sets[i] = syndromes_auto(words[i], code, *tables, *split, ignored, mode);
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(threads, 1, words.size());
  if (n_threads == 1) {
    work(0, words.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (words.size() + n_threads - 1) / n_threads;
    for (std::size_t t = 0; t < n_threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(words.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }

  out.total = out.precompute;
  for (const auto& s : out.sets) out.total += s.ops;
  return out;
}

}  // namespace frobeval::rs
