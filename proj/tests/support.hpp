#pragma once

// auto_eval and split_eval wrappers that enforce the recombination count
// law on every call.

#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "frobeval/frobeval.hpp"
#include "oracles.hpp"

namespace frobeval::testing {

/// auto_eval, then the count law on its recombination step.
inline EvalReport checked_auto_eval(const Polynomial& poly, const FieldElement& alpha,
                                    const EvalPlan& plan, OpCount& counter) {
  OpCount local;
  EvalReport r = auto_eval(poly, alpha, plan, local);
  EXPECT_TRUE(obeys_recombination_law(r, poly.field().characteristic(), plan.levels))
      << "L=" << plan.levels << " recombine " << r.breakdown.recombine;
  EXPECT_EQ(r.leaf_count, ipow(poly.field().characteristic(), plan.levels));
  EXPECT_EQ(local, r.ops);
  counter += local;
  return r;
}

inline EvalReport checked_split_eval(const Polynomial& poly, const FieldElement& alpha,
                                     const SubfieldSplit& split, std::uint32_t L,
                                     OpCount& counter) {
  OpCount local;
  EvalReport r = split_eval(poly, alpha, split, L, local);
  EXPECT_TRUE(obeys_recombination_law(r, poly.field().characteristic(), L, 2))
      << "L=" << L << " recombine " << r.breakdown.recombine;
  EXPECT_EQ(r.breakdown.combine.mul, 1U);
  EXPECT_EQ(r.breakdown.combine.add, 1U);
  EXPECT_EQ(local, r.ops);
  counter += local;
  return r;
}

}  // namespace frobeval::testing
