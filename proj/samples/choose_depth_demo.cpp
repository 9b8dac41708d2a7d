// Sweeps the decomposition depth for a random GF(2^8) polynomial and shows
// measured counts next to the cost model's choice.

#include <iostream>

#include "frobeval/autoeval.hpp"
#include "frobeval/costmodel.hpp"

int main() {
  using namespace frobeval;
  const Field f = Field::create(2, 8);
  const Polynomial poly = poly_random(f, 1000, std::nullopt, 42);
  const FieldElement alpha = find_primitive(f);

  OpCount horner_ops;
  const FieldElement expected = horner_eval(poly, alpha, horner_ops);
  std::cout << "horner: " << horner_ops << "\n";
  for (std::uint32_t L = 1; L < f.degree(); ++L) {
    OpCount ops;
    const auto report = auto_eval(poly, alpha, EvalPlan{L, LeafMode::transform_outputs, std::nullopt}, ops);
    std::cout << "L=" << L << ": " << ops << (report.value == expected ? "" : "  MISMATCH")
              << "  model g(L)=" << cost::g_general(L, {1000, 2, 8, 8}) << "\n";
  }
  std::cout << "choose_L: " << choose_L(1000, f) << "\n";
}
