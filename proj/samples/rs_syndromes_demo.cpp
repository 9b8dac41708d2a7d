// Encodes one random message, flips a symbol, and computes the 32 syndromes
// both ways, printing the operation ledgers.

#include <iostream>
#include <random>

#include "frobeval/rs.hpp"

int main() {
  using namespace frobeval;
  const rs::RSCode code = rs::rs_new();

  std::mt19937_64 rng(7);
  rs::Word message(rs::kDimension);
  for (auto& b : message) b = static_cast<std::uint8_t>(rng());
  rs::Word word = rs::encode(message, code);
  word[100] ^= 0x5a;

  OpCount horner_ops;
  const auto by_horner = rs::syndromes_horner(word, code, horner_ops);

  const auto tables = rs::build_tables(code);
  const auto split = make_split(code.field);
  OpCount auto_ops;
  const auto by_auto = rs::syndromes_auto(word, code, tables, split, auto_ops);

  std::cout << "gamma = " << split.gamma() << ", beta = alpha^17 = " << tables.beta << "\n";
  for (std::size_t j = 0; j < rs::kRoots; ++j) {
    std::cout << "S_" << j + 1 << " = " << by_auto.values[j]
              << (by_auto.values[j] == by_horner.values[j] ? "" : "  MISMATCH") << "\n";
  }
  std::cout << "horner:        " << horner_ops << "\n";
  std::cout << "automorphic:   " << auto_ops << "\n";
  std::cout << "tables:        " << tables.build_ops << "\n";
  std::cout << "auto + tables: " << (auto_ops + tables.build_ops).paper_mult_equiv() << "\n";
}
