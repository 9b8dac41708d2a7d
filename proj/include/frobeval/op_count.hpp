#pragma once

#include <cstdint>
#include <ostream>

namespace frobeval {

/// Tally of field operations performed by one computation.
///
/// Counters are plain accumulators passed explicitly by the caller; merging
/// with += is associative and commutative, so per-thread tallies can be
/// combined in any order.
struct OpCount {
  std::uint64_t mul = 0;      ///< general multiplications
  std::uint64_t pth_pow = 0;  ///< p-th powers (squarings when p = 2)
  std::uint64_t add = 0;      ///< additions
  std::uint64_t frob = 0;     ///< sigma^k applications with k != 0 mod m

  /// Multiplications with p-th powers folded in, the convention under which
  /// the Reed-Solomon syndrome figures (91 per syndrome, 6735 per word) hold.
  std::uint64_t paper_mult_equiv() const { return mul + pth_pow; }

  OpCount& operator+=(const OpCount& o) {
    mul += o.mul;
    pth_pow += o.pth_pow;
    add += o.add;
    frob += o.frob;
    return *this;
  }

  friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
  friend bool operator==(const OpCount&, const OpCount&) = default;

  friend std::ostream& operator<<(std::ostream& os, const OpCount& c) {
    return os << "mul=" << c.mul << " pth_pow=" << c.pth_pow << " add=" << c.add
              << " frob=" << c.frob << " paper_mult_equiv=" << c.paper_mult_equiv();
  }
};

}  // namespace frobeval
