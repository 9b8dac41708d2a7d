#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace frobeval::detail {
struct BuiltinModulus {
  std::uint32_t p;
  std::uint32_t m;
  /// Base-p digits from degree m down to 0 (digits above 9 as a-z).
  std::string_view digits;
};
// Smallest primitive modulus per (p, m) in canonical order, except GF(2^4) and
// GF(2^8) which use the Reed-Solomon syndrome example's moduli.
inline constexpr BuiltinModulus kBuiltinModuli[] = {
    {2, 1, "10"},
    {2, 2, "111"},
    {2, 3, "1011"},
    {2, 4, "11001"},
    {2, 5, "100101"},
    {2, 6, "1000011"},
    {2, 7, "10000011"},
    {2, 8, "100101011"},
    {2, 9, "1000010001"},
    {2, 10, "10000001001"},
    {2, 11, "100000000101"},
    {2, 12, "1000001010011"},
    {2, 13, "10000000011011"},
    {2, 14, "100000000101011"},
    {2, 15, "1000000000000011"},
    {2, 16, "10000000000101101"},
    {2, 17, "100000000000001001"},
    {2, 18, "1000000000000100111"},
    {2, 19, "10000000000000100111"},
    {2, 20, "100000000000000001001"},
    {2, 21, "1000000000000000000101"},
    {2, 22, "10000000000000000000011"},
    {2, 23, "100000000000000000100001"},
    {2, 24, "1000000000000000000011011"},
    {2, 25, "10000000000000000000001001"},
    {2, 26, "100000000000000000001000111"},
    {2, 27, "1000000000000000000000100111"},
    {2, 28, "10000000000000000000000001001"},
    {2, 29, "100000000000000000000000000101"},
    {2, 30, "1000000000000000000000001010011"},
    {2, 31, "10000000000000000000000000001001"},
    {2, 32, "100000000000000000000000010101111"},
    {3, 1, "10"},
    {3, 2, "112"},
    {3, 3, "1021"},
    {3, 4, "10012"},
    {3, 5, "100021"},
    {3, 6, "1000012"},
    {3, 7, "10000121"},
    {3, 8, "100001002"},
    {3, 9, "1000002101"},
    {3, 10, "10000001012"},
    {3, 11, "100000000121"},
    {3, 12, "1000000021222"},
    {3, 13, "10000000000021"},
    {3, 14, "100000000000012"},
    {3, 15, "1000000000000121"},
    {3, 16, "10000000000011022"},
    {5, 1, "10"},
    {5, 2, "112"},
    {5, 3, "1032"},
    {5, 4, "10122"},
    {5, 5, "100042"},
    {5, 6, "1000012"},
    {5, 7, "10000032"},
    {5, 8, "100000123"},
    {5, 9, "1000000123"},
    {5, 10, "10000000113"},
    {7, 1, "10"},
    {7, 2, "113"},
    {7, 3, "1032"},
    {7, 4, "10135"},
    {7, 5, "100014"},
    {7, 6, "1000315"},
    {7, 7, "10000062"},
    {7, 8, "100000013"},
    {11, 1, "10"},
    {11, 2, "117"},
    {11, 3, "1014"},
    {11, 4, "10012"},
    {11, 5, "100114"},
    {13, 1, "10"},
    {13, 2, "112"},
    {13, 3, "1016"},
    {13, 4, "10112"},
};

inline std::optional<std::string_view> builtin_modulus(std::uint32_t p, std::uint32_t m) {
  for (const auto& entry : kBuiltinModuli) {
    if (entry.p == p && entry.m == m) return entry.digits;
  }
  return std::nullopt;
}

}  // namespace frobeval::detail
