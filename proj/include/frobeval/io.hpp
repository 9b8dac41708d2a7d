#pragma once

/// \file
/// \brief Text and binary formats used by the command-line tool.
///
///  - Field description: `p=2 m=8 modulus=100101011`, modulus digits from
///    degree m down to 0 (digits above 9 written a-z, or a comma-separated
///    list for larger p). Without `modulus=` the built-in one is used.
///  - Element: an integer in [0, p^m), base-p digits = polynomial-basis
///    coefficients, least significant first.
///  - Polynomial text: one element per line, line i = coefficient of x^i;
///    `#` starts a comment, blank lines are skipped.
///  - Polynomial raw (GF(2^8) only): byte i = coefficient of x^i.
///  - Word file: concatenated 255-byte records.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobeval/gf.hpp"
#include "frobeval/poly.hpp"
#include "frobeval/rs.hpp"

namespace frobeval::io {

/// Malformed input text or binary data.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t parse_uint(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

inline Field parse_field(std::string_view description) {
  std::istringstream in{std::string(description)};
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> m;
  std::optional<std::string> modulus;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "p") {
      p = parse_uint(value, "characteristic");
    } else if (key == "m") {
      m = parse_uint(value, "degree");
    } else if (key == "modulus") {
      modulus = value;
    } else {
      throw ParseError("unknown field key '" + key + "'");
    }
  }
  if (!p || !m) throw ParseError("field description needs p= and m=");
  if (*p > UINT32_MAX || *m > UINT32_MAX) throw ParseError("field parameters out of range");
  const auto pp = static_cast<std::uint32_t>(*p);
  const auto mm = static_cast<std::uint32_t>(*m);

  std::optional<std::vector<std::uint32_t>> coeffs;
  if (modulus) {
    std::vector<std::uint32_t> high_to_low;
    if (modulus->find(',') != std::string::npos) {
      std::istringstream parts(*modulus);
      std::string part;
      while (std::getline(parts, part, ',')) {
        high_to_low.push_back(static_cast<std::uint32_t>(parse_uint(part, "modulus coefficient")));
      }
    } else {
      for (char c : *modulus) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          high_to_low.push_back(static_cast<std::uint32_t>(c - '0'));
        } else if (c >= 'a' && c <= 'z') {
          high_to_low.push_back(static_cast<std::uint32_t>(c - 'a') + 10);
        } else {
          throw ParseError(std::string("bad modulus digit '") + c + "'");
        }
      }
    }
    coeffs.emplace(high_to_low.rbegin(), high_to_low.rend());
  }
  return Field::create(pp, mm, std::move(coeffs));
}

inline std::string format_field(const Field& field) {
  std::string digits;
  const auto& mod = field.modulus();
  const bool compact = field.characteristic() <= 36;
  for (std::size_t i = mod.size(); i-- > 0;) {
    if (compact) {
      digits += mod[i] < 10 ? static_cast<char>('0' + mod[i]) : static_cast<char>('a' + mod[i] - 10);
    } else {
      digits += std::to_string(mod[i]);
      if (i != 0) digits += ',';
    }
  }
  return "p=" + std::to_string(field.characteristic()) + " m=" + std::to_string(field.degree()) +
         " modulus=" + digits;
}

inline FieldElement parse_element(const Field& field, std::string_view text) {
  const std::uint64_t v = parse_uint(text, "element");
  if (!field.contains(v)) throw ParseError("element " + std::string(text) + " out of range");
  return field.element(v);
}

inline Polynomial parse_polynomial(const Field& field, std::istream& in) {
  std::vector<Value> coeffs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view body = std::string_view(line).substr(first, last - first + 1);
    try {
      coeffs.push_back(parse_element(field, body).value());
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return Polynomial(field, std::move(coeffs));
}

inline Polynomial parse_polynomial(const Field& field, std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_polynomial(field, in);
}

inline Polynomial polynomial_from_bytes(const Field& field, std::span<const std::uint8_t> bytes) {
  if (field.order() != 256) throw ParseError("raw polynomial files are for GF(2^8) only");
  return Polynomial(field, std::vector<Value>(bytes.begin(), bytes.end()));
}

inline std::string format_polynomial(const Polynomial& poly) {
  std::string out;
  for (Value c : poly.coeffs()) out += std::to_string(c) + "\n";
  return out;
}

inline std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Splits a buffer into 255-byte records; the size must be a positive multiple of 255.
inline std::vector<rs::Word> split_words(std::span<const std::uint8_t> bytes) {
  if (bytes.empty() || bytes.size() % rs::kLength != 0) {
    throw ParseError("word file size " + std::to_string(bytes.size()) +
                     " is not a positive multiple of 255");
  }
  std::vector<rs::Word> out;
  for (std::size_t off = 0; off < bytes.size(); off += rs::kLength) {
    out.emplace_back(bytes.begin() + static_cast<std::ptrdiff_t>(off),
                     bytes.begin() + static_cast<std::ptrdiff_t>(off + rs::kLength));
  }
  return out;
}

}  // namespace frobeval::io
