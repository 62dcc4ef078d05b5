#pragma once

// graph6 short form (n <= 62): one size byte n+63, then the upper triangle
// x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian into 6-bit groups, +63.

#include <string>
#include <string_view>

#include "mindiam/errors.hpp"
#include "mindiam/graph.hpp"

namespace mindiam {

inline constexpr std::size_t graph6_data_length(int n) noexcept {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

inline Graph decode_graph6(std::string_view s) {
  if (s.empty()) throw length_error("graph6 string is empty");
  for (char c : s) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw malformed_error("graph6 byte " + std::to_string(b) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(s[0]) - 63;
  if (n > max_vertices) throw size_error("graph6 long form (n > 62) is not supported");
  if (n == 0) throw size_error("graph6 string encodes an empty graph");
  const std::size_t expected = graph6_data_length(n);
  if (s.size() - 1 != expected) {
    throw length_error("graph6 for n=" + std::to_string(n) + " needs " + std::to_string(expected) +
                       " data bytes, got " + std::to_string(s.size() - 1));
  }
  Graph g(n);
  std::size_t k = 0;
  const auto bit_at = [&](std::size_t idx) {
    const int value = static_cast<unsigned char>(s[1 + idx / 6]) - 63;
    return (value >> (5 - idx % 6)) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit_at(k)) g.add_edge(i, j);
    }
  }
  for (; k < expected * 6; ++k) {
    if (bit_at(k)) throw padding_error("graph6 padding bits are not zero");
  }
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > max_vertices) throw size_error("graph6 short form needs n <= 62");
  std::string out(1 + graph6_data_length(n), static_cast<char>(63));
  out[0] = static_cast<char>(n + 63);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    const Row r = g.row(j);
    for (int i = 0; i < j; ++i, ++k) {
      if ((r >> i) & 1U) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    }
  }
  return out;
}

/// Strips the TeX escapes ("\{", "\}", "\_") seen in typeset graph6 strings.
inline std::string unescape_graph6(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && (s[i + 1] == '{' || s[i + 1] == '}' || s[i + 1] == '_')) {
      continue;
    }
    out += s[i];
  }
  return out;
}

}  // namespace mindiam
