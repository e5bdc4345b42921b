#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "alliance/errors.hpp"
#include "alliance/graph.hpp"

namespace alliance {

// graph6, short form only (n <= 62): one byte N(n) = n + 63, then the upper
// triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit
// groups, each group offset by 63, final group zero-padded.

inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph decode_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  const std::string_view body = text.substr(base);
  if (body.empty()) throw ParseError("empty graph6 string", base);

  const int first = static_cast<unsigned char>(body[0]);
  if (first == 126) throw ParseError("graph6 long form (n > 62) is not supported", base);
  if (first < 63 || first > 126) throw ParseError("invalid graph6 order byte", base);
  const std::size_t n = static_cast<std::size_t>(first - 63);
  if (n == 0) throw ParseError("graph6 order must be at least 1", base);

  const std::size_t bit_count = n * (n - 1) / 2;
  const std::size_t expected = 1 + (bit_count + 5) / 6;
  if (body.size() != expected) {
    throw ParseError("graph6 length " + std::to_string(body.size()) + " does not match order " + std::to_string(n) +
                         " (expected " + std::to_string(expected) + ")",
                     base + std::min(body.size(), expected));
  }
  for (std::size_t k = 1; k < body.size(); ++k) {
    const int c = static_cast<unsigned char>(body[k]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 data byte", base + k);
  }

  auto bit_at = [&](std::size_t index) {
    const int group = static_cast<unsigned char>(body[1 + index / 6]) - 63;
    return ((group >> (5 - index % 6)) & 1) != 0;
  };

  Graph g(n);
  std::size_t index = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      if (bit_at(index)) g = g.with_edge(i, j);
    }
  }
  for (std::size_t pad = bit_count; pad < 6 * (expected - 1); ++pad) {
    if (bit_at(pad)) throw ParseError("nonzero graph6 padding bits", base + 1 + pad / 6);
  }
  return g;
}

}  // namespace alliance
