#include <random>

#include <gtest/gtest.h>

#include "alliance/graph6.hpp"

namespace alliance {
namespace {

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(encode_graph6(Graph(1)), "@");
  EXPECT_EQ(encode_graph6(make::path(2)), "A_");
  EXPECT_EQ(encode_graph6(make::cycle(3)), "Bw");
  // Upper-triangle bits of P4 in column order: 1,0,1,0,0,1.
  EXPECT_EQ(encode_graph6(make::path(4)), "Ch");
  EXPECT_EQ(encode_graph6(make::cycle(5)), "Dhc");
}

TEST(Graph6, DecodeKnown) {
  const Graph c5 = decode_graph6("Dhc");
  EXPECT_EQ(c5, make::cycle(5));
  EXPECT_EQ(decode_graph6(">>graph6<<Bw"), make::cycle(3));
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 62;
    std::vector<Edge> edges;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (rng() % 4 == 0) edges.emplace_back(i, j);
      }
    }
    const Graph g(n, edges);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g);
  }
}

TEST(Graph6, ErrorsCarryOffsets) {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      decode_graph6(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    ADD_FAILURE() << "no error for " << text;
    return 999;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("?"), 0u);            // n = 0
  EXPECT_EQ(offset_of("~"), 0u);            // long form
  EXPECT_EQ(offset_of(" "), 0u);            // byte below 63
  EXPECT_EQ(offset_of("D h"), 1u);          // bad data byte
  EXPECT_EQ(offset_of("Dh"), 2u);           // too short
  EXPECT_EQ(offset_of("Dhcc"), 3u);         // too long
  EXPECT_EQ(offset_of("B@"), 1u);           // padding bit set
  EXPECT_EQ(offset_of(">>graph6<<?"), 10u);
}

}  // namespace
}  // namespace alliance
