#include <gtest/gtest.h>

#include <random>

#include "prufer/codec_classic.hpp"
#include "prufer/codec_star.hpp"
#include "prufer/enumeration.hpp"
#include "prufer/error.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace prufer {
namespace {

using fixtures::t1;

PruferCode classic(Vertex root, std::vector<VertexSet> parts, std::vector<Vertex> word) {
  return {PruferPartition::make(root, std::move(parts)), std::move(word), Variant::Classic};
}

TEST(EncodeClassic, Fixture) {
  const PruferCode code = encode_classic(t1());
  EXPECT_EQ(code.partition, fixtures::p1());
  EXPECT_EQ(code.word, fixtures::kW1);
  EXPECT_EQ(code.variant, Variant::Classic);
  EXPECT_EQ(encode_classic_naive(t1()), code);
}

TEST(EncodeClassic, SmallTrees) {
  EXPECT_TRUE(encode_classic(fixtures::trivial(5)).word.empty());
  EXPECT_EQ(encode_classic(fixtures::path123()).word, (std::vector<Vertex>{2}));
  const auto root_only = encode_classic(RootedHypertree::root_only(1));
  EXPECT_TRUE(root_only.partition.empty());
  EXPECT_TRUE(root_only.word.empty());
}

TEST(DecodeClassic, Fixture) {
  const PruferCode code{fixtures::p1(), fixtures::kW1, Variant::Classic};
  EXPECT_EQ(decode_classic(code), t1());
  EXPECT_EQ(decode_classic_naive(code), t1());
}

TEST(DecodeClassic, SmallCodes) {
  EXPECT_EQ(decode_classic(classic(4, {{1, 2, 3}}, {})), fixtures::trivial(4));
  const auto t = decode_classic(classic(3, {{1}, {2}}, {1}));
  EXPECT_EQ(mark(t), (std::vector<MarkedHyperedge>{{{1}, 3}, {{2}, 1}}));
  EXPECT_EQ(encode_classic(t).word, (std::vector<Vertex>{1}));
  EXPECT_EQ(decode_classic(classic(1, {}, {})), RootedHypertree::root_only(1));
}

TEST(DecodeClassic, Rejections) {
  auto kind = [](const PruferCode& c) {
    try {
      decode_classic(c);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  EXPECT_EQ(kind(classic(3, {{1}, {2}}, {})), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind(classic(3, {{1}, {2}}, {1, 1})), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind(classic(3, {{1}, {2}}, {5})), ErrorKind::LetterOutOfRange);
  EXPECT_EQ(kind(classic(4, {{1}, {3}}, {2})), ErrorKind::LetterOutOfRange);
  PruferCode star = classic(3, {{1}, {2}}, {1});
  star.variant = Variant::Star;
  EXPECT_EQ(kind(star), ErrorKind::VariantMismatch);
}

TEST(Classic, RoundTripsOnAllSmallTrees) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_hypertrees(n)) {
      const auto code = encode_classic(t);
      EXPECT_EQ(code, encode_classic_naive(t));
      EXPECT_EQ(decode_classic(code), t);
      EXPECT_EQ(decode_classic_naive(code), t);
    }
  }
}

TEST(Classic, EncodeAfterDecodeOnAllCodes) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<Vertex> covered;
      for (unsigned b = 0; b + 1 < n; ++b) {
        if (mask & (1u << b)) covered.push_back(b + 1);
      }
      for_each_code(covered, n, Variant::Classic, [](const PruferCode& code) {
        const auto t = decode_classic(code);
        EXPECT_EQ(decode_classic_naive(code), t);
        EXPECT_EQ(encode_classic(t), code);
      });
    }
  }
}

TEST(Classic, RandomTreesDegreeLaw) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 3000; ++i) {
    const auto t = oracle::random_tree(60, rng);
    const auto code = encode_classic(t);
    ASSERT_EQ(decode_classic(code), t);
    for (Vertex v : t.vertices()) {
      EXPECT_EQ(oracle::occurrences(code.word, v) + 1, std::max<std::size_t>(t.degree(v), 1));
    }
    auto a = code.word;
    auto b = encode_star_incremental(t).word;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

}  // namespace
}  // namespace prufer
