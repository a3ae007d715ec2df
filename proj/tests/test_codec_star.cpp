#include <gtest/gtest.h>

#include <random>

#include "prufer/codec_star.hpp"
#include "prufer/enumeration.hpp"
#include "prufer/error.hpp"
#include "prufer/star_reduction.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace prufer {
namespace {

using fixtures::t1;

PruferCode star(Vertex root, std::vector<VertexSet> parts, std::vector<Vertex> word) {
  return {PruferPartition::make(root, std::move(parts)), std::move(word), Variant::Star};
}

TEST(EncodeStar, Fixture) {
  const PruferCode code = encode_star(t1());
  EXPECT_EQ(code.partition, fixtures::p1());
  EXPECT_EQ(code.word, fixtures::kW1Star);
  EXPECT_EQ(code.variant, Variant::Star);
  EXPECT_EQ(encode_star_incremental(t1()), code);
}

TEST(EncodeStar, HyperstarGivesRootPower) {
  const auto t = RootedHypertree::validate(6, {{1, 2, 6}, {3, 6}, {4, 5, 6}});
  EXPECT_EQ(encode_star(t).word, (std::vector<Vertex>{6, 6}));
  EXPECT_EQ(encode_star_incremental(t).word, (std::vector<Vertex>{6, 6}));
  EXPECT_TRUE(star_steps(t).empty());
}

TEST(StarSteps, Fixture) {
  const auto steps = star_steps(t1());
  ASSERT_EQ(steps.size(), 4u);
  const std::vector<Vertex> pivots = {1, 4, 7, 8};
  const std::vector<std::vector<std::size_t>> slots = {{1}, {2, 4}, {4}, {1, 2}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(steps[i].pivot, pivots[i]);
    EXPECT_EQ(steps[i].sv, slots[i]);
    EXPECT_EQ(steps[i].sv.size() + 1, t1().degree(pivots[i]));
  }
  EXPECT_EQ(steps[0].ev.size(), 7u);
  EXPECT_EQ(steps[1].ev.size(), 6u);
  EXPECT_EQ(steps[1].ev.front(), (MarkedHyperedge{{1, 2, 10, 12}, 8}));
}

TEST(StarTrace, Fixture) {
  const auto trace = star_reduction_trace(t1());
  ASSERT_EQ(trace.size(), 5u);
  EXPECT_EQ(trace[0].pivot, 0u);
  EXPECT_EQ(trace[0].partition, partition_map(fixtures::p1()).mapping);
  auto g1 = fixtures::g1();
  g1.erase(14);
  EXPECT_EQ(trace[0].glue, g1);

  const auto& last = trace.back();
  EXPECT_EQ(last.pivot, 8u);
  EXPECT_EQ(last.slots, (std::vector<std::size_t>{1, 2}));
  for (auto [v, rep] : last.partition) EXPECT_EQ(rep, v == 5 ? 5u : 1u) << v;
  for (auto [v, g] : last.glue) EXPECT_EQ(g, 14u) << v;

  // Row at 4: the part of 1 has absorbed 2, the part of 4 has absorbed 3, 6, 9.
  EXPECT_EQ(trace[2].pivot, 4u);
  EXPECT_EQ(trace[2].partition.at(2), 1u);
  EXPECT_EQ(trace[2].partition.at(9), 3u);
  EXPECT_EQ(trace[2].partition.at(6), 3u);
  EXPECT_EQ(trace[2].glue.at(3), 8u);
}

TEST(StarTrace, MatchesSuccessiveReductions) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const auto t = oracle::random_tree(25, rng);
    const auto trace = star_reduction_trace(t);
    RootedHypertree cur = t;
    for (std::size_t row = 1; row < trace.size(); ++row) {
      cur = star_reduce(cur, trace[row].pivot);
      EXPECT_EQ(trace[row].partition, partition_map(prufer_partition(cur)).mapping);
      auto g = glue_map(cur).mapping;
      g.erase(t.root());
      EXPECT_EQ(trace[row].glue, g);
    }
  }
}

TEST(DecodeStar, Fixture) {
  const PruferCode code{fixtures::p1(), fixtures::kW1Star, Variant::Star};
  EXPECT_EQ(decode_star(code), t1());
  EXPECT_EQ(decode_star_reference(code), t1());
  EXPECT_EQ(glue_map(decode_star(code)).mapping, fixtures::g1());
}

TEST(DecodeStar, SmallCodes) {
  EXPECT_EQ(decode_star(star(5, {{1, 2, 3, 4}}, {})), fixtures::trivial(5));
  EXPECT_EQ(decode_star(star(3, {{1}, {2}}, {3})), RootedHypertree::validate(3, {{1, 3}, {2, 3}}));
  EXPECT_EQ(decode_star(star(4, {{1}, {2}, {3}}, {4, 4})),
            RootedHypertree::validate(4, {{1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(decode_star(star(1, {}, {})), RootedHypertree::root_only(1));
}

TEST(DecodeStar, Rejections) {
  auto kind = [](const PruferCode& c) {
    try {
      decode_star(c);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  EXPECT_EQ(kind(star(3, {{1}, {2}}, {})), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind(star(3, {{1}, {2}}, {4})), ErrorKind::LetterOutOfRange);
  PruferCode c = star(3, {{1}, {2}}, {3});
  c.variant = Variant::Classic;
  EXPECT_EQ(kind(c), ErrorKind::VariantMismatch);
}

TEST(Star, RoundTripsOnAllSmallTrees) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_hypertrees(n)) {
      const auto code = encode_star(t);
      EXPECT_EQ(encode_star_incremental(t), code);
      EXPECT_EQ(decode_star(code), t);
      EXPECT_EQ(decode_star_reference(code), t);
      std::vector<Vertex> pivots;
      for (const auto& s : star_steps(t)) pivots.push_back(s.pivot);
      std::vector<Vertex> expected;
      for (Vertex v : t.vertices()) {
        if (v != t.root() && t.degree(v) >= 2) expected.push_back(v);
      }
      EXPECT_EQ(pivots, expected);
    }
  }
}

TEST(Star, EncodeAfterDecodeOnAllCodes) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<Vertex> covered;
      for (unsigned b = 0; b + 1 < n; ++b) {
        if (mask & (1u << b)) covered.push_back(b + 1);
      }
      for_each_code(covered, n, Variant::Star, [](const PruferCode& code) {
        const auto t = decode_star(code);
        EXPECT_EQ(decode_star_reference(code), t);
        EXPECT_EQ(encode_star_incremental(t), code);
      });
    }
  }
}

TEST(Star, IncrementalMatchesRecursiveOnRandomTrees) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 3000; ++i) {
    const auto t = oracle::random_tree(60, rng);
    const auto code = encode_star_incremental(t);
    ASSERT_EQ(code, encode_star(t));
    ASSERT_EQ(decode_star(code), t);
    for (Vertex v : t.vertices()) {
      EXPECT_EQ(oracle::occurrences(code.word, v) + 1, std::max<std::size_t>(t.degree(v), 1));
    }
  }
}

TEST(Star, OrdinaryTreesFromSingletonPartition) {
  // Words over {1..5} of length 3 with the singleton partition of {1..4}
  // give every ordinary tree on 5 vertices exactly once: 5^3 = 125.
  std::set<std::vector<VertexSet>> seen;
  std::vector<Vertex> w(3, 1);
  for (Vertex a = 1; a <= 5; ++a) {
    for (Vertex b = 1; b <= 5; ++b) {
      for (Vertex c = 1; c <= 5; ++c) {
        const auto t = decode_star(star(5, {{1}, {2}, {3}, {4}}, {a, b, c}));
        for (const auto& e : t.hyperedges()) EXPECT_EQ(e.size(), 2u);
        seen.insert({t.hyperedges().begin(), t.hyperedges().end()});
      }
    }
  }
  EXPECT_EQ(seen.size(), 125u);
}

}  // namespace
}  // namespace prufer
