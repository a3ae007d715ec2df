#include <gtest/gtest.h>

#include <numeric>

#include "prufer/enumeration.hpp"
#include "prufer/error.hpp"
#include "prufer/partition.hpp"
#include "support/fixtures.hpp"

namespace prufer {
namespace {

template <class Fn>
ErrorKind kind_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

TEST(PruferPartition, Fixture) {
  EXPECT_EQ(prufer_partition(fixtures::t1()), fixtures::p1());
  const PruferPartition p = fixtures::p1();
  const auto parts = p.parts();
  EXPECT_EQ(parts.size(), 8u);
  EXPECT_EQ(parts.front(), (VertexSet{1, 10, 12}));
}

TEST(PruferPartition, SmallTrees) {
  EXPECT_EQ(prufer_partition(fixtures::trivial(5)), PruferPartition::make(5, {{1, 2, 3, 4}}));
  EXPECT_EQ(prufer_partition(fixtures::path123()), PruferPartition::make(3, {{1}, {2}}));
}

TEST(PruferPartition, MakeRejects) {
  EXPECT_EQ(kind_of([] { PruferPartition::make(5, {{1, 2}, {2, 3}}); }), ErrorKind::InvalidPartition);
  EXPECT_EQ(kind_of([] { PruferPartition::make(5, {{}}); }), ErrorKind::InvalidPartition);
  EXPECT_EQ(kind_of([] { PruferPartition::make(3, {{1, 3}}); }), ErrorKind::InvalidPartition);
  EXPECT_EQ(kind_of([] { PruferPartition::make(3, {{0, 1}}); }), ErrorKind::InvalidPartition);
  EXPECT_EQ(kind_of([] { PruferPartition::make(3, {{1, 1}}); }), ErrorKind::InvalidPartition);
}

TEST(PartitionMap, Fixture) {
  const std::map<Vertex, Vertex> expected = {{1, 1}, {10, 1}, {12, 1}, {2, 2}, {3, 3}, {9, 3}, {4, 4},
                                             {7, 4}, {5, 5},  {6, 6},  {8, 8}, {13, 8}, {11, 11}};
  EXPECT_EQ(partition_map(fixtures::p1()).mapping, expected);
}

TEST(PartitionMap, SingletonsGiveIdentity) {
  const auto p = partition_map(PruferPartition::make(6, {{1}, {2}, {3}, {4}, {5}}));
  for (auto [x, y] : p.mapping) EXPECT_EQ(x, y);
}

TEST(PartitionMap, FromMapFibers) {
  PartitionMap p;
  for (Vertex x = 1; x <= 4; ++x) p.mapping.emplace(x, x % 2 == 0 ? x - 1 : x);
  EXPECT_EQ(partition_from_map(p, 5), PruferPartition::make(5, {{1, 2}, {3, 4}}));
}

TEST(PartitionMap, Rejections) {
  EXPECT_EQ(kind_of([] { check_partition_map({{{1, 2}, {2, 2}}}); }), ErrorKind::NotLowering);
  EXPECT_EQ(kind_of([] { check_partition_map({{{1, 1}, {2, 1}, {3, 2}}}); }), ErrorKind::NotIdempotent);
  EXPECT_EQ(kind_of([] { check_partition_map({{{3, 1}}}); }), ErrorKind::NotIdempotent);
}

TEST(PartitionMap, RoundTripAllPartitions) {
  for (unsigned m = 0; m <= 6; ++m) {
    std::vector<Vertex> ground(m);
    std::iota(ground.begin(), ground.end(), Vertex{1});
    std::size_t count = 0;
    for_each_set_partition(ground, std::nullopt, [&](const std::vector<VertexSet>& parts) {
      const auto p = PruferPartition::make(m + 1, parts);
      EXPECT_EQ(partition_from_map(partition_map(p), m + 1), p);
      ++count;
    });
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
    EXPECT_EQ(count, bell[m]);
  }
}

TEST(GlueMap, Fixture) {
  const GlueMap g = glue_map(fixtures::t1());
  EXPECT_EQ(g.root, 14u);
  EXPECT_EQ(g.mapping, fixtures::g1());
  EXPECT_EQ(g(7), 8u);
}

TEST(GlueMap, Trivial) {
  const GlueMap g = glue_map(fixtures::trivial(2));
  EXPECT_EQ(g.mapping, (std::map<Vertex, Vertex>{{1, 2}, {2, 2}}));
}

TEST(GlueMap, IteratesAlongGeodesic) {
  const GlueMap g = glue_map(fixtures::t1());
  std::vector<Vertex> walk{3};
  while (walk.back() != 14) walk.push_back(g(walk.back()));
  EXPECT_EQ(walk, (std::vector<Vertex>{3, 4, 8, 14}));
}

TEST(FromGlue, Fixture) {
  EXPECT_EQ(from_glue(fixtures::p1(), {14, fixtures::g1()}), fixtures::t1());
}

TEST(FromGlue, Trivial) {
  const auto p = PruferPartition::make(4, {{1, 2, 3}});
  EXPECT_EQ(from_glue(p, {4, {{1, 4}, {2, 4}, {3, 4}, {4, 4}}}), fixtures::trivial(4));
}

TEST(FromGlue, Rejections) {
  const auto p = PruferPartition::make(3, {{1}, {2}});
  EXPECT_EQ(kind_of([&] { from_glue(p, {3, {{1, 2}, {2, 1}, {3, 3}}}); }), ErrorKind::NotEventuallyRoot);
  EXPECT_EQ(kind_of([&] { from_glue(p, {3, {{1, 3}, {2, 3}, {3, 1}}}); }), ErrorKind::NotEventuallyRoot);
  EXPECT_EQ(kind_of([&] { from_glue(p, {3, {{1, 3}, {3, 3}}}); }), ErrorKind::IncompleteMap);
  EXPECT_EQ(kind_of([&] { from_glue(p, {3, {{1, 3}, {2, 7}, {3, 3}}}); }), ErrorKind::IncompleteMap);
  const auto q = PruferPartition::make(4, {{1, 2}, {3}});
  EXPECT_EQ(kind_of([&] { from_glue(q, {4, {{1, 3}, {2, 4}, {3, 4}, {4, 4}}}); }),
            ErrorKind::NotConstantOnPart);
}

TEST(FromGlue, InverseOnAllSmallTrees) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_hypertrees(n)) {
      EXPECT_EQ(from_glue(prufer_partition(t), glue_map(t)), t);
    }
  }
}

}  // namespace
}  // namespace prufer
