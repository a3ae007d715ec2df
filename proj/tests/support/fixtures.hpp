#pragma once

#include <map>
#include <vector>

#include "prufer/hypertree.hpp"
#include "prufer/partition.hpp"

namespace prufer::fixtures {

inline constexpr Vertex kRoot1 = 14;

inline std::vector<VertexSet> t1_edges() {
  return {{1, 10, 12, 8}, {2, 1}, {3, 9, 4}, {4, 7, 8}, {5, 14}, {6, 4}, {8, 13, 14}, {11, 7}};
}

inline RootedHypertree t1() { return RootedHypertree::validate(kRoot1, t1_edges()); }

inline std::vector<VertexSet> p1_parts() {
  return {{1, 10, 12}, {2}, {3, 9}, {4, 7}, {5}, {6}, {8, 13}, {11}};
}

inline PruferPartition p1() { return PruferPartition::make(kRoot1, p1_parts()); }

inline const std::vector<Vertex> kW1 = {1, 8, 4, 14, 4, 7, 8};
inline const std::vector<Vertex> kW1Star = {1, 8, 4, 8, 4, 14, 7};

// g on 1..13, then g(14) = 14.
inline std::map<Vertex, Vertex> g1() {
  const std::vector<Vertex> values = {8, 1, 4, 8, 14, 4, 8, 14, 4, 8, 7, 8, 14};
  std::map<Vertex, Vertex> g;
  for (Vertex v = 1; v <= 13; ++v) g.emplace(v, values[v - 1]);
  g.emplace(kRoot1, kRoot1);
  return g;
}

inline RootedHypertree path123() { return RootedHypertree::validate(3, {{1, 2}, {2, 3}}); }

inline RootedHypertree trivial(Vertex n) {
  VertexSet all;
  for (Vertex v = 1; v <= n; ++v) all.push_back(v);
  return RootedHypertree::validate(n, {all});
}

}  // namespace prufer::fixtures
