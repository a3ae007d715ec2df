#pragma once

#include <map>
#include <optional>
#include <vector>

#include "prufer/hypertree.hpp"
#include "prufer/partition.hpp"

namespace prufer {

/// Unique shortest path v = path[0], ..., path[l] = w together with the
/// hyperedge indices edges[i] containing {path[i], path[i+1]}.
struct Geodesic {
  std::vector<Vertex> path;
  std::vector<std::size_t> edges;

  std::size_t length() const { return edges.size(); }
};

/// Distance between v and w; std::nullopt stands for infinity (never
/// returned for a validated tree). Throws UnknownVertex.
std::optional<std::size_t> distance(const RootedHypertree& t, Vertex v, Vertex w);

/// Throws UnknownVertex.
Geodesic geodesic(const RootedHypertree& t, Vertex v, Vertex w);

/// Ordinary rooted tree on the Prüfer parts plus the root. Part vertices are
/// represented by their minimum element; `projection` keeps the full map.
struct Spine {
  RootedHypertree tree;
  PruferPartition parts;
  /// v -> minimum of its part, root -> root.
  std::map<Vertex, Vertex> projection;
};

Spine spine(const RootedHypertree& t);

/// Same vertices, with each hyperedge e replaced by the ordinary edges {v, e_*}, v in e'.
RootedHypertree to_ordinary(const RootedHypertree& t);

}  // namespace prufer
