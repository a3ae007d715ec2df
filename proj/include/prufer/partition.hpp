#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "prufer/hypertree.hpp"

namespace prufer {

/// Ordered partition of the non-root vertices into reduced hyperedges.
/// Parts are sorted and listed by increasing minimum; the root exceeds every
/// covered vertex.
class PruferPartition {
 public:
  /// Sorts and validates. Throws InvalidPartition for empty or overlapping
  /// parts, vertex id 0, or a root not above every covered vertex.
  static PruferPartition make(Vertex root, std::vector<VertexSet> parts);

  Vertex root() const noexcept { return root_; }
  std::span<const VertexSet> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// All covered vertices in increasing order.
  VertexSet covered() const;
  /// Covered vertices plus the root, in increasing order.
  VertexSet vertex_set() const;
  /// Index of the part containing v.
  std::optional<std::size_t> part_of(Vertex v) const;

  friend bool operator==(const PruferPartition&, const PruferPartition&) = default;

 private:
  Vertex root_ = 0;
  std::vector<VertexSet> parts_;
};

/// Idempotent lowering self-map of the covered vertices; each vertex goes to
/// the minimum of its part.
struct PartitionMap {
  std::map<Vertex, Vertex> mapping;

  Vertex operator()(Vertex v) const { return mapping.at(v); }
  friend bool operator==(const PartitionMap&, const PartitionMap&) = default;
};

/// Map V -> V sending each vertex to the marked vertex of its hyperedge,
/// with the root fixed.
struct GlueMap {
  Vertex root = 0;
  std::map<Vertex, Vertex> mapping;

  Vertex operator()(Vertex v) const { return mapping.at(v); }
  friend bool operator==(const GlueMap&, const GlueMap&) = default;
};

/// Reduced hyperedges of mark(t), ordered by minimum.
PruferPartition prufer_partition(const RootedHypertree& t);

PartitionMap partition_map(const PruferPartition& p);

/// Throws NotLowering or NotIdempotent.
void check_partition_map(const PartitionMap& p);

/// Fibers of the fix-points. Throws NotLowering, NotIdempotent, or
/// InvalidPartition when the root does not exceed the domain.
PruferPartition partition_from_map(const PartitionMap& p, Vertex root);

GlueMap glue_map(const RootedHypertree& t);

/// Tree with hyperedges e' ∪ {g(e')}. Throws IncompleteMap (g undefined on
/// some vertex or leaving the vertex set), NotConstantOnPart, or
/// NotEventuallyRoot (some orbit of g misses the root).
RootedHypertree from_glue(const PruferPartition& p, const GlueMap& g);

}  // namespace prufer
