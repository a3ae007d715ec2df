#pragma once

#include <vector>

#include "prufer/partition.hpp"

namespace prufer::detail {

/// Tree with hyperedges part ∪ {part_glue[i]} for the i-th part.
inline RootedHypertree assemble(const PruferPartition& p, const std::vector<Vertex>& part_glue) {
  std::vector<VertexSet> edges;
  edges.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    VertexSet e = p.parts()[i];
    e.push_back(part_glue[i]);
    edges.push_back(std::move(e));
  }
  return RootedHypertree::validate(p.root(), std::move(edges));
}

}  // namespace prufer::detail
