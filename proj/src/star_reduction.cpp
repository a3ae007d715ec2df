#include "prufer/star_reduction.hpp"

#include <algorithm>

#include "prufer/error.hpp"

namespace prufer {

RootedHypertree star_reduce(const RootedHypertree& t, Vertex v) {
  if (t.degree(v) <= 1) return t;
  std::vector<VertexSet> edges;
  edges.reserve(t.edge_count());
  VertexSet star;
  for (const auto& e : t.hyperedges()) {
    if (std::binary_search(e.begin(), e.end(), v)) {
      star.insert(star.end(), e.begin(), e.end());
    } else {
      edges.push_back(e);
    }
  }
  edges.push_back(std::move(star));
  return RootedHypertree::validate(t.root(), std::move(edges));
}

RootedHypertree star_reduce_set(const RootedHypertree& t, std::span<const Vertex> vertices) {
  for (Vertex v : vertices) {
    if (!t.contains(v)) {
      fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " is not in the tree");
    }
  }
  RootedHypertree out = t;
  for (Vertex v : vertices) out = star_reduce(out, v);
  return out;
}

bool is_root_hyperstar(const RootedHypertree& t) {
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    if (t.marked_vertex(e) != t.root()) return false;
  }
  return true;
}

}  // namespace prufer
