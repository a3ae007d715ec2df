#include "prufer/metric.hpp"

#include <algorithm>

#include "prufer/error.hpp"

namespace prufer {

namespace {

struct Search {
  std::vector<std::size_t> dist;        // per vertex index, npos when unreached
  std::vector<std::size_t> prev_vertex; // per vertex index
  std::vector<std::size_t> prev_edge;   // per vertex index
};

// Breadth-first search over the vertex/hyperedge incidence structure.
Search search_from(const RootedHypertree& t, std::size_t source) {
  const std::size_t n = t.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    for (Vertex v : t.hyperedges()[e]) incident[*t.index_of(v)].push_back(e);
  }
  Search s{std::vector<std::size_t>(n, npos), std::vector<std::size_t>(n, npos),
           std::vector<std::size_t>(n, npos)};
  std::vector<char> edge_done(t.edge_count(), 0);
  std::vector<std::size_t> queue{source};
  s.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t vi = queue[head];
    for (std::size_t e : incident[vi]) {
      if (edge_done[e]) continue;
      edge_done[e] = 1;
      for (Vertex w : t.hyperedges()[e]) {
        const std::size_t wi = *t.index_of(w);
        if (s.dist[wi] != npos) continue;
        s.dist[wi] = s.dist[vi] + 1;
        s.prev_vertex[wi] = vi;
        s.prev_edge[wi] = e;
        queue.push_back(wi);
      }
    }
  }
  return s;
}

std::size_t require(const RootedHypertree& t, Vertex v) {
  auto idx = t.index_of(v);
  if (!idx) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " is not in the tree");
  return *idx;
}

}  // namespace

std::optional<std::size_t> distance(const RootedHypertree& t, Vertex v, Vertex w) {
  const std::size_t vi = require(t, v);
  const std::size_t wi = require(t, w);
  const std::size_t d = search_from(t, vi).dist[wi];
  if (d == npos) return std::nullopt;
  return d;
}

Geodesic geodesic(const RootedHypertree& t, Vertex v, Vertex w) {
  const std::size_t vi = require(t, v);
  const std::size_t wi = require(t, w);
  // Search from w so that walking predecessors from v yields the path in order.
  const Search s = search_from(t, wi);
  Geodesic g;
  if (s.dist[vi] == npos) return g;
  std::size_t cur = vi;
  g.path.push_back(t.vertices()[cur]);
  while (cur != wi) {
    g.edges.push_back(s.prev_edge[cur]);
    cur = s.prev_vertex[cur];
    g.path.push_back(t.vertices()[cur]);
  }
  return g;
}

Spine spine(const RootedHypertree& t) {
  PruferPartition parts = prufer_partition(t);
  std::map<Vertex, Vertex> projection;
  for (const auto& part : parts.parts()) {
    for (Vertex v : part) projection.emplace(v, part.front());
  }
  projection.emplace(t.root(), t.root());

  std::vector<VertexSet> edges;
  edges.reserve(t.edge_count());
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const MarkedHyperedge m = t.marked_hyperedge(e);
    edges.push_back({m.min_reduced(), projection.at(m.marked)});
  }
  RootedHypertree tree = RootedHypertree::validate(t.root(), std::move(edges));
  return Spine{std::move(tree), std::move(parts), std::move(projection)};
}

RootedHypertree to_ordinary(const RootedHypertree& t) {
  std::vector<VertexSet> edges;
  edges.reserve(t.vertex_count());
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    const MarkedHyperedge m = t.marked_hyperedge(e);
    for (Vertex v : m.reduced) edges.push_back({v, m.marked});
  }
  return RootedHypertree::validate(t.root(), std::move(edges));
}

}  // namespace prufer
