#include "prufer/partition.hpp"

#include <algorithm>

#include "prufer/error.hpp"

namespace prufer {

PruferPartition PruferPartition::make(Vertex root, std::vector<VertexSet> parts) {
  if (root == 0) fail(ErrorKind::InvalidPartition, "root must be a positive vertex id");
  for (auto& part : parts) {
    std::sort(part.begin(), part.end());
    if (part.empty()) fail(ErrorKind::InvalidPartition, "empty part");
    if (std::adjacent_find(part.begin(), part.end()) != part.end()) {
      fail(ErrorKind::InvalidPartition, "repeated vertex " +
                                            std::to_string(*std::adjacent_find(part.begin(), part.end())) +
                                            " inside a part");
    }
    if (part.front() == 0) fail(ErrorKind::InvalidPartition, "vertex id 0 is not allowed");
    if (part.back() >= root) {
      fail(ErrorKind::InvalidPartition, "vertex " + std::to_string(part.back()) +
                                            " is not below the root " + std::to_string(root));
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });

  VertexSet all;
  for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end()) {
    fail(ErrorKind::InvalidPartition, "vertex " + std::to_string(*it) + " lies in two parts");
  }

  PruferPartition p;
  p.root_ = root;
  p.parts_ = std::move(parts);
  return p;
}

VertexSet PruferPartition::covered() const {
  VertexSet all;
  for (const auto& part : parts_) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  return all;
}

VertexSet PruferPartition::vertex_set() const {
  VertexSet all = covered();
  all.push_back(root_);
  return all;
}

std::optional<std::size_t> PruferPartition::part_of(Vertex v) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (std::binary_search(parts_[i].begin(), parts_[i].end(), v)) return i;
  }
  return std::nullopt;
}

PruferPartition prufer_partition(const RootedHypertree& t) {
  std::vector<VertexSet> parts;
  parts.reserve(t.edge_count());
  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    parts.push_back(t.marked_hyperedge(i).reduced);
  }
  return PruferPartition::make(t.root(), std::move(parts));
}

PartitionMap partition_map(const PruferPartition& p) {
  PartitionMap m;
  for (const auto& part : p.parts()) {
    for (Vertex v : part) m.mapping.emplace(v, part.front());
  }
  return m;
}

void check_partition_map(const PartitionMap& p) {
  for (auto [x, y] : p.mapping) {
    if (y > x) {
      fail(ErrorKind::NotLowering, "p(" + std::to_string(x) + ") = " + std::to_string(y) + " > " +
                                       std::to_string(x));
    }
    auto it = p.mapping.find(y);
    if (it == p.mapping.end() || it->second != y) {
      fail(ErrorKind::NotIdempotent, "p(" + std::to_string(x) + ") = " + std::to_string(y) +
                                         " is not a fix-point");
    }
  }
}

PruferPartition partition_from_map(const PartitionMap& p, Vertex root) {
  check_partition_map(p);
  std::map<Vertex, VertexSet> fibers;
  for (auto [x, y] : p.mapping) fibers[y].push_back(x);
  std::vector<VertexSet> parts;
  parts.reserve(fibers.size());
  for (auto& [rep, part] : fibers) parts.push_back(std::move(part));
  return PruferPartition::make(root, std::move(parts));
}

GlueMap glue_map(const RootedHypertree& t) {
  GlueMap g;
  g.root = t.root();
  for (Vertex v : t.vertices()) g.mapping.emplace(v, t.glue(v));
  return g;
}

RootedHypertree from_glue(const PruferPartition& p, const GlueMap& g) {
  const Vertex root = p.root();
  if (g.root != root) {
    fail(ErrorKind::IncompleteMap, "glue map root " + std::to_string(g.root) +
                                       " differs from partition root " + std::to_string(root));
  }
  const VertexSet vertices = p.vertex_set();
  auto lookup = [&](Vertex v) {
    auto it = g.mapping.find(v);
    if (it == g.mapping.end()) {
      fail(ErrorKind::IncompleteMap, "glue map undefined at " + std::to_string(v));
    }
    if (!std::binary_search(vertices.begin(), vertices.end(), it->second)) {
      fail(ErrorKind::IncompleteMap, "g(" + std::to_string(v) + ") = " + std::to_string(it->second) +
                                         " is not a vertex");
    }
    return it->second;
  };
  if (lookup(root) != root) {
    fail(ErrorKind::NotEventuallyRoot, "g(root) = " + std::to_string(lookup(root)) + " != root");
  }

  std::vector<Vertex> part_glue;
  part_glue.reserve(p.size());
  for (const auto& part : p.parts()) {
    const Vertex target = lookup(part.front());
    for (Vertex v : part) {
      if (lookup(v) != target) {
        fail(ErrorKind::NotConstantOnPart, "g is not constant on the part containing " +
                                               std::to_string(part.front()));
      }
    }
    part_glue.push_back(target);
  }

  // Every orbit must reach the root; colours: 0 unvisited, 1 on stack, 2 done.
  std::map<Vertex, int> colour;
  colour[root] = 2;
  for (Vertex start : vertices) {
    std::vector<Vertex> stack;
    Vertex v = start;
    while (colour[v] == 0) {
      colour[v] = 1;
      stack.push_back(v);
      v = lookup(v);
    }
    if (colour[v] == 1) {
      fail(ErrorKind::NotEventuallyRoot, "iterating g from " + std::to_string(start) +
                                             " enters a cycle avoiding the root");
    }
    for (Vertex w : stack) colour[w] = 2;
  }

  std::vector<VertexSet> edges;
  edges.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    VertexSet e = p.parts()[i];
    e.push_back(part_glue[i]);
    edges.push_back(std::move(e));
  }
  return RootedHypertree::validate(root, std::move(edges));
}

}  // namespace prufer
