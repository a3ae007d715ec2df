#include "prufer/hypertree.hpp"

#include <algorithm>
#include <sstream>

#include "prufer/error.hpp"

namespace prufer {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::RootNotMax: return "RootNotMax";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotLowering: return "NotLowering";
    case ErrorKind::NotConstantOnPart: return "NotConstantOnPart";
    case ErrorKind::NotEventuallyRoot: return "NotEventuallyRoot";
    case ErrorKind::IncompleteMap: return "IncompleteMap";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DepthTooSmall: return "DepthTooSmall";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

VertexSet MarkedHyperedge::vertices() const {
  VertexSet all = reduced;
  all.insert(std::upper_bound(all.begin(), all.end(), marked), marked);
  return all;
}

namespace {

std::string join(const VertexSet& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const MarkedHyperedge& e) {
  return "{" + join(e.reduced) + "}_" + std::to_string(e.marked);
}

RootedHypertree RootedHypertree::root_only(Vertex root) {
  return validate(root, {});
}

RootedHypertree RootedHypertree::validate(Vertex root, std::vector<VertexSet> edges) {
  if (root == 0) fail(ErrorKind::InvalidVertex, "vertex id 0 is not allowed (root)");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (!e.empty() && e.front() == 0) fail(ErrorKind::InvalidVertex, "vertex id 0 is not allowed");
    if (e.size() < 2) {
      fail(ErrorKind::EdgeTooSmall, "hyperedge {" + join(e) + "} has fewer than two vertices");
    }
  }

  RootedHypertree t;
  t.root_ = root;
  t.vertices_.push_back(root);
  for (const auto& e : edges) t.vertices_.insert(t.vertices_.end(), e.begin(), e.end());
  std::sort(t.vertices_.begin(), t.vertices_.end());
  t.vertices_.erase(std::unique(t.vertices_.begin(), t.vertices_.end()), t.vertices_.end());
  if (t.vertices_.back() != root) {
    fail(ErrorKind::RootNotMax, "root " + std::to_string(root) + " is not the largest vertex (" +
                                    std::to_string(t.vertices_.back()) + ")");
  }

  const std::size_t n = t.vertices_.size();
  const std::size_t k = edges.size();

  // Vertex/hyperedge incidence, then breadth-first search from the root.
  // The vertex from which a hyperedge is first reached is its marked vertex.
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : edges[i]) incident[*t.index_of(v)].push_back(i);
  }
  std::vector<Vertex> marked(k, 0);
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> queue{n - 1};
  seen[n - 1] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t vi = queue[head];
    for (std::size_t ei : incident[vi]) {
      if (marked[ei] != 0) continue;
      marked[ei] = t.vertices_[vi];
      for (Vertex w : edges[ei]) {
        const std::size_t wi = *t.index_of(w);
        if (!seen[wi]) {
          seen[wi] = 1;
          queue.push_back(wi);
        }
      }
    }
  }
  if (queue.size() != n) {
    fail(ErrorKind::Disconnected, std::to_string(n - queue.size()) +
                                      " vertices are not connected to the root");
  }

  std::size_t excess = 0;
  for (const auto& e : edges) excess += e.size() - 1;
  if (excess != n - 1) {
    fail(ErrorKind::NotATree, "sum of (size-1) is " + std::to_string(excess) +
                                  " but n-1 is " + std::to_string(n - 1));
  }

  // Canonical order: by smallest unmarked vertex.
  std::vector<std::pair<Vertex, std::size_t>> order;
  order.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& e = edges[i];
    const Vertex first_unmarked = e[0] != marked[i] ? e[0] : e[1];
    order.emplace_back(first_unmarked, i);
  }
  std::sort(order.begin(), order.end());
  t.edges_.reserve(k);
  t.marked_.reserve(k);
  for (auto [key, i] : order) {
    t.edges_.push_back(std::move(edges[i]));
    t.marked_.push_back(marked[i]);
  }

  t.degree_.assign(n, 0);
  t.glue_.assign(n, 0);
  t.parent_edge_.assign(n, npos);
  t.glue_[n - 1] = root;
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : t.edges_[i]) {
      const std::size_t vi = *t.index_of(v);
      ++t.degree_[vi];
      if (v != t.marked_[i]) {
        t.glue_[vi] = t.marked_[i];
        t.parent_edge_[vi] = i;
      }
    }
  }
  return t;
}

std::optional<std::size_t> RootedHypertree::index_of(Vertex v) const noexcept {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t RootedHypertree::require_index(Vertex v) const {
  auto idx = index_of(v);
  if (!idx) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " is not in the tree");
  return *idx;
}

std::size_t RootedHypertree::degree(Vertex v) const { return degree_[require_index(v)]; }

Vertex RootedHypertree::glue(Vertex v) const { return glue_[require_index(v)]; }

std::size_t RootedHypertree::parent_edge(Vertex v) const {
  return parent_edge_[require_index(v)];
}

MarkedHyperedge RootedHypertree::marked_hyperedge(std::size_t edge) const {
  MarkedHyperedge m;
  m.marked = marked_.at(edge);
  for (Vertex v : edges_[edge]) {
    if (v != m.marked) m.reduced.push_back(v);
  }
  return m;
}

std::size_t degree(const RootedHypertree& t, Vertex v) { return t.degree(v); }

std::vector<Vertex> leaves(const RootedHypertree& t) {
  std::vector<Vertex> out;
  for (Vertex v : t.vertices()) {
    if (t.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<MarkedHyperedge> mark(const RootedHypertree& t) {
  std::vector<MarkedHyperedge> out;
  out.reserve(t.edge_count());
  for (std::size_t i = 0; i < t.edge_count(); ++i) out.push_back(t.marked_hyperedge(i));
  return out;
}

bool is_leaf_type(const RootedHypertree& t, const MarkedHyperedge& e) {
  if (e.reduced.empty() || !t.contains(e.reduced.front())) {
    fail(ErrorKind::NotAnEdge, to_string(e) + " is not a hyperedge of the tree");
  }
  const Vertex v = e.reduced.front();
  if (v == t.root()) fail(ErrorKind::NotAnEdge, to_string(e) + " is not a hyperedge of the tree");
  const std::size_t edge = t.parent_edge(v);
  if (t.marked_hyperedge(edge) != e) {
    fail(ErrorKind::NotAnEdge, to_string(e) + " is not a hyperedge of the tree");
  }
  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    if (i == edge) continue;
    if (std::binary_search(e.reduced.begin(), e.reduced.end(), t.marked_vertex(i))) return false;
  }
  return true;
}

std::size_t nonleaf_rank(const RootedHypertree& t) {
  std::size_t count = 0;
  for (Vertex v : t.vertices()) {
    if (t.degree(v) >= 2) ++count;
  }
  return count;
}

std::size_t edge_excess(const RootedHypertree& t) {
  std::size_t sum = 0;
  for (const auto& e : t.hyperedges()) sum += e.size() - 1;
  return sum;
}

long long degree_excess(const RootedHypertree& t) {
  long long sum = 0;
  for (Vertex v : t.vertices()) sum += static_cast<long long>(t.degree(v)) - 1;
  return sum;
}

std::string to_string(const RootedHypertree& t) {
  std::ostringstream os;
  os << "root " << t.root() << ":";
  for (const auto& m : mark(t)) os << ' ' << to_string(m);
  return os.str();
}

}  // namespace prufer
