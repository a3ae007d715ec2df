#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prufer {

/// Vertex ids are positive integers; 0 is never a valid vertex.
using Vertex = std::uint32_t;

/// Sorted, duplicate-free sequence of vertex ids.
using VertexSet = std::vector<Vertex>;

/// A hyperedge split into its reduced part e' and the marked vertex e_*
/// (the unique vertex of the hyperedge closest to the root).
struct MarkedHyperedge {
  VertexSet reduced;
  Vertex marked = 0;

  /// reduced ∪ {marked}, sorted.
  VertexSet vertices() const;
  Vertex min_reduced() const { return reduced.front(); }

  friend bool operator==(const MarkedHyperedge&, const MarkedHyperedge&) = default;
};

/// "{1,10,12}_8"
std::string to_string(const MarkedHyperedge& e);

/// A validated finite rooted hypertree with the root at the largest vertex id.
///
/// Hyperedges are stored sorted and ordered by their smallest unmarked vertex,
/// so two trees compare equal exactly when they have the same root and the
/// same set of hyperedges. Instances are immutable.
class RootedHypertree {
 public:
  /// Validates raw input. Duplicate ids inside one hyperedge collapse.
  /// Throws Error with kind EdgeTooSmall, InvalidVertex, RootNotMax,
  /// Disconnected or NotATree.
  static RootedHypertree validate(Vertex root, std::vector<VertexSet> edges);

  /// The degenerate tree consisting of the root alone (n = 1, k = 0).
  static RootedHypertree root_only(Vertex root);

  Vertex root() const noexcept { return root_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  /// Hyperedges (sorted vertex sets) in canonical order.
  std::span<const VertexSet> hyperedges() const noexcept { return edges_; }
  /// Marked vertex of hyperedge i (canonical order).
  Vertex marked_vertex(std::size_t edge) const { return marked_.at(edge); }
  MarkedHyperedge marked_hyperedge(std::size_t edge) const;

  bool contains(Vertex v) const noexcept { return index_of(v).has_value(); }
  /// Dense index of v in vertices(), if present.
  std::optional<std::size_t> index_of(Vertex v) const noexcept;

  /// Number of hyperedges containing v. Throws UnknownVertex.
  std::size_t degree(Vertex v) const;
  bool is_leaf(Vertex v) const { return degree(v) == 1; }

  /// Neighbour of v closer to the root; root maps to itself. Throws UnknownVertex.
  Vertex glue(Vertex v) const;
  /// Index of the hyperedge whose reduced part contains v (non-root v).
  std::size_t parent_edge(Vertex v) const;

  friend bool operator==(const RootedHypertree& a, const RootedHypertree& b) {
    return a.root_ == b.root_ && a.edges_ == b.edges_;
  }

 private:
  RootedHypertree() = default;
  std::size_t require_index(Vertex v) const;

  Vertex root_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<VertexSet> edges_;
  std::vector<Vertex> marked_;
  std::vector<std::uint32_t> degree_;       // per vertex index
  std::vector<Vertex> glue_;                // per vertex index
  std::vector<std::size_t> parent_edge_;    // per vertex index, npos for root
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Number of hyperedges containing v. Throws UnknownVertex.
std::size_t degree(const RootedHypertree& t, Vertex v);

/// Leaves in increasing order.
std::vector<Vertex> leaves(const RootedHypertree& t);

/// One marked hyperedge per hyperedge, ordered by smallest unmarked vertex.
std::vector<MarkedHyperedge> mark(const RootedHypertree& t);

/// True iff no vertex of e.reduced is the marked vertex of another hyperedge.
/// Throws NotAnEdge if e is not a marked hyperedge of t.
bool is_leaf_type(const RootedHypertree& t, const MarkedHyperedge& e);

/// Number of non-leaf vertices (the root included when its degree exceeds 1).
std::size_t nonleaf_rank(const RootedHypertree& t);

/// Sum over hyperedges of (size - 1); equals n - 1 for every valid tree.
std::size_t edge_excess(const RootedHypertree& t);
/// Sum over vertices of (deg - 1); equals k - 1 for every valid tree.
long long degree_excess(const RootedHypertree& t);

/// Compact human-readable form: "root 14: {1,10,12}_8 {2}_1 ...".
std::string to_string(const RootedHypertree& t);

}  // namespace prufer
