#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prufer/hypertree.hpp"
#include "prufer/partition.hpp"

namespace prufer {

/// Bijection of the positive integers moving finitely many points, stored as
/// sigma(1..n) with the trailing fixed points trimmed.
class FiniteSupportPermutation {
 public:
  FiniteSupportPermutation() = default;

  /// Throws NotAPermutation unless values is a bijection of {1..values.size()}.
  static FiniteSupportPermutation make(std::vector<Vertex> values);
  static FiniteSupportPermutation identity() { return {}; }

  /// sigma(i); i for every i beyond the bound.
  Vertex operator()(Vertex i) const noexcept;
  /// Trimmed one-line notation.
  std::span<const Vertex> values() const noexcept { return values_; }
  /// Largest moved point, 0 for the identity.
  std::size_t bound() const noexcept { return values_.size(); }
  /// One-line notation padded with fixed points to length n (>= bound).
  std::vector<Vertex> padded(std::size_t n) const;

  friend bool operator==(const FiniteSupportPermutation&, const FiniteSupportPermutation&) = default;
  friend auto operator<=>(const FiniteSupportPermutation&, const FiniteSupportPermutation&) = default;

 private:
  std::vector<Vertex> values_;
};

/// Space-separated one-line notation; "1" for the identity.
std::string to_string(const FiniteSupportPermutation& sigma);

/// Truncated halfline root - v_1 - v_2 - ... - v_depth with v_i = sigma(i)
/// and the root realized as vertex depth + 1. Throws DepthTooSmall when
/// depth < bound.
RootedHypertree perm_to_tree(const FiniteSupportPermutation& sigma, std::size_t depth);

/// psi(i) = i-th letter of W* of the infinite halfline. Truncations are
/// compared at depths D and D + 1 starting from D = 2 * bound + 4, escalating
/// up to stabilization_ceiling(bound). Throws NoStabilization.
FiniteSupportPermutation perm_encode_star(const FiniteSupportPermutation& sigma);

/// Largest truncation depth tried for a permutation of the given bound.
std::size_t stabilization_ceiling(std::size_t bound) noexcept;

/// Largest n accepted by sn_map and orbits.
inline constexpr std::size_t kMaxSymmetricOrder = 7;

/// sigma -> perm_encode_star(sigma) over S_n, keyed by one-line notation of
/// length n. Images are padded to length n (or longer if they left S_n).
/// Throws OutOfRange for n = 0 or n > kMaxSymmetricOrder.
std::map<std::vector<Vertex>, std::vector<Vertex>> sn_map(std::size_t n);

struct Orbit {
  std::vector<std::vector<Vertex>> members;  // sorted
  std::vector<std::vector<Vertex>> cycle;    // iteration order from members.front()
};

/// Cycles of sn_map(n), ordered by their smallest member. Throws OutOfRange,
/// or NotAPermutation if the table is not a bijection of S_n.
std::vector<Orbit> orbits(std::size_t n);

/// Marker for the point at infinity in an ideal pair.
inline constexpr Vertex kInfinity = std::numeric_limits<Vertex>::max();

/// How g behaves on ids beyond the finite segment {1..N}.
enum class TailRule {
  Root,         // g(i) = infinity
  Successor,    // g(i) = i + 1
  Predecessor,  // g(i) = i - 1
};

/// p on {1..N} (identity beyond), g on {1..N} ∪ {infinity} with a tail rule
/// beyond N. Values of g are positive ids or kInfinity.
struct IdealPair {
  Vertex segment = 0;  // N
  PartitionMap p;
  std::map<Vertex, Vertex> g;
  TailRule tail = TailRule::Root;
};

enum class VertexClass {
  RootComponent,  // iterating g reaches infinity
  CycleWitness,   // iterating g enters a cycle
  EscapeWitness,  // iterating g leaves to ever larger ids
};

std::string_view to_string(VertexClass c) noexcept;

struct IdealPairReport {
  std::map<Vertex, VertexClass> classes;  // over {1..N}

  /// True when every vertex lies in the root component.
  bool valid() const;
};

/// Throws NotLowering, NotIdempotent (p), IncompleteMap (g undefined on the
/// segment or g(infinity) != infinity) or CompositionMismatch (g != g∘p).
IdealPairReport validate_ideal_pair(const IdealPair& pair);

/// The pair of a finite tree: N = root - 1, the root renamed to infinity,
/// tail rule Root.
IdealPair ideal_pair(const RootedHypertree& t);

}  // namespace prufer
