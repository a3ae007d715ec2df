#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "prufer/code.hpp"
#include "prufer/hypertree.hpp"

namespace prufer {

using BigInt = boost::multiprecision::cpp_int;

/// Largest n for which full enumeration of T(n) is offered.
inline constexpr unsigned kMaxEnumerationOrder = 6;

/// Number of partitions of an m-set into k non-empty blocks.
BigInt stirling2(unsigned m, unsigned k);

/// Hypertrees on {1..n} rooted at n with k hyperedges: S2(n-1, k) * n^(k-1).
/// Throws OutOfRange unless 1 <= k <= n-1.
BigInt count_hypertrees(unsigned n, unsigned k);

/// |T(n)|, summed over k (1 for n = 1). Throws OutOfRange for n = 0.
BigInt total_hypertrees(unsigned n);

/// Calls fn with every set partition of `ground` (parts sorted, listed by
/// minimum); restricted to exactly `blocks` parts when given.
void for_each_set_partition(std::span<const Vertex> ground, std::optional<std::size_t> blocks,
                            const std::function<void(const std::vector<VertexSet>&)>& fn);

/// Calls fn with every code (partition of `covered`, word over covered ∪ {root}).
void for_each_code(std::span<const Vertex> covered, Vertex root, Variant variant,
                   const std::function<void(const PruferCode&)>& fn);

/// Streams T(n) (optionally only trees with k hyperedges) by decoding every
/// star code. Each tree is produced exactly once. Not thread-safe: callers
/// sharing one enumerator must serialize next().
class HypertreeEnumerator {
 public:
  /// Throws OutOfRange for n = 0, n > kMaxEnumerationOrder, or k outside
  /// [1, n-1] (k = 0 is only valid for n = 1).
  explicit HypertreeEnumerator(unsigned n, std::optional<unsigned> k = std::nullopt);

  std::optional<RootedHypertree> next();

 private:
  bool advance_partition();
  bool start_partition();

  unsigned n_;
  unsigned k_lo_, k_hi_;
  unsigned k_;
  std::vector<unsigned> blocks_;  // restricted growth string over {1..n-1}
  std::vector<Vertex> word_;      // digits 0..n-1 standing for letters 1..n
  std::vector<VertexSet> parts_;
  bool done_ = false;
  bool root_only_pending_ = false;
};

std::vector<RootedHypertree> enumerate_hypertrees(unsigned n, std::optional<unsigned> k = std::nullopt);

/// Independent witness: every set of subsets of {1..n} that validates as a
/// tree rooted at n. Exponential; n <= 5.
std::vector<RootedHypertree> brute_force_hypertrees(unsigned n);

/// Exponents deg(v) - 1 of the monomial w(T).
struct DegreeWeight {
  std::map<Vertex, unsigned> exponents;

  unsigned total() const;
  BigInt evaluate(const std::map<Vertex, BigInt>& x) const;
};

DegreeWeight degree_weight(const RootedHypertree& t);

/// Checks, for every partition P of {1..n-1} into k parts and every point x,
/// that the sum of w(T) over trees with partition P equals (sum_v x_v)^(k-1).
/// Each point lists x_1..x_n. Throws OutOfRange for n = 0, n > 5, k outside
/// [1, n-1] or points of the wrong dimension.
bool verify_generating_identity(unsigned n, unsigned k, std::span<const std::vector<BigInt>> points);

/// T(n) ordered by T >= *_S(T).
struct StarPoset {
  std::vector<RootedHypertree> elements;     // sorted by rank, then canonically
  std::vector<std::size_t> rank;             // number of non-leaves
  std::vector<std::vector<char>> leq;        // leq[a][b]: elements[a] <= elements[b]
  std::vector<std::vector<std::size_t>> covers;  // covers[b]: elements covered by b
  std::vector<std::size_t> ancestor;         // *_a(T) for the smallest non-leaf a; bottom -> itself
  std::size_t bottom = 0;                    // the trivial hypertree

  std::size_t index_of(const RootedHypertree& t) const;
};

/// Order generated by single reductions T -> *_v(T), closed transitively.
/// Throws OutOfRange unless 1 <= n <= 5.
StarPoset star_poset(unsigned n);

/// leq built directly from T >= *_S(T) over all vertex subsets S.
std::vector<std::vector<char>> star_order_by_subsets(const StarPoset& poset);

/// mu(bottom, T) for every element, from the inverse of the zeta matrix.
std::vector<long long> moebius(const StarPoset& poset);

/// Hypertree on {1..n} drawn from the uniform code distribution: k weighted by
/// count_hypertrees (double precision), a uniform partition into k blocks and
/// a uniform word, decoded with the star codec.
RootedHypertree sample_uniform_hypertree(unsigned n, std::mt19937_64& rng);

}  // namespace prufer
