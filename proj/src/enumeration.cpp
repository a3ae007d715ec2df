#include "prufer/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "prufer/codec_star.hpp"
#include "prufer/error.hpp"
#include "prufer/star_reduction.hpp"

namespace prufer {

namespace mp = boost::multiprecision;

namespace {

std::vector<std::vector<BigInt>> stirling_table(unsigned m_max, unsigned k_max) {
  std::vector<std::vector<BigInt>> s(m_max + 1, std::vector<BigInt>(k_max + 1, 0));
  s[0][0] = 1;
  for (unsigned m = 1; m <= m_max; ++m) {
    for (unsigned k = 1; k <= std::min(m, k_max); ++k) {
      s[m][k] = BigInt(k) * s[m - 1][k] + s[m - 1][k - 1];
    }
  }
  return s;
}

// Advances a restricted growth string; false after the last one.
bool next_rgs(std::vector<unsigned>& a) {
  for (std::size_t i = a.size(); i-- > 1;) {
    const unsigned top = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
    if (a[i] <= top) {
      ++a[i];
      std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0u);
      return true;
    }
  }
  return false;
}

unsigned block_count(const std::vector<unsigned>& a) {
  return a.empty() ? 0 : *std::max_element(a.begin(), a.end()) + 1;
}

std::vector<VertexSet> blocks_of(const std::vector<unsigned>& a, std::span<const Vertex> ground) {
  std::vector<VertexSet> parts(block_count(a));
  for (std::size_t i = 0; i < a.size(); ++i) parts[a[i]].push_back(ground[i]);
  return parts;
}

// Odometer over words with letters from `alphabet` (indices).
bool next_word(std::vector<std::size_t>& digits, std::size_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

BigInt stirling2(unsigned m, unsigned k) {
  if (k > m) return 0;
  return stirling_table(m, k)[m][k];
}

BigInt count_hypertrees(unsigned n, unsigned k) {
  if (n < 2 || k < 1 || k > n - 1) {
    fail(ErrorKind::OutOfRange, "count_hypertrees needs 1 <= k <= n-1 (n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ")");
  }
  return stirling2(n - 1, k) * mp::pow(BigInt(n), k - 1);
}

BigInt total_hypertrees(unsigned n) {
  if (n == 0) fail(ErrorKind::OutOfRange, "n must be positive");
  if (n == 1) return 1;
  BigInt total = 0;
  for (unsigned k = 1; k < n; ++k) total += count_hypertrees(n, k);
  return total;
}

void for_each_set_partition(std::span<const Vertex> ground, std::optional<std::size_t> blocks,
                            const std::function<void(const std::vector<VertexSet>&)>& fn) {
  std::vector<unsigned> rgs(ground.size(), 0);
  do {
    if (!blocks || block_count(rgs) == *blocks) fn(blocks_of(rgs, ground));
  } while (next_rgs(rgs));
}

void for_each_code(std::span<const Vertex> covered, Vertex root, Variant variant,
                   const std::function<void(const PruferCode&)>& fn) {
  VertexSet alphabet(covered.begin(), covered.end());
  alphabet.push_back(root);
  for_each_set_partition(covered, std::nullopt, [&](const std::vector<VertexSet>& parts) {
    PruferCode code{PruferPartition::make(root, parts), {}, variant};
    const std::size_t length = parts.empty() ? 0 : parts.size() - 1;
    std::vector<std::size_t> digits(length, 0);
    code.word.assign(length, alphabet[0]);
    do {
      for (std::size_t i = 0; i < length; ++i) code.word[i] = alphabet[digits[i]];
      fn(code);
    } while (next_word(digits, alphabet.size()));
  });
}

HypertreeEnumerator::HypertreeEnumerator(unsigned n, std::optional<unsigned> k) : n_(n) {
  if (n == 0 || n > kMaxEnumerationOrder) {
    fail(ErrorKind::OutOfRange, "enumeration needs 1 <= n <= " +
                                    std::to_string(kMaxEnumerationOrder) + " (n=" +
                                    std::to_string(n) + ")");
  }
  if (n == 1) {
    if (k && *k != 0) fail(ErrorKind::OutOfRange, "the one-vertex tree has no hyperedges");
    root_only_pending_ = true;
    k_lo_ = k_hi_ = k_ = 0;
    return;
  }
  if (k && (*k < 1 || *k > n - 1)) {
    fail(ErrorKind::OutOfRange, "k must lie in [1, n-1] (k=" + std::to_string(*k) + ")");
  }
  k_lo_ = k ? *k : 1;
  k_hi_ = k ? *k : n - 1;
  k_ = k_lo_;
  done_ = !start_partition();
}

bool HypertreeEnumerator::start_partition() {
  const unsigned m = n_ - 1;
  blocks_.assign(m, 0);
  // Smallest restricted growth string with exactly k_ blocks: 0..0,1,2,..,k-1.
  for (unsigned j = 1; j < k_; ++j) blocks_[m - k_ + j] = j;
  std::vector<Vertex> ground(m);
  std::iota(ground.begin(), ground.end(), Vertex{1});
  parts_ = blocks_of(blocks_, ground);
  word_.assign(k_ - 1, 0);
  return true;
}

bool HypertreeEnumerator::advance_partition() {
  while (next_rgs(blocks_)) {
    if (block_count(blocks_) == k_) {
      std::vector<Vertex> ground(n_ - 1);
      std::iota(ground.begin(), ground.end(), Vertex{1});
      parts_ = blocks_of(blocks_, ground);
      word_.assign(k_ - 1, 0);
      return true;
    }
  }
  return false;
}

std::optional<RootedHypertree> HypertreeEnumerator::next() {
  if (root_only_pending_) {
    root_only_pending_ = false;
    done_ = true;
    return RootedHypertree::root_only(1);
  }
  if (done_) return std::nullopt;

  PruferCode code{PruferPartition::make(n_, parts_), {}, Variant::Star};
  code.word.reserve(word_.size());
  for (Vertex d : word_) code.word.push_back(d + 1);
  RootedHypertree tree = decode_star(code);

  // Advance: word odometer, then partition, then k.
  bool more = false;
  for (std::size_t i = word_.size(); i-- > 0;) {
    if (++word_[i] < n_) {
      more = true;
      break;
    }
    word_[i] = 0;
  }
  if (!more) more = advance_partition();
  while (!more && k_ < k_hi_) {
    ++k_;
    more = start_partition();
  }
  done_ = !more;
  return tree;
}

std::vector<RootedHypertree> enumerate_hypertrees(unsigned n, std::optional<unsigned> k) {
  HypertreeEnumerator gen(n, k);
  std::vector<RootedHypertree> out;
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<RootedHypertree> brute_force_hypertrees(unsigned n) {
  if (n == 0 || n > 5) fail(ErrorKind::OutOfRange, "brute force enumeration needs 1 <= n <= 5");
  if (n == 1) return {RootedHypertree::root_only(1)};

  std::vector<VertexSet> candidates;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    VertexSet e;
    for (unsigned b = 0; b < n; ++b) {
      if (mask & (1u << b)) e.push_back(b + 1);
    }
    candidates.push_back(std::move(e));
  }

  std::vector<RootedHypertree> out;
  std::vector<VertexSet> chosen;
  // Pick distinct candidate edges with total excess sum(size-1) = n-1.
  std::function<void(std::size_t, unsigned)> pick = [&](std::size_t from, unsigned budget) {
    if (budget == 0) {
      try {
        out.push_back(RootedHypertree::validate(n, chosen));
      } catch (const Error&) {
      }
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const unsigned cost = static_cast<unsigned>(candidates[i].size()) - 1;
      if (cost > budget) continue;
      chosen.push_back(candidates[i]);
      pick(i + 1, budget - cost);
      chosen.pop_back();
    }
  };
  pick(0, n - 1);
  return out;
}

unsigned DegreeWeight::total() const {
  unsigned sum = 0;
  for (auto [v, e] : exponents) sum += e;
  return sum;
}

BigInt DegreeWeight::evaluate(const std::map<Vertex, BigInt>& x) const {
  BigInt product = 1;
  for (auto [v, e] : exponents) product *= mp::pow(x.at(v), e);
  return product;
}

DegreeWeight degree_weight(const RootedHypertree& t) {
  DegreeWeight w;
  for (Vertex v : t.vertices()) {
    const std::size_t d = t.degree(v);
    if (d >= 2) w.exponents.emplace(v, static_cast<unsigned>(d - 1));
  }
  return w;
}

bool verify_generating_identity(unsigned n, unsigned k, std::span<const std::vector<BigInt>> points) {
  if (n < 2 || n > 5 || k < 1 || k > n - 1) {
    fail(ErrorKind::OutOfRange, "generating identity check needs 2 <= n <= 5 and 1 <= k <= n-1");
  }
  for (const auto& x : points) {
    if (x.size() != n) fail(ErrorKind::OutOfRange, "each point needs n coordinates");
  }
  std::vector<Vertex> ground(n - 1);
  std::iota(ground.begin(), ground.end(), Vertex{1});

  bool ok = true;
  for_each_set_partition(ground, k, [&](const std::vector<VertexSet>& parts) {
    const PruferPartition partition = PruferPartition::make(n, parts);
    std::vector<DegreeWeight> weights;
    std::vector<std::size_t> digits(k - 1, 0);
    PruferCode code{partition, std::vector<Vertex>(k - 1, 1), Variant::Star};
    do {
      for (std::size_t i = 0; i < digits.size(); ++i) code.word[i] = static_cast<Vertex>(digits[i] + 1);
      weights.push_back(degree_weight(decode_star(code)));
    } while (next_word(digits, n));

    for (const auto& x : points) {
      std::map<Vertex, BigInt> xs;
      BigInt sum = 0;
      for (unsigned v = 1; v <= n; ++v) {
        xs.emplace(v, x[v - 1]);
        sum += x[v - 1];
      }
      BigInt lhs = 0;
      for (const auto& w : weights) lhs += w.evaluate(xs);
      if (lhs != mp::pow(sum, k - 1)) ok = false;
    }
  });
  return ok;
}

std::size_t StarPoset::index_of(const RootedHypertree& t) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == t) return i;
  }
  fail(ErrorKind::OutOfRange, "tree is not an element of the poset");
}

namespace {

using EdgeKey = std::vector<VertexSet>;

EdgeKey key_of(const RootedHypertree& t) { return {t.hyperedges().begin(), t.hyperedges().end()}; }

}  // namespace

StarPoset star_poset(unsigned n) {
  if (n == 0 || n > 5) fail(ErrorKind::OutOfRange, "star poset needs 1 <= n <= 5");
  StarPoset poset;
  poset.elements = enumerate_hypertrees(n);
  std::stable_sort(poset.elements.begin(), poset.elements.end(),
                   [](const RootedHypertree& a, const RootedHypertree& b) {
                     const std::size_t ra = nonleaf_rank(a), rb = nonleaf_rank(b);
                     if (ra != rb) return ra < rb;
                     return key_of(a) < key_of(b);
                   });
  const std::size_t size = poset.elements.size();
  std::map<EdgeKey, std::size_t> index;
  for (std::size_t i = 0; i < size; ++i) {
    index.emplace(key_of(poset.elements[i]), i);
    poset.rank.push_back(nonleaf_rank(poset.elements[i]));
  }

  poset.leq.assign(size, std::vector<char>(size, 0));
  poset.ancestor.assign(size, 0);
  // Elements are in rank order and single reductions lower the rank, so one
  // pass in index order yields the transitive closure.
  for (std::size_t b = 0; b < size; ++b) {
    const RootedHypertree& t = poset.elements[b];
    poset.leq[b][b] = 1;
    bool first = true;
    for (Vertex v : t.vertices()) {
      if (t.degree(v) < 2) continue;
      const std::size_t a = index.at(key_of(star_reduce(t, v)));
      if (first) {
        poset.ancestor[b] = a;
        first = false;
      }
      for (std::size_t c = 0; c < size; ++c) {
        if (poset.leq[c][a]) poset.leq[c][b] = 1;
      }
    }
    if (first) poset.ancestor[b] = b;
  }

  poset.covers.assign(size, {});
  for (std::size_t b = 0; b < size; ++b) {
    for (std::size_t a = 0; a < size; ++a) {
      if (a == b || !poset.leq[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < size && !between; ++c) {
        between = c != a && c != b && poset.leq[a][c] && poset.leq[c][b];
      }
      if (!between) poset.covers[b].push_back(a);
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (poset.elements[i].edge_count() <= 1) poset.bottom = i;
  }
  return poset;
}

std::vector<std::vector<char>> star_order_by_subsets(const StarPoset& poset) {
  const std::size_t size = poset.elements.size();
  std::map<EdgeKey, std::size_t> index;
  for (std::size_t i = 0; i < size; ++i) index.emplace(key_of(poset.elements[i]), i);

  std::vector<std::vector<char>> leq(size, std::vector<char>(size, 0));
  for (std::size_t b = 0; b < size; ++b) {
    const RootedHypertree& t = poset.elements[b];
    const auto vs = t.vertices();
    for (std::size_t mask = 0; mask < (std::size_t{1} << vs.size()); ++mask) {
      std::vector<Vertex> subset;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (mask & (std::size_t{1} << i)) subset.push_back(vs[i]);
      }
      leq[index.at(key_of(star_reduce_set(t, subset)))][b] = 1;
    }
  }
  return leq;
}

std::vector<long long> moebius(const StarPoset& poset) {
  // leq is upper unitriangular in rank order; invert it row by row.
  const std::size_t size = poset.elements.size();
  std::vector<std::vector<long long>> inverse(size, std::vector<long long>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    inverse[i][i] = 1;
    for (std::size_t j = i + 1; j < size; ++j) {
      long long sum = 0;
      for (std::size_t l = i; l < j; ++l) {
        if (poset.leq[l][j]) sum += inverse[i][l];
      }
      inverse[i][j] = -sum;
    }
  }
  return inverse[poset.bottom];
}

RootedHypertree sample_uniform_hypertree(unsigned n, std::mt19937_64& rng) {
  if (n == 0) fail(ErrorKind::OutOfRange, "n must be positive");
  if (n == 1) return RootedHypertree::root_only(1);
  const unsigned m = n - 1;
  const auto s = stirling_table(m, m);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const BigInt total = total_hypertrees(n);
  double u = unit(rng);
  unsigned k = m;
  for (unsigned j = 1; j <= m; ++j) {
    const double w = mp::cpp_rational(count_hypertrees(n, j), total).convert_to<double>();
    if (u < w) {
      k = j;
      break;
    }
    u -= w;
  }

  // Uniform set partition of {1..m} into k blocks via the Stirling recurrence,
  // deciding the fate of the largest element first.
  std::vector<char> opens(m + 1, 0);
  unsigned blocks = k;
  for (unsigned e = m; e >= 1; --e) {
    if (blocks == e) {
      opens[e] = 1;
      --blocks;
    } else if (blocks == 0) {
      break;
    } else {
      const double p_alone =
          mp::cpp_rational(s[e - 1][blocks - 1], s[e][blocks]).convert_to<double>();
      if (unit(rng) < p_alone) {
        opens[e] = 1;
        --blocks;
      }
    }
  }
  // Replay upward: a block-opening element starts a new block, any other
  // element joins a uniformly chosen block among those opened below it.
  std::vector<VertexSet> parts;
  for (unsigned e = 1; e <= m; ++e) {
    if (opens[e]) {
      parts.push_back({e});
    } else {
      parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)].push_back(e);
    }
  }
  for (auto& part : parts) std::sort(part.begin(), part.end());

  PruferCode code{PruferPartition::make(n, std::move(parts)), {}, Variant::Star};
  std::uniform_int_distribution<Vertex> letter(1, n);
  for (unsigned i = 0; i + 1 < k; ++i) code.word.push_back(letter(rng));
  return decode_star(code);
}

}  // namespace prufer
