#include "prufer/permline.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "prufer/codec_star.hpp"
#include "prufer/error.hpp"

namespace prufer {

FiniteSupportPermutation FiniteSupportPermutation::make(std::vector<Vertex> values) {
  std::vector<char> seen(values.size() + 1, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Vertex v = values[i];
    if (v == 0 || v > values.size() || seen[v]) {
      fail(ErrorKind::NotAPermutation, "value " + std::to_string(v) + " at position " +
                                           std::to_string(i + 1) + " breaks a bijection of {1.." +
                                           std::to_string(values.size()) + "}");
    }
    seen[v] = 1;
  }
  while (!values.empty() && values.back() == values.size()) values.pop_back();
  FiniteSupportPermutation sigma;
  sigma.values_ = std::move(values);
  return sigma;
}

Vertex FiniteSupportPermutation::operator()(Vertex i) const noexcept {
  return i >= 1 && i <= values_.size() ? values_[i - 1] : i;
}

std::vector<Vertex> FiniteSupportPermutation::padded(std::size_t n) const {
  std::vector<Vertex> out(std::max(n, values_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(static_cast<Vertex>(i + 1));
  return out;
}

std::string to_string(const FiniteSupportPermutation& sigma) {
  if (sigma.bound() == 0) return "1";
  std::string out;
  for (Vertex v : sigma.values()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

RootedHypertree perm_to_tree(const FiniteSupportPermutation& sigma, std::size_t depth) {
  if (depth < sigma.bound()) {
    fail(ErrorKind::DepthTooSmall, "depth " + std::to_string(depth) + " is below the bound " +
                                       std::to_string(sigma.bound()));
  }
  const auto root = static_cast<Vertex>(depth + 1);
  if (depth == 0) return RootedHypertree::root_only(root);
  std::vector<VertexSet> edges;
  edges.reserve(depth);
  Vertex previous = root;
  for (std::size_t i = 1; i <= depth; ++i) {
    const Vertex v = sigma(static_cast<Vertex>(i));
    edges.push_back({std::min(previous, v), std::max(previous, v)});
    previous = v;
  }
  return RootedHypertree::validate(root, std::move(edges));
}

std::size_t stabilization_ceiling(std::size_t bound) noexcept { return 8 * bound + 8; }

namespace {

std::vector<Vertex> truncated_word(const FiniteSupportPermutation& sigma, std::size_t depth) {
  return encode_star_incremental(perm_to_tree(sigma, depth)).word;
}

// (a) the first `bound` letters agree, (b) letter i sits at position i for
// bound < i <= depth - 2.
bool stable(const std::vector<Vertex>& shorter, const std::vector<Vertex>& longer,
            std::size_t bound, std::size_t depth) {
  if (!std::equal(shorter.begin(), shorter.begin() + static_cast<std::ptrdiff_t>(bound),
                  longer.begin())) {
    return false;
  }
  for (std::size_t i = bound + 1; i + 2 <= depth; ++i) {
    if (shorter[i - 1] != i || longer[i - 1] != i) return false;
  }
  return true;
}

}  // namespace

FiniteSupportPermutation perm_encode_star(const FiniteSupportPermutation& sigma) {
  const std::size_t bound = sigma.bound();
  if (bound == 0) return sigma;
  const std::size_t ceiling = stabilization_ceiling(bound);
  std::vector<Vertex> shorter = truncated_word(sigma, 2 * bound + 4);
  for (std::size_t depth = 2 * bound + 4; depth < ceiling; ++depth) {
    std::vector<Vertex> longer = truncated_word(sigma, depth + 1);
    if (stable(shorter, longer, bound, depth)) {
      std::vector<Vertex> prefix(shorter.begin(), shorter.begin() + static_cast<std::ptrdiff_t>(bound));
      try {
        return FiniteSupportPermutation::make(std::move(prefix));
      } catch (const Error&) {
        // The prefix is not yet closed under sigma's support; look deeper.
      }
    }
    shorter = std::move(longer);
  }
  fail(ErrorKind::NoStabilization, "W* of " + to_string(sigma) + " did not stabilize below depth " +
                                       std::to_string(ceiling));
}

std::map<std::vector<Vertex>, std::vector<Vertex>> sn_map(std::size_t n) {
  if (n == 0 || n > kMaxSymmetricOrder) {
    fail(ErrorKind::OutOfRange, "S_n tables need 1 <= n <= " + std::to_string(kMaxSymmetricOrder));
  }
  std::map<std::vector<Vertex>, std::vector<Vertex>> table;
  std::vector<Vertex> sigma(n);
  std::iota(sigma.begin(), sigma.end(), Vertex{1});
  do {
    table.emplace(sigma, perm_encode_star(FiniteSupportPermutation::make(sigma)).padded(n));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return table;
}

std::vector<Orbit> orbits(std::size_t n) {
  const auto table = sn_map(n);
  std::set<std::vector<Vertex>> images;
  for (const auto& [sigma, psi] : table) {
    if (!table.contains(psi) || !images.insert(psi).second) {
      fail(ErrorKind::NotAPermutation, "sigma -> W*(sigma) is not a bijection of S_" + std::to_string(n));
    }
  }
  std::vector<Orbit> out;
  std::set<std::vector<Vertex>> done;
  for (const auto& [start, image] : table) {
    if (done.contains(start)) continue;
    Orbit orbit;
    std::vector<Vertex> cur = start;
    do {
      orbit.cycle.push_back(cur);
      done.insert(cur);
      cur = table.at(cur);
    } while (cur != start);
    orbit.members = orbit.cycle;
    std::sort(orbit.members.begin(), orbit.members.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::string_view to_string(VertexClass c) noexcept {
  switch (c) {
    case VertexClass::RootComponent: return "root";
    case VertexClass::CycleWitness: return "cycle";
    case VertexClass::EscapeWitness: return "escape";
  }
  return "?";
}

bool IdealPairReport::valid() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const auto& entry) { return entry.second == VertexClass::RootComponent; });
}

IdealPairReport validate_ideal_pair(const IdealPair& pair) {
  const Vertex n = pair.segment;
  for (auto [x, y] : pair.p.mapping) {
    if (x == 0 || x > n) {
      fail(ErrorKind::IncompleteMap, "p is given at " + std::to_string(x) + " outside {1.." +
                                         std::to_string(n) + "}");
    }
  }
  check_partition_map(pair.p);
  auto p = [&](Vertex x) {
    auto it = pair.p.mapping.find(x);
    return it == pair.p.mapping.end() ? x : it->second;
  };

  if (auto it = pair.g.find(kInfinity); it != pair.g.end() && it->second != kInfinity) {
    fail(ErrorKind::IncompleteMap, "g(infinity) must be infinity");
  }
  for (auto [x, y] : pair.g) {
    if (x == 0 || (x > n && x != kInfinity)) {
      fail(ErrorKind::IncompleteMap, "g is given at " + std::to_string(x) + " outside the segment");
    }
    if (y == 0) fail(ErrorKind::IncompleteMap, "g(" + std::to_string(x) + ") = 0 is not a vertex");
  }
  auto g = [&](Vertex x) -> Vertex {
    if (x == kInfinity) return kInfinity;
    if (x <= n) {
      auto it = pair.g.find(x);
      if (it == pair.g.end()) fail(ErrorKind::IncompleteMap, "g undefined at " + std::to_string(x));
      return it->second;
    }
    switch (pair.tail) {
      case TailRule::Root: return kInfinity;
      case TailRule::Successor: return x + 1;
      case TailRule::Predecessor: return x - 1;
    }
    return kInfinity;
  };

  for (Vertex x = 1; x <= n; ++x) {
    if (g(p(x)) != g(x)) {
      fail(ErrorKind::CompositionMismatch, "g(p(" + std::to_string(x) + ")) = " +
                                               std::to_string(g(p(x))) + " but g(" + std::to_string(x) +
                                               ") = " + std::to_string(g(x)));
    }
  }

  IdealPairReport report;
  for (Vertex x = 1; x <= n; ++x) {
    std::set<Vertex> seen;
    Vertex cur = x;
    VertexClass cls = VertexClass::RootComponent;
    while (cur != kInfinity) {
      if (cur > n) {
        // Beyond the segment only the tail rule applies.
        if (pair.tail == TailRule::Successor) {
          cls = VertexClass::EscapeWitness;
          break;
        }
        cur = pair.tail == TailRule::Root ? kInfinity : n;
        if (n == 0) break;
        continue;
      }
      if (!seen.insert(cur).second) {
        cls = VertexClass::CycleWitness;
        break;
      }
      cur = g(cur);
    }
    report.classes.emplace(x, cls);
  }
  return report;
}

IdealPair ideal_pair(const RootedHypertree& t) {
  const auto vs = t.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] != i + 1) {
      fail(ErrorKind::InvalidVertex, "ideal pairs need the vertex set {1.." + std::to_string(t.root()) + "}");
    }
  }
  IdealPair pair;
  pair.segment = t.root() - 1;
  pair.p = partition_map(prufer_partition(t));
  for (Vertex v : vs) {
    if (v == t.root()) continue;
    const Vertex target = t.glue(v);
    pair.g.emplace(v, target == t.root() ? kInfinity : target);
  }
  pair.g.emplace(kInfinity, kInfinity);
  pair.tail = TailRule::Root;
  return pair;
}

}  // namespace prufer
