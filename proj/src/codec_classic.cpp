#include "prufer/codec_classic.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "assemble.hpp"
#include "prufer/error.hpp"

namespace prufer {

std::string_view to_string(Variant v) noexcept {
  return v == Variant::Classic ? "classic" : "star";
}

std::optional<Variant> parse_variant(std::string_view text) noexcept {
  if (text == "classic") return Variant::Classic;
  if (text == "star") return Variant::Star;
  return std::nullopt;
}

void check_code(const PruferCode& code) {
  const std::size_t k = code.partition.size();
  const std::size_t expected = k == 0 ? 0 : k - 1;
  if (code.word.size() != expected) {
    fail(ErrorKind::LengthMismatch, "word has " + std::to_string(code.word.size()) +
                                        " letters, expected " + std::to_string(expected));
  }
  const VertexSet vertices = code.partition.vertex_set();
  for (Vertex letter : code.word) {
    if (!std::binary_search(vertices.begin(), vertices.end(), letter)) {
      fail(ErrorKind::LetterOutOfRange, "letter " + std::to_string(letter) + " is not a vertex");
    }
  }
}

namespace {

using MinHeap = std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>;

void require_variant(const PruferCode& code, Variant v) {
  if (code.variant != v) {
    fail(ErrorKind::VariantMismatch, "expected a " + std::string(to_string(v)) + " code");
  }
}


}  // namespace

PruferCode encode_classic(const RootedHypertree& t) {
  PruferCode code{prufer_partition(t), {}, Variant::Classic};
  const std::size_t k = t.edge_count();
  if (k <= 1) return code;

  const std::size_t n = t.vertex_count();
  std::vector<std::uint32_t> marked_count(n, 0);
  for (std::size_t e = 0; e < k; ++e) ++marked_count[*t.index_of(t.marked_vertex(e))];

  // Hyperedges are indexed in order of their smallest unmarked vertex, so the
  // edge index is the priority key.
  std::vector<std::uint32_t> busy(k, 0);  // reduced vertices still marked elsewhere
  MinHeap ready;
  for (std::size_t e = 0; e < k; ++e) {
    for (Vertex v : t.hyperedges()[e]) {
      if (v != t.marked_vertex(e) && marked_count[*t.index_of(v)] > 0) ++busy[e];
    }
    if (busy[e] == 0) ready.push(e);
  }

  code.word.reserve(k - 1);
  while (code.word.size() + 1 < k) {
    const std::size_t e = ready.top();
    ready.pop();
    const Vertex m = t.marked_vertex(e);
    code.word.push_back(m);
    if (--marked_count[*t.index_of(m)] == 0 && m != t.root()) {
      const std::size_t parent = t.parent_edge(m);
      if (--busy[parent] == 0) ready.push(parent);
    }
  }
  return code;
}

RootedHypertree decode_classic(const PruferCode& code) {
  require_variant(code, Variant::Classic);
  check_code(code);
  const PruferPartition& p = code.partition;
  const std::size_t k = p.size();
  if (k == 0) return RootedHypertree::root_only(p.root());

  const VertexSet vertices = p.vertex_set();
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                    vertices.begin());
  };
  std::vector<std::size_t> part_of(vertices.size(), npos);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : p.parts()[i]) part_of[index(v)] = i;
  }
  std::vector<std::uint32_t> pending(vertices.size(), 0);  // remaining occurrences
  for (Vertex letter : code.word) ++pending[index(letter)];

  std::vector<std::uint32_t> busy(k, 0);
  MinHeap ready;
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v : p.parts()[i]) {
      if (pending[index(v)] > 0) ++busy[i];
    }
    if (busy[i] == 0) ready.push(i);
  }

  std::vector<Vertex> part_glue(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    const Vertex letter = j + 1 < k ? code.word[j] : p.root();
    const std::size_t part = ready.top();
    ready.pop();
    part_glue[part] = letter;
    if (j + 1 < k) {
      const std::size_t li = index(letter);
      if (--pending[li] == 0 && part_of[li] != npos) {
        if (--busy[part_of[li]] == 0) ready.push(part_of[li]);
      }
    }
  }
  return detail::assemble(p, part_glue);
}

PruferCode encode_classic_naive(const RootedHypertree& t) {
  PruferCode code{prufer_partition(t), {}, Variant::Classic};
  std::vector<MarkedHyperedge> remaining = mark(t);
  while (remaining.size() > 1) {
    auto leaf_type = [&](const MarkedHyperedge& e) {
      for (const auto& other : remaining) {
        if (&other != &e &&
            std::binary_search(e.reduced.begin(), e.reduced.end(), other.marked)) {
          return false;
        }
      }
      return true;
    };
    auto it = std::find_if(remaining.begin(), remaining.end(), leaf_type);
    code.word.push_back(it->marked);
    remaining.erase(it);
  }
  return code;
}

RootedHypertree decode_classic_naive(const PruferCode& code) {
  require_variant(code, Variant::Classic);
  check_code(code);
  const PruferPartition& p = code.partition;
  const std::size_t k = p.size();
  if (k == 0) return RootedHypertree::root_only(p.root());

  std::vector<Vertex> word = code.word;
  word.push_back(p.root());
  std::vector<char> removed(k, 0);
  std::vector<Vertex> part_glue(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if (removed[i]) continue;
      const auto& part = p.parts()[i];
      const bool leaf_type = std::none_of(word.begin() + j, word.end() - 1, [&](Vertex w) {
        return std::binary_search(part.begin(), part.end(), w);
      });
      if (leaf_type) {
        removed[i] = 1;
        part_glue[i] = word[j];
        break;
      }
    }
  }
  return detail::assemble(p, part_glue);
}

}  // namespace prufer
