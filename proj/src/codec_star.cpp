#include "prufer/codec_star.hpp"

#include <algorithm>

#include "fenwick.hpp"
#include "assemble.hpp"
#include "prufer/error.hpp"
#include "prufer/star_reduction.hpp"

namespace prufer {

namespace {

std::optional<Vertex> smallest_nonroot_nonleaf(const RootedHypertree& t) {
  for (Vertex v : t.vertices()) {
    if (v != t.root() && t.degree(v) >= 2) return v;
  }
  return std::nullopt;
}

std::vector<Vertex> star_word(const RootedHypertree& t, std::vector<StarStep>* steps) {
  const std::size_t k = t.edge_count();
  if (k <= 1) return {};
  const auto pivot = smallest_nonroot_nonleaf(t);
  if (!pivot) return std::vector<Vertex>(k - 1, t.root());

  const Vertex v = *pivot;
  StarStep step;
  step.pivot = v;
  const std::size_t own = t.parent_edge(v);
  for (std::size_t e = 0; e < k; ++e) {
    if (e == own) continue;
    step.ev.push_back(t.marked_hyperedge(e));
    if (step.ev.back().marked == v) step.sv.push_back(step.ev.size());
  }
  std::vector<std::size_t> sv = step.sv;
  if (steps) steps->push_back(std::move(step));

  const std::vector<Vertex> rest = star_word(star_reduce(t, v), steps);
  std::vector<Vertex> word(k - 1, 0);
  std::size_t next = 0;
  for (std::size_t pos = 1; pos <= k - 1; ++pos) {
    word[pos - 1] = std::binary_search(sv.begin(), sv.end(), pos) ? v : rest.at(next++);
  }
  return word;
}

// Evolving partition map and glue map of *_{<=i}(T) over dense vertex
// indices (root = n - 1). Parts carry an id; the minimum of a part is its
// partition-map value. Merges move the smaller member lists; no path
// compression, so p_i and g_i can be read off at every step.
class StarReducer {
 public:
  explicit StarReducer(const RootedHypertree& t)
      : t_(t),
        n_(t.vertex_count()),
        k_(t.edge_count()),
        part_of_(n_, npos),
        members_(k_),
        min_(k_),
        glue_(k_),
        alive_(k_, 1),
        children_(n_),
        mins_(n_),
        slots_(k_ == 0 ? 0 : k_ - 1),
        word_(k_ == 0 ? 0 : k_ - 1, 0) {
    for (std::size_t e = 0; e < k_; ++e) {
      const MarkedHyperedge m = t.marked_hyperedge(e);
      for (Vertex v : m.reduced) {
        const std::size_t vi = index(v);
        part_of_[vi] = e;
        members_[e].push_back(vi);
      }
      min_[e] = index(m.min_reduced());
      glue_[e] = index(m.marked);
      children_[glue_[e]].push_back(e);
      mins_.add(min_[e], 1);
    }
    for (std::size_t s = 0; s < word_.size(); ++s) slots_.add(s, 1);
  }

  std::size_t vertex_count() const { return n_; }

  /// Star-reduces at dense vertex i; returns the residual positions S_i
  /// (empty when i is a leaf of the current tree).
  std::vector<std::size_t> reduce_at(std::size_t i) {
    std::vector<std::size_t> kids;
    for (std::size_t c : children_[i]) {
      if (alive_[c] && glue_[c] == i) kids.push_back(c);
    }
    children_[i].clear();
    if (kids.empty()) return {};
    std::sort(kids.begin(), kids.end(), [&](std::size_t a, std::size_t b) { return min_[a] < min_[b]; });
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());

    const std::size_t own = part_of_[i];
    std::vector<std::size_t> positions;
    positions.reserve(kids.size());
    for (std::size_t c : kids) {
      std::size_t rank = static_cast<std::size_t>(mins_.prefix(min_[c])) + 1;
      if (min_[own] < min_[c]) --rank;
      positions.push_back(rank);
    }
    std::vector<std::size_t> absolute;
    absolute.reserve(positions.size());
    for (std::size_t pos : positions) absolute.push_back(slots_.select(static_cast<int>(pos)));
    for (std::size_t a : absolute) {
      slots_.add(a, -1);
      word_[a] = t_.vertices()[i];
    }

    // Merge the children into the part containing i; the union keeps the
    // marked vertex of that part, g_i(i).
    std::size_t survivor = own;
    std::size_t new_min = min_[own];
    for (std::size_t c : kids) {
      if (members_[c].size() > members_[survivor].size()) survivor = c;
      new_min = std::min(new_min, min_[c]);
    }
    const std::size_t new_glue = glue_[own];
    kids.push_back(own);
    for (std::size_t c : kids) {
      mins_.add(min_[c], -1);
      if (c == survivor) continue;
      for (std::size_t vi : members_[c]) {
        part_of_[vi] = survivor;
        members_[survivor].push_back(vi);
      }
      members_[c].clear();
      alive_[c] = 0;
    }
    min_[survivor] = new_min;
    mins_.add(new_min, 1);
    if (survivor != own) children_[new_glue].push_back(survivor);
    glue_[survivor] = new_glue;
    return positions;
  }

  /// Fills the unassigned slots with the root letter and returns the word.
  std::vector<Vertex> finish() {
    for (auto& letter : word_) {
      if (letter == 0) letter = t_.root();
    }
    return word_;
  }

  std::map<Vertex, Vertex> partition_map() const {
    std::map<Vertex, Vertex> p;
    for (std::size_t vi = 0; vi + 1 < n_; ++vi) {
      p.emplace(t_.vertices()[vi], t_.vertices()[min_[part_of_[vi]]]);
    }
    return p;
  }

  std::map<Vertex, Vertex> glue_map() const {
    std::map<Vertex, Vertex> g;
    for (std::size_t vi = 0; vi + 1 < n_; ++vi) {
      g.emplace(t_.vertices()[vi], t_.vertices()[glue_[part_of_[vi]]]);
    }
    return g;
  }

 private:
  std::size_t index(Vertex v) const { return *t_.index_of(v); }

  const RootedHypertree& t_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> part_of_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::size_t> min_;
  std::vector<std::size_t> glue_;
  std::vector<char> alive_;
  std::vector<std::vector<std::size_t>> children_;  // parts glued to a vertex; may hold stale ids
  detail::Fenwick mins_;                            // minima of live parts
  detail::Fenwick slots_;                           // unassigned word positions
  std::vector<Vertex> word_;
};

void require_star(const PruferCode& code) {
  if (code.variant != Variant::Star) fail(ErrorKind::VariantMismatch, "expected a star code");
}

// Glue of each part (in order) for the recursive inverse.
std::vector<Vertex> star_glue(std::vector<VertexSet> parts, std::vector<Vertex> word, Vertex root) {
  if (std::all_of(word.begin(), word.end(), [&](Vertex w) { return w == root; })) {
    return std::vector<Vertex>(parts.size(), root);
  }
  Vertex v = root;
  for (Vertex w : word) v = std::min(v, w);

  std::size_t own = npos;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (std::binary_search(parts[i].begin(), parts[i].end(), v)) own = i;
  }
  std::vector<std::size_t> pv;  // P_v as indices into parts
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != own) pv.push_back(i);
  }
  std::vector<char> glued(parts.size(), 0);
  std::vector<Vertex> rest;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    if (word[pos] == v) {
      glued[pv[pos]] = 1;
    } else {
      rest.push_back(word[pos]);
    }
  }

  VertexSet merged = parts[own];
  std::vector<std::size_t> kept;  // indices of untouched parts
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (glued[i]) {
      merged.insert(merged.end(), parts[i].begin(), parts[i].end());
    } else if (i != own) {
      kept.push_back(i);
    }
  }
  std::sort(merged.begin(), merged.end());

  std::vector<VertexSet> next;
  std::vector<std::size_t> origin;  // index into parts, npos for the merged part
  for (std::size_t i : kept) {
    next.push_back(parts[i]);
    origin.push_back(i);
  }
  next.push_back(merged);
  origin.push_back(npos);
  std::vector<std::size_t> order(next.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return next[a].front() < next[b].front(); });
  std::vector<VertexSet> sorted_next;
  std::vector<std::size_t> sorted_origin;
  for (std::size_t i : order) {
    sorted_next.push_back(std::move(next[i]));
    sorted_origin.push_back(origin[i]);
  }

  const std::vector<Vertex> sub = star_glue(std::move(sorted_next), std::move(rest), root);
  std::vector<Vertex> out(parts.size(), 0);
  for (std::size_t j = 0; j < sub.size(); ++j) {
    out[sorted_origin[j] == npos ? own : sorted_origin[j]] = sub[j];
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (glued[i]) out[i] = v;
  }
  return out;
}

}  // namespace

std::vector<StarStep> star_steps(const RootedHypertree& t) {
  std::vector<StarStep> steps;
  star_word(t, &steps);
  return steps;
}

PruferCode encode_star(const RootedHypertree& t) {
  return PruferCode{prufer_partition(t), star_word(t, nullptr), Variant::Star};
}

PruferCode encode_star_incremental(const RootedHypertree& t) {
  StarReducer reducer(t);
  for (std::size_t i = 0; i + 1 < reducer.vertex_count(); ++i) reducer.reduce_at(i);
  return PruferCode{prufer_partition(t), reducer.finish(), Variant::Star};
}

std::vector<StarTraceRow> star_reduction_trace(const RootedHypertree& t) {
  StarReducer reducer(t);
  std::vector<StarTraceRow> rows;
  rows.push_back({0, reducer.partition_map(), reducer.glue_map(), {}});
  for (std::size_t i = 0; i + 1 < reducer.vertex_count(); ++i) {
    std::vector<std::size_t> slots = reducer.reduce_at(i);
    if (slots.empty()) continue;
    rows.push_back({t.vertices()[i], reducer.partition_map(), reducer.glue_map(), std::move(slots)});
  }
  return rows;
}

RootedHypertree decode_star(const PruferCode& code) {
  require_star(code);
  check_code(code);
  const PruferPartition& p = code.partition;
  const std::size_t k = p.size();
  if (k == 0) return RootedHypertree::root_only(p.root());

  const VertexSet vertices = p.vertex_set();
  const std::size_t n = vertices.size();
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                    vertices.begin());
  };

  // Current parts; pending[q] is the original part whose marked vertex is
  // decided only once part q itself gets glued.
  std::vector<std::size_t> part_of(n, npos);
  std::vector<std::vector<std::size_t>> members(k);
  std::vector<std::size_t> min(k), pending(k);
  std::vector<std::size_t> part_by_min(n, npos);
  detail::Fenwick mins(n);
  for (std::size_t q = 0; q < k; ++q) {
    for (Vertex v : p.parts()[q]) {
      part_of[index(v)] = q;
      members[q].push_back(index(v));
    }
    min[q] = index(p.parts()[q].front());
    part_by_min[min[q]] = q;
    pending[q] = q;
    mins.add(min[q], 1);
  }

  const std::size_t length = code.word.size();
  std::vector<std::vector<std::size_t>> positions(n);
  detail::Fenwick slots(length);
  for (std::size_t pos = 0; pos < length; ++pos) {
    positions[index(code.word[pos])].push_back(pos);
    slots.add(pos, 1);
  }

  std::vector<Vertex> part_glue(k, 0);
  for (std::size_t vi = 0; vi + 1 < n; ++vi) {
    if (positions[vi].empty()) continue;
    const std::size_t own = part_of[vi];
    const std::size_t own_rank = static_cast<std::size_t>(mins.prefix(min[own])) + 1;

    std::vector<std::size_t> glued;
    glued.reserve(positions[vi].size());
    for (std::size_t pos : positions[vi]) {
      std::size_t r = static_cast<std::size_t>(slots.prefix(pos)) + 1;
      if (r >= own_rank) ++r;  // skip the part containing v
      glued.push_back(part_by_min[mins.select(static_cast<int>(r))]);
    }
    for (std::size_t pos : positions[vi]) slots.add(pos, -1);

    std::size_t survivor = own;
    std::size_t new_min = min[own];
    for (std::size_t q : glued) {
      part_glue[pending[q]] = vertices[vi];
      if (members[q].size() > members[survivor].size()) survivor = q;
      new_min = std::min(new_min, min[q]);
    }
    const std::size_t carried = pending[own];
    glued.push_back(own);
    for (std::size_t q : glued) {
      mins.add(min[q], -1);
      part_by_min[min[q]] = npos;
      if (q == survivor) continue;
      for (std::size_t m : members[q]) {
        part_of[m] = survivor;
        members[survivor].push_back(m);
      }
      members[q].clear();
    }
    min[survivor] = new_min;
    part_by_min[new_min] = survivor;
    pending[survivor] = carried;
    mins.add(new_min, 1);
  }

  for (std::size_t q = 0; q < k; ++q) {
    if (part_by_min[min[q]] == q && !members[q].empty()) part_glue[pending[q]] = p.root();
  }
  return detail::assemble(p, part_glue);
}

RootedHypertree decode_star_reference(const PruferCode& code) {
  require_star(code);
  check_code(code);
  const PruferPartition& p = code.partition;
  if (p.empty()) return RootedHypertree::root_only(p.root());
  std::vector<VertexSet> parts(p.parts().begin(), p.parts().end());
  return detail::assemble(p, star_glue(std::move(parts), code.word, p.root()));
}

}  // namespace prufer
