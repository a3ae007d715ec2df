#pragma once

#include <map>
#include <vector>

#include "prufer/code.hpp"

namespace prufer {

/// One star-reduction step of the W* construction at pivot v, the smallest
/// non-leaf below the root of the current tree *_{<v}(T).
struct StarStep {
  Vertex pivot = 0;
  /// E_v: the hyperedges whose reduced part does not contain v, ordered by
  /// smallest unmarked vertex.
  std::vector<MarkedHyperedge> ev;
  /// S_v: 1-based positions in ev of the hyperedges marked by v. They index
  /// the word slots still unassigned by earlier pivots.
  std::vector<std::size_t> sv;
};

/// Steps of the recursive definition, in pivot order.
std::vector<StarStep> star_steps(const RootedHypertree& t);

/// W* by its recursive definition: root^(k-1) for a hyperstar centered at the
/// root, otherwise the letters at S_v are v and the remaining slots carry
/// W*(*_v(T)). Reference implementation.
PruferCode encode_star(const RootedHypertree& t);

/// W* computed from the evolving partition map and glue map of *_{<=i}(T).
/// Same contract as encode_star; this is the production encoder.
PruferCode encode_star_incremental(const RootedHypertree& t);

/// Partition map p_i and glue map g_i of *_{<=i}(T) after each pivot i.
struct StarTraceRow {
  Vertex pivot = 0;                    // 0 for the initial maps of T
  std::map<Vertex, Vertex> partition;  // p_i on the non-root vertices
  std::map<Vertex, Vertex> glue;       // g_i on the non-root vertices
  std::vector<std::size_t> slots;      // S_i (empty for the initial row)
};

std::vector<StarTraceRow> star_reduction_trace(const RootedHypertree& t);

/// Inverse of encode_star by successive part merging. Throws LengthMismatch,
/// LetterOutOfRange or VariantMismatch.
RootedHypertree decode_star(const PruferCode& code);

/// Direct transcription of the recursive inverse; used for differential tests.
RootedHypertree decode_star_reference(const PruferCode& code);

}  // namespace prufer
