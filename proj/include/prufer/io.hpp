#pragma once

#include <string>
#include <string_view>

#include "prufer/code.hpp"
#include "prufer/hypertree.hpp"

namespace prufer {

/// Tree file: a `root R` line, then one line of ascending vertex ids per
/// hyperedge. `#` starts a comment; blank lines are ignored. Throws
/// ParseError (with the line number) for malformed text and the validation
/// errors of RootedHypertree::validate for well-formed text that is no tree.
RootedHypertree parse_hypertree(std::string_view text);

/// Canonical tree file, hyperedges ordered by smallest unmarked vertex, each
/// followed by a `# {reduced}_marked` comment.
std::string emit_hypertree(const RootedHypertree& t);

/// Code file with the lines `root R`, `variant classic|star`,
/// `partition a,b;c;...` and `word w1 w2 ...` (either list may be empty).
/// Throws ParseError or InvalidPartition.
PruferCode parse_code(std::string_view text);

std::string emit_code(const PruferCode& code);

/// Graphviz rendering: vertices as nodes (the root double-circled), 2-vertex
/// hyperedges as plain edges, larger ones as an auxiliary polygon node joined
/// to each member with a bold edge to the marked vertex.
std::string to_dot(const RootedHypertree& t, std::string_view name = "hypertree",
                   std::string_view label = {});

/// One graph per stage of the star reduction: T, the trees after each pivot,
/// and the final reduction at the root.
std::string dot_steps(const RootedHypertree& t);

}  // namespace prufer
