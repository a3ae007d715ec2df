#pragma once

#include <span>

#include "prufer/hypertree.hpp"

namespace prufer {

/// *_v(T): replaces every hyperedge containing v by their union.
/// Returns t unchanged when v is a leaf. Throws UnknownVertex.
RootedHypertree star_reduce(const RootedHypertree& t, Vertex v);

/// *_S(T) for a vertex set S; the order of reductions is irrelevant since
/// star-reductions commute. Throws UnknownVertex.
RootedHypertree star_reduce_set(const RootedHypertree& t, std::span<const Vertex> vertices);

/// True iff every hyperedge contains the root (a hyperstar centered at the root).
bool is_root_hyperstar(const RootedHypertree& t);

}  // namespace prufer
