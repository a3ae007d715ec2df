#pragma once

#include "prufer/code.hpp"

namespace prufer {

/// Leaf-pruning code: removes the smallest leaf-type hyperedge until one
/// hyperedge remains, recording the marked vertices of removed hyperedges.
PruferCode encode_classic(const RootedHypertree& t);

/// Inverse of encode_classic. Throws LengthMismatch, LetterOutOfRange or
/// VariantMismatch.
RootedHypertree decode_classic(const PruferCode& code);

// Quadratic re-scan versions kept for differential testing.
PruferCode encode_classic_naive(const RootedHypertree& t);
RootedHypertree decode_classic_naive(const PruferCode& code);

}  // namespace prufer
