#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "prufer/partition.hpp"

namespace prufer {

enum class Variant { Classic, Star };

std::string_view to_string(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view text) noexcept;

/// A Prüfer code (P, W): the partition of the non-root vertices and a word of
/// length (#parts - 1) over the covered vertices and the root.
struct PruferCode {
  PruferPartition partition;
  std::vector<Vertex> word;
  Variant variant = Variant::Star;

  Vertex root() const noexcept { return partition.root(); }
  friend bool operator==(const PruferCode&, const PruferCode&) = default;
};

/// Throws LengthMismatch or LetterOutOfRange.
void check_code(const PruferCode& code);

}  // namespace prufer
