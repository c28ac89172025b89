#pragma once

#include <cstdint>
#include <vector>

namespace morpheval {

// Internal segmentation boundaries of a word, as 1-based code-point offsets
// of each segment end. The final offset (the word length) is always present,
// so a w-length word segmented into k pieces has k offsets ending in w.
// Offsets are strictly increasing.
struct BoundarySet {
  std::vector<std::uint32_t> offsets;

  bool operator==(const BoundarySet&) const = default;
  std::size_t size() const { return offsets.size(); }
};

}  // namespace morpheval
